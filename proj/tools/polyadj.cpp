// polyadj: construct 0/1 polytopes, test adjacency and faces, run reductions.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "polyadj/commands.hpp"

using namespace polyadj;

int main(int argc, char** argv) {
    CLI::App app{"Exact 0/1-polytope adjacency, reduction and face-refutation tool"};
    app.require_subcommand(1);

    bool as_json = false;
    cli::Options opts;
    app.add_flag("--json", as_json, "Emit JSON instead of the indented text document");
    app.add_option("--max-dim", opts.max_dim, "Enumeration dimension cap (default 24)");

    std::string family, input, u, v, kind, pairs, subset, output;
    bool count_only = false;
    bool verify = false;

    auto* enumerate = app.add_subcommand("enumerate", "List the vertices of a polytope");
    enumerate->add_option("family", family, "cover|pack|part|stable|dcp|npadj")->required();
    enumerate->add_option("input", input, "Code file (matrix or graph format)")->required();
    enumerate->add_flag("--count-only", count_only, "Report only the vertex count");

    auto* adjacent = app.add_subcommand("adjacent", "Decide adjacency of two vertices");
    adjacent->add_option("family", family)->required();
    adjacent->add_option("input", input)->required();
    adjacent->add_option("u", u, "0/1 string")->required();
    adjacent->add_option("v", v, "0/1 string")->required();

    auto* matsui = app.add_subcommand("matsui", "Check x0/x0bar adjacency against Part(A) emptiness");
    matsui->add_option("input", input, "Matrix with three ones per row")->required();

    auto* reduce = app.add_subcommand("reduce", "Build (and optionally verify) a reduction");
    reduce->add_option("kind", kind, "stable-part|part-npadj|npadj-dcp|chain")->required();
    reduce->add_option("input", input)->required();
    reduce->add_flag("--verify", verify, "Verify image, injectivity and face-ness by enumeration");
    reduce->add_option("--output", output, "Write the final target code to this file");

    auto* refute = app.add_subcommand("refute-face", "Construct a new equal-sum pair refuting a face");
    refute->add_option("graph", input, "Graph file")->required();
    refute->add_option("pairs", pairs, "Pairs file")->required();

    auto* face_check = app.add_subcommand("face-check", "Decide whether a vertex subset is a face");
    face_check->add_option("family", family)->required();
    face_check->add_option("input", input)->required();
    face_check->add_option("subset", subset, "One 0/1 string per line")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : static_cast<int>(cli::Status::InputError);
    }

    if (opts.max_dim > kDefaultDimensionCap) {
        std::cerr << "warning: --max-dim " << opts.max_dim << " exceeds the default cap of " << kDefaultDimensionCap
                  << "; enumeration may take a long time\n";
    }

    cli::CommandResult result;
    try {
        if (*enumerate) {
            result = cli::cmd_enumerate(parse_family(family), input, count_only, opts);
        } else if (*adjacent) {
            result = cli::cmd_adjacent(parse_family(family), input, u, v, opts);
        } else if (*matsui) {
            result = cli::cmd_matsui(input, opts);
        } else if (*reduce) {
            std::optional<std::filesystem::path> out;
            if (!output.empty()) out = output;
            result = cli::cmd_reduce(cli::parse_reduce_kind(kind), input, verify, opts, out);
        } else if (*refute) {
            result = cli::cmd_refute_face(input, pairs);
        } else if (*face_check) {
            result = cli::cmd_face_check(parse_family(family), input, subset, opts);
        }
    } catch (const Error& e) {
        // argument-level failures (unknown family or reduction kind)
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(cli::Status::InputError);
    }

    std::cout << (as_json ? cli::render_json(result.payload) : cli::render_text(result.payload));
    return result.exit_code();
}
