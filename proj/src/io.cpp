#include "polyadj/io.hpp"

#include <fstream>
#include <sstream>

namespace polyadj::io {

namespace {

[[noreturn]] void parse_error(const std::string& what, std::size_t line) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what, line);
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

std::size_t parse_count(const std::string& tok, std::size_t line) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
        parse_error("expected a non-negative integer, got '" + tok + "'", line);
    }
    try {
        return std::stoul(tok);
    } catch (const std::exception&) {
        parse_error("integer out of range: '" + tok + "'", line);
    }
}

bool skippable(const std::vector<std::string>& toks, char comment) {
    return toks.empty() || toks.front().front() == comment;
}

std::ifstream open(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
    return in;
}

}  // namespace

BinaryMatrix parse_matrix(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::string> header;
    while (header.empty() && std::getline(in, line)) {
        ++lineno;
        header = tokens(line);
    }
    if (header.size() != 2) parse_error("matrix header must be 'm n'", lineno);
    std::size_t m = parse_count(header[0], lineno);
    std::size_t n = parse_count(header[1], lineno);
    if (n == 0) parse_error("matrix must have at least one column", lineno);
    BinaryMatrix a(m, n);
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens(line);
        if (toks.empty()) continue;
        if (row == m) parse_error("more rows than declared", lineno);
        if (toks.size() != n) parse_error("expected " + std::to_string(n) + " entries", lineno);
        for (std::size_t c = 0; c < n; ++c) {
            if (toks[c] != "0" && toks[c] != "1") parse_error("entry '" + toks[c] + "' is not 0/1", lineno);
            a.set(row, c, toks[c] == "1");
        }
        ++row;
    }
    if (row != m) parse_error("expected " + std::to_string(m) + " rows, found " + std::to_string(row), lineno);
    return a;
}

std::string format_matrix(const BinaryMatrix& a) {
    std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (c > 0) out += ' ';
            out += a.at(r, c) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

Graph parse_graph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::size_t> nv, ne;
    std::vector<Graph::Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens(line);
        if (skippable(toks, 'c')) continue;
        if (toks[0] == "p") {
            if (nv) parse_error("duplicate 'p' line", lineno);
            if (toks.size() != 3) parse_error("header must be 'p <nv> <ne>'", lineno);
            nv = parse_count(toks[1], lineno);
            ne = parse_count(toks[2], lineno);
        } else if (toks[0] == "e") {
            if (!nv) parse_error("edge before 'p' line", lineno);
            if (toks.size() != 3) parse_error("edge must be 'e u v'", lineno);
            std::size_t u = parse_count(toks[1], lineno);
            std::size_t v = parse_count(toks[2], lineno);
            if (u < 1 || v < 1 || u > *nv || v > *nv) parse_error("edge endpoint out of 1.." + std::to_string(*nv), lineno);
            edges.emplace_back(u - 1, v - 1);
        } else {
            parse_error("unexpected line '" + line + "'", lineno);
        }
    }
    if (!nv) parse_error("missing 'p <nv> <ne>' line", lineno);
    if (edges.size() != *ne) {
        parse_error("declared " + std::to_string(*ne) + " edges, found " + std::to_string(edges.size()), lineno);
    }
    try {
        return Graph(*nv, std::move(edges));
    } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, e.what(), e.index());
    }
}

std::string format_graph(const Graph& g) {
    std::string out = "p " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edges().size()) + "\n";
    for (auto [u, v] : g.edges()) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

std::vector<VertexPair> parse_pairs(std::istream& in) {
    std::vector<VertexPair> pairs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens(line);
        if (skippable(toks, '#')) continue;
        if (toks.size() != 2) parse_error("pair line must hold two 0/1 strings", lineno);
        try {
            pairs.emplace_back(BitVector::from_string(toks[0]), BitVector::from_string(toks[1]));
        } catch (const Error& e) {
            parse_error(e.what(), lineno);
        }
    }
    return pairs;
}

std::string format_pairs(const std::vector<VertexPair>& pairs) {
    std::string out;
    for (const auto& [y, ybar] : pairs) out += y.to_string() + " " + ybar.to_string() + "\n";
    return out;
}

std::vector<BitVector> parse_vertex_list(std::istream& in) {
    std::vector<BitVector> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens(line);
        if (skippable(toks, '#')) continue;
        if (toks.size() != 1) parse_error("expected one 0/1 string per line", lineno);
        try {
            out.push_back(BitVector::from_string(toks[0]));
        } catch (const Error& e) {
            parse_error(e.what(), lineno);
        }
    }
    return out;
}

PolytopeCode parse_code(Family family, std::istream& in) {
    switch (family) {
        case Family::Stable: return PolytopeCode::stable(parse_graph(in));
        case Family::Cover: return PolytopeCode::cover(parse_matrix(in));
        case Family::Pack: return PolytopeCode::pack(parse_matrix(in));
        case Family::Part: return PolytopeCode::part(parse_matrix(in));
        case Family::DCP: return PolytopeCode::dcp(parse_matrix(in));
        case Family::NPadj: return PolytopeCode::npadj(parse_matrix(in));
    }
    throw Error(ErrorCode::InvalidArgument, "unknown family");
}

std::string format_code(const PolytopeCode& code) {
    return code.family() == Family::Stable ? format_graph(code.graph()) : format_matrix(code.matrix());
}

PolytopeCode read_code(Family family, const std::filesystem::path& path) {
    auto in = open(path);
    return parse_code(family, in);
}

Graph read_graph(const std::filesystem::path& path) {
    auto in = open(path);
    return parse_graph(in);
}

BinaryMatrix read_matrix(const std::filesystem::path& path) {
    auto in = open(path);
    return parse_matrix(in);
}

std::vector<VertexPair> read_pairs(const std::filesystem::path& path) {
    auto in = open(path);
    return parse_pairs(in);
}

std::vector<BitVector> read_vertex_list(const std::filesystem::path& path) {
    auto in = open(path);
    return parse_vertex_list(in);
}

}  // namespace polyadj::io
