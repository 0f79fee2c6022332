// Acceptance sweeps. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "polyadj/commands.hpp"
#include "polyadj/error.hpp"
#include "polyadj/hull.hpp"
#include "polyadj/matsui.hpp"
#include "polyadj/reductions.hpp"
#include "polyadj/witness.hpp"

using namespace polyadj;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::vector<std::vector<int>> weight_three_rows(std::size_t n) {
    std::vector<std::vector<int>> rows;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        if (__builtin_popcountll(mask) != 3) continue;
        std::vector<int> r(n);
        for (std::size_t j = 0; j < n; ++j) r[j] = (mask >> (n - 1 - j)) & 1U;
        rows.push_back(std::move(r));
    }
    return rows;
}

// all multisets of size m drawn from `rows`, as index lists in non-decreasing order
void multisets(std::size_t count, std::size_t m, std::vector<std::size_t>& cur, std::size_t start,
               const std::function<void(const std::vector<std::size_t>&)>& f) {
    if (cur.size() == m) {
        f(cur);
        return;
    }
    for (std::size_t i = start; i < count; ++i) {
        cur.push_back(i);
        multisets(count, m, cur, i, f);
        cur.pop_back();
    }
}

Outcome matsui_sweep() {
    std::set<std::vector<std::vector<int>>> instances;
    for (std::size_t n = 3; n <= 5; ++n) {
        auto rows = weight_three_rows(n);
        std::size_t max_m = n == 3 ? 3 : 4;
        for (std::size_t m = 1; m <= max_m; ++m) {
            std::vector<std::size_t> cur;
            multisets(rows.size(), m, cur, 0, [&](const std::vector<std::size_t>& pick) {
                std::vector<std::vector<int>> a;
                for (auto i : pick) a.push_back(rows[i]);
                instances.insert(a);
            });
        }
    }
    instances.insert({{1, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 1}});

    Outcome out;
    std::size_t failures = 0, empty = 0;
    for (const auto& rows : instances) {
        auto a = BinaryMatrix::from_rows(rows);
        auto rep = matsui_check(a);
        bool brute_empty = oracle::enumerate(PolytopeCode::part(a)).empty();
        if (!rep.criterion_holds || rep.part_empty != brute_empty) ++failures;
        if (rep.part_empty) ++empty;
    }
    out.pass = failures == 0 && instances.size() >= 500;
    out.detail = std::to_string(instances.size()) + " instances (" + std::to_string(empty) +
                 " with empty Part), " + std::to_string(failures) + " failures";
    return out;
}

Outcome reduction_chain_sweep() {
    constexpr std::size_t cap = 40;
    std::size_t graphs = 0, failures = 0, stages = 0;
    for (std::size_t nv = 2; nv <= 4; ++nv) {
        std::size_t slots = nv * (nv - 1) / 2;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << slots); ++mask) {
            auto g = oracle::graph_from_mask(nv, mask);
            ++graphs;
            auto chain = reduction_chain(g);
            for (const auto* art : {&chain.stable_part, &chain.part_npadj, &chain.npadj_dcp, &chain.composed}) {
                ++stages;
                if (!verify_reduction(*art, cap).all_passed()) ++failures;
            }
            const auto& a = chain.stable_part.target.matrix();
            const auto& b = chain.npadj_dcp.target.matrix();
            bool shape = b.rows() == 2 * a.cols() + a.rows() && b.cols() == 3 * a.cols() + 5;
            for (std::size_t r = 0; r < b.rows(); ++r) shape = shape && b.row_weight(r) == 4;
            if (!shape) ++failures;
        }
    }
    return {failures == 0, std::to_string(graphs) + " graphs, " + std::to_string(stages) + " verified stages, " +
                               std::to_string(failures) + " failures"};
}

Outcome hull_cross_validation() {
    std::mt19937 rng(20240611);
    std::size_t queries = 0, hull_disagree = 0, inside = 0;
    for (; queries < 1000; ++queries) {
        std::size_t d = 1 + rng() % 4;
        std::size_t k = 1 + rng() % std::min<std::size_t>(8, std::size_t{1} << d);
        auto xs = oracle::random_points(rng, d, k);
        RationalVector p(d);
        if (rng() % 2) {
            // random convex combination of a few members, so roughly half the queries land inside
            std::vector<Rational> w(k);
            Rational total = 0;
            for (auto& x : w) total += (x = static_cast<long>(rng() % 4));
            if (total == 0) w[0] = total = 1;
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t c = 0; c < d; ++c) p[c] += w[i] / total * static_cast<int>(xs[i][c]);
            }
        } else {
            for (auto& c : p) c = ratio(static_cast<long>(rng() % 5), 4);
        }
        auto cert = in_convex_hull(p, xs);
        bool expected = oracle::in_hull(p, xs);
        if (cert) ++inside;
        if (cert.has_value() != expected || (cert && !verify_hull_certificate(p, xs, *cert))) ++hull_disagree;
    }

    std::size_t sets = 0, pairs = 0, midpoint_disagree = 0, segment_disagree = 0;
    for (; sets < 100; ++sets) {
        std::size_t d = 2 + rng() % 3;
        std::size_t k = 3 + rng() % std::min<std::size_t>(6, (std::size_t{1} << d) - 2);
        auto xs = oracle::random_points(rng, d, k);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            for (std::size_t j = i + 1; j < xs.size(); ++j) {
                ++pairs;
                bool adj = are_adjacent(xs, xs[i], xs[j]).adjacent;
                std::vector<BitVector> rest;
                for (const auto& x : xs) {
                    if (x != xs[i] && x != xs[j]) rest.push_back(x);
                }
                bool midpoint_says = rest.empty() || !oracle::in_hull(midpoint(xs[i], xs[j]), rest);
                if (adj != midpoint_says) ++midpoint_disagree;
                if (adj != oracle::adjacent(xs, xs[i], xs[j])) ++segment_disagree;
            }
        }
    }
    Outcome out;
    out.pass = hull_disagree == 0 && midpoint_disagree == 0;
    out.detail = std::to_string(queries) + " hull queries (" + std::to_string(inside) + " inside), " +
                 std::to_string(hull_disagree) + " disagreements; " + std::to_string(pairs) + " pairs on " +
                 std::to_string(sets) + " sets: " + std::to_string(midpoint_disagree) +
                 " disagree with the midpoint test, " + std::to_string(segment_disagree) +
                 " with the exact segment test";
    return out;
}

struct SumGroups {
    std::vector<BitVector> vertices;
    std::map<std::vector<int>, std::vector<VertexPair>> by_sum;  // only sums with >= 3 pairs
};

SumGroups pair_groups(const Graph& g) {
    SumGroups out;
    out.vertices = enumerate_vertices(PolytopeCode::stable(g));
    std::set<std::vector<int>> sums;
    const auto& xs = out.vertices;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            std::vector<int> s(xs[i].size());
            for (std::size_t c = 0; c < s.size(); ++c) s[c] = xs[i][c] + xs[j][c];
            sums.insert(std::move(s));
        }
    }
    for (const auto& s : sums) {
        auto pairs = pair_extension_oracle(g, s);
        if (pairs.size() >= 3) out.by_sum.emplace(s, std::move(pairs));
    }
    return out;
}

VertexPair sorted_pair(const VertexPair& p) { return p.first < p.second ? p : VertexPair{p.second, p.first}; }

// Calls f on odd-size (>= 3) index subsets of {0..p-1}. Exhaustive when there
// are at most `limit` of them; otherwise every 3-subset plus `samples` random
// larger odd subsets.
template <class F>
void odd_families(std::size_t p, std::size_t limit, std::size_t samples, std::mt19937& rng, F&& f) {
    double total = p >= 63 ? 1e30 : std::ldexp(1.0, static_cast<int>(p) - 1) - static_cast<double>(p);
    std::vector<std::size_t> idx;
    if (total <= static_cast<double>(limit)) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); ++mask) {
            int c = __builtin_popcountll(mask);
            if (c < 3 || c % 2 == 0) continue;
            idx.clear();
            for (std::size_t i = 0; i < p; ++i) {
                if ((mask >> i) & 1U) idx.push_back(i);
            }
            f(idx);
        }
        return;
    }
    for (std::size_t a = 0; a < p; ++a) {
        for (std::size_t b = a + 1; b < p; ++b) {
            for (std::size_t c = b + 1; c < p; ++c) f(std::vector<std::size_t>{a, b, c});
        }
    }
    std::vector<std::size_t> all(p);
    for (std::size_t i = 0; i < p; ++i) all[i] = i;
    for (std::size_t s = 0; s < samples; ++s) {
        std::size_t size = 5 + 2 * (rng() % ((p - 3) / 2));
        std::shuffle(all.begin(), all.end(), rng);
        idx.assign(all.begin(), all.begin() + size);
        std::sort(idx.begin(), idx.end());
        f(idx);
    }
}

struct WitnessTally {
    std::size_t graphs = 0, families = 0, failures = 0, sampled_sums = 0;
};

void check_graph_witnesses(const Graph& g, std::mt19937& rng, WitnessTally& tally, std::size_t limit,
                           std::size_t samples) {
    ++tally.graphs;
    auto groups = pair_groups(g);
    PolytopeCode stable = PolytopeCode::stable(g);
    for (const auto& [s, pairs] : groups.by_sum) {
        std::set<VertexPair> known(pairs.begin(), pairs.end());
        if (std::ldexp(1.0, static_cast<int>(std::min<std::size_t>(pairs.size(), 62)) - 1) > static_cast<double>(limit)) {
            ++tally.sampled_sums;
        }
        odd_families(pairs.size(), limit, samples, rng, [&](const std::vector<std::size_t>& idx) {
            ++tally.families;
            std::vector<VertexPair> fam;
            for (auto i : idx) fam.push_back(pairs[i]);
            bool ok = false;
            try {
                auto ref = refute_face(g, fam);
                VertexPair w = sorted_pair({ref.witness.y_star, ref.witness.y_star_bar});
                ok = membership(stable, w.first) && membership(stable, w.second) && known.count(w) != 0;
                for (std::size_t c = 0; c < s.size(); ++c) ok = ok && w.first[c] + w.second[c] == s[c];
                for (const auto& p : fam) ok = ok && sorted_pair(p) != w;
            } catch (const Error&) {
                ok = false;
            }
            if (!ok) ++tally.failures;
        });
    }
}

Outcome pair_extension_sweep() {
    std::mt19937 rng(7);
    WitnessTally small, large;
    for (std::size_t n = 1; n <= 6; ++n) {
        std::size_t slots = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
            check_graph_witnesses(oracle::graph_from_mask(n, mask), rng, small, 1024, 64);
        }
    }
    for (std::size_t i = 0; i < 10000; ++i) {
        std::size_t n = 7 + i % 2;
        std::uint64_t mask = std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{1} << (n * (n - 1) / 2)) - 1)(rng);
        check_graph_witnesses(oracle::graph_from_mask(n, mask), rng, large, 64, 4);
    }
    Outcome out;
    out.pass = small.failures == 0 && large.failures == 0;
    out.detail = std::to_string(small.graphs) + " graphs on <= 6 vertices, " + std::to_string(small.families) +
                 " families (" + std::to_string(small.sampled_sums) + " sums sampled beyond 3-subsets); " +
                 std::to_string(large.graphs) + " random graphs on 7-8 vertices, " + std::to_string(large.families) +
                 " families; " + std::to_string(small.failures + large.failures) + " failures";
    return out;
}

Outcome face_corollary_sweep() {
    std::size_t graphs = 0, subsets = 0, counterexamples = 0;
    auto run = [&](const Graph& g) {
        auto vertices = enumerate_vertices(PolytopeCode::stable(g));
        if (vertices.size() > 12) return;
        ++graphs;
        auto groups = pair_groups(g);
        for (const auto& [s, pairs] : groups.by_sum) {
            std::size_t p = pairs.size();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); ++mask) {
                int c = __builtin_popcountll(mask);
                if (c < 3 || c % 2 == 0) continue;
                std::vector<BitVector> face;
                for (std::size_t i = 0; i < p; ++i) {
                    if ((mask >> i) & 1U) {
                        face.push_back(pairs[i].first);
                        face.push_back(pairs[i].second);
                    }
                }
                ++subsets;
                if (is_face(face, vertices)) ++counterexamples;
            }
        }
    };
    for (std::size_t n = 1; n <= 5; ++n) {
        std::size_t slots = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) run(oracle::graph_from_mask(n, mask));
    }
    // from 6 vertices on, |Stable| <= 12 needs at most 11 - n non-edges
    for (std::size_t n = 6; n <= 11; ++n) {
        std::size_t slots = n * (n - 1) / 2;
        std::size_t budget = 11 - n;
        std::vector<std::size_t> holes;
        std::function<void(std::size_t)> rec = [&](std::size_t start) {
            std::uint64_t mask = (slots == 64 ? ~0ULL : (std::uint64_t{1} << slots) - 1);
            for (auto h : holes) mask &= ~(std::uint64_t{1} << h);
            run(oracle::graph_from_mask(n, mask));
            if (holes.size() == budget) return;
            for (std::size_t h = start; h < slots; ++h) {
                holes.push_back(h);
                rec(h + 1);
                holes.pop_back();
            }
        };
        rec(0);
    }
    return {counterexamples == 0, std::to_string(graphs) + " graphs, " + std::to_string(subsets) +
                                      " odd pair subsets, " + std::to_string(counterexamples) + " faces"};
}

Outcome octahedron_golden() {
    auto code = PolytopeCode::dcp(BinaryMatrix::from_rows({{1, 1, 1, 1}}));
    auto xs = enumerate_vertices(code);
    bool ok = xs.size() == 6 && xs == oracle::enumerate(code);
    std::size_t comp_nonadj = 0, other_adj = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            bool adj = are_adjacent(xs, xs[i], xs[j]).adjacent;
            ok = ok && adj == oracle::adjacent(xs, xs[i], xs[j]);
            if (xs[i].complement() == xs[j]) comp_nonadj += !adj;
            else other_adj += adj;
        }
    }
    ok = ok && comp_nonadj == 3 && other_adj == 12;
    return {ok, std::to_string(xs.size()) + " vertices, " + std::to_string(comp_nonadj) +
                    "/3 complementary pairs non-adjacent, " + std::to_string(other_adj) + "/12 other pairs adjacent"};
}

Outcome cube_witness() {
    Graph g(3, {});
    auto bv = [](const char* s) { return BitVector::from_string(s); };
    std::vector<VertexPair> pairs{{bv("000"), bv("111")}, {bv("110"), bv("001")}, {bv("101"), bv("010")}};
    auto ref = refute_face(g, pairs);
    bool lib = ref.witness.t == 2 && ref.witness.s == IndexSet{0} && ref.witness.y_star.to_string() == "100";

    // the same instance through the command layer, as rendered text
    std::ostringstream graph_text, pairs_text;
    auto dir = std::filesystem::temp_directory_path();
    {
        std::ofstream(dir / "polyadj_cube_graph.txt") << "p 3 0\n";
        std::ofstream(dir / "polyadj_cube_pairs.txt") << "000 111\n110 001\n101 010\n";
    }
    auto r = cli::cmd_refute_face(dir / "polyadj_cube_graph.txt", dir / "polyadj_cube_pairs.txt");
    std::string text = cli::render_text(r.payload);
    bool rendered = text.find("\nt: 2\n") != std::string::npos && text.find("\nS: [1]\n") != std::string::npos &&
                    text.find("\ny_star: 100\n") != std::string::npos;
    std::filesystem::remove(dir / "polyadj_cube_graph.txt");
    std::filesystem::remove(dir / "polyadj_cube_pairs.txt");
    return {lib && rendered, "t=" + std::to_string(ref.witness.t) + " S={" +
                                 (ref.witness.s.empty() ? std::string() : std::to_string(ref.witness.s[0] + 1)) +
                                 "} y*=" + ref.witness.y_star.to_string()};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {1, "matsui-equivalence", matsui_sweep},
        {2, "reduction-chain", reduction_chain_sweep},
        {3, "hull-cross-validation", hull_cross_validation},
        {4, "pair-extension", pair_extension_sweep},
        {5, "face-corollary", face_corollary_sweep},
        {6, "octahedron-golden", octahedron_golden},
        {7, "cube-witness", cube_witness},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
