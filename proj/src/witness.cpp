#include "polyadj/witness.hpp"

#include <algorithm>
#include <iterator>
#include <set>

namespace polyadj {

IndexSet symmetric_difference(const IndexSet& x, const IndexSet& y) {
    IndexSet out;
    std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

IndexSet PairFamily::complement_in_j(const IndexSet& s) const {
    IndexSet out;
    std::set_difference(differ.begin(), differ.end(), s.begin(), s.end(), std::back_inserter(out));
    return out;
}

namespace {

std::vector<int> pair_sum(const VertexPair& p) {
    std::vector<int> s(p.first.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = p.first[i] + p.second[i];
    return s;
}

VertexPair unordered(const VertexPair& p) {
    return p.first < p.second ? p : VertexPair{p.second, p.first};
}

bool same_pair(const VertexPair& a, const VertexPair& b) { return unordered(a) == unordered(b); }

}  // namespace

PairFamily build_pair_family(const Graph& g, const std::vector<VertexPair>& pairs) {
    if (pairs.size() < 3) {
        throw Error(ErrorCode::TooFewPairs, "need at least 3 pairs, got " + std::to_string(pairs.size()));
    }
    PolytopeCode stable = PolytopeCode::stable(g);
    std::size_t dim = g.vertex_count();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (const auto* y : {&pairs[i].first, &pairs[i].second}) {
            if (y->size() != dim) throw Error(ErrorCode::DimensionMismatch, "pair " + std::to_string(i) + " has wrong length", i);
            if (!membership(stable, *y)) {
                throw Error(ErrorCode::NotInStablePolytope,
                            "pair " + std::to_string(i) + ": " + y->to_string() + " is not a stable set", i);
            }
        }
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].first == pairs[i].second) {
            throw Error(ErrorCode::DegeneratePair, "pair " + std::to_string(i) + " has equal members", i);
        }
    }
    std::vector<int> sum = pair_sum(pairs[0]);
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        if (pair_sum(pairs[i]) != sum) {
            throw Error(ErrorCode::UnequalSums, "pair " + std::to_string(i) + " has a different sum than pair 0", i);
        }
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (same_pair(pairs[i], pairs[j])) {
                throw Error(ErrorCode::DuplicatePairs,
                            "pairs " + std::to_string(j) + " and " + std::to_string(i) + " coincide", i);
            }
        }
    }

    PairFamily fam{g, {}, sum, {}, {}, 0, {}, 0};
    for (std::size_t i = 0; i < dim; ++i) (sum[i] == 1 ? fam.differ : fam.common).push_back(i);
    fam.j0 = fam.differ.front();  // non-empty: pairs are not degenerate
    for (const auto& p : pairs) {
        VertexPair oriented = p.first[fam.j0] == 1 ? p : VertexPair{p.second, p.first};
        IndexSet u;
        for (auto j : fam.differ) {
            if (oriented.first[j]) u.push_back(j);
        }
        fam.pairs.push_back(std::move(oriented));
        fam.u.push_back(std::move(u));
    }
    fam.k = (pairs.size() - 1) / 2;
    return fam;
}

TripleChoice find_t(const PairFamily& family) {
    std::size_t w = family.working_count();
    if (w < 3 || family.u.size() < w) throw Error(ErrorCode::InvalidArgument, "pair family too small for the search");
    auto collides = [&](const IndexSet& s, std::size_t p) {
        return s == family.u[p] || s == family.complement_in_j(family.u[p]);
    };
    IndexSet base = symmetric_difference(family.u[0], family.u[1]);
    bool any_working = false;
    for (std::size_t t = 2; t < w; ++t) {
        IndexSet s = symmetric_difference(base, family.u[t]);
        bool ok = true;
        for (std::size_t p = 0; p < w && ok; ++p) ok = !collides(s, p);
        if (!ok) continue;
        any_working = true;
        for (std::size_t p = w; p < family.u.size() && ok; ++p) ok = !collides(s, p);
        if (ok) return {t, std::move(s)};
    }
    if (!any_working) {
        throw Error(ErrorCode::InvariantViolation, "no t in {2,...,2k} gives a new symmetric difference");
    }
    throw Error(ErrorCode::EvenFamilyNoWitness, "every candidate witness coincides with the pair outside the working family");
}

Witness construct_witness(const PairFamily& family, const TripleChoice& choice) {
    if (!std::includes(family.differ.begin(), family.differ.end(), choice.s.begin(), choice.s.end())) {
        throw Error(ErrorCode::InvalidArgument, "S must be a subset of J");
    }
    std::size_t dim = family.graph.vertex_count();
    Witness wit{BitVector(dim), BitVector(dim), choice.t, choice.s};
    for (auto i : family.common) {
        bool v = family.sum[i] == 2;
        wit.y_star.set(i, v);
        wit.y_star_bar.set(i, v);
    }
    std::set<std::size_t> in_s(choice.s.begin(), choice.s.end());
    for (auto j : family.differ) {
        bool v = in_s.count(j) != 0;
        wit.y_star.set(j, v);
        wit.y_star_bar.set(j, !v);
    }

    PolytopeCode stable = PolytopeCode::stable(family.graph);
    if (!membership(stable, wit.y_star) || !membership(stable, wit.y_star_bar)) {
        throw Error(ErrorCode::MembershipViolation, "witness pair is not in Stable(G)");
    }
    VertexPair as_pair{wit.y_star, wit.y_star_bar};
    if (pair_sum(as_pair) != family.sum) throw Error(ErrorCode::InvariantViolation, "witness sum differs");
    for (std::size_t p = 0; p < family.pairs.size(); ++p) {
        if (same_pair(as_pair, family.pairs[p])) {
            throw Error(ErrorCode::InvariantViolation, "witness coincides with input pair " + std::to_string(p), p);
        }
    }
    return wit;
}

Refutation refute_face(const Graph& g, const std::vector<VertexPair>& pairs) {
    PairFamily family = build_pair_family(g, pairs);
    Witness wit = construct_witness(family, find_t(family));
    RationalVector mid = midpoint(wit.y_star, wit.y_star_bar);
    return {std::move(wit), std::move(mid)};
}

std::vector<VertexPair> pair_extension_oracle(const Graph& g, const std::vector<int>& s, std::size_t cap) {
    if (s.size() != g.vertex_count()) throw Error(ErrorCode::DimensionMismatch, "sum vector length != |V|");
    auto vertices = enumerate_vertices(PolytopeCode::stable(g), cap);
    std::set<BitVector> members(vertices.begin(), vertices.end());
    std::vector<VertexPair> out;
    for (const auto& y : vertices) {
        BitVector other(y.size());
        bool binary = true;
        for (std::size_t i = 0; i < y.size() && binary; ++i) {
            int v = s[i] - y[i];
            if (v != 0 && v != 1) binary = false;
            else other.set(i, v == 1);
        }
        if (binary && y < other && members.count(other) != 0) out.emplace_back(y, std::move(other));
    }
    return out;
}

}  // namespace polyadj
