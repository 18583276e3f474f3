#include "oklab/okounkov.hpp"

#include <algorithm>
#include <set>

#include "oklab/errors.hpp"

namespace oklab {

FiniteSemigroup::FiniteSemigroup(int ambient_dim, std::vector<IntVec> gens)
    : ambient(ambient_dim), generators(std::move(gens)) {
    if (ambient < 2) throw precondition_error("semigroup ambient dimension must be >= 2");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != ambient)
            throw precondition_error("generator dimension mismatch");
        for (long long x : g)
            if (x < 0) throw precondition_error("generators must have nonnegative entries");
    }
}

RationalCone cone_of(const FiniteSemigroup& s) {
    RationalCone c{s.ambient, {}};
    for (const auto& g : s.generators) c.generators.push_back(to_rat_vec(g));
    return c;
}

MultiIndex::MultiIndex(IntVec e) : exponents(std::move(e)) {
    for (long long x : exponents)
        if (x < 0) throw precondition_error("multi-index entries must be nonnegative");
}

namespace {

bool is_zero_vec(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

// Generators split by grading level; zero generators ignored, nonzero
// level-0 generators rejected (they would make every Delta_k unbounded).
std::vector<std::pair<IntVec, long long>> graded_generators(const FiniteSemigroup& s) {
    std::vector<std::pair<IntVec, long long>> out;
    for (const auto& g : s.generators) {
        if (is_zero_vec(g)) continue;
        long long level = g.back();
        if (level == 0)
            throw precondition_error("generator with zero last coordinate spans a recession direction");
        out.emplace_back(IntVec(g.begin(), g.end() - 1), level);
    }
    return out;
}

} // namespace

RationalPolytope okounkov_body(const FiniteSemigroup& s) {
    auto gens = graded_generators(s);
    if (gens.empty()) throw precondition_error("empty grading");
    const int n = s.ambient - 1;
    std::vector<RatVec> slice;
    for (const auto& [head, level] : gens) {
        RatVec p(n);
        for (int i = 0; i < n; ++i) p[i] = Rational(head[i], level);
        slice.push_back(std::move(p));
    }
    return convex_hull(n, slice);
}

std::vector<RatVec> delta_k(const FiniteSemigroup& s, long long k) {
    if (k < 1) throw precondition_error("delta_k needs k >= 1");
    auto gens = graded_generators(s);
    const int n = s.ambient - 1;

    // reachable[j] = heads of semigroup elements at level j
    std::vector<std::set<IntVec>> reachable(static_cast<size_t>(k) + 1);
    reachable[0].insert(IntVec(n, 0));
    for (long long j = 1; j <= k; ++j)
        for (const auto& [head, level] : gens) {
            if (level > j) continue;
            for (const auto& base : reachable[static_cast<size_t>(j - level)]) {
                IntVec sum = base;
                for (int i = 0; i < n; ++i) sum[i] += head[i];
                reachable[static_cast<size_t>(j)].insert(std::move(sum));
            }
        }

    std::vector<RatVec> out;
    for (const auto& head : reachable[static_cast<size_t>(k)]) {
        RatVec p(n);
        for (int i = 0; i < n; ++i) p[i] = Rational(head[i], k);
        out.push_back(std::move(p));
    }
    return out; // set iteration is already lexicographic
}

MultiIndex lowest_term_valuation(const std::vector<std::pair<MultiIndex, Rational>>& terms) {
    if (terms.empty()) throw precondition_error("zero section has no valuation");
    std::set<IntVec> seen;
    const MultiIndex* best = nullptr;
    for (const auto& [idx, coeff] : terms) {
        if (coeff == 0) throw precondition_error("term coefficients must be nonzero");
        if (!seen.insert(idx.exponents).second)
            throw precondition_error("duplicate multi-index in term list");
        if (!best || idx < *best) best = &idx;
    }
    return *best;
}

} // namespace oklab
