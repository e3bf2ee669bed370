#pragma once

#include <cmi/simplicial.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace cmi {

// Budget unit for the exhaustive searches: step-condition evaluations for
// shelling / linear-quotient order search, bipartitions examined for
// constructibility. The CMI_BUDGET environment variable overrides the
// default.
inline constexpr std::uint64_t default_search_budget = 100'000'000;
std::uint64_t search_budget_from_env();

enum class SearchStatus { Found, Refuted, BudgetExceeded };

struct SearchStats {
    std::uint64_t steps = 0;       // step evaluations / bipartitions examined
    std::uint64_t memo_states = 0; // distinct memoized subsets decided
};

struct ShellingCheck {
    bool ok = true;
    // 1-based position of the first facet whose attachment fails; 0 when ok.
    std::size_t failing_index = 0;
    std::string reason;
};

// Def-1.4 check: for each i >= 2 every maximal intersection F_i cap F_j
// (j < i) must have exactly |F_i| - 1 vertices, and for |F_i| >= 2 at least
// one such intersection must exist. Requires a pure complex and ord a
// permutation of the facets.
ShellingCheck verify_shelling(const SimplicialComplex& c, const std::vector<Face>& order);

// Single attachment step: may facet f be appended after the facets in prior?
bool shelling_step_ok(const Face& f, const std::vector<Face>& prior);

struct ShellingResult {
    SearchStatus status = SearchStatus::Refuted;
    std::vector<Face> order; // a witness when status == Found
    SearchStats stats;
};

// Exhaustive subset-memoized search. A facet set S is shellable iff |S| = 1
// or some F in S closes a shellable S minus {F}; the step condition depends
// only on the set, so subsets memoize. Refuted only after full exhaustion;
// running out of budget is reported, never converted to Refuted.
ShellingResult find_shelling(const SimplicialComplex& c,
                             std::uint64_t budget = default_search_budget);

} // namespace cmi
