#pragma once

#include <cmi/betti.hpp>
#include <cmi/certificate.hpp>
#include <cmi/ideal.hpp>
#include <cmi/shelling.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace cmi {

struct LQCheck {
    bool ok = true;
    std::size_t failing_index = 0; // 1-based k of the first failing prefix colon
    std::string reason;
    // steps[k-1] lists L_k, the variable indices generating the k-th prefix
    // colon; steps[0] is empty. Filled only when ok.
    std::vector<std::vector<std::size_t>> steps;
};

// Linear-quotient check: every prefix colon (u_1..u_{k-1}):(u_k) must be
// generated by variables. The definition's literal quantifier form (for
// every j < k some variable u_{k'}/gcd divides u_j/gcd) is evaluated
// alongside; the two formulations are equivalent and a disagreement throws,
// since it would falsify what the Betti formula below relies on.
LQCheck verify_lq_order(const MonomialIdeal& ideal, const std::vector<Monomial>& order);

struct LQResult {
    SearchStatus status = SearchStatus::Refuted;
    std::vector<Monomial> order; // a witness when status == Found
    SearchStats stats;
};

// Exhaustive subset-memoized order search: S admits a linear-quotient order
// iff |S| = 1 or some u in S has (S minus u):(u) variable-generated and
// S minus u orderable. Refuted only on exhaustion.
LQResult find_lq_order(const MonomialIdeal& ideal,
                       std::uint64_t budget = default_search_budget);

// Betti numbers of an ideal with linear quotients: beta_0 = |G|, and
// beta_i = sum over k of C(r_k, i) where r_k = |L_k|, placed at (i, q+i)
// for the common generator degree q. Requires a valid single-degree order.
BettiTable betti_from_lq(const MonomialIdeal& ideal, const std::vector<Monomial>& order);

// Constructibility certificate of a single-degree ideal with linear
// quotients, as a right comb: (u_1..u_{r-1}) + (u_r) with meet
// (x_l u_r : l in L_r), which again has linear quotients and recurses.
CertPtr lq_to_certificate(const MonomialIdeal& ideal, const std::vector<Monomial>& order);

} // namespace cmi
