#pragma once

#include <cmi/betti.hpp>
#include <cmi/ideal.hpp>
#include <cmi/simplicial.hpp>

namespace cmi {

// Upper Koszul complex of the ideal at multidegree b: vertices are the
// support of b; a squarefree a within that support is a face iff x^(b-a)
// lies in the ideal. Downward closure follows from ideal absorption.
SimplicialComplex koszul_complex_at(const MonomialIdeal& ideal, const Monomial& b);

// Independent graded Betti numbers: beta_{i,|b|} accumulates
// dim H~_{i-1}(koszul_complex_at(ideal, b)) over the candidate multidegrees,
// which form the lcm-closure of the generators (pairwise fixpoint). Exact
// arithmetic throughout; characteristic 0 or a prime. Candidates may be
// processed in parallel; the summed table is deterministic.
BettiTable betti_table(const MonomialIdeal& ideal, long long characteristic = 0,
                       int threads = 1);

// True iff every nonzero beta_{i,j} has j = i + q, where q is the common
// generator degree. Throws on mixed degrees.
bool has_linear_resolution(const MonomialIdeal& ideal, long long characteristic = 0);

} // namespace cmi
