#pragma once

#include <cmi/monomial.hpp>
#include <cmi/simplicial.hpp>

#include <vector>

namespace cmi {

// Exact matrix rank over the rationals: fraction-free elimination on big
// integers, pivoting on small entries to limit coefficient growth.
long long rank_over_q(std::vector<std::vector<Int>> mat);

// Rank over the prime field F_p. Throws input_error unless p is prime.
long long rank_mod_p(std::vector<std::vector<long long>> mat, long long p);

// Dimensions of reduced simplicial homology with coefficients in Q
// (characteristic 0) or F_p (characteristic p prime). result[d+1] holds
// dim H~_d for d = -1 .. dim, so the complex {emptyset} gives {1}. The void
// complex has all reduced homology zero and returns an empty vector.
std::vector<long long> reduced_homology_dims(const SimplicialComplex& c,
                                             long long characteristic);

} // namespace cmi
