#pragma once

#include <cmi/certificate.hpp>
#include <cmi/ideal.hpp>
#include <cmi/simplicial.hpp>

#include <cstdint>
#include <vector>

namespace cmi {

struct LQSample {
    MonomialIdeal ideal;
    std::vector<Monomial> order; // a valid linear-quotient order
};

// Greedy rejection sampler over degree-q monomials in n variables: each
// accepted generator keeps the construction order's prefix colons
// variable-generated. Deterministic per seed; throws input_error after
// bounded retries when the requested size is unreachable.
LQSample random_lq_ideal(std::size_t n, long long q, std::size_t size, std::uint64_t seed);

struct ConstructibleSample {
    MonomialIdeal ideal;
    CertPtr certificate;
};

// An LQ sample turned into its right-comb certificate; some seeds instead
// glue two LQ ideals into one node when the meet lands in degree q+1 and is
// itself certifiable. Output always passes verify_certificate.
ConstructibleSample random_constructible(std::size_t n, long long q, std::size_t size,
                                         std::uint64_t seed);

// Pure: random k-subsets for one k in [1, n-1]. General: random faces of
// mixed sizes in [1, n-1] (never the full simplex, so duals stay proper).
// Both need n >= 2.
SimplicialComplex random_pure_complex(int n, std::uint64_t seed);
SimplicialComplex random_complex(int n, std::uint64_t seed);

} // namespace cmi
