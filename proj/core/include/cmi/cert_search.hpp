#pragma once

#include <cmi/certificate.hpp>
#include <cmi/shelling.hpp>
#include <cmi/simplicial.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace cmi {

struct SearchOptions {
    std::uint64_t budget = default_search_budget;
    int threads = 1;
    // Bipartition to try first at the root: two disjoint covering lists of
    // indices into the canonical generator (or facet) order.
    std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> root_split;
};

struct CertSearchStats {
    std::uint64_t partitions_examined = 0;
    std::uint64_t memo_entries = 0;
    std::uint64_t universes = 0;
};

struct CertSearchResult {
    SearchStatus status = SearchStatus::Refuted;
    CertPtr certificate; // verifies, when status == Found
    CertSearchStats stats;
};

// Exhaustive memoized certificate search. A generator set S is constructible
// iff |S| = 1 or some bipartition S = S1 + S2 (least element pinned to S1)
// has both sides constructible and meet (S1) cap (S2) generated in degree
// q+1 and itself constructible. Memo keys are subset bitmasks within a
// universe; every distinct meet generator set opens a universe one degree
// up. Degrees cannot pass the componentwise-max bound, which caps the
// recursion. Refuted only on exhaustion, never on budget.
CertSearchResult find_certificate(const MonomialIdeal& ideal, const SearchOptions& opts = {});

// Complex-level construction tree: a leaf is one facet, a node glues two
// constructible pure d-subcomplexes along their constructible pure (d-1)-
// dimensional intersection.
struct ComplexCertificate;
using CCertPtr = std::shared_ptr<const ComplexCertificate>;

struct ComplexCertificate {
    std::vector<Face> facets; // what this subtree certifies, canonical order
    CCertPtr left, right, meet;
    bool is_leaf() const { return !left; }
};

CCertPtr complex_cert_leaf(Face f);
CCertPtr complex_cert_node(CCertPtr left, CCertPtr right, CCertPtr meet);

CertCheck verify_complex_certificate(const SimplicialComplex& c,
                                     const ComplexCertificate& cert);

struct ComplexSearchResult {
    SearchStatus status = SearchStatus::Refuted;
    CCertPtr certificate;
    CertSearchStats stats;
};

// Same search skeleton over facet subsets, with intersections in place of
// lcms and dimension d-1 in place of degree q+1.
ComplexSearchResult complex_constructibility(const SimplicialComplex& c,
                                             const SearchOptions& opts = {});

} // namespace cmi
