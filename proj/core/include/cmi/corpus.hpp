#pragma once

#include <cmi/ideal.hpp>
#include <cmi/simplicial.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cmi {

// A named fixture: a complex and/or an ideal, optionally with the published
// facet or generator order, plus the properties the source asserts for it.
struct CorpusEntry {
    std::string name;
    std::optional<SimplicialComplex> complex;
    std::optional<MonomialIdeal> ideal;
    std::vector<Face> facet_order;     // published shelling order, if any
    std::vector<Monomial> gen_order;   // published generator order, if any
    std::map<std::string, std::string> expected;
};

// Throws input_error on unknown names; corpus_names lists the valid ones.
CorpusEntry corpus_load(const std::string& name);
const std::vector<std::string>& corpus_names();

// Index bipartition of the canonical generators of the named sum ideal into
// its two published parts, usable as a certificate-search root hint.
std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
corpus_hint(const std::string& name);

// Variable renaming under which the polarized Ziegler ideal coincides with
// the Alexander dual ideal of the Ziegler complex: the doubled variables x1
// and x2 move to the fresh labels x9 and x10 while their second copies take
// over the base names.
const std::vector<std::pair<std::string, std::string>>& ziegler_polarization_renames();

} // namespace cmi
