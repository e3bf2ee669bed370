#include <cmi/corpus.hpp>

#include <cmi/errors.hpp>
#include <cmi/text.hpp>
#include <cmi/variables.hpp>

#include <algorithm>
#include <initializer_list>

namespace cmi {

namespace {

// Hachimori's 2-complex on vertices 0..9, split along the published bold
// line into two shellable pieces; both facet lists are in shelling order.
const std::vector<std::vector<int>> hachimori_d1_facets = {
    {0, 3, 9}, {2, 3, 9}, {2, 8, 9}, {2, 3, 8}, {0, 3, 8}, {0, 7, 8}, {0, 3, 7},
    {2, 3, 7}, {2, 6, 7}, {5, 6, 7}, {5, 7, 8}, {4, 5, 8}, {4, 8, 9}, {0, 4, 9}};

const std::vector<std::vector<int>> hachimori_d2_facets = {
    {0, 1, 4}, {1, 2, 4}, {2, 4, 5}, {1, 2, 5}, {0, 1, 5}, {0, 5, 6}, {0, 1, 6}, {1, 2, 6}};

const std::vector<std::vector<int>> hachimori_meet_facets = {{0, 4}, {4, 5}, {5, 6}, {2, 6}};

// The published dual ideals, generator-by-generator in the order that
// mirrors the shelling orders above (each generator is the complement of
// the corresponding facet).
const std::vector<const char*> hachimori_d1_dual_gens = {
    "x1*x2*x4*x5*x6*x7*x8", "x0*x1*x4*x5*x6*x7*x8", "x0*x1*x3*x4*x5*x6*x7",
    "x0*x1*x4*x5*x6*x7*x9", "x1*x2*x4*x5*x6*x7*x9", "x1*x2*x3*x4*x5*x6*x9",
    "x1*x2*x4*x5*x6*x8*x9", "x0*x1*x4*x5*x6*x8*x9", "x0*x1*x3*x4*x5*x8*x9",
    "x0*x1*x2*x3*x4*x8*x9", "x0*x1*x2*x3*x4*x6*x9", "x0*x1*x2*x3*x6*x7*x9",
    "x0*x1*x2*x3*x5*x6*x7", "x1*x2*x3*x5*x6*x7*x8"};

const std::vector<const char*> hachimori_d2_dual_gens = {
    "x2*x3*x5*x6*x7*x8*x9", "x0*x3*x5*x6*x7*x8*x9", "x0*x1*x3*x6*x7*x8*x9",
    "x0*x3*x4*x6*x7*x8*x9", "x2*x3*x4*x6*x7*x8*x9", "x1*x2*x3*x4*x7*x8*x9",
    "x2*x3*x4*x5*x7*x8*x9", "x0*x3*x4*x5*x7*x8*x9"};

const std::vector<const char*> hachimori_meet_dual_gens = {
    "x1*x2*x3*x5*x6*x7*x8*x9", "x0*x1*x2*x3*x6*x7*x8*x9", "x0*x1*x2*x3*x4*x7*x8*x9",
    "x0*x1*x3*x4*x5*x7*x8*x9"};

// Dual ideal of the dunce hat on vertices 1..8; its facets are not published
// directly and are recovered as complements of these generators' supports.
const std::vector<const char*> dunce_dual_gens = {
    "x3*x5*x6*x7*x8", "x3*x4*x5*x6*x8", "x3*x4*x5*x6*x7", "x2*x5*x6*x7*x8",
    "x2*x4*x6*x7*x8", "x2*x4*x5*x7*x8", "x2*x3*x4*x7*x8", "x2*x3*x4*x5*x6",
    "x1*x4*x6*x7*x8", "x1*x4*x5*x6*x8", "x1*x4*x5*x6*x7", "x1*x3*x6*x7*x8",
    "x1*x2*x5*x6*x7", "x1*x2*x4*x5*x8", "x1*x2*x3*x7*x8", "x1*x2*x3*x5*x7",
    "x1*x2*x3*x4*x5"};

// The constructible non-LQ ideal in k[x1..x8]: the first 14 generators form
// I1, the last 7 form I2.
const std::vector<const char*> ziegler_gens = {
    "x1*x2*x5*x6*x7*x8",   "x2*x3*x5*x6*x7*x8", "x2^2*x3*x5*x6*x7", "x2^2*x3*x4*x6*x7",
    "x1*x2^2*x3*x6*x7",    "x2*x3*x4*x5*x7*x8", "x2^2*x3*x4*x7*x8", "x1*x2*x3*x4*x7*x8",
    "x1^2*x3*x4*x7*x8",    "x1^2*x3*x4*x5*x8",  "x1*x3*x4*x6*x7*x8", "x1*x4*x5*x6*x7*x8",
    "x1^2*x4*x5*x6*x8",    "x1^2*x2*x4*x5*x8",  "x1*x2^2*x5*x6*x8",  "x1*x2^2*x3*x6*x8",
    "x1^2*x2^2*x3*x6",     "x1^2*x2^2*x5*x6",   "x1^2*x2*x5*x6*x7",  "x1^2*x2*x4*x5*x7",
    "x1^2*x2^2*x4*x5"};

const std::vector<const char*> ziegler_meet_gens = {
    "x1*x2^2*x5*x6*x7*x8", "x1^2*x2*x5*x6*x7*x8", "x1^2*x2*x4*x5*x7*x8",
    "x1^2*x2^2*x4*x5*x8",  "x1*x2^2*x3*x6*x7*x8", "x1^2*x2^2*x3*x6*x7"};

const std::vector<std::vector<int>> ziegler_d1_facets = {
    {1, 2, 3, 4}, {1, 2, 4, 9}, {1, 4, 8, 9},  {1, 5, 8, 9},  {1, 4, 5, 8},
    {1, 2, 6, 9}, {1, 5, 6, 9}, {1, 2, 5, 6},  {2, 5, 6, 10}, {2, 6, 7, 10},
    {1, 2, 5, 10}, {1, 2, 3, 10}, {2, 3, 7, 10}, {2, 3, 6, 7}};

const std::vector<std::vector<int>> ziegler_d2_facets = {
    {1, 3, 4, 7}, {1, 4, 5, 7}, {4, 5, 7, 8}, {3, 4, 7, 8},
    {2, 3, 4, 8}, {2, 3, 6, 8}, {3, 6, 7, 8}};

VarsPtr vertices_0_9() { return VariableSet::numbered("", 0, 10); }
VarsPtr vertices_1_8() { return VariableSet::numbered("", 1, 8); }
VarsPtr vertices_1_10() { return VariableSet::numbered("", 1, 10); }
VarsPtr ring_x0_x9() { return VariableSet::numbered("x", 0, 10); }
VarsPtr ring_x1_x8() { return VariableSet::numbered("x", 1, 8); }

// Published facet lists use vertex labels; Face stores ambient indices.
std::vector<Face> faces_from(const VarsPtr& labels, const std::vector<std::vector<int>>& lists) {
    std::vector<Face> out;
    out.reserve(lists.size());
    for (const auto& list : lists) {
        std::vector<int> verts;
        verts.reserve(list.size());
        for (int label : list) {
            auto idx = labels->index_of(std::to_string(label));
            if (!idx)
                throw std::logic_error("corpus facet label outside ambient");
            verts.push_back(static_cast<int>(*idx));
        }
        out.emplace_back(std::move(verts));
    }
    return out;
}

std::vector<Monomial> gens_from(const VarsPtr& vars, const std::vector<const char*>& texts) {
    std::vector<Monomial> out;
    out.reserve(texts.size());
    for (const char* t : texts)
        out.push_back(parse_monomial(*vars, t));
    return out;
}

std::vector<Monomial> concat(std::vector<Monomial> a, const std::vector<Monomial>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

CorpusEntry complex_entry(std::string name, const VarsPtr& labels,
                          std::vector<Face> facets_in_order,
                          std::map<std::string, std::string> expected) {
    CorpusEntry e;
    e.name = std::move(name);
    e.complex = SimplicialComplex(labels, facets_in_order);
    e.facet_order = std::move(facets_in_order);
    e.expected = std::move(expected);
    return e;
}

CorpusEntry ideal_entry(std::string name, const VarsPtr& vars, std::vector<Monomial> gens_in_order,
                        std::map<std::string, std::string> expected) {
    CorpusEntry e;
    e.name = std::move(name);
    e.ideal = MonomialIdeal(vars, gens_in_order);
    e.gen_order = std::move(gens_in_order);
    e.expected = std::move(expected);
    return e;
}

// Facets of the dunce hat from its dual ideal: complement of each
// generator's support.
std::vector<Face> dunce_facets() {
    auto vars = ring_x1_x8();
    std::vector<Face> out;
    for (const Monomial& g : gens_from(vars, dunce_dual_gens)) {
        std::vector<int> verts;
        auto supp = g.support();
        for (int v = 0; v < 8; ++v)
            if (std::find(supp.begin(), supp.end(), static_cast<std::size_t>(v)) == supp.end())
                verts.push_back(v);
        out.emplace_back(std::move(verts));
    }
    return out;
}

} // namespace

CorpusEntry corpus_load(const std::string& name) {
    if (name == "hachimori") {
        auto d1 = faces_from(vertices_0_9(), hachimori_d1_facets);
        auto d2 = faces_from(vertices_0_9(), hachimori_d2_facets);
        auto all = d1;
        all.insert(all.end(), d2.begin(), d2.end());
        return complex_entry(name, vertices_0_9(), std::move(all),
                             {{"pure", "true"}, {"shellable", "false"}, {"constructible", "true"}});
    }
    if (name == "hachimori_d1")
        return complex_entry(name, vertices_0_9(), faces_from(vertices_0_9(), hachimori_d1_facets),
                             {{"pure", "true"}, {"shellable", "true"}});
    if (name == "hachimori_d2")
        return complex_entry(name, vertices_0_9(), faces_from(vertices_0_9(), hachimori_d2_facets),
                             {{"pure", "true"}, {"shellable", "true"}});
    if (name == "hachimori_meet")
        return complex_entry(name, vertices_0_9(),
                             faces_from(vertices_0_9(), hachimori_meet_facets),
                             {{"pure", "true"}, {"shellable", "true"}});
    if (name == "hachimori_d1_dual")
        return ideal_entry(name, ring_x0_x9(), gens_from(ring_x0_x9(), hachimori_d1_dual_gens),
                           {{"linear_quotients", "true"}});
    if (name == "hachimori_d2_dual")
        return ideal_entry(name, ring_x0_x9(), gens_from(ring_x0_x9(), hachimori_d2_dual_gens),
                           {{"linear_quotients", "true"}});
    if (name == "hachimori_meet_dual")
        return ideal_entry(name, ring_x0_x9(), gens_from(ring_x0_x9(), hachimori_meet_dual_gens),
                           {{"linear_quotients", "true"}});
    if (name == "hachimori_dual")
        return ideal_entry(name, ring_x0_x9(),
                           concat(gens_from(ring_x0_x9(), hachimori_d1_dual_gens),
                                  gens_from(ring_x0_x9(), hachimori_d2_dual_gens)),
                           {{"constructible", "true"}, {"linear_quotients", "false"}});
    if (name == "dunce_hat") {
        CorpusEntry e = complex_entry(name, vertices_1_8(), dunce_facets(),
                                      {{"pure", "true"}, {"constructible", "false"}});
        e.facet_order.clear(); // derived, no published order
        return e;
    }
    if (name == "dunce_hat_dual")
        return ideal_entry(name, ring_x1_x8(), gens_from(ring_x1_x8(), dunce_dual_gens),
                           {{"constructible", "false"}, {"linear_resolution", "true"}});
    if (name == "ziegler_complex") {
        auto d1 = faces_from(vertices_1_10(), ziegler_d1_facets);
        auto d2 = faces_from(vertices_1_10(), ziegler_d2_facets);
        auto all = d1;
        all.insert(all.end(), d2.begin(), d2.end());
        CorpusEntry e = complex_entry(name, vertices_1_10(), std::move(all),
                                      {{"pure", "true"},
                                       {"shellable", "false"},
                                       {"constructible", "true"}});
        e.facet_order.clear(); // published split, not a shelling
        return e;
    }
    if (name == "ziegler_ideal")
        return ideal_entry(name, ring_x1_x8(), gens_from(ring_x1_x8(), ziegler_gens),
                           {{"constructible", "true"}, {"linear_quotients", "false"}});
    if (name == "ziegler_i1") {
        auto gens = gens_from(ring_x1_x8(), ziegler_gens);
        gens.resize(14);
        return ideal_entry(name, ring_x1_x8(), std::move(gens), {{"linear_quotients", "true"}});
    }
    if (name == "ziegler_i2") {
        auto gens = gens_from(ring_x1_x8(), ziegler_gens);
        gens.erase(gens.begin(), gens.begin() + 14);
        return ideal_entry(name, ring_x1_x8(), std::move(gens), {{"linear_quotients", "true"}});
    }
    if (name == "ziegler_meet")
        return ideal_entry(name, ring_x1_x8(), gens_from(ring_x1_x8(), ziegler_meet_gens),
                           {{"linear_quotients", "true"}});

    std::string msg = "unknown corpus name \"" + name + "\"; valid names:";
    for (const std::string& n : corpus_names())
        msg += " " + n;
    throw input_error(msg);
}

const std::vector<std::string>& corpus_names() {
    static const std::vector<std::string> names = {
        "hachimori",      "hachimori_d1",      "hachimori_d2",      "hachimori_meet",
        "hachimori_dual", "hachimori_d1_dual", "hachimori_d2_dual", "hachimori_meet_dual",
        "dunce_hat",      "dunce_hat_dual",    "ziegler_complex",   "ziegler_ideal",
        "ziegler_i1",     "ziegler_i2",        "ziegler_meet"};
    return names;
}

std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
corpus_hint(const std::string& name) {
    std::string part1, part2;
    if (name == "ziegler_ideal") {
        part1 = "ziegler_i1";
        part2 = "ziegler_i2";
    } else if (name == "hachimori_dual") {
        part1 = "hachimori_d1_dual";
        part2 = "hachimori_d2_dual";
    } else {
        return std::nullopt;
    }
    MonomialIdeal sum = *corpus_load(name).ideal;
    MonomialIdeal a = *corpus_load(part1).ideal;
    std::vector<std::size_t> left, right;
    for (std::size_t i = 0; i < sum.gens().size(); ++i) {
        if (a.contains(sum.gens()[i]))
            left.push_back(i);
        else
            right.push_back(i);
    }
    return std::make_pair(std::move(left), std::move(right));
}

const std::vector<std::pair<std::string, std::string>>& ziegler_polarization_renames() {
    static const std::vector<std::pair<std::string, std::string>> renames = {
        {"x1", "x9"}, {"x1_2", "x1"}, {"x2", "x10"}, {"x2_2", "x2"}};
    return renames;
}

} // namespace cmi
