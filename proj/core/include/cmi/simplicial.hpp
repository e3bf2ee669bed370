#pragma once

#include <cmi/ideal.hpp>
#include <cmi/variables.hpp>

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace cmi {

// A face: sorted duplicate-free vertex indices (0-based). The empty face is
// valid; dim(F) = |F| - 1.
struct Face {
    std::vector<int> v;

    Face() = default;
    Face(std::initializer_list<int> init);
    explicit Face(std::vector<int> verts);

    std::size_t size() const { return v.size(); }
    bool empty() const { return v.empty(); }
    int dim() const { return static_cast<int>(v.size()) - 1; }
    bool subset_of(const Face& other) const;

    // Lexicographic on vertex sequences: the canonical facet order.
    auto operator<=>(const Face&) const = default;
};

Face face_intersection(const Face& a, const Face& b);
Face face_complement(const Face& f, int n);

// A simplicial complex as its inclusion-maximal faces over an ambient vertex
// label set. The complex with the single facet {} is allowed (it arises as
// the complement of the full simplex). The void complex (no faces at all)
// cannot be built from input faces but occurs as an internal value of the
// homology oracle.
class SimplicialComplex {
public:
    // Maximalizes the given faces. Throws input_error if faces is empty or a
    // vertex index is out of range.
    SimplicialComplex(VarsPtr labels, std::vector<Face> faces);

    static SimplicialComplex void_complex(VarsPtr labels);
    static SimplicialComplex full_simplex(VarsPtr labels);

    int n() const { return static_cast<int>(labels_->size()); }
    const VarsPtr& labels() const { return labels_; }
    // Canonical (lexicographic) order; empty for the void complex.
    const std::vector<Face>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    // Largest facet size minus one; -1 for the complex {}. Throws on void.
    int dim() const;
    bool pure() const;
    bool is_full_simplex() const;

    // Face membership: contained in some facet.
    bool contains(const Face& f) const;

    bool operator==(const SimplicialComplex& other) const;
    bool operator!=(const SimplicialComplex& other) const { return !(*this == other); }

private:
    VarsPtr labels_;
    std::vector<Face> facets_;
};

// Facets are the complements of the facets (re-maximalized).
SimplicialComplex complement_complex(const SimplicialComplex& c);

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);

// Generated by the pairwise facet intersections.
SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b);

// Squarefree ideal generated by the facet complements; the generators of the
// Stanley-Reisner ideal of the dual complex. Variables are named "x"+label.
// Rejects the full simplex (its dual ideal is zero).
MonomialIdeal alexander_dual_ideal(const SimplicialComplex& c);

// Squarefree ideal on the minimal nonfaces; the full simplex gives zero.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& c);

// The unique complex whose Stanley-Reisner ideal is the given squarefree
// ideal. Rejects non-squarefree generators and the unit ideal. Vertex labels
// are the variable names with a leading "x" stripped when all of them carry
// one.
SimplicialComplex complex_from_squarefree_ideal(const MonomialIdeal& ideal);

// The Alexander dual of a squarefree ideal: the dual ideal of the complex
// whose Stanley-Reisner ideal it is. An involution on squarefree non-unit
// non-zero ideals.
MonomialIdeal alexander_dual_of_ideal(const MonomialIdeal& ideal);

// Text format: a required header "vertices: 0..9" (integer range) or
// "vertices: a,b,c", then facets "{v,...}" separated by commas.
SimplicialComplex parse_complex_text(std::string_view text);
std::string format_complex(const SimplicialComplex& c);

} // namespace cmi
