#pragma once

#include <cmi/monomial.hpp>
#include <cmi/variables.hpp>

#include <optional>
#include <vector>

namespace cmi {

// A monomial ideal in canonical form: the generator list is
// inclusion-minimal under divisibility, duplicate-free, and sorted by the
// canonical monomial order. The zero ideal has no generators; the unit ideal
// is generated by 1.
class MonomialIdeal {
public:
    // Minimalizes and sorts; throws input_error on arity mismatch.
    MonomialIdeal(VarsPtr vars, std::vector<Monomial> gens);

    static MonomialIdeal zero(VarsPtr vars);
    static MonomialIdeal unit(VarsPtr vars);

    const VarsPtr& vars() const { return vars_; }
    std::size_t nvars() const { return vars_->size(); }
    const std::vector<Monomial>& gens() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }
    bool squarefree() const;

    // Monomial membership: some generator divides m.
    bool contains(const Monomial& m) const;

    // Ideal equality: equal ambient variable sets and equal canonical
    // generator lists.
    bool operator==(const MonomialIdeal& other) const;
    bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

private:
    VarsPtr vars_;
    std::vector<Monomial> gens_;
};

// Canonicalize a spanning set: keep the divisibility-minimal elements,
// dedup, sort. The constructor applies this; the free function is the
// operation surface.
MonomialIdeal minimalize(VarsPtr vars, std::vector<Monomial> gens);

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);

// Intersection of monomial ideals: generated by the pairwise lcms.
MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b);

// a : (u), generated by { v / gcd(v,u) : v generator of a }.
MonomialIdeal colon_by_monomial(const MonomialIdeal& a, const Monomial& u);

// The common degree of all minimal generators, or nullopt if degrees are
// mixed. Throws input_error on the zero ideal.
std::optional<Int> generated_in_degree(const MonomialIdeal& a);

} // namespace cmi
