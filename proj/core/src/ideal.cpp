#include <cmi/ideal.hpp>

#include <cmi/errors.hpp>

#include <algorithm>

namespace cmi {

namespace {

void require_same_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (!same_vars(a.vars(), b.vars()))
        throw input_error("ideals over different ambient variable sets");
}

std::vector<Monomial> minimal_elements(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), canonical_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // Sorted by degree, so a divisor always precedes what it divides.
    std::vector<Monomial> kept;
    for (const Monomial& g : gens) {
        bool dominated = std::any_of(kept.begin(), kept.end(),
                                     [&](const Monomial& k) { return divides(k, g); });
        if (!dominated)
            kept.push_back(g);
    }
    return kept;
}

} // namespace

MonomialIdeal::MonomialIdeal(VarsPtr vars, std::vector<Monomial> gens)
    : vars_(std::move(vars)) {
    if (!vars_)
        throw input_error("ideal requires an ambient variable set");
    for (const Monomial& g : gens)
        if (g.arity() != vars_->size())
            throw input_error("generator arity does not match the ambient variable set");
    gens_ = minimal_elements(std::move(gens));
}

MonomialIdeal MonomialIdeal::zero(VarsPtr vars) {
    return MonomialIdeal(std::move(vars), {});
}

MonomialIdeal MonomialIdeal::unit(VarsPtr vars) {
    std::size_t n = vars->size();
    return MonomialIdeal(std::move(vars), {Monomial::unit(n)});
}

bool MonomialIdeal::squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& g) { return g.squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return divides(g, m); });
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
    return same_vars(vars_, other.vars_) && gens_ == other.gens_;
}

MonomialIdeal minimalize(VarsPtr vars, std::vector<Monomial> gens) {
    return MonomialIdeal(std::move(vars), std::move(gens));
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ambient(a, b);
    std::vector<Monomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return MonomialIdeal(a.vars(), std::move(gens));
}

MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ambient(a, b);
    std::vector<Monomial> gens;
    gens.reserve(a.gens().size() * b.gens().size());
    for (const Monomial& u : a.gens())
        for (const Monomial& v : b.gens())
            gens.push_back(lcm(u, v));
    return MonomialIdeal(a.vars(), std::move(gens));
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& a, const Monomial& u) {
    if (u.arity() != a.nvars())
        throw input_error("colon monomial arity does not match the ideal's ambient");
    std::vector<Monomial> gens;
    gens.reserve(a.gens().size());
    for (const Monomial& v : a.gens())
        gens.push_back(v.colon_quotient(u));
    return MonomialIdeal(a.vars(), std::move(gens));
}

std::optional<Int> generated_in_degree(const MonomialIdeal& a) {
    if (a.is_zero())
        throw input_error("the zero ideal has no generation degree");
    const Int& q = a.gens().front().degree();
    for (const Monomial& g : a.gens())
        if (g.degree() != q)
            return std::nullopt;
    return q;
}

} // namespace cmi
