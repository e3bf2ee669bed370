#include <cmi/monomial.hpp>

#include <cmi/errors.hpp>

#include <algorithm>

namespace cmi {

namespace {

void require_same_arity(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity())
        throw input_error("monomials over different variable sets");
}

} // namespace

Monomial::Monomial(std::vector<Int> exps) : exps_(std::move(exps)) {
    for (const Int& e : exps_) {
        if (e < 0)
            throw input_error("negative exponent in monomial");
        degree_ += e;
    }
}

Monomial Monomial::unit(std::size_t nvars) {
    return Monomial(std::vector<Int>(nvars, 0));
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, Int power) {
    std::vector<Int> e(nvars, 0);
    e.at(i) = std::move(power);
    return Monomial(std::move(e));
}

bool Monomial::squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](const Int& e) { return e <= 1; });
}

std::vector<std::size_t> Monomial::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0)
            s.push_back(i);
    return s;
}

Monomial Monomial::operator*(const Monomial& other) const {
    require_same_arity(*this, other);
    std::vector<Int> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = exps_[i] + other.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::divided_by(const Monomial& other) const {
    require_same_arity(*this, other);
    std::vector<Int> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (other.exps_[i] > exps_[i])
            throw input_error("inexact monomial division");
        e[i] = exps_[i] - other.exps_[i];
    }
    return Monomial(std::move(e));
}

Monomial Monomial::colon_quotient(const Monomial& u) const {
    require_same_arity(*this, u);
    std::vector<Int> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = exps_[i] > u.exps_[i] ? exps_[i] - u.exps_[i] : Int(0);
    return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_arity(a, b);
    std::vector<Int> e(a.arity());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::max(a.exp(i), b.exp(i));
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    require_same_arity(a, b);
    std::vector<Int> e(a.arity());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::min(a.exp(i), b.exp(i));
    return Monomial(std::move(e));
}

bool divides(const Monomial& a, const Monomial& b) {
    require_same_arity(a, b);
    for (std::size_t i = 0; i < a.arity(); ++i)
        if (a.exp(i) > b.exp(i))
            return false;
    return true;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
    require_same_arity(a, b);
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    // Within a degree: larger exponent vector (lexicographically, first
    // variable most significant) comes first.
    return std::lexicographical_compare(b.exps().begin(), b.exps().end(),
                                        a.exps().begin(), a.exps().end());
}

} // namespace cmi
