#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

namespace cmi {

// Exponents are arbitrary-precision integers: desk-scale inputs fit machine
// words, but the arithmetic contract does not assume it. Search internals
// repack into machine words after an explicit range check.
using Int = boost::multiprecision::cpp_int;

// A monomial as an exponent vector of fixed arity. The all-zeros vector is
// the unit monomial 1. Degree (the exponent sum) is cached on construction.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<Int> exps);

    static Monomial unit(std::size_t nvars);
    // x_i^power (0-based variable index).
    static Monomial variable(std::size_t nvars, std::size_t i, Int power = 1);

    std::size_t arity() const { return exps_.size(); }
    const Int& exp(std::size_t i) const { return exps_.at(i); }
    const std::vector<Int>& exps() const { return exps_; }
    const Int& degree() const { return degree_; }

    bool is_unit() const { return degree_ == 0; }
    bool squarefree() const;
    std::vector<std::size_t> support() const;

    Monomial operator*(const Monomial& other) const;
    // Exact division; throws input_error unless other divides *this.
    Monomial divided_by(const Monomial& other) const;
    // *this / gcd(*this, u): the generator map of a colon ideal.
    Monomial colon_quotient(const Monomial& u) const;

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    bool operator!=(const Monomial& other) const { return !(*this == other); }

private:
    std::vector<Int> exps_;
    Int degree_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b); // a | b

// Canonical order: total degree ascending, then exponent vectors descending
// lexicographically with the first variable most significant. Gives the
// natural presentation x1x2 < x1x3 < x2x3 and deterministic generator
// indices for order witnesses.
bool canonical_less(const Monomial& a, const Monomial& b);

} // namespace cmi
