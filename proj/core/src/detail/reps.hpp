#pragma once

// Internal packed monomial representations for the exhaustive searches.
// Not installed; the public API speaks Monomial, these speak machine words.

#include <cmi/errors.hpp>
#include <cmi/monomial.hpp>

#include <bit>
#include <cstdint>
#include <vector>

namespace cmi::detail {

// Squarefree monomials over at most 64 variables as bitmasks.
struct MaskRep {
    using value = std::uint64_t;

    static value from_monomial(const Monomial& m) {
        value v = 0;
        for (std::size_t i : m.support()) v |= value{1} << i;
        return v;
    }
    static Monomial to_monomial(value v, std::size_t nvars) {
        std::vector<Int> exps(nvars, 0);
        for (std::size_t i = 0; i < nvars; ++i)
            if (v >> i & 1) exps[i] = 1;
        return Monomial(std::move(exps));
    }
    static value lcm(value a, value b) { return a | b; }
    static long long deg(value a) { return std::popcount(a); }
    static bool divides(value a, value b) { return (a & ~b) == 0; }
    // Canonical order: degree, then exponents descending-lex with variable 0
    // most significant.
    static bool canon_less(value a, value b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        if (a == b) return false;
        // First differing variable: the one holding it comes first.
        std::uint64_t diff = a ^ b;
        int i = std::countr_zero(diff);
        return (a >> i & 1) != 0;
    }
};

// Up to 8 variables with exponents at most 127: one byte per variable.
struct BytePack {
    using value = std::uint64_t;
    static constexpr std::uint64_t high = 0x8080808080808080ull;

    static value from_monomial(const Monomial& m) {
        value v = 0;
        for (std::size_t i = 0; i < m.arity(); ++i)
            v |= static_cast<value>(static_cast<unsigned long long>(m.exp(i)))
                 << (8 * i);
        return v;
    }
    static Monomial to_monomial(value v, std::size_t nvars) {
        std::vector<Int> exps(nvars, 0);
        for (std::size_t i = 0; i < nvars; ++i) exps[i] = (v >> (8 * i)) & 0xff;
        return Monomial(std::move(exps));
    }
    static value lcm(value a, value b) {
        value out = 0;
        for (int i = 0; i < 8; ++i) {
            std::uint64_t x = (a >> (8 * i)) & 0xff, y = (b >> (8 * i)) & 0xff;
            out |= (x > y ? x : y) << (8 * i);
        }
        return out;
    }
    static long long deg(value a) {
        long long s = 0;
        for (int i = 0; i < 8; ++i) s += static_cast<long long>((a >> (8 * i)) & 0xff);
        return s;
    }
    // Bytes stay below 128, so borrows cannot cross byte lanes.
    static bool divides(value a, value b) { return (((b | high) - a) & high) == high; }
    static bool canon_less(value a, value b) {
        long long da = deg(a), db = deg(b);
        if (da != db) return da < db;
        for (int i = 0; i < 8; ++i) {
            std::uint64_t x = (a >> (8 * i)) & 0xff, y = (b >> (8 * i)) & 0xff;
            if (x != y) return x > y;
        }
        return false;
    }
};

// Fallback: plain exponent vectors, arbitrary arity and size.
struct BigRep {
    using value = Monomial;

    static value from_monomial(const Monomial& m) { return m; }
    static Monomial to_monomial(const value& v, std::size_t) { return v; }
    static value lcm(const value& a, const value& b) { return cmi::lcm(a, b); }
    static long long deg(const value& a) { return static_cast<long long>(a.degree()); }
    static bool divides(const value& a, const value& b) { return cmi::divides(a, b); }
    static bool canon_less(const value& a, const value& b) { return canonical_less(a, b); }
};

enum class RepKind { Mask, Byte, Big };

inline RepKind choose_rep(const std::vector<Monomial>& gens, std::size_t nvars) {
    bool sf = true;
    for (const Monomial& g : gens)
        if (!g.squarefree()) {
            sf = false;
            break;
        }
    if (sf && nvars <= 64) return RepKind::Mask;
    if (nvars <= 8) {
        bool small = true;
        for (const Monomial& g : gens)
            for (std::size_t i = 0; i < nvars && small; ++i)
                if (g.exp(i) > 127) small = false;
        if (small) return RepKind::Byte;
    }
    return RepKind::Big;
}

} // namespace cmi::detail
