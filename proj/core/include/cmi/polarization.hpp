#pragma once

#include <cmi/certificate.hpp>
#include <cmi/ideal.hpp>

#include <vector>

namespace cmi {

// Flattened variable context for polarization: variable i of the base ring
// gets copies (i,1) .. (i,copies[i]), flattened in (i ascending, j
// ascending) order. Copy 1 keeps the base name; copy j >= 2 is named
// base_j ("x1", "x1_2", "x1_3", ...).
struct PolarizedContext {
    VarsPtr base;
    std::vector<long long> copies; // per base variable, >= 1
    VarsPtr flat;
    std::vector<std::size_t> offset; // flat index of (i,1)

    std::size_t flat_index(std::size_t i, long long j) const {
        return offset[i] + static_cast<std::size_t>(j - 1);
    }
};

// Context with copies[i] = max(max exponent of x_i over the generators, 1).
// A common context for several ideals uses the componentwise max over all
// of them, mirroring a shared polynomial ring extension.
PolarizedContext polarization_context(const MonomialIdeal& ideal);
PolarizedContext polarization_context(const std::vector<const MonomialIdeal*>& ideals);

// x_i^a contributes x_{i,1} ... x_{i,a}; squarefree, degree preserved.
Monomial polarize_monomial(const Monomial& u, const PolarizedContext& ctx);

// Polarize every minimal generator in the ideal's own context. Minimality
// is preserved (asserted).
MonomialIdeal polarize_ideal(const MonomialIdeal& ideal);
MonomialIdeal polarize_ideal_in(const MonomialIdeal& ideal, const PolarizedContext& ctx);

// Structurally identical tree with every leaf polarized. Verifying the
// output against the polarized ideal exercises the identity
// (I1 cap I2)^p = I1^p cap I2^p at every node.
CertPtr polarize_certificate(const Certificate& cert, const PolarizedContext& ctx);

// True iff the order and its polarization agree on linear-quotient
// validity (both valid or both invalid) -- the transfer property.
bool lq_transfer_check(const MonomialIdeal& ideal, const std::vector<Monomial>& order);

// Rename variables by label map (identity where absent) into the target
// ambient set; exponents move to the renamed positions.
MonomialIdeal rename_variables(const MonomialIdeal& ideal,
                               const std::vector<std::pair<std::string, std::string>>& renames,
                               VarsPtr target);

} // namespace cmi
