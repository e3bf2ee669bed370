#include <cmi/polarization.hpp>

#include <cmi/errors.hpp>
#include <cmi/linear_quotients.hpp>

#include <stdexcept>
#include <utility>

namespace cmi {

namespace {

PolarizedContext context_from_copies(VarsPtr base, std::vector<long long> copies) {
    PolarizedContext ctx;
    ctx.base = std::move(base);
    ctx.copies = std::move(copies);
    std::vector<std::string> names;
    ctx.offset.resize(ctx.copies.size());
    for (std::size_t i = 0; i < ctx.copies.size(); ++i) {
        ctx.offset[i] = names.size();
        for (long long j = 1; j <= ctx.copies[i]; ++j) {
            const std::string& b = ctx.base->name(i);
            names.push_back(j == 1 ? b : b + "_" + std::to_string(j));
        }
    }
    ctx.flat = std::make_shared<const VariableSet>(std::move(names));
    return ctx;
}

long long exp_as_ll(const Int& e) {
    if (e > 1'000'000) throw input_error("exponent too large to polarize");
    return static_cast<long long>(e);
}

} // namespace

PolarizedContext polarization_context(const MonomialIdeal& ideal) {
    return polarization_context(std::vector<const MonomialIdeal*>{&ideal});
}

PolarizedContext polarization_context(const std::vector<const MonomialIdeal*>& ideals) {
    if (ideals.empty() || !ideals[0]) throw input_error("no ideals for context");
    VarsPtr base = ideals[0]->vars();
    std::vector<long long> copies(base->size(), 1);
    for (const MonomialIdeal* i : ideals) {
        if (!i || !same_vars(i->vars(), base))
            throw input_error("context ideals live in different rings");
        for (const Monomial& g : i->gens())
            for (std::size_t v = 0; v < base->size(); ++v)
                copies[v] = std::max(copies[v], exp_as_ll(g.exp(v)));
    }
    return context_from_copies(std::move(base), std::move(copies));
}

Monomial polarize_monomial(const Monomial& u, const PolarizedContext& ctx) {
    if (u.arity() != ctx.copies.size())
        throw input_error("monomial arity does not match the context");
    std::vector<Int> exps(ctx.flat->size(), 0);
    for (std::size_t i = 0; i < u.arity(); ++i) {
        long long a = exp_as_ll(u.exp(i));
        if (a > ctx.copies[i])
            throw input_error("exponent of " + ctx.base->name(i) +
                              " exceeds the context's copy count");
        for (long long j = 1; j <= a; ++j) exps[ctx.flat_index(i, j)] = 1;
    }
    return Monomial(std::move(exps));
}

MonomialIdeal polarize_ideal_in(const MonomialIdeal& ideal, const PolarizedContext& ctx) {
    std::vector<Monomial> gens;
    gens.reserve(ideal.gens().size());
    for (const Monomial& g : ideal.gens()) gens.push_back(polarize_monomial(g, ctx));
    MonomialIdeal out(ctx.flat, std::move(gens));
    // Polarizing a minimal system keeps it minimal; a drop in generator
    // count would falsify that.
    if (out.gens().size() != ideal.gens().size())
        throw std::logic_error("polarization did not preserve minimality");
    return out;
}

MonomialIdeal polarize_ideal(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw input_error("cannot polarize the zero ideal");
    return polarize_ideal_in(ideal, polarization_context(ideal));
}

CertPtr polarize_certificate(const Certificate& cert, const PolarizedContext& ctx) {
    if (cert.is_leaf()) return Certificate::leaf(polarize_monomial(cert.leaf_monomial(), ctx));
    return Certificate::node(polarize_certificate(*cert.left(), ctx),
                             polarize_certificate(*cert.right(), ctx),
                             polarize_certificate(*cert.meet(), ctx));
}

bool lq_transfer_check(const MonomialIdeal& ideal, const std::vector<Monomial>& order) {
    LQCheck plain = verify_lq_order(ideal, order);
    PolarizedContext ctx = polarization_context(ideal);
    MonomialIdeal flat = polarize_ideal_in(ideal, ctx);
    std::vector<Monomial> flat_order;
    flat_order.reserve(order.size());
    for (const Monomial& u : order) flat_order.push_back(polarize_monomial(u, ctx));
    LQCheck polarized = verify_lq_order(flat, flat_order);
    return plain.ok == polarized.ok;
}

MonomialIdeal rename_variables(const MonomialIdeal& ideal,
                               const std::vector<std::pair<std::string, std::string>>& renames,
                               VarsPtr target) {
    if (target->size() != ideal.nvars())
        throw input_error("rename target must have the same number of variables");
    std::vector<std::size_t> where(ideal.nvars());
    for (std::size_t i = 0; i < ideal.nvars(); ++i) {
        std::string name = ideal.vars()->name(i);
        for (const auto& [from, to] : renames)
            if (from == name) {
                name = to;
                break;
            }
        auto idx = target->index_of(name);
        if (!idx) throw input_error("renamed variable '" + name + "' not in target set");
        where[i] = *idx;
    }
    std::vector<Monomial> gens;
    gens.reserve(ideal.gens().size());
    for (const Monomial& g : ideal.gens()) {
        std::vector<Int> exps(target->size(), 0);
        for (std::size_t i = 0; i < ideal.nvars(); ++i) exps[where[i]] = g.exp(i);
        gens.push_back(Monomial(std::move(exps)));
    }
    return MonomialIdeal(std::move(target), std::move(gens));
}

} // namespace cmi
