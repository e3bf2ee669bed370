#include <cmi/oracle.hpp>

#include <cmi/errors.hpp>
#include <cmi/homology.hpp>

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <set>
#include <thread>
#include <vector>

namespace cmi {

SimplicialComplex koszul_complex_at(const MonomialIdeal& ideal, const Monomial& b) {
    if (b.arity() != ideal.nvars())
        throw input_error("multidegree arity does not match the ideal");
    std::vector<std::size_t> supp = b.support();
    if (supp.empty())
        throw input_error("zero multidegree has an empty vertex set");
    if (supp.size() > 25)
        throw input_error("koszul complex supports at most 25 support variables");
    std::vector<std::string> names;
    names.reserve(supp.size());
    for (std::size_t i : supp) names.push_back(ideal.vars()->name(i));
    VarsPtr labels = std::make_shared<const VariableSet>(std::move(names));
    std::vector<Face> faces;
    const std::uint64_t top = std::uint64_t{1} << supp.size();
    for (std::uint64_t sub = 0; sub < top; ++sub) {
        std::vector<Int> exps = b.exps();
        std::vector<int> verts;
        for (std::size_t t = 0; t < supp.size(); ++t) {
            if (sub >> t & 1) {
                exps[supp[t]] -= 1;
                verts.push_back(static_cast<int>(t));
            }
        }
        if (ideal.contains(Monomial(std::move(exps)))) faces.push_back(Face(std::move(verts)));
    }
    if (faces.empty()) return SimplicialComplex::void_complex(labels);
    return SimplicialComplex(labels, std::move(faces));
}

namespace {

struct MonLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return canonical_less(a, b);
    }
};

// lcm-closure of the generators by pairwise fixpoint.
std::vector<Monomial> candidate_multidegrees(const MonomialIdeal& ideal) {
    std::set<Monomial, MonLess> seen(ideal.gens().begin(), ideal.gens().end());
    std::vector<Monomial> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<Monomial> fresh;
        for (const Monomial& f : frontier)
            for (const Monomial& g : ideal.gens()) {
                Monomial l = lcm(f, g);
                if (seen.insert(l).second) fresh.push_back(std::move(l));
            }
        frontier = std::move(fresh);
    }
    return {seen.begin(), seen.end()};
}

} // namespace

BettiTable betti_table(const MonomialIdeal& ideal, long long characteristic, int threads) {
    if (ideal.is_zero() || ideal.is_unit())
        throw input_error("betti_table needs a proper nonzero ideal");
    if (threads < 1) throw input_error("thread count must be positive");
    std::vector<Monomial> cands = candidate_multidegrees(ideal);
    BettiTable out;
    out.characteristic = characteristic;
    auto contribute = [&ideal, characteristic](const Monomial& b, BettiTable& acc) {
        std::vector<long long> dims =
            reduced_homology_dims(koszul_complex_at(ideal, b), characteristic);
        if (dims.empty()) return;
        long long j = static_cast<long long>(b.degree());
        for (std::size_t t = 0; t < dims.size(); ++t)
            if (dims[t] > 0)
                acc.add(static_cast<long long>(t), j,
                        static_cast<unsigned long long>(dims[t]));
    };
    if (threads == 1 || cands.size() < 2) {
        for (const Monomial& b : cands) contribute(b, out);
        return out;
    }
    std::mutex merge;
    std::vector<std::thread> pool;
    std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(threads), cands.size());
    for (std::size_t w = 0; w < nt; ++w) {
        pool.emplace_back([&, w] {
            BettiTable local;
            for (std::size_t k = w; k < cands.size(); k += nt) contribute(cands[k], local);
            std::lock_guard<std::mutex> lock(merge);
            for (const auto& [key, v] : local.entries) out.add(key.first, key.second, v);
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

bool has_linear_resolution(const MonomialIdeal& ideal, long long characteristic) {
    auto q = generated_in_degree(ideal);
    if (!q) throw input_error("linear resolution is defined for single-degree ideals");
    if (ideal.is_unit()) throw input_error("unit ideal rejected");
    long long qq = static_cast<long long>(*q);
    BettiTable t = betti_table(ideal, characteristic);
    for (const auto& [key, v] : t.entries) {
        (void)v;
        if (key.second != key.first + qq) return false;
    }
    return true;
}

} // namespace cmi
