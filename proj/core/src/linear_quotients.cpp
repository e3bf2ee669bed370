#include <cmi/linear_quotients.hpp>

#include <cmi/errors.hpp>

#include "detail/reps.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace cmi {

namespace {

// Literal form: for each j < k there are l and k' < k with
// u_{k'}/gcd(u_{k'},u_k) = x_l and x_l dividing u_j/gcd(u_j,u_k).
bool literal_step(const std::vector<Monomial>& order, std::size_t k) {
    const Monomial& uk = order[k];
    std::vector<Monomial> quot;
    quot.reserve(k);
    for (std::size_t j = 0; j < k; ++j) quot.push_back(order[j].colon_quotient(uk));
    for (std::size_t j = 0; j < k; ++j) {
        bool witnessed = false;
        for (std::size_t kp = 0; kp < k && !witnessed; ++kp) {
            if (quot[kp].degree() != 1) continue;
            std::size_t l = quot[kp].support()[0];
            if (quot[j].exp(l) >= 1) witnessed = true;
        }
        if (!witnessed) return false;
    }
    return true;
}

} // namespace

LQCheck verify_lq_order(const MonomialIdeal& ideal, const std::vector<Monomial>& order) {
    if (ideal.is_zero() || ideal.is_unit())
        throw input_error("linear quotients need a proper nonzero ideal");
    std::vector<Monomial> sorted = order;
    std::sort(sorted.begin(), sorted.end(), canonical_less);
    if (sorted != ideal.gens())
        throw input_error("order is not a permutation of the minimal generators");

    LQCheck out;
    out.steps.assign(order.size(), {});
    for (std::size_t k = 1; k < order.size(); ++k) {
        MonomialIdeal prefix(ideal.vars(),
                             std::vector<Monomial>(order.begin(),
                                                   order.begin() + static_cast<std::ptrdiff_t>(k)));
        MonomialIdeal colon = colon_by_monomial(prefix, order[k]);
        bool colon_ok = true;
        std::vector<std::size_t> vars;
        for (const Monomial& g : colon.gens()) {
            if (g.degree() != 1) {
                colon_ok = false;
                break;
            }
            vars.push_back(g.support()[0]);
        }
        if (literal_step(order, k) != colon_ok)
            throw std::logic_error("linear-quotient formulations disagree");
        if (!colon_ok) {
            out.ok = false;
            out.failing_index = k + 1;
            out.reason = "prefix colon at position " + std::to_string(k + 1) +
                         " is not generated by variables";
            out.steps.clear();
            return out;
        }
        std::sort(vars.begin(), vars.end());
        out.steps[k] = std::move(vars);
    }
    return out;
}

namespace {

template <class Rep>
struct LQSearcher {
    using V = typename Rep::value;
    std::vector<V> gens; // canonical order
    std::uint64_t budget;
    std::vector<std::uint8_t> dense;
    std::unordered_map<std::uint64_t, std::uint8_t> sparse;
    std::unordered_map<std::uint64_t, int> last_choice;
    SearchStats stats;

    LQSearcher(std::vector<V> g, std::uint64_t b) : gens(std::move(g)), budget(b) {
        if (gens.size() <= 24) dense.assign(std::size_t{1} << gens.size(), 0);
    }

    std::uint8_t lookup(std::uint64_t key) const {
        if (!dense.empty()) return dense[key];
        auto it = sparse.find(key);
        return it == sparse.end() ? 0 : it->second;
    }
    void store(std::uint64_t key, std::uint8_t val) {
        if (!dense.empty()) dense[key] = val;
        else sparse[key] = val;
    }

    // Is (gens in rest):(gens[k]) generated by variables?
    bool step_ok(std::uint64_t rest, int k) {
        ++stats.steps;
        const V& uk = gens[static_cast<std::size_t>(k)];
        if constexpr (std::is_same_v<Rep, detail::MaskRep>) {
            std::uint64_t singles = 0;
            for (std::uint64_t s = rest; s; s &= s - 1) {
                std::uint64_t q = gens[static_cast<std::size_t>(std::countr_zero(s))] & ~uk;
                if (std::popcount(q) == 1) singles |= q;
            }
            if (!singles) return false;
            for (std::uint64_t s = rest; s; s &= s - 1) {
                std::uint64_t q = gens[static_cast<std::size_t>(std::countr_zero(s))] & ~uk;
                if (!(q & singles)) return false;
            }
            return true;
        } else {
            // Quotients u_j / gcd(u_j, u_k); the colon is variable-generated
            // iff each quotient is divisible by a degree-one quotient.
            std::vector<V> quot;
            for (std::uint64_t s = rest; s; s &= s - 1) {
                const V& uj = gens[static_cast<std::size_t>(std::countr_zero(s))];
                quot.push_back(colon_of(uj, uk));
            }
            bool any = false;
            for (const V& q : quot)
                if (Rep::deg(q) == 1) {
                    any = true;
                    break;
                }
            if (!any) return false;
            for (const V& q : quot) {
                bool covered = false;
                for (const V& s : quot) {
                    if (Rep::deg(s) == 1 && Rep::divides(s, q)) {
                        covered = true;
                        break;
                    }
                }
                if (!covered) return false;
            }
            return true;
        }
    }

    static typename Rep::value colon_of(const typename Rep::value& uj,
                                        const typename Rep::value& uk) {
        if constexpr (std::is_same_v<Rep, detail::BytePack>) {
            std::uint64_t out = 0;
            for (int i = 0; i < 8; ++i) {
                std::uint64_t x = (uj >> (8 * i)) & 0xff, y = (uk >> (8 * i)) & 0xff;
                out |= (x > y ? x - y : 0) << (8 * i);
            }
            return out;
        } else if constexpr (std::is_same_v<Rep, detail::BigRep>) {
            return uj.colon_quotient(uk);
        } else {
            return uj & ~uk;
        }
    }

    std::uint8_t solve(std::uint64_t set) {
        if (std::popcount(set) == 1) return 1;
        std::uint8_t known = lookup(set);
        if (known) return known;
        bool saw_cut = false;
        std::uint8_t verdict = 2;
        for (std::uint64_t s = set; s; s &= s - 1) {
            int k = std::countr_zero(s);
            if (stats.steps >= budget) {
                saw_cut = true;
                break;
            }
            std::uint64_t rest = set & ~(std::uint64_t{1} << k);
            if (!step_ok(rest, k)) continue;
            std::uint8_t sub = solve(rest);
            if (sub == 1) {
                verdict = 1;
                last_choice[set] = k;
                break;
            }
            if (sub == 3) saw_cut = true;
        }
        if (verdict != 1 && saw_cut) verdict = 3;
        store(set, verdict);
        ++stats.memo_states;
        return verdict;
    }
};

template <class Rep>
LQResult run_lq_search(const MonomialIdeal& ideal, std::uint64_t budget) {
    const std::size_t m = ideal.gens().size();
    std::vector<typename Rep::value> packed;
    packed.reserve(m);
    for (const Monomial& g : ideal.gens()) packed.push_back(Rep::from_monomial(g));
    LQSearcher<Rep> search(std::move(packed), budget);
    std::uint64_t full = (std::uint64_t{1} << m) - 1;
    std::uint8_t verdict = search.solve(full);
    LQResult out;
    out.stats = search.stats;
    if (verdict == 1) {
        out.status = SearchStatus::Found;
        std::vector<int> rev;
        std::uint64_t set = full;
        while (std::popcount(set) > 1) {
            int k = search.last_choice.at(set);
            rev.push_back(k);
            set &= ~(std::uint64_t{1} << k);
        }
        rev.push_back(std::countr_zero(set));
        out.order.reserve(m);
        for (auto it = rev.rbegin(); it != rev.rend(); ++it)
            out.order.push_back(ideal.gens()[static_cast<std::size_t>(*it)]);
    } else if (verdict == 2) {
        out.status = SearchStatus::Refuted;
    } else {
        out.status = SearchStatus::BudgetExceeded;
    }
    return out;
}

} // namespace

LQResult find_lq_order(const MonomialIdeal& ideal, std::uint64_t budget) {
    if (ideal.is_zero() || ideal.is_unit())
        throw input_error("linear quotients need a proper nonzero ideal");
    const std::size_t m = ideal.gens().size();
    if (m > 63) throw input_error("order search supports at most 63 generators");
    if (m == 1) {
        LQResult out;
        out.status = SearchStatus::Found;
        out.order = ideal.gens();
        return out;
    }
    switch (detail::choose_rep(ideal.gens(), ideal.nvars())) {
    case detail::RepKind::Mask:
        return run_lq_search<detail::MaskRep>(ideal, budget);
    case detail::RepKind::Byte:
        return run_lq_search<detail::BytePack>(ideal, budget);
    default:
        return run_lq_search<detail::BigRep>(ideal, budget);
    }
}

BettiTable betti_from_lq(const MonomialIdeal& ideal, const std::vector<Monomial>& order) {
    auto q = generated_in_degree(ideal);
    if (!q) throw input_error("Betti formula needs a single-degree ideal");
    LQCheck check = verify_lq_order(ideal, order);
    if (!check.ok) throw input_error("invalid linear-quotient order: " + check.reason);
    long long qq = static_cast<long long>(*q);
    BettiTable out;
    out.characteristic = 0;
    out.add(0, qq, ideal.gens().size());
    std::size_t rmax = 0;
    for (const auto& step : check.steps) rmax = std::max(rmax, step.size());
    for (std::size_t i = 1; i <= rmax; ++i) {
        unsigned long long total = 0;
        for (const auto& step : check.steps) {
            std::size_t r = step.size();
            if (r < i) continue;
            // C(r, i): r stays below 64, so this fits unsigned long long.
            unsigned long long c = 1;
            for (std::size_t t = 0; t < i; ++t) c = c * (r - t) / (t + 1);
            total += c;
        }
        if (total)
            out.add(static_cast<long long>(i), qq + static_cast<long long>(i), total);
    }
    return out;
}

CertPtr lq_to_certificate(const MonomialIdeal& ideal, const std::vector<Monomial>& order) {
    auto q = generated_in_degree(ideal);
    if (!q) throw input_error("certificates need a single-degree ideal");
    LQCheck check = verify_lq_order(ideal, order);
    if (!check.ok) throw input_error("invalid linear-quotient order: " + check.reason);
    if (order.size() == 1) return Certificate::leaf(order[0]);
    const std::size_t r = order.size();
    std::vector<Monomial> prefix(order.begin(), order.end() - 1);
    MonomialIdeal left(ideal.vars(), prefix);
    CertPtr left_cert = lq_to_certificate(left, prefix);
    CertPtr right_cert = Certificate::leaf(order[r - 1]);
    // Meet (u_1..u_{r-1}) cap (u_r) = (x_l u_r : l in L_r); itself an ideal
    // with linear quotients in any order of its generators.
    std::vector<Monomial> meet_gens;
    for (std::size_t l : check.steps[r - 1])
        meet_gens.push_back(order[r - 1] * Monomial::variable(ideal.nvars(), l));
    MonomialIdeal meet(ideal.vars(), meet_gens);
    CertPtr meet_cert = lq_to_certificate(meet, meet.gens());
    return Certificate::node(std::move(left_cert), std::move(right_cert),
                             std::move(meet_cert));
}

} // namespace cmi
