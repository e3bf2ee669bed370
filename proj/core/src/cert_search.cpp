#include <cmi/cert_search.hpp>

#include <cmi/errors.hpp>

#include "detail/reps.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <utility>

namespace cmi {

namespace {

// One engine serves both searches: ideals combine generators by lcm and meet
// one degree up; complexes combine facets by intersection and meet one
// dimension down. Everything else (pinning, memoization, universes,
// witnesses, budget) is identical.
template <class Rep, bool IsIdeal>
struct Engine {
    using V = typename Rep::value;

    struct Universe {
        std::vector<V> gens; // canonical order
        long long q = 0;     // common degree (facet size)
        std::vector<std::uint8_t> dense;
        std::unordered_map<std::uint64_t, std::uint8_t> sparse;
        std::unordered_map<std::uint64_t, std::pair<std::uint64_t, Universe*>> wit;
        std::mutex mu;

        std::uint8_t lookup(std::uint64_t key) {
            std::lock_guard<std::mutex> lock(mu);
            if (!dense.empty()) return dense[key];
            auto it = sparse.find(key);
            return it == sparse.end() ? 0 : it->second;
        }
        void store(std::uint64_t key, std::uint8_t val) {
            std::lock_guard<std::mutex> lock(mu);
            if (!dense.empty()) dense[key] = val;
            else sparse[key] = val;
        }
        void witness(std::uint64_t key, std::uint64_t s1, Universe* meet) {
            std::lock_guard<std::mutex> lock(mu);
            wit[key] = {s1, meet};
        }
    };

    struct VecLess {
        bool operator()(const std::vector<V>& a, const std::vector<V>& b) const {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                                &Rep::canon_less);
        }
    };

    std::map<std::vector<V>, std::unique_ptr<Universe>, VecLess> registry;
    std::mutex registry_mu;
    std::uint64_t budget;
    std::atomic<std::uint64_t> partitions{0};
    std::atomic<std::uint64_t> memo_entries{0};
    std::atomic<bool> capacity_hit{false};

    explicit Engine(std::uint64_t b) : budget(b) {}

    static V combine(const V& a, const V& b) {
        if constexpr (IsIdeal) return Rep::lcm(a, b);
        else return a & b;
    }
    static bool covered(const V& item, const V& by) {
        if constexpr (IsIdeal) return Rep::divides(by, item); // minimal gen divides
        else return Rep::divides(item, by);                   // face contained
    }

    Universe* universe_for(std::vector<V> gens, long long q) {
        std::lock_guard<std::mutex> lock(registry_mu);
        auto it = registry.find(gens);
        if (it != registry.end()) return it->second.get();
        auto u = std::make_unique<Universe>();
        u->gens = gens;
        u->q = q;
        if (u->gens.size() <= 24) u->dense.assign(std::size_t{1} << u->gens.size(), 0);
        Universe* raw = u.get();
        registry.emplace(std::move(gens), std::move(u));
        return raw;
    }

    // Meet of the two sides: all pairwise combinations must reduce to the
    // ones at the target degree. Returns false for an invalid step; fills
    // the meet's generator set otherwise.
    bool meet_of(Universe& u, std::uint64_t s1, std::uint64_t s2, std::vector<V>& out) {
        const long long target = u.q + (IsIdeal ? 1 : -1);
        std::vector<V> all, m1;
        for (std::uint64_t a = s1; a; a &= a - 1) {
            const V& ua = u.gens[static_cast<std::size_t>(std::countr_zero(a))];
            for (std::uint64_t b = s2; b; b &= b - 1) {
                V c = combine(ua, u.gens[static_cast<std::size_t>(std::countr_zero(b))]);
                if (Rep::deg(c) == target) m1.push_back(c);
                else all.push_back(std::move(c));
            }
        }
        if (m1.empty()) return false;
        std::sort(m1.begin(), m1.end(), &Rep::canon_less);
        m1.erase(std::unique(m1.begin(), m1.end()), m1.end());
        for (const V& c : all) {
            bool ok = false;
            for (const V& m : m1) {
                if (covered(c, m)) {
                    ok = true;
                    break;
                }
            }
            if (!ok) return false;
        }
        out = std::move(m1);
        return true;
    }

    // 1 yes, 2 no, 3 undecided under budget or capacity.
    std::uint8_t solve(Universe& u, std::uint64_t set, int threads = 1) {
        if (std::popcount(set) == 1) return 1;
        std::uint8_t known = u.lookup(set);
        if (known) return known;
        int low = std::countr_zero(set);
        std::uint64_t rest = set & ~(std::uint64_t{1} << low);
        std::uint8_t verdict;
        if (threads > 1) verdict = solve_parallel(u, set, low, rest, threads);
        else verdict = solve_serial(u, set, low, rest);
        u.store(set, verdict);
        ++memo_entries;
        return verdict;
    }

    // Examine one bipartition: 1 success (witness recorded), 0 failure,
    // 3 undecided somewhere below.
    std::uint8_t try_split(Universe& u, std::uint64_t set, std::uint64_t s1, std::uint64_t s2) {
        ++partitions;
        std::vector<V> meet_gens;
        if (!meet_of(u, s1, s2, meet_gens)) return 0;
        if (meet_gens.size() > 63) {
            // Cannot subset-index such a meet; soundness is preserved by
            // treating the branch as undecided.
            capacity_hit = true;
            return 3;
        }
        std::uint8_t r1 = solve(u, s1);
        if (r1 == 2) return 0;
        std::uint8_t r2 = solve(u, s2);
        if (r2 == 2) return 0;
        Universe* mu = universe_for(std::move(meet_gens), u.q + (IsIdeal ? 1 : -1));
        std::uint64_t mfull = (std::uint64_t{1} << mu->gens.size()) - 1;
        std::uint8_t r3 = solve(*mu, mfull);
        if (r1 == 1 && r2 == 1 && r3 == 1) {
            u.witness(set, s1, mu);
            return 1;
        }
        if (r1 == 3 || r2 == 3 || r3 == 3) return 3;
        return 0;
    }

    std::uint8_t solve_serial(Universe& u, std::uint64_t set, int low, std::uint64_t rest) {
        bool saw_cut = false;
        // S1 gets the pinned least element plus any proper subset of the
        // rest; submask enumeration visits each unordered bipartition once.
        std::uint64_t t = rest;
        while (true) {
            t = (t - 1) & rest; // first iteration: rest minus lowest bit of rest... enumerate below
            if (t == rest) break;
            if (partitions.load(std::memory_order_relaxed) >= budget) {
                saw_cut = true;
                break;
            }
            std::uint64_t s1 = (std::uint64_t{1} << low) | t;
            std::uint64_t s2 = rest & ~t;
            std::uint8_t r = try_split(u, set, s1, s2);
            if (r == 1) return 1;
            if (r == 3) saw_cut = true;
        }
        return saw_cut ? 3 : 2;
    }

    std::uint8_t solve_parallel(Universe& u, std::uint64_t set, int low, std::uint64_t rest,
                                int threads) {
        std::atomic<std::uint8_t> found{0};
        std::atomic<bool> saw_cut{false};
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                std::uint64_t t = rest;
                long long idx = -1;
                while (found.load(std::memory_order_relaxed) == 0) {
                    t = (t - 1) & rest;
                    if (t == rest) break;
                    ++idx;
                    if (idx % threads != w) continue;
                    if (partitions.load(std::memory_order_relaxed) >= budget) {
                        saw_cut = true;
                        break;
                    }
                    std::uint64_t s1 = (std::uint64_t{1} << low) | t;
                    std::uint8_t r = try_split(u, set, s1, rest & ~t);
                    if (r == 1) {
                        found = 1;
                        break;
                    }
                    if (r == 3) saw_cut = true;
                }
            });
        }
        for (auto& th : pool) th.join();
        if (found) return 1;
        return saw_cut ? 3 : 2;
    }

    // Rebuild the witness tree bottom-up from the recorded splits.
    template <class MakeLeaf, class MakeNode>
    auto rebuild(Universe& u, std::uint64_t set, const MakeLeaf& leaf, const MakeNode& node)
        -> decltype(leaf(std::declval<V>())) {
        if (std::popcount(set) == 1)
            return leaf(u.gens[static_cast<std::size_t>(std::countr_zero(set))]);
        auto [s1, mu] = u.wit.at(set);
        std::uint64_t s2 = set & ~s1;
        std::uint64_t mfull = (std::uint64_t{1} << mu->gens.size()) - 1;
        return node(rebuild(u, s1, leaf, node), rebuild(u, s2, leaf, node),
                    rebuild(*mu, mfull, leaf, node));
    }
};

template <class Rep>
CertSearchResult run_ideal_search(const MonomialIdeal& ideal, const SearchOptions& opts) {
    Engine<Rep, true> eng(opts.budget);
    std::vector<typename Rep::value> packed;
    packed.reserve(ideal.gens().size());
    for (const Monomial& g : ideal.gens()) packed.push_back(Rep::from_monomial(g));
    long long q = static_cast<long long>(*generated_in_degree(ideal));
    auto* root = eng.universe_for(std::move(packed), q);
    std::uint64_t full = (std::uint64_t{1} << root->gens.size()) - 1;

    std::uint8_t verdict = 0;
    if (opts.root_split) {
        std::uint64_t s1 = 0, s2 = 0;
        for (std::size_t i : opts.root_split->first) {
            if (i >= root->gens.size()) throw input_error("hint index out of range");
            s1 |= std::uint64_t{1} << i;
        }
        for (std::size_t i : opts.root_split->second) {
            if (i >= root->gens.size()) throw input_error("hint index out of range");
            s2 |= std::uint64_t{1} << i;
        }
        if ((s1 & s2) || (s1 | s2) != full || !s1 || !s2)
            throw input_error("hint does not bipartition the generators");
        if (root->gens.size() > 1 && eng.try_split(*root, full, s1, s2) == 1) verdict = 1;
    }
    if (!verdict) verdict = eng.solve(*root, full, opts.threads);

    CertSearchResult out;
    out.stats.partitions_examined = eng.partitions.load();
    out.stats.memo_entries = eng.memo_entries.load();
    out.stats.universes = eng.registry.size();
    if (verdict == 1) {
        out.status = SearchStatus::Found;
        const std::size_t nv = ideal.nvars();
        out.certificate = eng.rebuild(
            *root, full,
            [&](const typename Rep::value& v) {
                return Certificate::leaf(Rep::to_monomial(v, nv));
            },
            [](CertPtr a, CertPtr b, CertPtr m) {
                return Certificate::node(std::move(a), std::move(b), std::move(m));
            });
    } else if (verdict == 2) {
        if (eng.capacity_hit)
            throw input_error("a meet exceeded 63 generators; cannot certify refutation");
        out.status = SearchStatus::Refuted;
    } else {
        out.status = SearchStatus::BudgetExceeded;
    }
    return out;
}

} // namespace

CertSearchResult find_certificate(const MonomialIdeal& ideal, const SearchOptions& opts) {
    if (ideal.is_zero() || ideal.is_unit())
        throw input_error("constructibility needs a proper nonzero ideal");
    if (!generated_in_degree(ideal))
        throw input_error("constructibility search needs a single-degree ideal");
    if (ideal.gens().size() > 63)
        throw input_error("certificate search supports at most 63 generators");
    if (opts.threads < 1) throw input_error("thread count must be positive");
    switch (detail::choose_rep(ideal.gens(), ideal.nvars())) {
    case detail::RepKind::Mask:
        return run_ideal_search<detail::MaskRep>(ideal, opts);
    case detail::RepKind::Byte:
        return run_ideal_search<detail::BytePack>(ideal, opts);
    default:
        return run_ideal_search<detail::BigRep>(ideal, opts);
    }
}

CCertPtr complex_cert_leaf(Face f) {
    auto c = std::make_shared<ComplexCertificate>();
    c->facets = {std::move(f)};
    return c;
}

CCertPtr complex_cert_node(CCertPtr left, CCertPtr right, CCertPtr meet) {
    if (!left || !right || !meet) throw input_error("certificate node needs three subtrees");
    auto c = std::make_shared<ComplexCertificate>();
    std::vector<Face> all = left->facets;
    all.insert(all.end(), right->facets.begin(), right->facets.end());
    std::sort(all.begin(), all.end());
    c->facets = std::move(all);
    c->left = std::move(left);
    c->right = std::move(right);
    c->meet = std::move(meet);
    return c;
}

namespace {

struct ComplexVerifier {
    const VarsPtr& labels;
    CertCheck result;

    bool fail(const std::string& path, const std::string& reason) {
        if (result.ok) {
            result.ok = false;
            result.path = path;
            result.reason = reason;
        }
        return false;
    }

    bool check(const ComplexCertificate& cert, const std::string& path) {
        if (cert.is_leaf()) {
            if (cert.facets.size() != 1) return fail(path, "leaf must hold one facet");
            return true;
        }
        if (!cert.left || !cert.right || !cert.meet)
            return fail(path, "node missing a subtree");
        std::vector<Face> merged = cert.left->facets;
        merged.insert(merged.end(), cert.right->facets.begin(), cert.right->facets.end());
        std::sort(merged.begin(), merged.end());
        for (std::size_t t = 1; t < merged.size(); ++t)
            if (merged[t] == merged[t - 1])
                return fail(path, "left/right facet sets overlap");
        if (merged != cert.facets)
            return fail(path, "left/right facets do not partition the node");
        const std::size_t k = cert.facets.front().size();
        for (const Face& f : cert.facets)
            if (f.size() != k) return fail(path, "node facets are not pure");
        if (k == 0) return fail(path, "cannot glue along facets of the empty face");
        SimplicialComplex lhs(labels, cert.left->facets);
        SimplicialComplex rhs(labels, cert.right->facets);
        SimplicialComplex meet = complex_intersection(lhs, rhs);
        if (meet.is_void()) return fail(path, "intersection is void");
        for (const Face& f : meet.facets())
            if (f.size() + 1 != k)
                return fail(path, "intersection is not pure of dimension d-1");
        if (meet.facets() != cert.meet->facets)
            return fail(path, "meet subtree does not match the intersection");
        return check(*cert.left, path + ".left") && check(*cert.right, path + ".right") &&
               check(*cert.meet, path + ".meet");
    }
};

} // namespace

CertCheck verify_complex_certificate(const SimplicialComplex& c,
                                     const ComplexCertificate& cert) {
    if (c.is_void()) throw input_error("void complex has no construction");
    ComplexVerifier v{c.labels(), {}};
    if (cert.facets != c.facets()) {
        v.fail("root", "certificate facets differ from the complex");
        return v.result;
    }
    v.check(cert, "root");
    return v.result;
}

ComplexSearchResult complex_constructibility(const SimplicialComplex& c,
                                             const SearchOptions& opts) {
    if (c.is_void()) throw input_error("void complex rejected");
    if (!c.pure()) throw input_error("constructibility search needs a pure complex");
    if (c.n() > 64) throw input_error("complex search supports at most 64 vertices");
    if (c.facets().size() > 63)
        throw input_error("complex search supports at most 63 facets");
    if (opts.threads < 1) throw input_error("thread count must be positive");

    Engine<detail::MaskRep, false> eng(opts.budget);
    std::vector<std::uint64_t> packed;
    packed.reserve(c.facets().size());
    for (const Face& f : c.facets()) {
        std::uint64_t m = 0;
        for (int v : f.v) m |= std::uint64_t{1} << v;
        packed.push_back(m);
    }
    long long q = static_cast<long long>(c.facets().front().size());
    auto* root = eng.universe_for(std::move(packed), q);
    std::uint64_t full = (std::uint64_t{1} << root->gens.size()) - 1;

    std::uint8_t verdict = 0;
    if (opts.root_split) {
        std::uint64_t s1 = 0, s2 = 0;
        for (std::size_t i : opts.root_split->first) {
            if (i >= root->gens.size()) throw input_error("hint index out of range");
            s1 |= std::uint64_t{1} << i;
        }
        for (std::size_t i : opts.root_split->second) {
            if (i >= root->gens.size()) throw input_error("hint index out of range");
            s2 |= std::uint64_t{1} << i;
        }
        if ((s1 & s2) || (s1 | s2) != full || !s1 || !s2)
            throw input_error("hint does not bipartition the facets");
        if (root->gens.size() > 1 && eng.try_split(*root, full, s1, s2) == 1) verdict = 1;
    }
    if (!verdict) verdict = eng.solve(*root, full, opts.threads);

    ComplexSearchResult out;
    out.stats.partitions_examined = eng.partitions.load();
    out.stats.memo_entries = eng.memo_entries.load();
    out.stats.universes = eng.registry.size();
    if (verdict == 1) {
        out.status = SearchStatus::Found;
        const int n = c.n();
        out.certificate = eng.rebuild(
            *root, full,
            [n](std::uint64_t v) {
                std::vector<int> verts;
                for (int i = 0; i < n; ++i)
                    if (v >> i & 1) verts.push_back(i);
                return complex_cert_leaf(Face(std::move(verts)));
            },
            [](CCertPtr a, CCertPtr b, CCertPtr m) {
                return complex_cert_node(std::move(a), std::move(b), std::move(m));
            });
    } else if (verdict == 2) {
        if (eng.capacity_hit)
            throw input_error("a meet exceeded 63 facets; cannot certify refutation");
        out.status = SearchStatus::Refuted;
    } else {
        out.status = SearchStatus::BudgetExceeded;
    }
    return out;
}

} // namespace cmi
