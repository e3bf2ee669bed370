#include <cmi/acceptance.hpp>

#include <cmi/betti.hpp>
#include <cmi/cert_search.hpp>
#include <cmi/corpus.hpp>
#include <cmi/errors.hpp>
#include <cmi/linear_quotients.hpp>
#include <cmi/oracle.hpp>
#include <cmi/polarization.hpp>
#include <cmi/random_gen.hpp>
#include <cmi/shelling.hpp>
#include <cmi/simplicial.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace cmi {

namespace {

using Clock = std::chrono::steady_clock;

struct Runner {
    AcceptanceOptions opts;
    std::vector<CriterionResult> results;

    void run(int number, const std::string& title,
             const std::function<bool(std::string&)>& body) {
        CriterionResult r;
        r.number = number;
        r.title = title;
        auto t0 = Clock::now();
        try {
            r.passed = body(r.detail);
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (opts.log) {
            (*opts.log) << (r.passed ? "PASS" : "FAIL") << "  [" << number << "] " << title;
            if (!r.detail.empty())
                (*opts.log) << " (" << r.detail << ")";
            (*opts.log) << std::endl;
        }
        results.push_back(std::move(r));
    }
};

// Number of degree-q monomials in n variables; the sample-size ceiling.
std::size_t monomial_count(std::size_t n, long long q) {
    unsigned long long c = 1;
    for (long long t = 0; t < q; ++t)
        c = c * (n + static_cast<unsigned long long>(t)) / (t + 1);
    return static_cast<std::size_t>(std::min<unsigned long long>(c, 1u << 20));
}

std::vector<LQSample> draw_lq_pool(std::size_t want, std::uint64_t seed_base) {
    std::vector<LQSample> pool;
    for (std::size_t k = 0; pool.size() < want && k < 20 * want; ++k) {
        std::size_t n = 2 + k % 4;
        long long q = 1 + static_cast<long long>(k / 4 % 4);
        std::size_t size = std::min(1 + k / 16 % 6, monomial_count(n, q));
        try {
            pool.push_back(random_lq_ideal(n, q, size, seed_base + k));
        } catch (const input_error&) {
            // unreachable size for these parameters: draw the next one
        }
    }
    if (pool.size() < want)
        throw input_error("sample pool starved");
    return pool;
}

struct Pools {
    std::vector<ConstructibleSample> all;   // leaves and nodes mixed
    std::vector<ConstructibleSample> nodes; // two-part certificates only
};

const Pools& shared_pools() {
    static const Pools pools = [] {
        Pools p;
        for (std::size_t k = 0; p.all.size() < 100 && k < 1000; ++k) {
            std::size_t n = 3 + k % 2;
            long long q = 1 + static_cast<long long>(k % 3);
            std::size_t size = std::min(1 + k % 5, monomial_count(n, q));
            try {
                p.all.push_back(random_constructible(n, q, size, 1000000 + k));
            } catch (const input_error&) {
            }
        }
        for (std::size_t k = 0; p.nodes.size() < 100 && k < 3000; ++k) {
            std::size_t n = 3 + k % 2;
            long long q = 1 + static_cast<long long>(k % 3);
            std::size_t size = std::min(2 + k % 4, monomial_count(n, q));
            try {
                ConstructibleSample s = random_constructible(n, q, size, 3 * (k + 1));
                if (!s.certificate->is_leaf())
                    p.nodes.push_back(std::move(s));
            } catch (const input_error&) {
            }
        }
        if (p.all.size() < 100 || p.nodes.size() < 100)
            throw input_error("constructible sample pool starved");
        return p;
    }();
    return pools;
}

bool linear_entries(const BettiTable& t, long long q) {
    for (const auto& [key, value] : t.entries)
        if (value != 0 && key.second != key.first + q)
            return false;
    return true;
}

std::string verdict_name(SearchStatus s) {
    switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Refuted: return "refuted";
    default: return "budget exceeded";
    }
}

} // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
    Runner runner;
    runner.opts = opts;

    runner.run(1, "Hachimori dual ideals and their meet match the stored lists",
               [&](std::string& detail) {
        auto d1 = corpus_load("hachimori_d1");
        auto d2 = corpus_load("hachimori_d2");
        auto meet = corpus_load("hachimori_meet");
        if (alexander_dual_ideal(*d1.complex) != *corpus_load("hachimori_d1_dual").ideal) {
            detail = "dual of the 14-facet piece differs from the stored ideal";
            return false;
        }
        if (alexander_dual_ideal(*d2.complex) != *corpus_load("hachimori_d2_dual").ideal) {
            detail = "dual of the 8-facet piece differs from the stored ideal";
            return false;
        }
        MonomialIdeal meet_ideal = ideal_intersection(*corpus_load("hachimori_d1_dual").ideal,
                                                      *corpus_load("hachimori_d2_dual").ideal);
        if (meet_ideal != *corpus_load("hachimori_meet_dual").ideal) {
            detail = "intersection of the dual ideals differs from the stored 4-generator list";
            return false;
        }
        if (complex_intersection(*d1.complex, *d2.complex) != *meet.complex) {
            detail = "intersection complex is not the stored 4-facet path";
            return false;
        }
        detail = "14 + 8 generators, 4-generator meet";
        return true;
    });

    runner.run(2, "Ziegler sum and meet match; polarization equals the complex dual",
               [&](std::string& detail) {
        auto i1 = *corpus_load("ziegler_i1").ideal;
        auto i2 = *corpus_load("ziegler_i2").ideal;
        auto whole = *corpus_load("ziegler_ideal").ideal;
        if (ideal_sum(i1, i2) != whole) {
            detail = "I1 + I2 differs from the stored 21-generator ideal";
            return false;
        }
        if (ideal_intersection(i1, i2) != *corpus_load("ziegler_meet").ideal) {
            detail = "I1 meet I2 differs from the stored 6-generator list";
            return false;
        }
        MonomialIdeal dual = alexander_dual_ideal(*corpus_load("ziegler_complex").complex);
        MonomialIdeal polarized =
            rename_variables(polarize_ideal(whole), ziegler_polarization_renames(), dual.vars());
        if (polarized != dual) {
            detail = "polarized ideal differs from the dual of the 21-facet complex";
            return false;
        }
        detail = "21 generators, 6-generator meet, polarization matches";
        return true;
    });

    runner.run(3, "stored shelling orders verify", [&](std::string& detail) {
        for (const char* name : {"hachimori_d1", "hachimori_d2"}) {
            auto entry = corpus_load(name);
            ShellingCheck check = verify_shelling(*entry.complex, entry.facet_order);
            if (!check.ok) {
                detail = std::string(name) + ": " + check.reason;
                return false;
            }
        }
        return true;
    });

    runner.run(4, "linear-quotient search succeeds on the Ziegler parts and their meet",
               [&](std::string& detail) {
        for (const char* name : {"ziegler_i1", "ziegler_i2", "ziegler_meet"}) {
            auto ideal = *corpus_load(name).ideal;
            LQResult res = find_lq_order(ideal);
            if (res.status != SearchStatus::Found) {
                detail = std::string(name) + ": search " + verdict_name(res.status);
                return false;
            }
            LQCheck check = verify_lq_order(ideal, res.order);
            if (!check.ok) {
                detail = std::string(name) + ": witness rejected: " + check.reason;
                return false;
            }
        }
        return true;
    });

    runner.run(5, "certificate search proves the Ziegler ideal constructible",
               [&](std::string& detail) {
        auto ideal = *corpus_load("ziegler_ideal").ideal;
        SearchOptions sopts;
        sopts.threads = static_cast<int>(opts.threads);
        sopts.root_split = corpus_hint("ziegler_ideal");
        CertSearchResult res = find_certificate(ideal, sopts);
        if (res.status != SearchStatus::Found) {
            detail = "hinted search " + verdict_name(res.status);
            return false;
        }
        CertCheck check = verify_certificate(ideal, *res.certificate);
        if (!check.ok) {
            detail = "certificate rejected at " + check.path + ": " + check.reason;
            return false;
        }
        std::ostringstream os;
        os << "hinted search examined " << res.stats.partitions_examined << " bipartitions";
        if (opts.extended) {
            SearchOptions full;
            full.threads = static_cast<int>(opts.threads);
            full.budget = 10'000'000'000ull;
            CertSearchResult unhinted = find_certificate(ideal, full);
            if (unhinted.status != SearchStatus::Found) {
                detail = "unhinted search " + verdict_name(unhinted.status);
                return false;
            }
            CertCheck check2 = verify_certificate(ideal, *unhinted.certificate);
            if (!check2.ok) {
                detail = "unhinted certificate rejected: " + check2.reason;
                return false;
            }
            os << "; unhinted " << unhinted.stats.partitions_examined;
        }
        detail = os.str();
        return true;
    });

    runner.run(6, "exhaustive search refutes constructibility of the dunce-hat dual",
               [&](std::string& detail) {
        SearchOptions sopts;
        sopts.budget = 1'000'000'000ull;
        sopts.threads = static_cast<int>(opts.threads);
        auto ideal = *corpus_load("dunce_hat_dual").ideal;
        CertSearchResult ideal_res = find_certificate(ideal, sopts);
        if (ideal_res.status != SearchStatus::Refuted) {
            detail = "ideal search " + verdict_name(ideal_res.status);
            return false;
        }
        auto complex = *corpus_load("dunce_hat").complex;
        ComplexSearchResult complex_res = complex_constructibility(complex, sopts);
        if (complex_res.status != SearchStatus::Refuted) {
            detail = "complex search " + verdict_name(complex_res.status);
            return false;
        }
        std::ostringstream os;
        os << "bipartitions: ideal " << ideal_res.stats.partitions_examined << ", complex "
           << complex_res.stats.partitions_examined;
        detail = os.str();
        return true;
    });

    runner.run(7, "dunce-hat dual has a linear resolution in characteristics 0 and 2",
               [&](std::string& detail) {
        auto ideal = *corpus_load("dunce_hat_dual").ideal;
        for (long long c : {0ll, 2ll}) {
            BettiTable t = betti_table(ideal, c, static_cast<int>(opts.threads));
            if (!linear_entries(t, 5)) {
                detail = "nonlinear entry in characteristic " + std::to_string(c);
                return false;
            }
            if (t.at(0, 5) != 17) {
                detail = "beta_{0,5} != 17 in characteristic " + std::to_string(c);
                return false;
            }
        }
        return true;
    });

    runner.run(8, "quotient-count Betti formula matches the homology oracle",
               [&](std::string& detail) {
        auto pool = draw_lq_pool(200, 500);
        for (std::size_t k = 0; k < pool.size(); ++k) {
            BettiTable fast = betti_from_lq(pool[k].ideal, pool[k].order);
            BettiTable slow = betti_table(pool[k].ideal);
            if (!(fast == slow)) {
                detail = "mismatch at sample " + std::to_string(k);
                return false;
            }
        }
        detail = "200 ideals";
        return true;
    });

    runner.run(9, "certificate-node Betti recursion matches the homology oracle",
               [&](std::string& detail) {
        const auto& nodes = shared_pools().nodes;
        auto oracle = [](const MonomialIdeal& id) { return betti_table(id); };
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            const auto& s = nodes[k];
            MonomialIdeal i1 = certified_ideal(s.ideal.vars(), *s.certificate->left());
            MonomialIdeal i2 = certified_ideal(s.ideal.vars(), *s.certificate->right());
            BettiTable combined = betti_recursion(i1, i2, oracle);
            if (!(combined == betti_table(s.ideal))) {
                detail = "mismatch at sample " + std::to_string(k);
                return false;
            }
        }
        detail = "100 nodes";
        return true;
    });

    runner.run(10, "random constructible ideals have linear resolutions",
               [&](std::string& detail) {
        const auto& all = shared_pools().all;
        for (std::size_t k = 0; k < all.size(); ++k) {
            if (!has_linear_resolution(all[k].ideal)) {
                detail = "nonlinear resolution at sample " + std::to_string(k);
                return false;
            }
        }
        detail = "100 ideals";
        return true;
    });

    runner.run(11, "shellability of random pure complexes matches dual linear quotients",
               [&](std::string& detail) {
        for (std::size_t k = 0; k < 100; ++k) {
            int n = 2 + static_cast<int>(k % 5);
            SimplicialComplex c = random_pure_complex(n, 7000 + k);
            ShellingResult shell = find_shelling(c);
            LQResult lq = find_lq_order(alexander_dual_ideal(c));
            if (shell.status != lq.status || shell.status == SearchStatus::BudgetExceeded) {
                detail = "sample " + std::to_string(k) + ": shelling " +
                         verdict_name(shell.status) + ", dual quotients " +
                         verdict_name(lq.status);
                return false;
            }
        }
        detail = "100 complexes";
        return true;
    });

    runner.run(12, "Alexander dual matches direct computation and is an involution",
               [&](std::string& detail) {
        for (std::size_t k = 0; k < 200; ++k) {
            int n = 2 + static_cast<int>(k % 6);
            SimplicialComplex c = random_complex(n, 9000 + k);
            MonomialIdeal dual = alexander_dual_ideal(c);

            // Directly: minimal subsets whose complement is a face.
            std::vector<unsigned> facet_masks;
            for (const Face& f : c.facets()) {
                unsigned m = 0;
                for (int v : f.v)
                    m |= 1u << v;
                facet_masks.push_back(m);
            }
            unsigned full = (1u << n) - 1;
            std::vector<unsigned> nonfaces_of_dual;
            for (unsigned m = 0; m <= full; ++m) {
                unsigned comp = full & ~m;
                bool is_face = false;
                for (unsigned fm : facet_masks)
                    if ((comp & ~fm) == 0) {
                        is_face = true;
                        break;
                    }
                if (is_face)
                    nonfaces_of_dual.push_back(m);
            }
            std::vector<Monomial> gens;
            for (unsigned m : nonfaces_of_dual) {
                bool minimal = true;
                for (unsigned other : nonfaces_of_dual)
                    if (other != m && (other & ~m) == 0) {
                        minimal = false;
                        break;
                    }
                if (!minimal)
                    continue;
                std::vector<Int> exps(static_cast<std::size_t>(n), 0);
                for (int v = 0; v < n; ++v)
                    if (m & (1u << v))
                        exps[static_cast<std::size_t>(v)] = 1;
                gens.emplace_back(std::move(exps));
            }
            if (MonomialIdeal(dual.vars(), gens) != dual) {
                detail = "direct computation differs at sample " + std::to_string(k);
                return false;
            }
            if (alexander_dual_of_ideal(alexander_dual_of_ideal(dual)) != dual) {
                detail = "dual of dual is not the identity at sample " + std::to_string(k);
                return false;
            }
        }
        detail = "200 complexes";
        return true;
    });

    runner.run(13, "polarization preserves certificates and linear-quotient orders",
               [&](std::string& detail) {
        const auto& pools = shared_pools();
        std::vector<const ConstructibleSample*> samples;
        for (const auto& s : pools.all)
            samples.push_back(&s);
        for (const auto& s : pools.nodes)
            samples.push_back(&s);
        for (std::size_t k = 0; k < samples.size(); ++k) {
            const auto& s = *samples[k];
            PolarizedContext ctx = polarization_context(s.ideal);
            CertPtr pc = polarize_certificate(*s.certificate, ctx);
            CertCheck check = verify_certificate(polarize_ideal(s.ideal), *pc);
            if (!check.ok) {
                detail = "polarized certificate rejected at sample " + std::to_string(k) +
                         ": " + check.reason;
                return false;
            }
        }
        std::size_t checked = 0;
        for (std::size_t k = 0; checked < 200 && k < 2000; ++k) {
            std::size_t n = 2 + k % 4;
            long long q = 1 + static_cast<long long>(k % 3);
            std::size_t size = std::min(2 + k % 4, monomial_count(n, q));
            std::optional<LQSample> sample;
            try {
                sample = random_lq_ideal(n, q, size, 12000 + k);
            } catch (const input_error&) {
                continue;
            }
            std::vector<Monomial> order = sample->order;
            if (k % 2 == 1 && order.size() >= 2)
                std::rotate(order.begin(), order.begin() + 1, order.end());
            if (!lq_transfer_check(sample->ideal, order)) {
                detail = "transfer disagreement at draw " + std::to_string(k);
                return false;
            }
            ++checked;
        }
        if (checked < 200) {
            detail = "transfer sample pool starved";
            return false;
        }
        detail = std::to_string(samples.size()) + " certificates, 200 order pairs";
        return true;
    });

    if (opts.extended) {
        runner.run(14, "exhaustion refutes Hachimori shellability and dual linear quotients",
                   [&](std::string& detail) {
            auto complex = *corpus_load("hachimori").complex;
            ShellingResult shell = find_shelling(complex, 1'000'000'000ull);
            if (shell.status != SearchStatus::Refuted) {
                detail = "shelling search " + verdict_name(shell.status);
                return false;
            }
            auto dual = *corpus_load("hachimori_dual").ideal;
            LQResult lq = find_lq_order(dual, 1'000'000'000ull);
            if (lq.status != SearchStatus::Refuted) {
                detail = "quotient search " + verdict_name(lq.status);
                return false;
            }
            std::ostringstream os;
            os << "steps: shelling " << shell.stats.steps << ", quotients " << lq.stats.steps;
            detail = os.str();
            return true;
        });
    }

    return runner.results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.passed; });
}

} // namespace cmi
