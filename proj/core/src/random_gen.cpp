#include <cmi/random_gen.hpp>

#include <cmi/cert_search.hpp>
#include <cmi/errors.hpp>
#include <cmi/linear_quotients.hpp>
#include <cmi/variables.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace cmi {

namespace {

// All randomness goes through the raw engine with modulo reduction so that
// output streams are identical across standard libraries.
std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
}

Monomial random_monomial(std::size_t n, long long q, std::mt19937_64& rng) {
    std::vector<Int> exps(n, 0);
    for (long long t = 0; t < q; ++t)
        exps[draw(rng, n)] += 1;
    return Monomial(std::move(exps));
}

// Appending v keeps the order's prefix colon variable-generated: the colon
// ideal's degree-one generators are exactly the degree-one quotients u_j : v,
// and every quotient must be divisible by one of them.
bool step_ok(const std::vector<Monomial>& prefix, const Monomial& v) {
    std::vector<Monomial> singles;
    std::vector<Monomial> quotients;
    quotients.reserve(prefix.size());
    for (const Monomial& u : prefix) {
        Monomial c = u.colon_quotient(v);
        if (c.degree() == 1)
            singles.push_back(c);
        quotients.push_back(std::move(c));
    }
    if (singles.empty())
        return prefix.empty();
    for (const Monomial& c : quotients) {
        bool covered = false;
        for (const Monomial& s : singles)
            if (divides(s, c)) {
                covered = true;
                break;
            }
        if (!covered)
            return false;
    }
    return true;
}

} // namespace

LQSample random_lq_ideal(std::size_t n, long long q, std::size_t size, std::uint64_t seed) {
    if (n == 0 || q <= 0 || size == 0)
        throw input_error("random_lq_ideal needs n >= 1, q >= 1, size >= 1");
    std::mt19937_64 rng(seed);
    auto vars = VariableSet::numbered("x", 1, n);

    const int max_restarts = 64;
    const int max_proposals = 256;
    for (int restart = 0; restart < max_restarts; ++restart) {
        std::vector<Monomial> order;
        order.push_back(random_monomial(n, q, rng));
        int stale = 0;
        while (order.size() < size && stale < max_proposals) {
            Monomial v = random_monomial(n, q, rng);
            bool dup = std::find(order.begin(), order.end(), v) != order.end();
            if (!dup && step_ok(order, v)) {
                order.push_back(std::move(v));
                stale = 0;
            } else {
                ++stale;
            }
        }
        if (order.size() == size) {
            MonomialIdeal ideal(vars, order);
            LQCheck check = verify_lq_order(ideal, order);
            if (!check.ok)
                throw std::logic_error("sampler produced an invalid linear-quotient order");
            return LQSample{std::move(ideal), std::move(order)};
        }
    }
    throw input_error("random_lq_ideal: sampling failed (size " + std::to_string(size) +
                      " unreachable in " + std::to_string(n) + " variables at degree " +
                      std::to_string(q) + ")");
}

namespace {

// A node glueing A + B is admissible when the generator sets are disjoint,
// both parts sit in degree q, and the meet lands entirely in degree q+1.
CertPtr try_merge(const MonomialIdeal& a, const std::vector<Monomial>& order_a,
                  const MonomialIdeal& b, const std::vector<Monomial>& order_b,
                  long long q, MonomialIdeal& sum_out) {
    for (const Monomial& g : a.gens())
        for (const Monomial& h : b.gens())
            if (g == h)
                return nullptr;
    MonomialIdeal sum = ideal_sum(a, b);
    if (sum.gens().size() != a.gens().size() + b.gens().size())
        return nullptr;
    MonomialIdeal meet = ideal_intersection(a, b);
    auto mdeg = generated_in_degree(meet);
    if (!mdeg || *mdeg != q + 1)
        return nullptr;
    SearchOptions opts;
    opts.budget = 1'000'000;
    CertSearchResult mres = find_certificate(meet, opts);
    if (mres.status != SearchStatus::Found)
        return nullptr;
    CertPtr cert = Certificate::node(lq_to_certificate(a, order_a),
                                     lq_to_certificate(b, order_b), mres.certificate);
    sum_out = std::move(sum);
    return cert;
}

} // namespace

ConstructibleSample random_constructible(std::size_t n, long long q, std::size_t size,
                                         std::uint64_t seed) {
    if (seed % 3 == 0 && size >= 2) {
        std::size_t half = size / 2;
        for (std::uint64_t attempt = 0; attempt < 40; ++attempt) {
            try {
                LQSample a = random_lq_ideal(n, q, size - half, seed * 97 + 2 * attempt + 1);
                LQSample b = random_lq_ideal(n, q, half, seed * 97 + 2 * attempt + 2);
                MonomialIdeal sum = MonomialIdeal::zero(a.ideal.vars());
                CertPtr cert = try_merge(a.ideal, a.order, b.ideal, b.order, q, sum);
                if (cert) {
                    CertCheck check = verify_certificate(sum, *cert);
                    if (!check.ok)
                        throw std::logic_error("glued certificate failed verification: " +
                                               check.reason);
                    return ConstructibleSample{std::move(sum), std::move(cert)};
                }
            } catch (const input_error&) {
                // sampling failure in a part: try the next pair
            }
        }
    }
    LQSample plain = random_lq_ideal(n, q, size, seed);
    CertPtr cert = lq_to_certificate(plain.ideal, plain.order);
    return ConstructibleSample{std::move(plain.ideal), std::move(cert)};
}

SimplicialComplex random_pure_complex(int n, std::uint64_t seed) {
    if (n < 2)
        throw input_error("random_pure_complex needs n >= 2");
    std::mt19937_64 rng(seed);
    auto labels = VariableSet::numbered("", 0, static_cast<std::size_t>(n));
    std::size_t k = 1 + draw(rng, static_cast<std::size_t>(n - 1));
    std::size_t count = 1 + draw(rng, 6);

    std::set<std::vector<int>> picked;
    for (std::size_t attempts = 0; picked.size() < count && attempts < 64 * count; ++attempts) {
        std::vector<int> pool(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            pool[static_cast<std::size_t>(i)] = i;
        for (std::size_t i = 0; i < k; ++i)
            std::swap(pool[i], pool[i + draw(rng, pool.size() - i)]);
        std::vector<int> face(pool.begin(), pool.begin() + static_cast<long>(k));
        std::sort(face.begin(), face.end());
        picked.insert(std::move(face));
    }
    std::vector<Face> faces;
    for (const auto& f : picked)
        faces.emplace_back(f);
    return SimplicialComplex(labels, faces);
}

SimplicialComplex random_complex(int n, std::uint64_t seed) {
    if (n < 2)
        throw input_error("random_complex needs n >= 2");
    std::mt19937_64 rng(seed);
    auto labels = VariableSet::numbered("", 0, static_cast<std::size_t>(n));
    std::size_t count = 1 + draw(rng, 6);

    std::vector<Face> faces;
    for (std::size_t t = 0; t < count; ++t) {
        std::size_t s = 1 + draw(rng, static_cast<std::size_t>(n - 1));
        std::vector<int> pool(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            pool[static_cast<std::size_t>(i)] = i;
        for (std::size_t i = 0; i < s; ++i)
            std::swap(pool[i], pool[i + draw(rng, pool.size() - i)]);
        std::vector<int> face(pool.begin(), pool.begin() + static_cast<long>(s));
        faces.emplace_back(face);
    }
    return SimplicialComplex(labels, faces);
}

} // namespace cmi
