#include <cmi/cert_search.hpp>
#include <cmi/certificate.hpp>
#include <cmi/errors.hpp>
#include <cmi/oracle.hpp>
#include <cmi/random_gen.hpp>
#include <cmi/text.hpp>

#include <doctest.h>

#include <random>
#include <set>
#include <vector>

using namespace cmi;

namespace {

VarsPtr ring(int n) { return VariableSet::numbered("x", 1, n); }
VarsPtr verts(int n) { return VariableSet::numbered("", 0, n); }

// Reference decision procedure: no memo, no pruning, every bipartition.
bool naive_constructible(const MonomialIdeal& i) {
    const auto& g = i.gens();
    if (g.size() == 1) return true;
    auto q = generated_in_degree(i);
    REQUIRE(q.has_value());
    const std::size_t m = g.size();
    for (unsigned long long mask = 1; mask < (1ull << (m - 1)); ++mask) {
        std::vector<Monomial> s1{g[0]}, s2;
        for (std::size_t k = 1; k < m; ++k)
            ((mask >> (k - 1)) & 1 ? s2 : s1).push_back(g[k]);
        MonomialIdeal i1{i.vars(), s1}, i2{i.vars(), s2};
        auto meet = ideal_intersection(i1, i2);
        auto mq = generated_in_degree(meet);
        if (!mq || *mq != *q + 1) continue;
        if (naive_constructible(i1) && naive_constructible(i2) && naive_constructible(meet))
            return true;
    }
    return false;
}

MonomialIdeal random_single_degree(const VarsPtr& v, int q, std::size_t size,
                                   std::mt19937_64& rng) {
    std::set<std::vector<Int>> chosen;
    while (chosen.size() < size) {
        std::vector<Int> e(v->size(), 0);
        for (int d = 0; d < q; ++d) e[rng() % v->size()] += 1;
        chosen.insert(e);
    }
    std::vector<Monomial> gens;
    for (const auto& e : chosen) gens.emplace_back(e);
    return MonomialIdeal{v, gens};
}

} // namespace

TEST_CASE("verify_certificate") {
    auto v = ring(4);

    auto principal = parse_ideal(v, "x1*x2*x3");
    CHECK(verify_certificate(principal, *Certificate::leaf(principal.gens()[0])).ok);
    CHECK_FALSE(verify_certificate(parse_ideal(v, "x1"),
                                   *Certificate::leaf(principal.gens()[0]))
                    .ok);

    auto ab = parse_monomial(*v, "x1*x2");
    auto bc = parse_monomial(*v, "x2*x3");
    auto good = Certificate::node(Certificate::leaf(ab), Certificate::leaf(bc),
                                  Certificate::leaf(parse_monomial(*v, "x1*x2*x3")));
    CHECK(verify_certificate(parse_ideal(v, "x1*x2, x2*x3"), *good).ok);
    CHECK(certified_ideal(v, *good) == parse_ideal(v, "x1*x2, x2*x3"));

    // disjoint supports: the meet lands two degrees up, not one
    auto cd = parse_monomial(*v, "x3*x4");
    auto far = Certificate::node(Certificate::leaf(ab), Certificate::leaf(cd),
                                 Certificate::leaf(parse_monomial(*v, "x1*x2*x3*x4")));
    auto check = verify_certificate(parse_ideal(v, "x1*x2, x3*x4"), *far);
    CHECK_FALSE(check.ok);
    CHECK_FALSE(check.reason.empty());

    // wrong meet monomial: intersection mismatch
    auto wrong = Certificate::node(Certificate::leaf(ab), Certificate::leaf(bc),
                                   Certificate::leaf(parse_monomial(*v, "x1*x2*x4")));
    CHECK_FALSE(verify_certificate(parse_ideal(v, "x1*x2, x2*x3"), *wrong).ok);

    // sum mismatch: certificate does not cover the claimed ideal
    CHECK_FALSE(verify_certificate(parse_ideal(v, "x1*x2, x2*x4"), *good).ok);

    // mixed part degrees
    auto skew = Certificate::node(Certificate::leaf(parse_monomial(*v, "x1")),
                                  Certificate::leaf(bc),
                                  Certificate::leaf(parse_monomial(*v, "x1*x2*x3")));
    CHECK_FALSE(verify_certificate(parse_ideal(v, "x1, x2*x3"), *skew).ok);
}

TEST_CASE("verify_certificate with a bound vector") {
    auto v = ring(2);
    auto i = parse_ideal(v, "x1*x2");
    auto leaf = Certificate::leaf(i.gens()[0]);
    CHECK(verify_certificate(i, *leaf, parse_monomial(*v, "x1*x2")).ok);
    CHECK_FALSE(verify_certificate(i, *leaf, parse_monomial(*v, "x1")).ok);

    auto pair = parse_ideal(v, "x1, x2");
    auto node = Certificate::node(Certificate::leaf(pair.gens()[0]),
                                  Certificate::leaf(pair.gens()[1]),
                                  Certificate::leaf(parse_monomial(*v, "x1*x2")));
    CHECK(verify_certificate(pair, *node, parse_monomial(*v, "x1*x2")).ok);
    // q = 1 at the root and the meet sits at degree 2 = |bound|: the node
    // degree condition q < |bound| holds, but shrinking the bound breaks it
    CHECK_FALSE(verify_certificate(pair, *node, parse_monomial(*v, "x1")).ok);
}

TEST_CASE("find_certificate") {
    auto v = ring(4);

    auto glued = parse_ideal(v, "x1*x2, x2*x3");
    auto r = find_certificate(glued);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(verify_certificate(glued, *r.certificate).ok);
    CHECK(r.stats.partitions_examined > 0);

    auto disjoint = parse_ideal(v, "x1*x2, x3*x4");
    CHECK(find_certificate(disjoint).status == SearchStatus::Refuted);

    SearchOptions tiny;
    tiny.budget = 0;
    CHECK(find_certificate(disjoint, tiny).status == SearchStatus::BudgetExceeded);

    CHECK_THROWS_AS(find_certificate(parse_ideal(v, "x1, x2*x3")), input_error);
    CHECK_THROWS_AS(find_certificate(MonomialIdeal::zero(v)), input_error);
    CHECK_THROWS_AS(find_certificate(MonomialIdeal::unit(v)), input_error);
}

TEST_CASE("find_certificate honors a root split hint") {
    auto v = ring(4);
    auto i = parse_ideal(v, "x1*x2, x2*x3, x3*x4");
    SearchOptions opts;
    opts.root_split = {{std::vector<std::size_t>{0, 1}, std::vector<std::size_t>{2}}};
    auto r = find_certificate(i, opts);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(verify_certificate(i, *r.certificate).ok);

    // malformed hints (overlap, out of range, not covering) are input errors
    SearchOptions bad;
    bad.root_split = {{std::vector<std::size_t>{0, 1}, std::vector<std::size_t>{1, 2}}};
    CHECK_THROWS_AS(find_certificate(i, bad), input_error);
    bad.root_split = {{std::vector<std::size_t>{0}, std::vector<std::size_t>{1, 7}}};
    CHECK_THROWS_AS(find_certificate(i, bad), input_error);
    bad.root_split = {{std::vector<std::size_t>{0}, std::vector<std::size_t>{1}}};
    CHECK_THROWS_AS(find_certificate(i, bad), input_error);
}

TEST_CASE("find_certificate agrees with the naive recursion") {
    std::mt19937_64 rng{901};
    int found = 0, refuted = 0;
    for (int t = 0; t < 60; ++t) {
        auto v = ring(3 + static_cast<int>(rng() % 2));
        int q = 2 + static_cast<int>(rng() % 2);
        auto i = random_single_degree(v, q, 2 + rng() % 4, rng);
        auto r = find_certificate(i);
        REQUIRE(r.status != SearchStatus::BudgetExceeded);
        bool expected = naive_constructible(i);
        CHECK((r.status == SearchStatus::Found) == expected);
        if (r.status == SearchStatus::Found) {
            CHECK(verify_certificate(i, *r.certificate).ok);
            ++found;
        } else {
            ++refuted;
        }
    }
    CHECK(found > 0);
    CHECK(refuted > 0);
}

TEST_CASE("betti_recursion") {
    auto v = ring(3);
    auto source = [](const MonomialIdeal& i) { return betti_table(i); };

    auto i1 = parse_ideal(v, "x1*x2");
    auto i2 = parse_ideal(v, "x2*x3");
    auto t = betti_recursion(i1, i2, source);
    CHECK(t.at(0, 2) == 2);
    CHECK(t.at(1, 3) == 1);
    CHECK(t == betti_table(ideal_sum(i1, i2)));

    // i1 = i2 has its meet in degree q, not q+1
    CHECK_THROWS_AS(betti_recursion(i1, i1, source), input_error);
    // mixed-degree input
    CHECK_THROWS_AS(betti_recursion(parse_ideal(v, "x1, x2*x3"), i2, source), input_error);
}

TEST_CASE("betti_recursion matches the oracle on sampled nodes") {
    auto source = [](const MonomialIdeal& i) { return betti_table(i); };
    int nodes = 0;
    for (std::uint64_t seed = 3; nodes < 12 && seed < 700; seed += 3) {
        auto s = random_constructible(4, 2, 3, seed);
        if (s.certificate->is_leaf()) continue;
        ++nodes;
        auto left = certified_ideal(s.ideal.vars(), *s.certificate->left());
        auto right = certified_ideal(s.ideal.vars(), *s.certificate->right());
        CHECK(betti_recursion(left, right, source) == betti_table(s.ideal));
    }
    CHECK(nodes == 12);
}

TEST_CASE("complex certificates") {
    auto path = SimplicialComplex{verts(3), {Face{0, 1}, Face{1, 2}}};
    auto cert = complex_cert_node(complex_cert_leaf(Face{0, 1}), complex_cert_leaf(Face{1, 2}),
                                  complex_cert_leaf(Face{1}));
    CHECK(verify_complex_certificate(path, *cert).ok);

    // gluing along the empty face is a dimension violation
    auto split = SimplicialComplex{verts(4), {Face{0, 1}, Face{2, 3}}};
    auto bad = complex_cert_node(complex_cert_leaf(Face{0, 1}), complex_cert_leaf(Face{2, 3}),
                                 complex_cert_leaf(Face{}));
    CHECK_FALSE(verify_complex_certificate(split, *bad).ok);
}

TEST_CASE("complex_constructibility") {
    auto simplex = SimplicialComplex::full_simplex(verts(5));
    CHECK(complex_constructibility(simplex).status == SearchStatus::Found);

    auto split = SimplicialComplex{verts(4), {Face{0, 1}, Face{2, 3}}};
    CHECK(complex_constructibility(split).status == SearchStatus::Refuted);

    auto path = SimplicialComplex{verts(3), {Face{0, 1}, Face{1, 2}}};
    auto r = complex_constructibility(path);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(verify_complex_certificate(path, *r.certificate).ok);

    auto mixed = SimplicialComplex{verts(3), {Face{0, 1}, Face{2}}};
    CHECK_THROWS_AS(complex_constructibility(mixed), input_error);
}

TEST_CASE("complex and dual ideal verdicts agree") {
    for (int t = 0; t < 20; ++t) {
        auto c = random_pure_complex(3 + t % 4, 800 + static_cast<std::uint64_t>(t));
        auto cr = complex_constructibility(c);
        auto ir = find_certificate(alexander_dual_ideal(c));
        REQUIRE(cr.status != SearchStatus::BudgetExceeded);
        REQUIRE(ir.status != SearchStatus::BudgetExceeded);
        CHECK(cr.status == ir.status);
    }
}
