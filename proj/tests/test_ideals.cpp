#include <cmi/errors.hpp>
#include <cmi/ideal.hpp>
#include <cmi/text.hpp>

#include <doctest.h>

#include <algorithm>
#include <random>
#include <string_view>
#include <vector>

using namespace cmi;

namespace {

VarsPtr ring(int n) { return VariableSet::numbered("x", 1, n); }

MonomialIdeal ideal(const VarsPtr& v, std::string_view text) { return parse_ideal(v, text); }

// Every monomial of total degree 1..maxdeg in nvars variables.
std::vector<Monomial> monomials_up_to(int nvars, int maxdeg) {
    std::vector<Monomial> out;
    std::vector<Int> e(static_cast<std::size_t>(nvars), 0);
    auto rec = [&](auto&& self, int at, int left) -> void {
        if (at == nvars) {
            Monomial m{e};
            if (!m.is_unit()) out.push_back(m);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[static_cast<std::size_t>(at)] = v;
            self(self, at + 1, left - v);
        }
        e[static_cast<std::size_t>(at)] = 0;
    };
    rec(rec, 0, maxdeg);
    return out;
}

MonomialIdeal random_ideal(const VarsPtr& v, const std::vector<Monomial>& pool,
                           std::mt19937_64& rng, std::size_t size) {
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < size; ++i) gens.push_back(pool[rng() % pool.size()]);
    return MonomialIdeal{v, std::move(gens)};
}

} // namespace

TEST_CASE("monomial arithmetic") {
    auto u = Monomial::unit(3);
    CHECK(u.is_unit());
    CHECK(u.degree() == 0);
    CHECK(u.squarefree());

    auto x2 = Monomial::variable(3, 1);
    CHECK(x2.degree() == 1);
    CHECK(x2.exp(1) == 1);
    CHECK(x2.support() == std::vector<std::size_t>{1});

    auto m = Monomial{{1, 2, 0}};
    CHECK(m.degree() == 3);
    CHECK_FALSE(m.squarefree());
    CHECK((m * x2) == Monomial{{1, 3, 0}});
    CHECK(m.divided_by(x2) == Monomial{{1, 1, 0}});
    CHECK_THROWS_AS(x2.divided_by(m), input_error);

    CHECK(lcm(Monomial{{1, 2, 0}}, Monomial{{0, 1, 3}}) == Monomial{{1, 2, 3}});
    CHECK(gcd(Monomial{{1, 2, 0}}, Monomial{{0, 1, 3}}) == Monomial{{0, 1, 0}});
    CHECK(divides(x2, m));
    CHECK_FALSE(divides(m, x2));

    // u : v is u / gcd(u,v), the generator map of colon ideals.
    CHECK(Monomial{{1, 2, 0}}.colon_quotient(Monomial{{0, 1, 3}}) == Monomial{{1, 1, 0}});
    CHECK(Monomial{{1, 1, 0}}.colon_quotient(Monomial{{1, 1, 0}}).is_unit());
}

TEST_CASE("monomial text") {
    auto v = ring(3);
    auto m = parse_monomial(*v, "x1*x2^2");
    CHECK(m == Monomial{{1, 2, 0}});
    CHECK(format_monomial(*v, m) == "x1*x2^2");
    CHECK(parse_monomial(*v, "1").is_unit());
    CHECK(parse_monomial(*v, " x3 * x1 ") == Monomial{{1, 0, 1}});

    CHECK_THROWS_AS(parse_monomial(*v, "x1^"), input_error);
    CHECK_THROWS_AS(parse_monomial(*v, "y1"), input_error);
    CHECK_THROWS_AS(parse_monomial(*v, "x1**x2"), input_error);
    CHECK_THROWS_AS(parse_monomial(*v, "x1^0^2"), input_error);
}

TEST_CASE("canonical order") {
    auto v = ring(3);
    auto a = parse_monomial(*v, "x1*x2");
    auto b = parse_monomial(*v, "x1*x3");
    auto c = parse_monomial(*v, "x2*x3");
    CHECK(canonical_less(a, b));
    CHECK(canonical_less(b, c));
    CHECK(canonical_less(a, c));
    CHECK_FALSE(canonical_less(a, a));
    // degree dominates
    CHECK(canonical_less(c, parse_monomial(*v, "x1^3")));

    auto i = ideal(v, "x2*x3, x1*x3, x1*x2");
    CHECK(format_ideal(i) == "x1*x2, x1*x3, x2*x3");
}

TEST_CASE("minimalize") {
    auto v = ring(3);
    auto i = ideal(v, "x1*x2, x1*x2*x3");
    REQUIRE(i.gens().size() == 1);
    CHECK(i.gens()[0] == parse_monomial(*v, "x1*x2"));

    CHECK(ideal(v, "x1*x2, x1*x2").gens().size() == 1);

    // idempotent on random spanning sets
    auto pool = monomials_up_to(3, 4);
    std::mt19937_64 rng{2024};
    for (int t = 0; t < 50; ++t) {
        auto a = random_ideal(v, pool, rng, 6);
        CHECK(minimalize(v, a.gens()) == a);
    }
}

TEST_CASE("sum") {
    auto v = ring(3);
    auto a = ideal(v, "x1*x2");
    auto b = ideal(v, "x2*x3");
    CHECK(ideal_sum(a, b) == ideal(v, "x1*x2, x2*x3"));
    CHECK(ideal_sum(a, MonomialIdeal::zero(v)) == a);
    CHECK(ideal_sum(a, MonomialIdeal::unit(v)).is_unit());

    auto pool = monomials_up_to(3, 4);
    std::mt19937_64 rng{2025};
    for (int t = 0; t < 50; ++t) {
        auto p = random_ideal(v, pool, rng, 4);
        auto q = random_ideal(v, pool, rng, 4);
        auto r = random_ideal(v, pool, rng, 4);
        CHECK(ideal_sum(p, q) == ideal_sum(q, p));
        CHECK(ideal_sum(ideal_sum(p, q), r) == ideal_sum(p, ideal_sum(q, r)));
        CHECK(ideal_sum(p, p) == p);
    }
}

TEST_CASE("intersection") {
    auto v = ring(3);
    CHECK(ideal_intersection(ideal(v, "x1*x2"), ideal(v, "x2*x3")) == ideal(v, "x1*x2*x3"));

    auto pool = monomials_up_to(3, 4);
    std::mt19937_64 rng{2026};
    for (int t = 0; t < 50; ++t) {
        auto p = random_ideal(v, pool, rng, 4);
        auto q = random_ideal(v, pool, rng, 4);
        auto r = random_ideal(v, pool, rng, 4);
        CHECK(ideal_intersection(p, q) == ideal_intersection(q, p));
        CHECK(ideal_intersection(ideal_intersection(p, q), r) ==
              ideal_intersection(p, ideal_intersection(q, r)));
        CHECK(ideal_intersection(p, p) == p);

        // I cap (u) = u * (I : u), so the generator counts match.
        auto u = pool[rng() % pool.size()];
        auto principal = MonomialIdeal{v, {u}};
        CHECK(ideal_intersection(p, principal).gens().size() ==
              colon_by_monomial(p, u).gens().size());
    }
}

TEST_CASE("colon") {
    auto v = ring(4);
    auto v3 = ring(3);
    CHECK(colon_by_monomial(ideal(v3, "x1*x2, x1*x3"), parse_monomial(*v3, "x2*x3")) ==
          ideal(v3, "x1"));
    CHECK(colon_by_monomial(ideal(v3, "x1*x2"), parse_monomial(*v3, "x1*x2")).is_unit());
    CHECK(colon_by_monomial(ideal(v, "x1*x2, x3*x4"), parse_monomial(*v, "x3*x4")).is_unit());

    // membership law: w in I:u iff w*u in I
    auto pool = monomials_up_to(3, 3);
    std::mt19937_64 rng{2027};
    for (int t = 0; t < 25; ++t) {
        auto i = random_ideal(v3, pool, rng, 4);
        auto u = pool[rng() % pool.size()];
        auto c = colon_by_monomial(i, u);
        for (const auto& w : pool) CHECK(c.contains(w) == i.contains(w * u));
        CHECK(c.contains(Monomial::unit(3)) == i.contains(u));
    }
}

TEST_CASE("generated_in_degree") {
    auto v = ring(3);
    CHECK(*generated_in_degree(ideal(v, "x1*x2, x2*x3")) == 2);
    CHECK_FALSE(generated_in_degree(ideal(v, "x1, x2*x3")).has_value());
    CHECK(*generated_in_degree(MonomialIdeal::unit(v)) == 0);
    CHECK_THROWS_AS(generated_in_degree(MonomialIdeal::zero(v)), input_error);
}

TEST_CASE("membership and edge ideals") {
    auto v = ring(3);
    auto i = ideal(v, "x1*x2");
    CHECK(i.contains(parse_monomial(*v, "x1*x2*x3")));
    CHECK(i.contains(parse_monomial(*v, "x1^2*x2")));
    CHECK_FALSE(i.contains(parse_monomial(*v, "x1")));
    CHECK_FALSE(i.contains(Monomial::unit(3)));

    CHECK(MonomialIdeal::zero(v).is_zero());
    CHECK_FALSE(MonomialIdeal::zero(v).contains(Monomial::unit(3)));
    CHECK(MonomialIdeal::unit(v).contains(Monomial::unit(3)));

    CHECK(ideal(v, "x1*x2, x2*x3").squarefree());
    CHECK_FALSE(ideal(v, "x1^2").squarefree());
}

TEST_CASE("arity and parse failures") {
    auto v = ring(2);
    CHECK_THROWS_AS(MonomialIdeal(v, {Monomial::unit(3)}), input_error);
    CHECK_THROWS_AS(parse_ideal(v, "x1*x3"), input_error);
    CHECK(parse_ideal(v, "0").is_zero());
    CHECK(parse_ideal(v, "1").is_unit());
}

TEST_CASE("self-describing ideal text") {
    auto i = parse_ideal_text("vars: x1..x4\nx1*x2, x3*x4");
    CHECK(i.nvars() == 4);
    CHECK(i.gens().size() == 2);

    // ambient inferred from the labels: x1..x3 fills the range
    auto j = parse_ideal_text("x1*x3");
    CHECK(j.nvars() == 3);
    CHECK(j.vars()->name(1) == "x2");

    auto k = parse_ideal_text("vars: a,b,c\na*b, b*c");
    CHECK(k.nvars() == 3);
    CHECK(format_ideal(k) == "a*b, b*c");
}
