#include <cmi/errors.hpp>
#include <cmi/homology.hpp>
#include <cmi/oracle.hpp>
#include <cmi/simplicial.hpp>
#include <cmi/text.hpp>

#include <doctest.h>

#include <random>
#include <vector>

using namespace cmi;

namespace {

VarsPtr ring(int n) { return VariableSet::numbered("x", 1, n); }
VarsPtr verts(int n) { return VariableSet::numbered("", 0, n); }

// Minimal 6-vertex triangulation of the real projective plane: every edge
// lies in exactly two of the ten triangles, Euler characteristic 1. Its
// homology carries 2-torsion, so ranks differ between Q and F_2.
SimplicialComplex projective_plane() {
    std::vector<Face> f{{0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 5}, {0, 4, 5},
                        {1, 2, 4}, {1, 2, 5}, {1, 3, 5}, {2, 3, 4}, {3, 4, 5}};
    return SimplicialComplex{verts(6), f};
}

} // namespace

TEST_CASE("exact rank") {
    CHECK(rank_over_q({{2, 4}, {1, 2}}) == 1);
    CHECK(rank_over_q({{2, 4}, {1, 3}}) == 2);
    CHECK(rank_over_q({{0, 0}, {0, 0}}) == 0);
    CHECK(rank_over_q({}) == 0);

    // multiplication by 2: invertible over Q, zero over F_2
    CHECK(rank_mod_p({{2}}, 2) == 0);
    CHECK(rank_mod_p({{2}}, 3) == 1);
    CHECK(rank_mod_p({{2, 4}, {1, 3}}, 2) == 1);
    CHECK_THROWS_AS(rank_mod_p({{1}}, 4), input_error);
    CHECK_THROWS_AS(rank_mod_p({{1}}, 1), input_error);
}

TEST_CASE("reduced homology dims") {
    auto full = SimplicialComplex::full_simplex(verts(3));
    CHECK(reduced_homology_dims(full, 0) == std::vector<long long>{0, 0, 0, 0});

    auto circle = SimplicialComplex{verts(3), {Face{0, 1}, Face{0, 2}, Face{1, 2}}};
    CHECK(reduced_homology_dims(circle, 0) == std::vector<long long>{0, 0, 1});

    auto two_points = SimplicialComplex{verts(2), {Face{0}, Face{1}}};
    CHECK(reduced_homology_dims(two_points, 0) == std::vector<long long>{0, 1});

    auto empty_face = SimplicialComplex{verts(2), {Face{}}};
    CHECK(reduced_homology_dims(empty_face, 0) == std::vector<long long>{1});

    CHECK(reduced_homology_dims(SimplicialComplex::void_complex(verts(2)), 0).empty());

    // two circles sharing a point: wedge, H~_1 has rank 2
    auto wedge = SimplicialComplex{
        verts(5), {Face{0, 1}, Face{0, 2}, Face{1, 2}, Face{0, 3}, Face{0, 4}, Face{3, 4}}};
    CHECK(reduced_homology_dims(wedge, 0) == std::vector<long long>{0, 0, 2});
}

TEST_CASE("projective plane torsion") {
    auto rp2 = projective_plane();
    CHECK(reduced_homology_dims(rp2, 0) == std::vector<long long>{0, 0, 0, 0});
    CHECK(reduced_homology_dims(rp2, 2) == std::vector<long long>{0, 0, 1, 1});
    CHECK(reduced_homology_dims(rp2, 3) == std::vector<long long>{0, 0, 0, 0});
}

TEST_CASE("koszul complex at a multidegree") {
    auto v = ring(3);

    auto principal = parse_ideal(v, "x1");
    auto k1 = koszul_complex_at(principal, parse_monomial(*v, "x1"));
    CHECK(k1.facets() == std::vector<Face>{Face{}});

    auto pair = parse_ideal(v, "x1, x2");
    auto k2 = koszul_complex_at(pair, parse_monomial(*v, "x1*x2"));
    CHECK(k2.facets() == std::vector<Face>{Face{0}, Face{1}});
    CHECK(reduced_homology_dims(k2, 0) == std::vector<long long>{0, 1});

    auto tri = parse_ideal(v, "x1*x2, x1*x3, x2*x3");
    auto k3 = koszul_complex_at(tri, parse_monomial(*v, "x1*x2*x3"));
    CHECK(k3.facets() == std::vector<Face>{Face{0}, Face{1}, Face{2}});

    // at the generator itself the complex is the single empty face
    auto k4 = koszul_complex_at(tri, parse_monomial(*v, "x1*x2"));
    CHECK(k4.facets() == std::vector<Face>{Face{}});

    // multidegree outside the ideal entirely: void
    auto k5 = koszul_complex_at(tri, parse_monomial(*v, "x1"));
    CHECK(k5.is_void());
}

TEST_CASE("betti_table") {
    auto v = ring(4);

    auto principal = parse_ideal(v, "x1*x2*x3");
    auto t0 = betti_table(principal);
    CHECK(t0.entries.size() == 1);
    CHECK(t0.at(0, 3) == 1);

    auto pair = parse_ideal(v, "x1, x2");
    auto t1 = betti_table(pair);
    CHECK(t1.at(0, 1) == 2);
    CHECK(t1.at(1, 2) == 1);
    CHECK(t1.entries.size() == 2);

    auto tri = parse_ideal(ring(3), "x1*x2, x1*x3, x2*x3");
    auto t2 = betti_table(tri);
    CHECK(t2.at(0, 2) == 3);
    CHECK(t2.at(1, 3) == 2);
    CHECK(t2.entries.size() == 2);

    auto disjoint = parse_ideal(v, "x1*x2, x3*x4");
    auto t3 = betti_table(disjoint);
    CHECK(t3.at(0, 2) == 2);
    CHECK(t3.at(1, 4) == 1);
    CHECK(t3.entries.size() == 2);

    // non-squarefree: (x1^2, x1x2, x2^2) resolves linearly
    auto powers = parse_ideal(v, "x1^2, x1*x2, x2^2");
    auto t4 = betti_table(powers);
    CHECK(t4.at(0, 2) == 3);
    CHECK(t4.at(1, 3) == 2);
    CHECK(t4.entries.size() == 2);

    // the full Koszul resolution of (x1..x4): beta_{i,i+1} = C(4, i+1)
    auto variables = parse_ideal(v, "x1, x2, x3, x4");
    auto t5 = betti_table(variables);
    CHECK(t5.at(0, 1) == 4);
    CHECK(t5.at(1, 2) == 6);
    CHECK(t5.at(2, 3) == 4);
    CHECK(t5.at(3, 4) == 1);

    CHECK_THROWS_AS(betti_table(MonomialIdeal::zero(v)), input_error);
    CHECK_THROWS_AS(betti_table(MonomialIdeal::unit(v)), input_error);
}

TEST_CASE("beta_0 recovers the minimal generators") {
    std::mt19937_64 rng{321};
    auto v = ring(4);
    for (int t = 0; t < 15; ++t) {
        std::vector<Monomial> gens;
        for (int k = 0; k < 4; ++k) {
            std::vector<Int> e(4, 0);
            for (int d = 0; d < 1 + static_cast<int>(rng() % 3); ++d) e[rng() % 4] += 1;
            gens.emplace_back(e);
        }
        MonomialIdeal i{v, gens};
        auto t0 = betti_table(i);
        unsigned long long total = 0;
        for (const auto& [key, count] : t0.entries)
            if (key.first == 0) total += count;
        CHECK(total == i.gens().size());
    }
}

TEST_CASE("characteristic dependence") {
    // the Stanley-Reisner ideal of the projective plane is the classical
    // ideal whose resolution depends on the field
    auto sr = stanley_reisner_ideal(projective_plane());
    REQUIRE(sr.gens().size() == 10);
    auto t0 = betti_table(sr, 0);
    auto t2 = betti_table(sr, 2);
    auto t3 = betti_table(sr, 3);
    CHECK(t0.entries != t2.entries);
    CHECK(t0.entries == t3.entries);

    // its Alexander dual has a linear resolution exactly away from char 2
    auto dual = alexander_dual_ideal(projective_plane());
    CHECK(has_linear_resolution(dual, 0));
    CHECK_FALSE(has_linear_resolution(dual, 2));

    // threads only partition the candidate multidegrees
    CHECK(betti_table(sr, 0, 2) == betti_table(sr, 0, 1));
}

TEST_CASE("has_linear_resolution") {
    auto v = ring(4);
    CHECK(has_linear_resolution(parse_ideal(v, "x1*x2*x3")));
    CHECK(has_linear_resolution(parse_ideal(ring(3), "x1*x2, x1*x3, x2*x3")));
    CHECK_FALSE(has_linear_resolution(parse_ideal(v, "x1*x2, x3*x4")));
    CHECK_THROWS_AS(has_linear_resolution(parse_ideal(v, "x1, x2*x3")), input_error);
}
