#include <cmi/cert_search.hpp>
#include <cmi/corpus.hpp>
#include <cmi/errors.hpp>
#include <cmi/homology.hpp>
#include <cmi/json_io.hpp>
#include <cmi/linear_quotients.hpp>
#include <cmi/oracle.hpp>
#include <cmi/polarization.hpp>
#include <cmi/random_gen.hpp>
#include <cmi/shelling.hpp>
#include <cmi/text.hpp>

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace cmi;

TEST_CASE("corpus names") {
    const auto& names = corpus_names();
    for (const char* required : {"hachimori", "hachimori_d1", "hachimori_d2", "dunce_hat",
                                 "ziegler_complex", "ziegler_ideal", "ziegler_i1", "ziegler_i2"})
        CHECK(std::find(names.begin(), names.end(), required) != names.end());
    CHECK_THROWS_AS(corpus_load("nonesuch"), input_error);
}

TEST_CASE("hachimori fixtures") {
    auto d1 = corpus_load("hachimori_d1");
    auto d2 = corpus_load("hachimori_d2");
    auto whole = corpus_load("hachimori");
    auto meet = corpus_load("hachimori_meet");

    REQUIRE(d1.complex.has_value());
    CHECK(d1.complex->facets().size() == 14);
    CHECK(d1.complex->n() == 10);
    CHECK(d1.complex->pure());
    CHECK(d1.complex->dim() == 2);
    CHECK(d1.facet_order.front() == Face{0, 3, 9});

    CHECK(d2.complex->facets().size() == 8);
    CHECK(d2.facet_order.front() == Face{0, 1, 4});

    CHECK(whole.complex->facets().size() == 22);
    CHECK(*whole.complex == complex_union(*d1.complex, *d2.complex));
    CHECK(whole.expected.at("shellable") == "false");
    CHECK(whole.expected.at("constructible") == "true");

    // the published orders shell the two pieces
    CHECK(verify_shelling(*d1.complex, d1.facet_order).ok);
    CHECK(verify_shelling(*d2.complex, d2.facet_order).ok);

    // the glue: a path of four edges
    auto glue = SimplicialComplex{whole.complex->labels(),
                                  {Face{0, 4}, Face{4, 5}, Face{5, 6}, Face{2, 6}}};
    CHECK(complex_intersection(*d1.complex, *d2.complex) == glue);
    CHECK(*meet.complex == glue);
}

TEST_CASE("hachimori duals") {
    auto d1 = corpus_load("hachimori_d1");
    auto d2 = corpus_load("hachimori_d2");
    auto meet = corpus_load("hachimori_meet");
    auto d1_dual = corpus_load("hachimori_d1_dual");
    auto d2_dual = corpus_load("hachimori_d2_dual");
    auto meet_dual = corpus_load("hachimori_meet_dual");
    auto dual = corpus_load("hachimori_dual");

    // stored generator lists equal the computed Alexander duals exactly
    CHECK(alexander_dual_ideal(*d1.complex) == *d1_dual.ideal);
    CHECK(alexander_dual_ideal(*d2.complex) == *d2_dual.ideal);
    CHECK(alexander_dual_ideal(*meet.complex) == *meet_dual.ideal);

    CHECK(d1_dual.ideal->gens().size() == 14);
    CHECK(d2_dual.ideal->gens().size() == 8);
    CHECK(meet_dual.ideal->gens().size() == 4);
    CHECK(*generated_in_degree(*d1_dual.ideal) == 7);
    CHECK(*generated_in_degree(*meet_dual.ideal) == 8);

    // duality swaps union/intersection into intersection/sum
    CHECK(*dual.ideal == ideal_sum(*d1_dual.ideal, *d2_dual.ideal));
    CHECK(dual.ideal->gens().size() == 22);
    CHECK(ideal_intersection(*d1_dual.ideal, *d2_dual.ideal) == *meet_dual.ideal);

    // the published shelling orders transfer to linear-quotient orders
    CHECK(verify_lq_order(*d1_dual.ideal, d1_dual.gen_order).ok);
    CHECK(verify_lq_order(*d2_dual.ideal, d2_dual.gen_order).ok);
}

TEST_CASE("dunce hat fixtures") {
    auto dunce = corpus_load("dunce_hat");
    auto dual = corpus_load("dunce_hat_dual");

    REQUIRE(dunce.complex.has_value());
    CHECK(dunce.complex->facets().size() == 17);
    CHECK(dunce.complex->n() == 8);
    CHECK(dunce.complex->pure());
    CHECK(dunce.complex->dim() == 2);
    CHECK(dunce.expected.at("constructible") == "false");

    REQUIRE(dual.ideal.has_value());
    CHECK(dual.ideal->gens().size() == 17);
    CHECK(*generated_in_degree(*dual.ideal) == 5);
    CHECK(dual.ideal->squarefree());

    // facets are the complements of the dual generators' supports
    const auto& labels = *dunce.complex->labels();
    auto vtx = [&](const char* l) { return static_cast<int>(labels.index_of(l).value()); };
    CHECK(dunce.complex->facets().end() !=
          std::find(dunce.complex->facets().begin(), dunce.complex->facets().end(),
                    Face{vtx("1"), vtx("2"), vtx("4")}));
    CHECK(alexander_dual_ideal(*dunce.complex) == *dual.ideal);

    // contractible but not collapsible: all reduced homology vanishes
    for (long long c : {0ll, 2ll, 3ll})
        CHECK(reduced_homology_dims(*dunce.complex, c) ==
              std::vector<long long>{0, 0, 0, 0});

    // frozen oracle table for the dual: 5-linear with ranks 17, 27, 11
    auto t = betti_table(*dual.ideal);
    CHECK(t.at(0, 5) == 17);
    CHECK(t.at(1, 6) == 27);
    CHECK(t.at(2, 7) == 11);
    CHECK(t.entries.size() == 3);
    CHECK(has_linear_resolution(*dual.ideal, 0));
    CHECK(has_linear_resolution(*dual.ideal, 2));
}

TEST_CASE("ziegler fixtures") {
    auto complex = corpus_load("ziegler_complex");
    auto ideal = corpus_load("ziegler_ideal");
    auto i1 = corpus_load("ziegler_i1");
    auto i2 = corpus_load("ziegler_i2");
    auto meet = corpus_load("ziegler_meet");

    CHECK(complex.complex->facets().size() == 21);
    CHECK(complex.complex->n() == 10);
    CHECK(complex.complex->pure());

    CHECK(ideal.ideal->gens().size() == 21);
    CHECK(i1.ideal->gens().size() == 14);
    CHECK(i2.ideal->gens().size() == 7);
    CHECK(*generated_in_degree(*ideal.ideal) == 6);
    CHECK_FALSE(ideal.ideal->squarefree());

    CHECK(*ideal.ideal == ideal_sum(*i1.ideal, *i2.ideal));
    CHECK(ideal_intersection(*i1.ideal, *i2.ideal) == *meet.ideal);
    CHECK(meet.ideal->gens().size() == 6);
    CHECK(*generated_in_degree(*meet.ideal) == 7);

    // polarizing the ideal and renaming the doubled variables recovers the
    // Alexander dual of the complex
    auto dual = alexander_dual_ideal(*complex.complex);
    auto renamed = rename_variables(polarize_ideal(*ideal.ideal),
                                    ziegler_polarization_renames(), dual.vars());
    CHECK(renamed == dual);

    // the published 14/7 split is the certificate-search hint
    auto hint = corpus_hint("ziegler_ideal");
    REQUIRE(hint.has_value());
    CHECK(hint->first.size() + hint->second.size() == 21);
    CHECK(corpus_hint("hachimori_d1") == std::nullopt);
}

TEST_CASE("json round trips") {
    auto v = VariableSet::numbered("x", 1, 3);
    auto i = parse_ideal(v, "x1*x2^2, x2*x3");
    auto ij = ideal_to_json(i);
    CHECK(ij.at("vars").size() == 3);
    CHECK(ij.at("gens").size() == 2);
    CHECK(ideal_from_json(ij) == i);

    auto c = corpus_load("hachimori_meet").complex.value();
    auto cj = complex_to_json(c);
    CHECK(cj.at("facets").size() == 4);
    CHECK(complex_from_json(cj) == c);

    auto pair = parse_ideal(v, "x1, x2");
    auto cert = Certificate::node(Certificate::leaf(pair.gens()[0]),
                                  Certificate::leaf(pair.gens()[1]),
                                  Certificate::leaf(parse_monomial(*v, "x1*x2")));
    auto certj = certificate_to_json(cert);
    CHECK(certj.contains("left"));
    CHECK(certj.at("meet").contains("leaf"));
    auto back = certificate_from_json(certj, 3);
    CHECK(verify_certificate(pair, *back).ok);

    auto bt = betti_table(pair);
    auto bj = betti_to_json(bt);
    CHECK(bj.at("characteristic") == 0);
    CHECK(bj.at("entries").size() == 2);

    CHECK_THROWS_AS(ideal_from_json(nlohmann::json::object()), input_error);
    CHECK_THROWS_AS(ideal_from_json(nlohmann::json{{"vars", {"x1"}}, {"gens", {{-1}}}}),
                    input_error);
    CHECK_THROWS_AS(certificate_from_json(nlohmann::json{{"leaf", {1, 0}}}, 3), input_error);
    CHECK_THROWS_AS(complex_from_json(nlohmann::json{{"vertices", {"a"}}, {"facets", {{"b"}}}}),
                    input_error);
}

TEST_CASE("random generators are deterministic and self-certifying") {
    auto a = random_lq_ideal(4, 2, 4, 42);
    auto b = random_lq_ideal(4, 2, 4, 42);
    CHECK(a.ideal == b.ideal);
    CHECK(a.order == b.order);
    CHECK(a.ideal.gens().size() == 4);
    CHECK(verify_lq_order(a.ideal, a.order).ok);
    CHECK(*generated_in_degree(a.ideal) == 2);

    auto c = random_lq_ideal(4, 2, 4, 43);
    CHECK(a.ideal != c.ideal); // different seed, different draw

    auto s = random_constructible(4, 2, 3, 7);
    CHECK(verify_certificate(s.ideal, *s.certificate).ok);
    CHECK(certified_ideal(s.ideal.vars(), *s.certificate) == s.ideal);

    auto single = random_constructible(4, 3, 1, 9);
    CHECK(single.certificate->is_leaf());

    auto p = random_pure_complex(5, 11);
    CHECK(p.pure());
    CHECK(p == random_pure_complex(5, 11));
    auto g = random_complex(6, 12);
    CHECK(g == random_complex(6, 12));
    CHECK_FALSE(g.is_full_simplex());

    // unreachable sizes fail fast instead of spinning
    CHECK_THROWS_AS(random_lq_ideal(2, 1, 3, 1), input_error);
}
