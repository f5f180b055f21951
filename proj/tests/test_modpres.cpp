#include "skein/json_io.hpp"
#include "skein/modpres.hpp"
#include "skein/parse.hpp"

#include <catch2/catch.hpp>

#include <random>

using namespace skein;

namespace {

LaurentPoly lp(const std::string& text) { return parse_laurent(text); }

LaurentPoly random_laurent(std::mt19937& rng, int max_terms = 3, int exp_range = 6,
                           int coef_range = 7) {
    std::uniform_int_distribution<int> n_terms(0, max_terms);
    std::uniform_int_distribution<int> exp(-exp_range, exp_range);
    std::uniform_int_distribution<int> coef(-coef_range, coef_range);
    LaurentPoly p;
    for (int i = 0, n = n_terms(rng); i < n; ++i) p += LaurentPoly::monomial(coef(rng), exp(rng));
    return p;
}

TPoly random_chebyshev_tpoly(std::mt19937& rng, unsigned max_degree) {
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<int> n_terms(1, 3);
    TPoly p(Basis::Chebyshev);
    for (int i = 0, n = n_terms(rng); i < n; ++i) p.add_term(deg(rng), random_laurent(rng));
    return p;
}

}  // namespace

TEST_CASE("relation coefficients", "[modpres]") {
    SECTION("n = 2") {
        const Relation r = relation(2);
        CHECK(r.c == lp("A^3 + A^-3"));
        CHECK(r.d == lp("A^3 + 2A + 2A^-1 + A^-3"));
        CHECK(to_monomial(r.expression) ==
              parse_tpoly("(A^3 + A^-3)*(t^2 - 2) - 2A - 2A^-1"));
    }
    SECTION("n = 3") {
        const Relation r = relation(3);
        CHECK(r.c == lp("A^4 + A^-4"));
        CHECK(r.d == lp("A^4 + 2 + A^-4"));
        CHECK(to_monomial(r.expression) == parse_tpoly("(A^4 + A^-4)*(t^3 - 3t) - 2t"));
    }
    SECTION("n = 4") {
        const Relation r = relation(4);
        CHECK(r.c == lp("A^5 + A^-5"));
        CHECK(r.d == lp("A^5 + A^-5") + 2 * (lp("A + A^-1") * lp("A^2 + A^-2")));
    }
    CHECK_THROWS_AS(relation(1), std::invalid_argument);
}

TEST_CASE("normal forms of basic elements", "[modpres]") {
    SECTION("c_2 * S_2 folds into d_2 * S_0") {
        const NormalForm nf = normal_form(TPoly::term(relation_c(2), 2, Basis::Chebyshev));
        CHECK(nf.a0 == relation_d(2));
        CHECK(nf.a1 == LaurentPoly());
        CHECK(nf.residues.empty());
    }
    SECTION("relations reduce to zero") {
        CHECK(normal_form(relation(7).expression).is_zero());
        CHECK(is_zero_in_module(relation(12).expression));
    }
    SECTION("S_2 is already reduced") {
        const NormalForm nf = normal_form(parse_tpoly("S_2"));
        CHECK(nf.a0 == LaurentPoly());
        CHECK(nf.a1 == LaurentPoly());
        REQUIRE(nf.residues.count(2) == 1);
        CHECK(nf.residues.at(2) == LaurentPoly(1));
    }
    SECTION("monomial inputs convert first") {
        CHECK(normal_form(parse_tpoly("t^2")) == normal_form(parse_tpoly("S_2 + S_0")));
    }
    SECTION("free coordinates never reduce") {
        CHECK_FALSE(is_zero_in_module(parse_tpoly("S_0")));
        CHECK_FALSE(is_zero_in_module(parse_tpoly("S_1")));
    }
}

TEST_CASE("linear combinations of relations vanish", "[modpres][property]") {
    std::mt19937 rng(1618);
    for (int i = 0; i < 20; ++i) {
        TPoly combo(Basis::Chebyshev);
        std::uniform_int_distribution<unsigned> pick_n(2, 20);
        for (int j = 0; j < 3; ++j)
            combo += random_laurent(rng) * relation(pick_n(rng)).expression;
        CHECK(is_zero_in_module(combo));
    }
}

TEST_CASE("normal form properties", "[modpres][property]") {
    std::mt19937 rng(2718);
    SECTION("idempotence") {
        for (int i = 0; i < 60; ++i) {
            const NormalForm nf = normal_form(random_chebyshev_tpoly(rng, 30));
            CHECK(normal_form(nf.canonical_lift()) == nf);
        }
    }
    SECTION("linearity") {
        for (int i = 0; i < 40; ++i) {
            const TPoly p = random_chebyshev_tpoly(rng, 25), q = random_chebyshev_tpoly(rng, 25);
            const LaurentPoly alpha = random_laurent(rng), beta = random_laurent(rng);
            const NormalForm direct = normal_form(alpha * p + beta * q);
            const NormalForm recombined = normal_form(alpha * normal_form(p).canonical_lift() +
                                                      beta * normal_form(q).canonical_lift());
            CHECK(direct == recombined);
        }
    }
    SECTION("confluence: reduction order is irrelevant") {
        for (int i = 0; i < 40; ++i) {
            const TPoly p = random_chebyshev_tpoly(rng, 30);
            std::vector<unsigned> order;
            for (const auto& [n, c] : p.coeffs())
                if (n >= 2) order.push_back(n);
            TPoly asc = p, desc = p;
            for (auto it = order.begin(); it != order.end(); ++it) asc = reduce_once(asc, *it);
            for (auto it = order.rbegin(); it != order.rend(); ++it) desc = reduce_once(desc, *it);
            CHECK(asc == desc);
            CHECK(normal_form(asc) == normal_form(p));
        }
    }
    SECTION("soundness up to n = 40") {
        for (unsigned n = 2; n <= 40; ++n) CHECK(normal_form(relation(n).expression).is_zero());
    }
}

TEST_CASE("residues stay in their windows", "[modpres][property]") {
    std::mt19937 rng(5551212);
    for (int i = 0; i < 50; ++i) {
        const NormalForm nf = normal_form(random_chebyshev_tpoly(rng, 20));
        for (const auto& [n, r] : nf.residues) {
            REQUIRE_FALSE(r.is_zero());
            CHECK(r.min_exp() >= residue_window_low(n));
            CHECK(r.max_exp() <= residue_window_low(n) + relation_c(n).span() - 1);
        }
    }
}

TEST_CASE("torsion witness at n = 2", "[modpres]") {
    const auto w = torsion_witness(2);
    REQUIRE(w.has_value());
    CHECK(w->element == parse_tpoly("(A^2 - 1 + A^-2)*S_2 - (A^2 + 1 + A^-2)*S_0"));
    CHECK(w->annihilator == lp("A + A^-1"));
    CHECK_FALSE(normal_form(w->element).is_zero());
    CHECK(normal_form(w->annihilator * w->element).is_zero());
    // the annihilated element is exactly the relation
    CHECK(w->annihilator * w->element == relation(2).expression);
    // (A + A^-1) divides A^2 - A^-2: the witness is (A^k - A^-k)-torsion with k = 2
    CHECK(divide_exact(lp("A^2 - A^-2"), lp("A + A^-1")) == lp("A - A^-1"));
    const auto type = torsion_type_check(w->annihilator);
    REQUIRE(type.has_value());
    CHECK(type->k == 2);
    CHECK(type->power == 1);
}

TEST_CASE("witness landscape over n", "[modpres]") {
    CHECK_FALSE(torsion_witness(3).has_value());  // gcd(c_3, d_3) = 1
    for (unsigned n = 2; n <= 20; n += 2) {
        const auto w = torsion_witness(n);
        REQUIRE(w.has_value());  // even n: A + A^-1 divides both c_n and d_n
        CHECK_FALSE(normal_form(w->element).is_zero());
        CHECK(normal_form(w->annihilator * w->element).is_zero());
    }
    CHECK_THROWS_AS(torsion_witness(1), std::invalid_argument);
}

TEST_CASE("split obstructions", "[modpres]") {
    SECTION("n = 2 matches the worked ideal") {
        const SplitObstruction ob = split_obstruction(2);
        CHECK(ob.ideal.g1 == lp("A^2 - 1 + A^-2"));
        CHECK(ob.ideal.g2 == lp("A^2 + 1 + A^-2"));
        CHECK(ob.verdict.status == Principality::NonPrincipal);
        CHECK(verify_principality(ob.verdict, ob.ideal));
    }
    SECTION("n = 3") {
        const SplitObstruction ob = split_obstruction(3);
        CHECK(ob.ideal.g1 == lp("A^4 + A^-4"));
        CHECK(ob.ideal.g2 == lp("A^4 + 2 + A^-4"));
        CHECK(ob.verdict.status == Principality::NonPrincipal);
        CHECK(verify_principality(ob.verdict, ob.ideal));
    }
    SECTION("no principal outcomes through n = 10") {
        for (unsigned n = 2; n <= 10; ++n) {
            const SplitObstruction ob = split_obstruction(n);
            CHECK(ob.verdict.status != Principality::Principal);
            CHECK(verify_principality(ob.verdict, ob.ideal));
        }
    }
}

TEST_CASE("rank over Q(A)", "[modpres]") {
    const RankReport report = rank_over_QA(30);
    CHECK(report.rank == 4);
    CHECK(report.entries.size() == 29);
    for (const auto& e : report.entries) CHECK(e.verified);

    CHECK(report.entries[0].reduced == RationalFunction(lp("A^2 + 1 + A^-2"), lp("A^2 - 1 + A^-2")));
    CHECK(report.entries[1].reduced == RationalFunction(lp("A^4 + 2 + A^-4"), lp("A^4 + A^-4")));
}

TEST_CASE("manifold catalog", "[modpres]") {
    const auto catalog = manifold_catalog(12);
    REQUIRE(catalog.size() == 4);

    const ManifoldProfile& s1s2 = catalog[0];
    CHECK(s1s2.free_rank == 1);
    REQUIRE(s1s2.summands.size() == 11);
    for (const TorsionSummand& s : s1s2.summands) {
        CHECK(s.annihilator == LaurentPoly(1) - LaurentPoly::a_pow(2 * static_cast<Exp>(s.k)));
        CHECK(s.identity_verified);
        REQUIRE(s.type.has_value());
        CHECK(s.type->k == s.k);
    }

    CHECK(catalog[1].name == "F x S^1 (genus 2)");
    CHECK(catalog[1].free_rank == 35);  // 2^5 + 3
    CHECK(catalog[2].free_rank == 133);
    CHECK(catalog[3].free_rank == 519);
}

TEST_CASE("torsion type predicate", "[modpres]") {
    const auto t1 = torsion_type_check(lp("A + A^-1"));
    REQUIRE(t1.has_value());
    CHECK(t1->k == 2);
    CHECK_FALSE(torsion_type_check(lp("2")).has_value());
    CHECK_FALSE(torsion_type_check(lp("A^2 + 3")).has_value());
    const auto t2 = torsion_type_check(lp("A^2 - A^-2"));
    REQUIRE(t2.has_value());
    CHECK(t2->k == 2);
    CHECK_THROWS_AS(torsion_type_check(LaurentPoly()), std::invalid_argument);
}

TEST_CASE("module elements carry the free part untouched", "[modpres]") {
    const ModuleElement e{lp("A^2"), lp("-3"), relation(4).expression + parse_tpoly("S_0")};
    const ModuleNormalForm nf = module_normal_form(e);
    CHECK(nf.coef_K == lp("A^2"));
    CHECK(nf.coef_Kprime == lp("-3"));
    CHECK(nf.nf.a0 == LaurentPoly(1));
    CHECK_FALSE(nf.is_zero());
    CHECK(module_normal_form({LaurentPoly(), LaurentPoly(), relation(5).expression}).is_zero());
}

TEST_CASE("certificates serialize deterministically and re-verify", "[modpres][certificates]") {
    SECTION("torsion witness JSON") {
        const auto w = torsion_witness(2);
        REQUIRE(w.has_value());
        const Json j = to_json(*w);
        CHECK(j.dump() == to_json(*torsion_witness(2)).dump());  // byte-stable

        // a third party re-verifies from the serialized polynomials alone
        const TPoly element = parse_tpoly(j.at("element").get<std::string>());
        const LaurentPoly ann = parse_laurent(j.at("annihilator").get<std::string>());
        const LaurentPoly c = parse_laurent(j.at("relation_c").get<std::string>());
        const LaurentPoly d = parse_laurent(j.at("relation_d").get<std::string>());
        CHECK(ann * element ==
              TPoly::term(c, 2, Basis::Chebyshev) - TPoly::term(d, 0, Basis::Chebyshev));
    }
    SECTION("obstruction JSON") {
        const SplitObstruction ob = split_obstruction(2);
        const Json j = to_json(ob);
        CHECK(j.at("status").get<std::string>() == "non-principal");

        const LaurentPoly g1 = parse_laurent(j.at("ideal").at("g1").get<std::string>());
        const LaurentPoly g2 = parse_laurent(j.at("ideal").at("g2").get<std::string>());
        const PropernessCertificate cert = properness_from_json(j.at("properness"));
        CHECK(verify_properness(cert, IdealTwoGen{g1, g2}));
        const LaurentPoly gcd = parse_laurent(j.at("gcd_evidence").at("gcd").get<std::string>());
        CHECK(gcd.is_unit());
    }
}
