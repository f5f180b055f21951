#include "skein/json_io.hpp"
#include "skein/moves.hpp"
#include "skein/parse.hpp"

#include <catch2/catch.hpp>

#include <random>

using namespace skein;

namespace {

LaurentPoly lp(const std::string& text) { return parse_laurent(text); }

// test-local state enumerator, independent of the library's union-find and
// memoization machinery: resolves crossings one by one through `resolve` and
// counts the surviving free loops
LaurentPoly enumerate_bracket(const PlanarDiagram& d) {
    if (d.crossings.empty()) {
        LaurentPoly v(1);
        for (int i = 0; i < d.free_loops; ++i) v *= lp("-A^2 - A^-2");
        return v * unit_pow(lp("-A^3"), d.kinks);
    }
    return lp("A") * enumerate_bracket(resolve(d, 0, Smoothing::A)) +
           lp("A^-1") * enumerate_bracket(resolve(d, 0, Smoothing::B));
}

PlanarDiagram random_diagram(std::mt19937& rng, int max_crossings = 8) {
    std::uniform_int_distribution<int> nc(0, max_crossings);
    std::uniform_int_distribution<int> fl(0, 2);
    std::uniform_int_distribution<int> flag(0, 1);
    const int c = nc(rng);
    std::vector<int> slots(4 * c);
    for (std::size_t i = 0; i < slots.size(); ++i) slots[i] = static_cast<int>(i);
    std::shuffle(slots.begin(), slots.end(), rng);
    std::vector<int> edge_of_slot(4 * c, -1);
    for (std::size_t i = 0; i + 1 < slots.size(); i += 2) {
        edge_of_slot[slots[i]] = static_cast<int>(i / 2);
        edge_of_slot[slots[i + 1]] = static_cast<int>(i / 2);
    }
    PlanarDiagram d;
    for (int i = 0; i < c; ++i)
        d.crossings.push_back({{edge_of_slot[4 * i], edge_of_slot[4 * i + 1],
                                edge_of_slot[4 * i + 2], edge_of_slot[4 * i + 3]},
                               flag(rng)});
    d.free_loops = fl(rng);
    return d;
}

const LaurentPoly delta = lp("-A^2 - A^-2");

}  // namespace

TEST_CASE("crossingless diagrams", "[bracket]") {
    CHECK(bracket_statesum(PlanarDiagram{}) == LaurentPoly(1));  // empty link
    CHECK(bracket_statesum(unknot()) == delta);
    CHECK(bracket_statesum(PlanarDiagram{{}, 2, 0}) == delta * delta);
    CHECK(bracket_recursive(unknot()) == delta);
}

TEST_CASE("resolve re-fuses edges", "[bracket]") {
    const PlanarDiagram kink = add_kink(unknot(), +1);
    REQUIRE(kink.crossings.size() == 1);

    const PlanarDiagram a = resolve(kink, 0, Smoothing::A);
    CHECK(a.crossings.empty());
    CHECK(a.free_loops == 2);

    const PlanarDiagram b = resolve(kink, 0, Smoothing::B);
    CHECK(b.crossings.empty());
    CHECK(b.free_loops == 1);

    const PlanarDiagram h = resolve(hopf_link(), 0, Smoothing::A);
    CHECK(h.crossings.size() == 1);

    CHECK_THROWS_AS(resolve(unknot(), 0, Smoothing::A), std::out_of_range);
}

TEST_CASE("kinks carry the framing factor", "[bracket]") {
    CHECK(bracket_statesum(add_kink(unknot(), +1)) == lp("-A^3") * delta);
    CHECK(bracket_statesum(add_kink(unknot(), -1)) == lp("-A^-3") * delta);
    // opposite kinks cancel
    CHECK(bracket_statesum(add_kink(add_kink(unknot(), +1), -1)) == delta);
    // bookkeeping twists match drawn kinks
    CHECK(bracket_statesum(PlanarDiagram{{}, 1, -2}) == lp("A^-6") * delta);
    CHECK_THROWS_AS(add_kink(PlanarDiagram{}, +1), std::domain_error);

    std::mt19937 rng(5150);
    for (int i = 0; i < 20; ++i) {
        const PlanarDiagram d = random_diagram(rng, 5);
        if (d.crossings.empty() && d.free_loops == 0) continue;
        CHECK(bracket_statesum(add_kink(d, -1)) == lp("-A^-3") * bracket_statesum(d));
    }
}

TEST_CASE("frozen values from the Temperley-Lieb expansion", "[bracket][oracle]") {
    // closure of the 2-braid with three equal letters: delta*(A^7 - A^3 - A^-5)
    CHECK(bracket_statesum(braid_closure({1, 1, 1}, 2)) == lp("-A^9 + A + A^-3 + A^-7"));
    // Hopf link: delta*(-A^4 - A^-4)
    CHECK(bracket_statesum(braid_closure({1, 1}, 2)) == delta * lp("-A^4 - A^-4"));
    CHECK(bracket_statesum(hopf_link()) == delta * lp("-A^4 - A^-4"));
    // figure-eight: delta*(A^8 - A^4 + 1 - A^-4 + A^-8), amphichiral
    const LaurentPoly f8 = bracket_statesum(figure_eight());
    CHECK(f8 == delta * lp("A^8 - A^4 + 1 - A^-4 + A^-8"));
    CHECK(f8 == bracket_statesum(braid_closure({1, -2, 1, -2}, 3)));
    CHECK(f8.substitute_a_inverse() == f8);
    // the two trefoil chiralities are mirror images
    const LaurentPoly t = bracket_statesum(trefoil());
    CHECK(bracket_statesum(mirror(trefoil())) == t.substitute_a_inverse());
    CHECK((t == lp("-A^9 + A + A^-3 + A^-7") || t == lp("-A^-9 + A^-1 + A^3 + A^7")));
}

TEST_CASE("state sum equals recursion equals the test enumerator", "[bracket][oracle]") {
    std::mt19937 rng(31);
    std::vector<PlanarDiagram> corpus = {
        unknot(), add_kink(unknot(), +1), add_kink(unknot(), -1),
        hopf_link(), trefoil(), mirror(trefoil()), figure_eight(),
        braid_closure({1, 1, 1}, 2), braid_closure({1, -2, 1, -2}, 3),
        disjoint_union(hopf_link(), trefoil()),
    };
    for (int i = 0; i < 40; ++i) corpus.push_back(random_diagram(rng));

    for (const PlanarDiagram& d : corpus) {
        const LaurentPoly sum = bracket_statesum(d);
        CHECK(sum == bracket_recursive(d));
        CHECK(sum == enumerate_bracket(d));
    }
}

TEST_CASE("statesum partitioning is schedule-independent", "[bracket]") {
    std::mt19937 rng(77);
    for (int i = 0; i < 10; ++i) {
        const PlanarDiagram d = random_diagram(rng);
        const LaurentPoly reference = bracket_statesum(d, 1);
        CHECK(bracket_statesum(d, 4) == reference);
        CHECK(bracket_statesum(d, 7) == reference);
    }
}

TEST_CASE("Reidemeister II and III invariance", "[bracket][property]") {
    std::mt19937 rng(161);
    std::uniform_int_distribution<int> gen(1, 2);
    std::uniform_int_distribution<int> sign(0, 1);

    for (int i = 0; i < 15; ++i) {
        std::vector<int> w;
        for (int j = 0; j < 5; ++j) w.push_back(gen(rng) * (sign(rng) ? 1 : -1));

        const int g = gen(rng) * (sign(rng) ? 1 : -1);
        std::vector<int> with_r2 = {g, -g};
        with_r2.insert(with_r2.end(), w.begin(), w.end());
        CHECK(bracket_statesum(braid_closure(with_r2, 3)) == bracket_statesum(braid_closure(w, 3)));

        std::vector<int> lhs = {1, 2, 1}, rhs = {2, 1, 2};
        lhs.insert(lhs.end(), w.begin(), w.end());
        rhs.insert(rhs.end(), w.begin(), w.end());
        CHECK(bracket_statesum(braid_closure(lhs, 3)) == bracket_statesum(braid_closure(rhs, 3)));
        std::vector<int> nlhs = {-1, -2, -1}, nrhs = {-2, -1, -2};
        nlhs.insert(nlhs.end(), w.begin(), w.end());
        nrhs.insert(nrhs.end(), w.begin(), w.end());
        CHECK(bracket_statesum(braid_closure(nlhs, 3)) == bracket_statesum(braid_closure(nrhs, 3)));
    }

    // R2 insertion between arbitrary edges of arbitrary diagrams
    for (int i = 0; i < 15; ++i) {
        const PlanarDiagram d = random_diagram(rng, 6);
        const int m = max_edge_id(d);
        if (m < 1) continue;
        std::uniform_int_distribution<int> pick(0, m);
        const int e1 = pick(rng), e2 = pick(rng);
        if (e1 == e2) continue;
        CHECK(bracket_statesum(insert_r2(d, e1, e2, true)) == bracket_statesum(d));
        CHECK(bracket_statesum(insert_r2(d, e1, e2, false)) == bracket_statesum(d));
    }
}

TEST_CASE("disjoint union is multiplicative", "[bracket][property]") {
    std::mt19937 rng(271828);
    for (int i = 0; i < 15; ++i) {
        const PlanarDiagram d1 = random_diagram(rng, 4), d2 = random_diagram(rng, 4);
        CHECK(bracket_statesum(disjoint_union(d1, d2)) ==
              bracket_statesum(d1) * bracket_statesum(d2));
        // a distant free loop multiplies by delta
        CHECK(bracket_statesum(disjoint_union(d1, unknot())) == delta * bracket_statesum(d1));
    }
}

TEST_CASE("chained resolution reproduces the state sum", "[bracket][property]") {
    std::mt19937 rng(64738);
    for (int iter = 0; iter < 10; ++iter) {
        const PlanarDiagram d = random_diagram(rng, 5);
        const std::size_t c = d.crossings.size();
        // resolving every crossing in sequence terminates in a crossingless
        // diagram; the surviving free loops are that state's loop count, and
        // accumulating A^(a-b) * delta^loops over all states is the state sum
        LaurentPoly total;
        for (std::uint64_t state = 0; state < (std::uint64_t(1) << c); ++state) {
            PlanarDiagram cur = d;
            int a_count = 0;
            for (std::size_t i = 0; i < c; ++i) {
                const Smoothing s = (state >> i) & 1 ? Smoothing::B : Smoothing::A;
                if (s == Smoothing::A) ++a_count;
                cur = resolve(cur, 0, s);  // always the first remaining crossing
            }
            REQUIRE(cur.crossings.empty());
            LaurentPoly term = LaurentPoly::monomial(1, 2 * a_count - static_cast<Exp>(c));
            for (int i = 0; i < cur.free_loops; ++i) term *= delta;
            total += term;
        }
        CHECK(total == bracket_statesum(d));
    }
}

TEST_CASE("mirror image substitutes A -> A^-1", "[bracket][property]") {
    std::mt19937 rng(314159);
    for (int i = 0; i < 15; ++i) {
        const PlanarDiagram d = random_diagram(rng, 6);
        CHECK(bracket_statesum(mirror(d)) == bracket_statesum(d).substitute_a_inverse());
    }
}

TEST_CASE("larger braids keep the routes in lockstep", "[bracket]") {
    std::mt19937 rng(987654);
    std::uniform_int_distribution<int> gen(1, 2);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<int> w;
    for (int i = 0; i < 14; ++i) w.push_back(gen(rng) * (sign(rng) ? 1 : -1));
    const PlanarDiagram d = braid_closure(w, 3);
    const LaurentPoly reference = bracket_statesum(d, 1);
    CHECK(bracket_statesum(d, 4) == reference);
    CHECK(bracket_recursive(d) == reference);
}

TEST_CASE("diagram validation", "[bracket]") {
    CHECK(validate(trefoil()).empty());
    PlanarDiagram bad;
    bad.crossings.push_back({{0, 1, 2, 3}, 0});
    const auto violations = validate(bad);
    REQUIRE_FALSE(violations.empty());
    CHECK(violations.front().find("occurs 1 times") != std::string::npos);
}

TEST_CASE("diagram JSON round-trip", "[bracket]") {
    const PlanarDiagram d = trefoil();
    const Json j = to_json(d);
    const PlanarDiagram back = planar_from_json(j);
    CHECK(back.crossings.size() == d.crossings.size());
    CHECK(bracket_statesum(back) == bracket_statesum(d));
    CHECK(to_json(back) == j);

    CHECK_THROWS_AS(planar_from_json(Json::parse(R"({"crossings":[{"edges":[1,2,3],"over":[0,2]}]})")),
                    std::exception);
    CHECK_THROWS_AS(planar_from_json(Json::parse(R"({"crossings":[{"edges":[1,2,3,4],"over":[0,1]}]})")),
                    std::invalid_argument);
}
