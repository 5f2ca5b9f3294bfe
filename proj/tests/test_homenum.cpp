#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "homcount/errors.hpp"
#include "homcount/homenum.hpp"

using namespace homcount;

namespace {

Presentation pres(const std::string& text) { return parse_presentation(text); }

int class_of_text(const FiniteGroup& G, const std::string& text) {
    return G.class_of(G.element_from_text(text));
}

}  // namespace

TEST_CASE("free groups hit every tuple") {
    FiniteGroup S3 = build_group(GroupSpec::symmetric(3));
    HomSet H = enumerate_homs(pres("gens: x, y; rels:"), S3);
    CHECK(H.count == 36);
    CHECK(H.assignments.size() == 36);
    CHECK(std::is_sorted(H.assignments.begin(), H.assignments.end()));

    HomSet Z = enumerate_homs(pres("gens: x; rels:"), S3);
    CHECK(Z.count == 6);

    HomSet trivial = enumerate_homs(pres("gens: ; rels:"), S3);
    CHECK(trivial.count == 1);
    CHECK(trivial.assignments.size() == 1);
    CHECK(trivial.assignments[0].images.empty());
}

TEST_CASE("commuting pairs in S3") {
    FiniteGroup S3 = build_group(GroupSpec::symmetric(3));
    HomSet H = enumerate_homs(pres("gens: x, y; rels: [x,y]"), S3);
    CHECK(H.count == 18);
    for (const auto& a : H.assignments)
        CHECK(S3.mul(a.images[0], a.images[1]) == S3.mul(a.images[1], a.images[0]));
}

TEST_CASE("genus 2 into S2") {
    FiniteGroup S2 = build_group(GroupSpec::symmetric(2));
    HomSet H = enumerate_homs(surface_presentation(2), S2);
    CHECK(H.count == 16);  // abelian target satisfies the commutator relator everywhere
}

TEST_CASE("count-only mode matches stored mode") {
    FiniteGroup S4 = build_group(GroupSpec::symmetric(4));
    Presentation P = pres("gens: x, y; rels: x^2 y^2");
    EnumOptions count_only;
    count_only.store = false;
    HomSet a = enumerate_homs(P, S4);
    HomSet b = enumerate_homs(P, S4, count_only);
    CHECK(a.count == b.count);
    CHECK(b.assignments.empty());
    CHECK(!b.stored);
}

TEST_CASE("worker count never changes the result") {
    FiniteGroup S4 = build_group(GroupSpec::symmetric(4));
    Presentation P = pres("gens: x, y; rels: [x,y]^2");
    HomSet solo = enumerate_homs(P, S4);
    for (int w : {2, 3, 7}) {
        EnumOptions opt;
        opt.workers = w;
        HomSet multi = enumerate_homs(P, S4, opt);
        CHECK(multi.count == solo.count);
        CHECK(multi.assignments == solo.assignments);
    }
}

TEST_CASE("budget accounting") {
    FiniteGroup S5 = build_group(GroupSpec::symmetric(5));
    Presentation free3 = pres("gens: x, y, z; rels:");
    CHECK(enumeration_cost(free3, S5) == Int(120) * 120 * 120);

    EnumOptions tight;
    tight.budget = 10000;
    CHECK_THROWS_AS(enumerate_homs(free3, S5, tight), BudgetExceeded);
    try {
        enumerate_homs(free3, S5, tight);
    } catch (const BudgetExceeded& e) {
        CHECK(e.cost == Int(1728000));
    }

    // relator letters scale the cost
    Presentation P = pres("gens: x; rels: x^2");
    CHECK(enumeration_cost(P, S5) == Int(120) * 2);
}

TEST_CASE("constrained enumeration") {
    FiniteGroup S3 = build_group(GroupSpec::symmetric(3));
    int three_cycle = class_of_text(S3, "(1 2 3)");

    SUBCASE("three 3-cycles multiplying to the identity") {
        Presentation P = pres("gens: x, y, z; rels: x y z");
        std::vector<ClassConstraint> cs = {
            {{parse_word("x", P.generator_names)}, three_cycle},
            {{parse_word("y", P.generator_names)}, three_cycle},
            {{parse_word("z", P.generator_names)}, three_cycle}};
        HomSet H = enumerate_constrained(P, S3, cs);
        CHECK(H.count == 2);
    }

    SUBCASE("n-cycle pairs with product one") {
        for (int n : {3, 4}) {
            FiniteGroup Sn = build_group(GroupSpec::symmetric(n));
            Presentation P = pres("gens: x, y; rels: x y");
            std::string cyc = "(1";
            for (int i = 2; i <= n; ++i) cyc += " " + std::to_string(i);
            cyc += ")";
            int ncyc = class_of_text(Sn, cyc);
            std::vector<ClassConstraint> cs = {{{parse_word("x", P.generator_names)}, ncyc},
                                               {{parse_word("y", P.generator_names)}, ncyc}};
            HomSet H = enumerate_constrained(P, Sn, cs);
            long long expect = 1;
            for (int i = 2; i < n; ++i) expect *= i;  // (n-1)!
            CHECK(H.count == expect);
        }
    }

    SUBCASE("relator forces identity, constraint forbids it") {
        Presentation P = pres("gens: x; rels: x");
        std::vector<ClassConstraint> cs = {{{parse_word("x", P.generator_names)}, three_cycle}};
        CHECK(enumerate_constrained(P, S3, cs).count == 0);
    }

    SUBCASE("result is closed under conjugation") {
        FiniteGroup S4 = build_group(GroupSpec::symmetric(4));
        Presentation P = pres("gens: x, y; rels:");
        int transposition = class_of_text(S4, "(1 2)");
        std::vector<ClassConstraint> cs = {
            {{parse_word("x y", P.generator_names)}, transposition}};
        HomSet H = enumerate_constrained(P, S4, cs);
        CHECK(H.count == 6 * 24);  // product ranges over the class, free second factor
        std::set<std::vector<int>> members;
        for (const auto& a : H.assignments) members.insert(a.images);
        for (const auto& a : H.assignments)
            for (int g = 0; g < S4.order(); g += 5) {
                std::vector<int> c = {S4.conj(g, a.images[0]), S4.conj(g, a.images[1])};
                CHECK(members.count(c) == 1);
            }
    }

    SUBCASE("bad constraint inputs") {
        Presentation P = pres("gens: x; rels:");
        std::vector<ClassConstraint> no_words = {{{}, 0}};
        CHECK_THROWS_AS(enumerate_constrained(P, S3, no_words), InvalidSpec);
        std::vector<ClassConstraint> bad_class = {{{parse_word("x", P.generator_names)}, 99}};
        CHECK_THROWS_AS(enumerate_constrained(P, S3, bad_class), IndexOutOfRange);
    }
}

TEST_CASE("orbit decomposition") {
    FiniteGroup S3 = build_group(GroupSpec::symmetric(3));

    SUBCASE("free rank one splits into conjugacy classes") {
        HomSet H = enumerate_homs(pres("gens: x; rels:"), S3);
        OrbitDecomposition D = orbit_decomposition(H);
        REQUIRE(D.orbits.size() == 3);
        std::multiset<long long> stabs;
        for (const auto& o : D.orbits) stabs.insert(o.stabilizer_order);
        CHECK(stabs == std::multiset<long long>{2, 3, 6});
    }

    SUBCASE("orbit-stabilizer mass formula") {
        HomSet H = enumerate_homs(pres("gens: x, y; rels: [x,y]"), S3);
        OrbitDecomposition D = orbit_decomposition(H);
        Int total = 0;
        for (const auto& o : D.orbits) {
            CHECK(o.size * o.stabilizer_order == S3.order());
            total += o.size;
        }
        CHECK(total == H.count);
    }

    SUBCASE("trivial hom sits in a singleton orbit") {
        HomSet H = enumerate_homs(pres("gens: x; rels: x"), S3);
        OrbitDecomposition D = orbit_decomposition(H);
        REQUIRE(D.orbits.size() == 1);
        CHECK(D.orbits[0].size == 1);
        CHECK(D.orbits[0].stabilizer_order == 6);
    }

    SUBCASE("count-only sets are rejected") {
        EnumOptions opt;
        opt.store = false;
        HomSet H = enumerate_homs(pres("gens: x; rels:"), S3, opt);
        CHECK_THROWS_AS(orbit_decomposition(H), InvalidSpec);
    }
}

TEST_CASE("twisted fixed subsets") {
    Presentation Z = pres("gens: x; rels:");

    SUBCASE("identity automorphism fixes everything") {
        FiniteGroup S3 = build_group(GroupSpec::symmetric(3));
        HomSet H = enumerate_homs(Z, S3);
        AutomorphismData id = parse_automorphism("x -> x", Z);
        CHECK(twisted_fixed_subset(H, id).count == H.count);
    }

    SUBCASE("inversion on S3: every element conjugate to its inverse") {
        FiniteGroup S3 = build_group(GroupSpec::symmetric(3));
        HomSet H = enumerate_homs(Z, S3);
        AutomorphismData flip = parse_automorphism("x -> x^-1", Z);
        CHECK(twisted_fixed_subset(H, flip).count == 6);
    }

    SUBCASE("inversion on C3: only the identity survives") {
        FiniteGroup C3 = build_group(GroupSpec::cyclic(3));
        HomSet H = enumerate_homs(Z, C3);
        AutomorphismData flip = parse_automorphism("x -> x^-1", Z);
        HomSet T = twisted_fixed_subset(H, flip);
        CHECK(T.count == 1);
        CHECK(T.assignments[0].images[0] == 0);
    }
}

TEST_CASE("torsor verification") {
    SUBCASE("Z with identity twist into S3") {
        Presentation Z = pres("gens: x; rels:");
        AutomorphismData id = parse_automorphism("x -> x", Z);
        FiniteGroup S3 = build_group(GroupSpec::symmetric(3));
        TorsorReport R = verify_torsor(Z, id, S3);
        CHECK(R.pass);
        CHECK(R.upstairs_count == 18);
        CHECK(R.quotient == Rat(3));
        CHECK(R.orbit_count == 3);
        for (const auto& f : R.fibers) {
            if (f.twisted) CHECK(f.fiber_size == f.stabilizer_order);
            if (!f.twisted) CHECK(f.fiber_size == 0);
        }
    }

    SUBCASE("Klein bottle twist into C3") {
        Presentation Z = pres("gens: x; rels:");
        AutomorphismData flip = parse_automorphism("x -> x^-1", Z);
        FiniteGroup C3 = build_group(GroupSpec::cyclic(3));
        TorsorReport R = verify_torsor(Z, flip, C3);
        CHECK(R.pass);
        CHECK(R.upstairs_count == 3);
        CHECK(R.quotient == Rat(1));
        CHECK(R.orbit_count == 1);
    }

    SUBCASE("trivial presentation gives |G| upstairs") {
        Presentation none = pres("gens: ; rels:");
        AutomorphismData empty;
        FiniteGroup S4 = build_group(GroupSpec::symmetric(4));
        TorsorReport R = verify_torsor(none, empty, S4);
        CHECK(R.pass);
        CHECK(R.upstairs_count == 24);
        CHECK(R.quotient == Rat(1));
    }

    SUBCASE("constrained restriction still a torsor") {
        Presentation Z = pres("gens: x; rels:");
        AutomorphismData id = parse_automorphism("x -> x", Z);
        FiniteGroup S3 = build_group(GroupSpec::symmetric(3));
        int three_cycle = S3.class_of(S3.element_from_text("(1 2 3)"));
        std::vector<ClassConstraint> cs = {{{parse_word("x", {"x"})}, three_cycle}};
        TorsorReport R = verify_torsor(Z, id, S3, cs);
        CHECK(R.pass);
        CHECK(R.upstairs_count == 6);  // two 3-cycles, centralizer order 3 each
        CHECK(R.orbit_count == 1);
    }

    SUBCASE("non-automorphism raises SigmaInconsistent") {
        Presentation P = pres("gens: x, y; rels: x^2, y^2");
        AutomorphismData bad = parse_automorphism("x -> x y; y -> y", P);
        FiniteGroup S3 = build_group(GroupSpec::symmetric(3));
        CHECK_THROWS_AS(verify_torsor(P, bad, S3), SigmaInconsistent);
    }

    SUBCASE("constraint words must avoid the stable generator") {
        Presentation Z = pres("gens: x; rels:");
        AutomorphismData id = parse_automorphism("x -> x", Z);
        FiniteGroup S3 = build_group(GroupSpec::symmetric(3));
        ClassConstraint c;
        c.words = {Word::generator(1)};  // refers to t
        c.class_id = 0;
        CHECK_THROWS_AS(verify_torsor(Z, id, S3, {c}), InvalidSpec);
    }
}

TEST_CASE("divisibility spot checks") {
    // positive: infinite abelianization sources
    FiniteGroup S3 = build_group(GroupSpec::symmetric(3));
    FiniteGroup S4 = build_group(GroupSpec::symmetric(4));
    for (const char* text : {"gens: x, y; rels: [x,y]", "gens: x, t; rels: t x t^-1 x",
                             "gens: x, y; rels: x^-2 y x y^-1"}) {
        Presentation P = pres(text);
        REQUIRE(abelianization(P).infinite());
        CHECK(enumerate_homs(P, S3).count % 6 == 0);
        CHECK(enumerate_homs(P, S4).count % 24 == 0);
    }
    // negative control: finite abelianization
    Presentation P = pres("gens: x; rels: x^2");
    FiniteGroup C3 = build_group(GroupSpec::cyclic(3));
    CHECK(enumerate_homs(P, C3).count == 1);
}
