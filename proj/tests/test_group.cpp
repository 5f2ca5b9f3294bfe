#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <numeric>
#include <set>

#include "homcount/errors.hpp"
#include "homcount/group.hpp"

using namespace homcount;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "test_tmp_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

void check_axioms_exhaustive(const FiniteGroup& G) {
    long long n = G.order();
    REQUIRE(n <= 512);
    for (int a = 0; a < n; ++a) {
        CHECK(G.mul(0, a) == a);
        CHECK(G.mul(a, 0) == a);
        CHECK(G.mul(a, G.inv(a)) == 0);
        CHECK(G.mul(G.inv(a), a) == 0);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                REQUIRE(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
}

}  // namespace

TEST_CASE("spec parsing and orders") {
    CHECK(build_group(GroupSpec::parse("S3")).order() == 6);
    CHECK(build_group(GroupSpec::parse("C4")).order() == 4);
    CHECK(build_group(GroupSpec::parse("SL2_5")).order() == 120);
    CHECK(build_group(GroupSpec::parse("PSL2_11")).order() == 660);
    CHECK(GroupSpec::parse("S10").n == 10);
    CHECK(GroupSpec::parse("cayley:/tmp/x.tbl").path == "/tmp/x.tbl");

    CHECK_THROWS_AS(GroupSpec::parse("X3"), InvalidSpec);
    CHECK_THROWS_AS(GroupSpec::parse("S"), InvalidSpec);
    CHECK_THROWS_AS(GroupSpec::parse("SL2_4"), InvalidSpec);   // not prime
    CHECK_THROWS_AS(GroupSpec::parse("PSL2_2"), InvalidSpec);  // p must be odd
    CHECK_THROWS_AS(GroupSpec::symmetric(0), InvalidSpec);
    CHECK_THROWS_AS(GroupSpec::symmetric(13), InvalidSpec);
}

TEST_CASE("composition convention: apply left factor first") {
    FiniteGroup G = build_group(GroupSpec::symmetric(3));
    int t = G.element_from_text("(1 2)");
    int c = G.element_from_text("(1 2 3)");
    CHECK(G.mul(t, c) == G.element_from_text("(1 3)"));
    CHECK(G.mul(c, t) == G.element_from_text("(2 3)"));
    CHECK(G.inv(c) == G.element_from_text("(1 3 2)"));
    CHECK(G.conj(t, c) == G.element_from_text("(1 3 2)"));
}

TEST_CASE("group axioms hold exhaustively on small instances") {
    check_axioms_exhaustive(build_group(GroupSpec::symmetric(4)));
    check_axioms_exhaustive(build_group(GroupSpec::cyclic(12)));
    check_axioms_exhaustive(build_group(GroupSpec::sl2(3)));
    check_axioms_exhaustive(build_group(GroupSpec::psl2(5)));
}

TEST_CASE("dense table agrees with on-the-fly arithmetic") {
    FiniteGroup with_table = build_group(GroupSpec::symmetric(5));
    GroupOptions opts;
    opts.table_bound = 1;
    FiniteGroup without = build_group(GroupSpec::symmetric(5), opts);
    CHECK(with_table.table_data() != nullptr);
    CHECK(without.table_data() == nullptr);
    for (int a = 0; a < 120; a += 7)
        for (int b = 0; b < 120; b += 11) {
            CHECK(with_table.mul(a, b) == without.mul(a, b));
            CHECK(with_table.inv(a) == without.inv(a));
        }
}

TEST_CASE("conjugacy classes") {
    SUBCASE("cyclic groups split into singletons") {
        FiniteGroup G = build_group(GroupSpec::cyclic(4));
        const auto& cls = conjugacy_classes(G);
        REQUIRE(cls.size() == 4);
        for (const auto& c : cls) {
            CHECK(c.size == 1);
            CHECK(c.centralizer_order == 4);
        }
    }
    SUBCASE("S4 class sizes") {
        FiniteGroup G = build_group(GroupSpec::symmetric(4));
        const auto& cls = conjugacy_classes(G);
        std::multiset<long long> sizes;
        for (const auto& c : cls) sizes.insert(c.size);
        CHECK(sizes == std::multiset<long long>{1, 3, 6, 6, 8});
    }
    SUBCASE("class count of S_n is the partition count") {
        const long long expected[] = {1, 2, 3, 5, 7, 11};  // p(1)..p(6)
        for (int n = 1; n <= 6; ++n) {
            FiniteGroup G = build_group(GroupSpec::symmetric(n));
            CHECK(static_cast<long long>(conjugacy_classes(G).size()) == expected[n - 1]);
        }
    }
    SUBCASE("class equation and orbit-stabilizer") {
        for (const char* name : {"S4", "SL2_5", "PSL2_7"}) {
            FiniteGroup G = build_group(GroupSpec::parse(name));
            long long total = 0;
            std::vector<char> seen(G.order(), 0);
            for (const auto& c : conjugacy_classes(G)) {
                total += c.size;
                CHECK(c.size * c.centralizer_order == G.order());
                CHECK(c.representative == c.members.front());
                for (int m : c.members) {
                    CHECK(!seen[m]);
                    seen[m] = 1;
                    CHECK(G.class_of(m) == c.id);
                }
            }
            CHECK(total == G.order());
        }
    }
    SUBCASE("identity class is class 0") {
        FiniteGroup G = build_group(GroupSpec::psl2(5));
        CHECK(conjugacy_classes(G)[0].representative == 0);
        CHECK(conjugacy_classes(G)[0].size == 1);
    }
}

TEST_CASE("power maps on classes") {
    FiniteGroup S4 = build_group(GroupSpec::symmetric(4));
    const auto& cls = conjugacy_classes(S4);

    auto ident = power_class_map(S4, 1);
    for (std::size_t i = 0; i < ident.size(); ++i) CHECK(ident[i] == static_cast<int>(i));

    auto squares = power_class_map(S4, 2);
    int fixed = 0;
    for (std::size_t i = 0; i < squares.size(); ++i)
        if (squares[i] == static_cast<int>(i)) ++fixed;
    CHECK(fixed == 2);  // identity class and the 3-cycles

    // x^-1 lands in the class of the inverse; every S4 class is closed under it
    auto invmap = power_class_map(S4, -1);
    for (std::size_t i = 0; i < invmap.size(); ++i) CHECK(invmap[i] == static_cast<int>(i));

    // consistency against raw element powers
    for (long long m : {-3, -2, 0, 2, 3, 5}) {
        auto pm = power_class_map(S4, m);
        for (const auto& c : cls)
            for (int x : c.members) CHECK(S4.class_of(S4.power(x, m)) == pm[c.id]);
    }

    FiniteGroup C6 = build_group(GroupSpec::cyclic(6));
    auto neg = power_class_map(C6, -1);
    for (int k = 0; k < 6; ++k) CHECK(neg[k] == (6 - k) % 6);
}

TEST_CASE("element powers") {
    FiniteGroup G = build_group(GroupSpec::symmetric(5));
    int c5 = G.element_from_text("(1 2 3 4 5)");
    CHECK(G.power(c5, 0) == 0);
    CHECK(G.power(c5, 5) == 0);
    CHECK(G.power(c5, -1) == G.inv(c5));
    CHECK(G.power(c5, 7) == G.power(c5, 2));
    CHECK(G.power(c5, -7) == G.inv(G.power(c5, 7)));
}

TEST_CASE("labels and element parsing round trip") {
    FiniteGroup S4 = build_group(GroupSpec::symmetric(4));
    CHECK(S4.label(0) == "e");
    for (int x = 0; x < S4.order(); ++x)
        CHECK(S4.element_from_text(S4.label(x)) == x);

    FiniteGroup C7 = build_group(GroupSpec::cyclic(7));
    CHECK(C7.element_from_text("-2") == 5);
    CHECK(C7.element_from_text("9") == 2);

    FiniteGroup SL25 = build_group(GroupSpec::sl2(5));
    CHECK(SL25.label(0) == "[[1,0],[0,1]]");
    CHECK(SL25.element_from_text("1,0,0,1") == 0);
    CHECK(SL25.element_from_text("4,0,0,4") != 0);  // -I is a real element here
    for (int x = 0; x < 120; x += 13)
        CHECK(SL25.element_from_text(SL25.label(x)) == x);
    CHECK_THROWS_AS(SL25.element_from_text("1,0,0,2"), ParseError);  // det 2

    FiniteGroup PSL = build_group(GroupSpec::psl2(11));
    CHECK(PSL.element_from_text("10,0,0,10") == 0);  // -I is the identity coset
    CHECK_THROWS_AS(S4.element_from_text("(1 5)"), ParseError);
    CHECK_THROWS_AS(S4.element_from_text("(1 1)"), ParseError);
    CHECK_THROWS_AS(S4.element_from_text("(1 2"), ParseError);
}

TEST_CASE("PSL2 sign normalization halves SL2") {
    FiniteGroup sl = build_group(GroupSpec::sl2(11));
    FiniteGroup psl = build_group(GroupSpec::psl2(11));
    CHECK(sl.order() == 1320);
    CHECK(psl.order() == 2 * 660 / 2);
    // M and -M collapse to the same index
    int a = psl.element_from_text("2,3,0,6");
    int b = psl.element_from_text("9,8,0,5");
    CHECK(a == b);
}

TEST_CASE("cayley table files") {
    SUBCASE("valid C3 table") {
        std::string path = write_temp("c3.tbl", "3\n0 1 2\n1 2 0\n2 0 1\n");
        FiniteGroup G = build_group(GroupSpec::cayley(path));
        CHECK(G.order() == 3);
        CHECK(G.mul(1, 2) == 0);
        CHECK(G.inv(1) == 2);
        CHECK(G.label(1) == "g1");
        CHECK(G.element_from_text("g2") == 2);
        CHECK(conjugacy_classes(G).size() <= 3);
        std::remove(path.c_str());
    }
    SUBCASE("non-associative loop is rejected") {
        // Latin square with identity and two-sided inverses, but (1*2)*4 != 1*(2*4).
        std::string path = write_temp("loop5.tbl",
                                      "5\n"
                                      "0 1 2 3 4\n"
                                      "1 0 3 4 2\n"
                                      "2 4 0 1 3\n"
                                      "3 2 4 0 1\n"
                                      "4 3 1 2 0\n");
        CHECK_THROWS_AS(build_group(GroupSpec::cayley(path)), CayleyValidationFailed);
        std::remove(path.c_str());
    }
    SUBCASE("missing two-sided inverse is rejected") {
        std::string path = write_temp("loop5b.tbl",
                                      "5\n"
                                      "0 1 2 3 4\n"
                                      "1 0 3 4 2\n"
                                      "2 3 4 0 1\n"
                                      "3 4 1 2 0\n"
                                      "4 2 0 1 3\n");
        CHECK_THROWS_AS(build_group(GroupSpec::cayley(path)), CayleyValidationFailed);
        std::remove(path.c_str());
    }
    SUBCASE("wrong identity is rejected") {
        std::string path = write_temp("badid.tbl", "2\n1 0\n0 1\n");
        CHECK_THROWS_AS(build_group(GroupSpec::cayley(path)), CayleyValidationFailed);
        std::remove(path.c_str());
    }
    SUBCASE("truncated file is rejected") {
        std::string path = write_temp("trunc.tbl", "3\n0 1 2\n1 2\n");
        CHECK_THROWS_AS(build_group(GroupSpec::cayley(path)), InvalidSpec);
        std::remove(path.c_str());
    }
    SUBCASE("out-of-range entry is rejected") {
        std::string path = write_temp("range.tbl", "2\n0 1\n1 7\n");
        CHECK_THROWS_AS(build_group(GroupSpec::cayley(path)), CayleyValidationFailed);
        std::remove(path.c_str());
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(build_group(GroupSpec::cayley("no_such_file.tbl")), InvalidSpec);
    }
}

TEST_CASE("group_from_table") {
    // Klein four-group via XOR
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t[i][j] = i ^ j;
    FiniteGroup G = group_from_table(t, "V4", {"e", "a", "b", "ab"});
    CHECK(G.order() == 4);
    CHECK(G.name() == "V4");
    CHECK(G.label(3) == "ab");
    CHECK(G.element_from_text("ab") == 3);
    CHECK(G.inv(2) == 2);
    check_axioms_exhaustive(G);
}
