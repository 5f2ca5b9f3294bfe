#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "homcount/errors.hpp"
#include "homcount/growth.hpp"
#include "homcount/presentation.hpp"
#include "homcount/series.hpp"

using namespace homcount;

namespace {

// Independent route to u_n: peel off the transitive actions directly.
// t_n = h_n - sum_{k<n} C(n-1, k-1) t_k h_{n-k}, and t_n = (n-1)! u_n.
std::vector<Int> dey_u(const std::vector<Int>& h) {
    std::vector<Int> t(h.size(), 0);
    std::vector<Int> u;
    for (std::size_t n = 1; n < h.size(); ++n) {
        Int acc = h[n];
        for (std::size_t k = 1; k < n; ++k)
            acc -= binomial(Int(n - 1), static_cast<unsigned>(k - 1)) * t[k] * h[n - k];
        t[n] = acc;
        Int fact = factorial(static_cast<unsigned>(n - 1));
        REQUIRE(t[n] % fact == 0);
        u.push_back(t[n] / fact);
    }
    return u;
}

std::vector<Int> I(std::vector<long long> xs) {
    return std::vector<Int>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("series construction and multiplication") {
    RationalSeries one_plus(3), one_minus(3);
    one_plus.coeff = {1, 1, 0, 0};
    one_minus.coeff = {1, -1, 0, 0};
    auto prod = series_mul(one_plus, one_minus);
    CHECK(prod.coeff == std::vector<Rat>{1, 0, -1, 0});

    CHECK_THROWS_AS(RationalSeries(65), BoundExceeded);
    CHECK_THROWS_AS(RationalSeries(-1), InvalidSpec);
    RationalSeries other(5);
    CHECK_THROWS_AS(series_mul(one_plus, other), SizeMismatch);
}

TEST_CASE("formal log and exp") {
    // log(1/(1-x)) = sum x^n / n
    int N = 10;
    RationalSeries geo(N);
    for (int n = 0; n <= N; ++n) geo.coeff[static_cast<std::size_t>(n)] = 1;
    auto lg = series_log(geo);
    CHECK(lg.coeff[0] == Rat(0));
    for (int n = 1; n <= N; ++n) CHECK(lg.coeff[static_cast<std::size_t>(n)] == Rat(1, n));

    CHECK(series_exp(lg).coeff == geo.coeff);

    // Round trips on random rational series.
    std::mt19937 rng(20240818);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    for (int trial = 0; trial < 25; ++trial) {
        RationalSeries f(12);
        f.coeff[0] = 1;
        for (int n = 1; n <= 12; ++n)
            f.coeff[static_cast<std::size_t>(n)] = Rat(num(rng), den(rng));
        CHECK(series_exp(series_log(f)).coeff == f.coeff);

        RationalSeries a(12);
        for (int n = 1; n <= 12; ++n)
            a.coeff[static_cast<std::size_t>(n)] = Rat(num(rng), den(rng));
        CHECK(series_log(series_exp(a)).coeff == a.coeff);
    }

    RationalSeries bad(4);
    bad.coeff[0] = 2;
    CHECK_THROWS_AS(series_log(bad), BadConstantTerm);
    CHECK_THROWS_AS(series_exp(bad), BadConstantTerm);
}

TEST_CASE("one_minus_power expansions") {
    // (1-x)^(-1), (1-x^2)^(-2), and a positive power.
    auto geo = one_minus_power(1, Int(-1), 5);
    CHECK(geo.coeff == std::vector<Rat>{1, 1, 1, 1, 1, 1});
    auto sq = one_minus_power(2, Int(-2), 6);
    CHECK(sq.coeff == std::vector<Rat>{1, 0, 2, 0, 3, 0, 4});
    auto pos = one_minus_power(1, Int(3), 4);
    CHECK(pos.coeff == std::vector<Rat>{1, -3, 3, -1, 0});

    // Inverse pairs multiply to 1.
    auto prod = series_mul(one_minus_power(3, Int(4), 12), one_minus_power(3, Int(-4), 12));
    CHECK(prod.coeff[0] == Rat(1));
    for (int n = 1; n <= 12; ++n) CHECK(prod.coeff[static_cast<std::size_t>(n)] == Rat(0));
}

TEST_CASE("hom sequences for small sources") {
    CHECK(genus_hom_sequence(1, 5, HomMethod::Character) == I({1, 1, 4, 18, 120, 840}));
    CHECK(genus_hom_sequence(2, 4, HomMethod::Character) == I({1, 1, 16, 486, 34176}));

    // Brute and character routes agree where both run quickly.
    for (int g = 1; g <= 2; ++g)
        CHECK(genus_hom_sequence(g, 4, HomMethod::Brute) ==
              genus_hom_sequence(g, 4, HomMethod::Character));

    auto z = parse_presentation("gens: x; rels:");
    CHECK(hom_sequence(z, 4) == I({1, 1, 2, 6, 24}));

    CHECK_THROWS_AS(genus_hom_sequence(0, 3, HomMethod::Character), InvalidSpec);
    EnumOptions tiny;
    tiny.budget = 10;
    CHECK_THROWS_AS(hom_sequence(surface_presentation(1), 4, tiny), BudgetExceeded);
}

TEST_CASE("subgroup counts via the formal logarithm") {
    auto h1 = genus_hom_sequence(1, 5, HomMethod::Character);
    CHECK(u_from_homs(h1) == I({1, 3, 4, 7, 6}));  // sigma(n)

    auto h2 = genus_hom_sequence(2, 5, HomMethod::Character);
    CHECK(u_from_homs(h2) == I({1, 15, 220, 5275, 151086}));

    auto z = parse_presentation("gens: x; rels:");
    CHECK(u_from_homs(hom_sequence(z, 5)) == I({1, 1, 1, 1, 1}));

    // The transitive-action recursion is a fully independent route.
    for (int g = 1; g <= 2; ++g) {
        auto h = genus_hom_sequence(g, 4, HomMethod::Character);
        CHECK(dey_u(h) == u_from_homs(h));
    }
    auto klein = parse_presentation("gens: a, b; rels: a b a^-1 b");
    auto hk = hom_sequence(klein, 5);
    CHECK(dey_u(hk) == u_from_homs(hk));
    CHECK(u_from_homs(hk) == I({1, 3, 4, 7, 6}));

    CHECK_THROWS_AS(u_from_homs(I({1, 1, 1, 2})), NonIntegerResult);
    CHECK_THROWS_AS(u_from_homs(I({2, 1})), InvalidSpec);
}

TEST_CASE("u and v tables for surface groups") {
    const std::vector<std::vector<long long>> u_table = {
        {1, 3, 4, 7, 6},
        {1, 15, 220, 5275, 151086},
        {1, 63, 7924, 2757307, 2081946006},
        {1, 255, 281740, 1542456475, 29867372813886},
        {1, 1023, 10095844, 882442672507, 429988374084026406},
    };
    const std::vector<std::vector<long long>> v_table = {
        {1, 1, 1, 1, 1},
        {1, 7, 73, 1315, 30217},
        {1, 31, 2641, 689311, 416389201},
        {1, 127, 93913, 385614055, 5973474562777},
        {1, 511, 3365281, 220610667871, 85997674816805281},
    };
    for (int g = 1; g <= 5; ++g) {
        auto h = genus_hom_sequence(g, 5, HomMethod::Character);
        auto res = growth_from_homs(h);
        CHECK(res.u == I(std::vector<long long>(u_table[static_cast<std::size_t>(g) - 1])));
        CHECK(res.v == I(std::vector<long long>(v_table[static_cast<std::size_t>(g) - 1])));
        CHECK(u_from_v(res.v) == res.u);
        CHECK(product_form_check(res.hom_counts, res.v, 5));
    }
}

TEST_CASE("moebius inversion between u and v") {
    auto z = parse_presentation("gens: x; rels:");
    auto uz = u_from_homs(hom_sequence(z, 4));
    CHECK(v_from_u(uz) == I({1, 0, 0, 0}));
    CHECK(u_from_v(I({1, 0, 0, 0})) == uz);

    // v -> u -> v is the identity on arbitrary integer vectors.
    std::mt19937 rng(911);
    std::uniform_int_distribution<int> val(0, 30);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Int> v;
        for (int n = 0; n < 12; ++n) v.emplace_back(val(rng));
        CHECK(v_from_u(u_from_v(v)) == v);
    }

    // C2 has u = (1,1,0): the index-3 entry breaks integrality of v_3.
    CHECK_THROWS_AS(v_from_u(I({1, 1, 0})), NonIntegerResult);
}

TEST_CASE("product form") {
    auto h1 = genus_hom_sequence(1, 5, HomMethod::Character);
    auto v1 = I({1, 1, 1, 1, 1});
    CHECK(product_form_check(h1, v1, 5));

    auto corrupted = v1;
    corrupted[2] += 1;
    CHECK(!product_form_check(h1, corrupted, 5));

    auto z = parse_presentation("gens: x; rels:");
    auto hz = hom_sequence(z, 4);
    CHECK(product_form_check(hz, I({1, 0, 0, 0}), 4));

    CHECK_THROWS_AS(product_form_check(hz, I({1, 0}), 4), IndexOutOfRange);
}

TEST_CASE("congruences between subgroup counts") {
    auto u2 = u_from_homs(genus_hom_sequence(2, 5, HomMethod::Character));
    CHECK(congruence_check(u2, 2, 0));
    CHECK(congruence_check(u2, 2, 1));  // 5275 = 15 mod 4
    CHECK(congruence_check(u2, 3, 0));
    CHECK(congruence_check(u2, 5, 0));

    auto u3 = u_from_homs(genus_hom_sequence(3, 5, HomMethod::Character));
    CHECK(congruence_check(u3, 2, 1));  // 2757307 = 63 mod 4

    CHECK(!congruence_check(I({1, 2, 0, 0}), 2, 0));
    CHECK_THROWS_AS(congruence_check(u2, 2, 2), IndexOutOfRange);
    CHECK_THROWS_AS(congruence_check(u2, 4, 0), InvalidSpec);
}

TEST_CASE("moebius function") {
    const int mu[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0, -1, 1, 1, 0, -1, 0, -1, 0};
    for (int n = 1; n <= 20; ++n) CHECK(moebius(n) == mu[n - 1]);
    CHECK(moebius(49) == 0);
    CHECK(moebius(30) == -1);
    CHECK(moebius(210) == 1);

    for (int n = 1; n <= 200; ++n) {
        int total = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) total += moebius(d);
        CHECK(total == (n == 1 ? 1 : 0));
    }

    CHECK_THROWS_AS(moebius(0), InvalidSpec);
    CHECK_THROWS_AS(moebius(1000001), BoundExceeded);
}
