#include "homcount/growth.hpp"

#include <string>

#include "homcount/character.hpp"
#include "homcount/errors.hpp"
#include "homcount/frobenius.hpp"
#include "homcount/group.hpp"

namespace homcount {

namespace {

constexpr long long kMoebiusBound = 1000000;

bool is_small_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<Int> check_hom_prefix(const std::vector<Int>& h) {
    if (h.empty() || h[0] != 1)
        throw InvalidSpec("hom count sequence must start with h_0 = 1");
    return h;
}

}  // namespace

std::vector<Int> hom_sequence(const Presentation& source, int N, const EnumOptions& options) {
    if (N < 0) throw InvalidSpec("hom_sequence needs N >= 0");
    std::vector<Int> h;
    h.reserve(static_cast<std::size_t>(N) + 1);
    h.emplace_back(1);  // the empty symmetric group
    EnumOptions opt = options;
    opt.store = false;
    for (int n = 1; n <= N; ++n) {
        FiniteGroup Sn = build_group(GroupSpec::symmetric(n));
        h.push_back(enumerate_homs(source, Sn, opt).count);
    }
    return h;
}

std::vector<Int> genus_hom_sequence(int genus, int N, HomMethod method,
                                    const EnumOptions& options) {
    if (genus < 0) throw InvalidSpec("genus must be non-negative");
    if (method == HomMethod::Brute) return hom_sequence(surface_presentation(genus), N, options);
    if (genus < 1)
        throw InvalidSpec("character method needs genus >= 1");
    if (N < 0) throw InvalidSpec("hom_sequence needs N >= 0");
    std::vector<Int> h{1};
    for (int n = 1; n <= N; ++n)
        h.push_back(surface_count(character_data(character_table(n)), genus));
    return h;
}

std::vector<Int> u_from_homs(const std::vector<Int>& h) {
    check_hom_prefix(h);
    int N = static_cast<int>(h.size()) - 1;
    RationalSeries f(N);
    for (int n = 0; n <= N; ++n)
        f.coeff[static_cast<std::size_t>(n)] =
            Rat(h[static_cast<std::size_t>(n)], factorial(static_cast<unsigned>(n)));
    RationalSeries a = series_log(f);
    std::vector<Int> u;
    u.reserve(static_cast<std::size_t>(N));
    for (int n = 1; n <= N; ++n) {
        Rat un = Rat(n) * a.coeff[static_cast<std::size_t>(n)];
        if (!is_integer(un))
            throw NonIntegerResult("u_" + std::to_string(n) + " = " + to_decimal(un) +
                                   " is not an integer; input is not a hom-count sequence");
        u.push_back(to_integer(un));
    }
    return u;
}

std::vector<Int> v_from_u(const std::vector<Int>& u) {
    std::vector<Int> v;
    v.reserve(u.size());
    for (std::size_t n = 1; n <= u.size(); ++n) {
        Int acc = 0;
        for (std::size_t d = 1; d <= n; ++d)
            if (n % d == 0) acc += Int(moebius(static_cast<long long>(n / d))) * u[d - 1];
        if (acc % Int(n) != 0)
            throw NonIntegerResult("v_" + std::to_string(n) + " = " + to_decimal(acc) + "/" +
                                   std::to_string(n) + " is not an integer");
        v.push_back(acc / Int(n));
    }
    return v;
}

std::vector<Int> u_from_v(const std::vector<Int>& v) {
    std::vector<Int> u;
    u.reserve(v.size());
    for (std::size_t n = 1; n <= v.size(); ++n) {
        Int acc = 0;
        for (std::size_t d = 1; d <= n; ++d)
            if (n % d == 0) acc += Int(d) * v[d - 1];
        u.push_back(acc);
    }
    return u;
}

bool product_form_check(const std::vector<Int>& h, const std::vector<Int>& v, int N) {
    if (N < 0 || static_cast<std::size_t>(N) >= h.size() ||
        static_cast<std::size_t>(N) > v.size())
        throw IndexOutOfRange("product form check needs h_0..h_N and v_1..v_N");
    RationalSeries egf(N);
    for (int n = 0; n <= N; ++n)
        egf.coeff[static_cast<std::size_t>(n)] =
            Rat(h[static_cast<std::size_t>(n)], factorial(static_cast<unsigned>(n)));
    RationalSeries prod(N);
    prod.coeff[0] = 1;
    for (int n = 1; n <= N; ++n)
        prod = series_mul(prod, one_minus_power(n, -v[static_cast<std::size_t>(n) - 1], N));
    return prod.coeff == egf.coeff;
}

bool congruence_check(const std::vector<Int>& u, long long p, int k) {
    if (!is_small_prime(p)) throw InvalidSpec("congruence check needs a prime modulus base");
    if (k < 0 || k > 40) throw InvalidSpec("congruence exponent out of range");
    long long lo = 1, hi = 1;
    for (int i = 0; i < k; ++i) lo *= p;
    hi = lo * p;
    if (static_cast<std::size_t>(hi) > u.size())
        throw IndexOutOfRange("congruence needs u up to index " + std::to_string(hi));
    Int diff = u[static_cast<std::size_t>(hi) - 1] - u[static_cast<std::size_t>(lo) - 1];
    return diff % hi == 0;
}

int moebius(long long n) {
    if (n < 1) throw InvalidSpec("moebius needs n >= 1");
    if (n > kMoebiusBound)
        throw BoundExceeded("moebius argument " + std::to_string(n) + " over bound");
    int primes = 0;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        n /= d;
        if (n % d == 0) return 0;  // square factor
        ++primes;
    }
    if (n > 1) ++primes;
    return primes % 2 == 0 ? 1 : -1;
}

GrowthResult growth_from_homs(const std::vector<Int>& h) {
    GrowthResult out;
    out.hom_counts = check_hom_prefix(h);
    out.u = u_from_homs(h);
    out.v = v_from_u(out.u);
    return out;
}

}  // namespace homcount
