#include "homcount/series.hpp"

#include <string>

#include "homcount/errors.hpp"

namespace homcount {

namespace {
constexpr int kSeriesOrderBound = 64;
}

RationalSeries::RationalSeries(int order) {
    if (order < 0) throw InvalidSpec("series order must be non-negative");
    if (order > kSeriesOrderBound)
        throw BoundExceeded("series order " + std::to_string(order) + " exceeds bound " +
                            std::to_string(kSeriesOrderBound));
    coeff.assign(static_cast<std::size_t>(order) + 1, Rat(0));
}

RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b) {
    if (a.order() != b.order())
        throw SizeMismatch("series factors have different truncation orders");
    RationalSeries c(a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a.coeff[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; i + j <= a.order(); ++j)
            c.coeff[static_cast<std::size_t>(i + j)] +=
                a.coeff[static_cast<std::size_t>(i)] * b.coeff[static_cast<std::size_t>(j)];
    }
    return c;
}

RationalSeries series_log(const RationalSeries& f) {
    if (f.coeff[0] != 1)
        throw BadConstantTerm("log needs constant term 1, got " + to_decimal(f.coeff[0]));
    int N = f.order();
    RationalSeries a(N);
    // From F' = A'F with f_0 = 1:
    //   a_n = f_n - (1/n) * sum_{j=1}^{n-1} j a_j f_{n-j}
    for (int n = 1; n <= N; ++n) {
        Rat acc = 0;
        for (int j = 1; j < n; ++j)
            acc += Rat(j) * a.coeff[static_cast<std::size_t>(j)] *
                   f.coeff[static_cast<std::size_t>(n - j)];
        a.coeff[static_cast<std::size_t>(n)] = f.coeff[static_cast<std::size_t>(n)] - acc / Rat(n);
    }
    return a;
}

RationalSeries series_exp(const RationalSeries& a) {
    if (a.coeff[0] != 0)
        throw BadConstantTerm("exp needs constant term 0, got " + to_decimal(a.coeff[0]));
    int N = a.order();
    RationalSeries f(N);
    f.coeff[0] = 1;
    // n f_n = sum_{j=1}^{n} j a_j f_{n-j}
    for (int n = 1; n <= N; ++n) {
        Rat acc = 0;
        for (int j = 1; j <= n; ++j)
            acc += Rat(j) * a.coeff[static_cast<std::size_t>(j)] *
                   f.coeff[static_cast<std::size_t>(n - j)];
        f.coeff[static_cast<std::size_t>(n)] = acc / Rat(n);
    }
    return f;
}

RationalSeries one_minus_power(int n, const Int& e, int order) {
    if (n < 1) throw InvalidSpec("one_minus_power needs n >= 1");
    RationalSeries out(order);
    if (e >= 0) {
        // Finite binomial expansion of (1 - x^n)^e.
        for (int j = 0; static_cast<long long>(j) * n <= order; ++j) {
            if (Int(j) > e) break;
            Int c = binomial(e, static_cast<unsigned>(j));
            out.coeff[static_cast<std::size_t>(j * n)] = Rat(j % 2 == 0 ? c : -c);
        }
    } else {
        // (1 - x^n)^(-k) = sum_j C(k+j-1, j) x^(nj)
        Int k = -e;
        for (int j = 0; static_cast<long long>(j) * n <= order; ++j)
            out.coeff[static_cast<std::size_t>(j * n)] =
                Rat(binomial(k + j - 1, static_cast<unsigned>(j)));
    }
    return out;
}

}  // namespace homcount
