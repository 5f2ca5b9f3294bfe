#pragma once

#include <vector>

#include "homcount/numeric.hpp"

namespace homcount {

// Truncated formal power series with exact rational coefficients. The
// truncation order is fixed at construction; every operation stays at that
// order. Capped at 64 terms, enough for any table this library prints.
class RationalSeries {
  public:
    explicit RationalSeries(int order);

    int order() const { return static_cast<int>(coeff.size()) - 1; }

    std::vector<Rat> coeff;  // index = exponent, size order+1
};

RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b);

// Formal log, needing constant term 1, and formal exp, needing constant
// term 0. Both run the derivative recurrence from F' = A' * F, and are
// mutually inverse up to truncation.
RationalSeries series_log(const RationalSeries& f);
RationalSeries series_exp(const RationalSeries& a);

// (1 - x^n)^e at the given truncation order, for any integer exponent e.
RationalSeries one_minus_power(int n, const Int& e, int order);

}  // namespace homcount
