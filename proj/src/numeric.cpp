#include "homcount/numeric.hpp"

#include <limits>
#include <sstream>

#include "homcount/errors.hpp"

namespace homcount {

Rat rat_pow(const Rat& q, long long e) {
    if (e == 0) return Rat(1);
    bool invert = e < 0;
    unsigned long long k = invert ? static_cast<unsigned long long>(-(e + 1)) + 1
                                  : static_cast<unsigned long long>(e);
    if (invert && q == 0) throw Error("rat_pow: zero base with negative exponent");
    Int num = numerator(q);
    Int den = denominator(q);
    Int pn = 1;
    Int pd = 1;
    Int bn = num;
    Int bd = den;
    while (k > 0) {
        if (k & 1) {
            pn *= bn;
            pd *= bd;
        }
        bn *= bn;
        bd *= bd;
        k >>= 1;
    }
    return invert ? Rat(pd, pn) : Rat(pn, pd);
}

Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

Int factorial(const Int& n) {
    if (n < 0 || n > Int(std::numeric_limits<unsigned>::max()))
        throw InvalidSpec("factorial argument out of range");
    return factorial(n.convert_to<unsigned>());
}

Int binomial(const Int& n, unsigned k) {
    Int num = 1;
    Int den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= n - static_cast<int>(i);
        den *= static_cast<int>(i) + 1;
    }
    if (num % den != 0) throw Error("binomial: non-integral result");
    return num / den;
}

bool is_integer(const Rat& q) { return denominator(q) == 1; }

Int to_integer(const Rat& q) {
    if (!is_integer(q)) throw NonIntegerResult("expected an integer, got " + to_decimal(q));
    return numerator(q);
}

std::string to_decimal(const Int& v) { return v.str(); }

std::string to_decimal(const Rat& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

bool is_odd_prime(long long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

}  // namespace homcount
