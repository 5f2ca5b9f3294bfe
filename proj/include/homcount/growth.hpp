#pragma once

#include <vector>

#include "homcount/homenum.hpp"
#include "homcount/numeric.hpp"
#include "homcount/presentation.hpp"
#include "homcount/series.hpp"

namespace homcount {

enum class HomMethod { Brute, Character };

// h_0..h_N with h_n the number of homomorphisms into S_n (h_0 = 1 for the
// empty symmetric group). Brute enumeration per n; options.budget applies to
// each n separately.
std::vector<Int> hom_sequence(const Presentation& source, int N,
                              const EnumOptions& options = {});

// Same sequence for a genus-g surface group, either by enumeration or summed
// from the S_n character tables.
std::vector<Int> genus_hom_sequence(int genus, int N, HomMethod method,
                                    const EnumOptions& options = {});

// u_n = n * [x^n] log(sum h_n x^n / n!): the number of index-n subgroups of
// the source group. Non-integral output means h was not a hom-count sequence.
std::vector<Int> u_from_homs(const std::vector<Int>& h);

// Moebius pair: v_n = (1/n) * sum_{d|n} mu(n/d) u_d  and  u_n = sum_{d|n} d v_d.
std::vector<Int> v_from_u(const std::vector<Int>& u);
std::vector<Int> u_from_v(const std::vector<Int>& v);

// Does prod_{n<=N} (1 - x^n)^(-v_n) match the exponential generating
// function of h through order N?
bool product_form_check(const std::vector<Int>& h, const std::vector<Int>& v, int N);

// u_{p^(k+1)} == u_{p^k} mod p^(k+1), with u passed 1-based (u[0] = u_1).
bool congruence_check(const std::vector<Int>& u, long long p, int k);

int moebius(long long n);  // trial division, n <= 10^6

struct GrowthResult {
    std::vector<Int> hom_counts;  // h_0..h_N
    std::vector<Int> u;           // u_1..u_N
    std::vector<Int> v;           // v_1..v_N
};

GrowthResult growth_from_homs(const std::vector<Int>& h);

}  // namespace homcount
