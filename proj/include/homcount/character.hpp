#pragma once

#include <vector>

#include "homcount/numeric.hpp"
#include "homcount/partition.hpp"

namespace homcount {

// A class function on some finite group, one exact rational per conjugacy
// class, in whichever canonical class order the context fixes (partition
// order for S_n, class ids for a concrete FiniteGroup).
struct ClassFunction {
    std::vector<Rat> values;
};

// Irreducible character value chi_lambda(mu) via the Murnaghan-Nakayama rule,
// evaluated on the beta-set (first-column hook lengths) of lambda.
Int mn_character_value(const Partition& lambda, const Partition& mu);

// Degree of chi_lambda by the hook length formula, computed independently of
// the recursion above so the two can cross-check each other.
Int hook_length_degree(const Partition& lambda);

struct CharacterTable {
    int n = 0;
    std::vector<Partition> classes;        // reverse-lex partition order
    std::vector<std::vector<Int>> values;  // values[lambda][mu]
    std::vector<Int> class_sizes;
    std::vector<Int> degrees;              // values at the identity class
    int identity_class = 0;                // index of (1^n)

    Int group_order() const;  // n!
    ClassFunction row(int i) const;
};

// Full table for S_n. Construction verifies exact row orthogonality and
// sum of squared degrees = n!, so a returned table is internally consistent.
CharacterTable character_table(int n);

// Adams operation: (Psi^m chi)(mu) = chi(cycle type of x^m) for x of type mu.
ClassFunction adams_transform(long long m, const ClassFunction& chi,
                              const std::vector<Partition>& classes);

// <a,b> = (1/|G|) sum over classes of size * a * conj(b); rational-valued
// class functions are self-conjugate so no conjugation appears.
Rat inner_product(const ClassFunction& a, const ClassFunction& b,
                  const std::vector<Int>& class_sizes);

}  // namespace homcount
