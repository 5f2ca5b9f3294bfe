#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "homcount/character.hpp"
#include "homcount/group.hpp"
#include "homcount/homenum.hpp"
#include "homcount/numeric.hpp"
#include "homcount/partition.hpp"
#include "homcount/word.hpp"

namespace homcount {

// The slice of a character table every counting formula below consumes:
// exact integer values, one row per irreducible, columns in a fixed class
// order with a distinguished identity column.
struct CharacterData {
    Int order = 0;
    std::vector<Int> class_sizes;
    std::vector<std::vector<Int>> values;
    int identity_class = 0;

    std::size_t class_count() const { return class_sizes.size(); }
    const Int& degree(std::size_t row) const {
        return values[row][static_cast<std::size_t>(identity_class)];
    }
};

CharacterData character_data(const CharacterTable& table);

// An externally supplied table for a group this library cannot build a table
// for itself. Only integer-valued tables are accepted.
struct LoadedCharacterTable {
    CharacterData data;
    std::vector<Int> representative_orders;
    std::map<long long, std::vector<int>> power_maps;  // exponent -> class map
};

// Text format, one field per line, '#' comments allowed:
//   order N
//   class_sizes s0 s1 ...
//   representative_orders o0 o1 ...
//   power_map m c0 c1 ...          (optional, repeatable)
//   values                          (followed by one line per irreducible)
// The loader enforces: sum of sizes = order, a unique identity class (order-1
// representative, size 1), sum of squared degrees = order, and exact row
// orthogonality, so a table that loads is internally consistent.
LoadedCharacterTable parse_character_table(const std::string& text);
LoadedCharacterTable load_character_table(const std::string& path);

// Number of 2g-tuples (x_1,y_1,...,x_g,y_g) whose commutator product
// [x_1,y_1]...[x_g,y_g] equals a fixed element of the given class:
//   sum over irreducibles of (|G|/deg)^(2g-1) * value(z).
Int commutator_count(const CharacterData& T, int genus, int z_class);

// Count with z = identity, g >= 1:  |G| * sum over irreducibles of
// (|G|/deg)^(2g-2). Always divisible by |G|; checked before returning.
Int surface_count(const CharacterData& T, int genus);

// f(chi, C) = |C| * value / deg; an algebraic integer, so for the integer
// tables handled here it must come out an integer.
Rat f_chi(const CharacterData& T, int chi_index, int class_id);

// Number of tuples (z_1,...,z_k), z_i ranging over class C_i, with product
// equal to the identity: sum over irreducibles of (deg^2/|G|) * prod f(chi, C_i).
Int constrained_count(const CharacterData& T, const std::vector<int>& class_ids);

// Brute-force counterpart of constrained_count: walks C_1 x ... x C_{k-1}
// and tests whether the forced last factor lands in C_k. Cost is the product
// of the first k-1 class sizes, checked against the budget up front.
Int constrained_tuple_count(const FiniteGroup& G, const std::vector<int>& class_ids,
                            const Int& budget = EnumOptions{}.budget);

// Tuples of n-cycles in S_n with product 1, per |S_n|:
//   (1/n^2) * sum_{r=0}^{n-1} ((-1)^r r! (n-r-1)!)^(k-2).
Rat ncycle_ratio(int n, int k);

// Four regular semisimple split classes diag(lambda, lambda^-1) in SL2(F_p).
struct EigenvalueTuple {
    long long p = 5;
    std::array<long long, 4> lambdas{};
};

struct FourClassRatio {
    Rat ratio;  // tuple count with product 1, divided by |SL2(F_p)|
    int a = 0;  // half the number of sign vectors with prod lambda_i^{e_i} = 1
};

// Closed form q^2 + 4q + 1 + a*q^2/(q-1) for the four-class tuple count ratio.
FourClassRatio sl2_four_class_ratio(const EigenvalueTuple& e);

// Class id of diag(lambda, lambda^-1) in an SL2-kind group.
int sl2_diagonal_class(const FiniteGroup& G, long long lambda);

// Distribution over conjugacy classes of w(g_1,...,g_arity) across all
// tuples; cost |G|^arity * letters against the budget. Computing this once
// and pairing with each character afterwards keeps the G^2 sweep per group,
// not per character.
std::vector<Int> word_class_histogram(const FiniteGroup& G, const Word& w, int arity,
                                      const Int& budget = EnumOptions{}.budget);

// s(chi, w) = |G|^-2 * sum over (x,y) of chi(w(x,y)) for a word in at most
// two generators.
Rat s_chi(const FiniteGroup& G, const Word& w, const ClassFunction& chi,
          const Int& budget = EnumOptions{}.budget);

// A character-table row reindexed by the conjugacy classes of a concrete
// symmetric group, matching classes through cycle types.
ClassFunction symmetric_class_function(const FiniteGroup& G, const CharacterTable& table,
                                       int row);

// Class id in a Symmetric-kind group of the class with the given cycle type.
int symmetric_class_of_type(const FiniteGroup& G, const Partition& mu);

// Per-irreducible comparison of deg * s(chi, x^-m y x^n y^-1), evaluated by
// sweeping S_d^2, against <Psi^m chi, Psi^n chi> computed purely from the
// character table. The two routes share no code.
struct BsIdentityRow {
    int row = 0;
    Rat lhs;  // deg * s(chi, w)
    Rat rhs;  // inner product of Adams transforms
};

struct BsIdentityReport {
    std::vector<BsIdentityRow> rows;
    bool pass = false;
};

BsIdentityReport bs_identity_check(int symmetric_degree, long long m, long long n,
                                   const Int& budget = EnumOptions{}.budget);

// Number of conjugacy classes C with C^m = C. Cross-checked internally:
// enumerating pairs (x,y) with y x y^-1 = x^m must give exactly |G| times
// this count.
Int m_stable_class_count(const FiniteGroup& G, long long m,
                         const Int& budget = EnumOptions{}.budget);

// Closed form for SL2(F_p), p an odd prime, m even:
//   1 + delta + (1/2) * sum over e1,e2 in {+1,-1} of (gcd(p+e1, m+e2) - 1)
// where delta = 2 when m is a square mod p, else 0.
Int sl2_m_stable_closed_form(long long p, long long m);

}  // namespace homcount
