#include "homcount/character.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "homcount/errors.hpp"

namespace homcount {

namespace {

// Beta set of lambda with exactly len(lambda) beads: {lambda_i + (L-1-i)},
// stored ascending. Removing a border strip of length l is moving one bead
// down by l onto an empty position; the sign is (-1)^(beads jumped over).
std::vector<int> beta_set(const Partition& lambda) {
    int L = static_cast<int>(lambda.parts.size());
    std::vector<int> beta(lambda.parts.size());
    for (int i = 0; i < L; ++i) beta[static_cast<std::size_t>(i)] = lambda.parts[static_cast<std::size_t>(i)] + (L - 1 - i);
    std::sort(beta.begin(), beta.end());
    return beta;
}

using Memo = std::map<std::pair<std::vector<int>, std::size_t>, Int>;

Int mn_rec(const std::vector<int>& beta, const std::vector<int>& mu,
           std::size_t pos, Memo& memo) {
    // Strip sizes consumed so far track the bead-sum exactly, so once mu is
    // exhausted the beta set is forced back to the staircase: value 1.
    if (pos == mu.size()) return 1;
    auto key = std::make_pair(beta, pos);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int l = mu[pos];
    Int total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - l;
        if (target < 0) continue;
        if (std::binary_search(beta.begin(), beta.end(), target)) continue;
        int jumped = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++jumped;
        std::vector<int> next = beta;
        next[i] = target;
        std::sort(next.begin(), next.end());
        Int sub = mn_rec(next, mu, pos + 1, memo);
        total += (jumped % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

Int mn_character_value(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n())
        throw SizeMismatch("character value needs |lambda| = |mu|");
    Memo memo;
    // Consume parts of mu largest-first; any fixed order gives the same value.
    return mn_rec(beta_set(lambda), mu.parts, 0, memo);
}

Int hook_length_degree(const Partition& lambda) {
    Partition conj = conjugate_partition(lambda);
    Int hooks = 1;
    for (std::size_t i = 0; i < lambda.parts.size(); ++i)
        for (int j = 0; j < lambda.parts[i]; ++j) {
            int arm = lambda.parts[i] - j - 1;
            int leg = conj.parts[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            hooks *= arm + leg + 1;
        }
    Int f = factorial(Int(lambda.n()));
    if (f % hooks != 0) throw Error("hook product does not divide n!");
    return f / hooks;
}

Int CharacterTable::group_order() const { return factorial(Int(n)); }

ClassFunction CharacterTable::row(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= values.size())
        throw IndexOutOfRange("character table row out of range");
    ClassFunction f;
    for (const Int& v : values[static_cast<std::size_t>(i)]) f.values.emplace_back(v);
    return f;
}

CharacterTable character_table(int n) {
    CharacterTable t;
    t.n = n;
    t.classes = partitions(n);
    std::size_t k = t.classes.size();
    t.identity_class = static_cast<int>(k) - 1;  // (1^n) is last in reverse-lex
    t.class_sizes.reserve(k);
    for (const Partition& mu : t.classes) t.class_sizes.push_back(symmetric_class_size(mu));

    t.values.assign(k, std::vector<Int>(k));
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c)
            t.values[r][c] = mn_character_value(t.classes[r], t.classes[c]);

    Int order = t.group_order();
    Int degree_sq_sum = 0;
    for (std::size_t r = 0; r < k; ++r) {
        t.degrees.push_back(t.values[r][static_cast<std::size_t>(t.identity_class)]);
        degree_sq_sum += t.degrees[r] * t.degrees[r];
        for (std::size_t s = r; s < k; ++s) {
            Int dot = 0;
            for (std::size_t c = 0; c < k; ++c)
                dot += t.class_sizes[c] * t.values[r][c] * t.values[s][c];
            if (dot != (r == s ? order : Int(0)))
                throw Error("character table failed row orthogonality");
        }
    }
    if (degree_sq_sum != order)
        throw Error("character table degrees do not sum-of-squares to n!");
    return t;
}

ClassFunction adams_transform(long long m, const ClassFunction& chi,
                              const std::vector<Partition>& classes) {
    if (chi.values.size() != classes.size())
        throw SizeMismatch("adams_transform: value count != class count");
    ClassFunction out;
    out.values.reserve(classes.size());
    for (const Partition& mu : classes) {
        Partition pw = power_cycle_type(mu, m);
        out.values.push_back(chi.values[static_cast<std::size_t>(partition_index(classes, pw))]);
    }
    return out;
}

Rat inner_product(const ClassFunction& a, const ClassFunction& b,
                  const std::vector<Int>& class_sizes) {
    if (a.values.size() != b.values.size() || a.values.size() != class_sizes.size())
        throw SizeMismatch("inner_product: mismatched class counts");
    Rat sum = 0;
    Int order = 0;
    for (std::size_t i = 0; i < class_sizes.size(); ++i) {
        sum += Rat(class_sizes[i]) * a.values[i] * b.values[i];
        order += class_sizes[i];
    }
    if (order == 0) throw SizeMismatch("inner_product: empty class list");
    return sum / Rat(order);
}

}  // namespace homcount
