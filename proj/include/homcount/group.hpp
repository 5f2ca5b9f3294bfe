#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace homcount {

// Construction limits. The dense multiplication table is the fast path for
// enumeration; above table_bound elements multiply on the fly (permutation
// composition, modular matrix products).
struct GroupOptions {
    std::size_t table_bound = 2048;
    std::size_t assoc_check_bound = 512;
    bool check_associativity = true;
};

struct GroupSpec {
    enum class Kind { Symmetric, Cyclic, SL2, PSL2, Cayley };

    Kind kind = Kind::Cyclic;
    long long n = 1;    // degree for S_n / C_n, odd prime for SL2 / PSL2
    std::string path;   // Cayley table file

    static GroupSpec symmetric(long long n);
    static GroupSpec cyclic(long long n);
    static GroupSpec sl2(long long p);
    static GroupSpec psl2(long long p);
    static GroupSpec cayley(std::string path);

    // Accepts "S5", "C12", "SL2_7", "PSL2_11", "cayley:<path>".
    static GroupSpec parse(const std::string& text);

    std::string name() const;
};

struct ConjugacyClass {
    int id = 0;
    int representative = 0;
    long long size = 0;
    long long centralizer_order = 0;
    std::vector<int> members;  // sorted ascending
};

// A concrete finite group. Elements are dense indices 0..order()-1 and the
// identity is always index 0. Values are immutable and cheap to copy; all
// queries are safe to call from concurrent threads.
class FiniteGroup {
  public:
    long long order() const;
    int identity() const { return 0; }

    // Permutation convention: mul(f, g) applies f first, then g. Fixed once,
    // used everywhere words are evaluated.
    int mul(int a, int b) const;
    int inv(int a) const;
    int conj(int g, int x) const;  // g x g^-1
    int power(int x, long long m) const;

    std::string label(int x) const;

    // Conjugation orbits, computed on first use. Class 0 is the identity
    // class; representatives are the minimal element index of each orbit.
    const std::vector<ConjugacyClass>& classes() const;
    int class_of(int x) const;

    // Parses an element in the group's own notation: cycle notation for S_n
    // ("(1 2 3)(4 5)", "e" or "()" for the identity), a residue for C_n,
    // matrix entries "a,b,c,d" for SL2/PSL2, "g<i>" or a bare index for
    // Cayley-table groups.
    int element_from_text(const std::string& text) const;

    const GroupSpec& spec() const;
    std::string name() const;

    // Raw table pointer when the dense fast path is available, else nullptr.
    // Hot loops index it directly as table[a * order + b].
    const std::uint16_t* table_data() const;

    struct Impl;
    explicit FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  private:
    std::shared_ptr<const Impl> impl_;
};

FiniteGroup build_group(const GroupSpec& spec, const GroupOptions& options = {});

// Builds a group from an in-memory table (same validation as a Cayley file).
// Row i, column j holds the index of element i * element j; index 0 must be
// the identity.
FiniteGroup group_from_table(const std::vector<std::vector<int>>& table,
                             const std::string& name,
                             const std::vector<std::string>& labels = {},
                             const GroupOptions& options = {});

const std::vector<ConjugacyClass>& conjugacy_classes(const FiniteGroup& G);

// Class of x^m as a map on class ids. Well defined on classes; checked on a
// second orbit member whenever one exists.
std::vector<int> power_class_map(const FiniteGroup& G, long long m);

// Image table of an element of a Symmetric-kind group: entry i is where
// point i goes. Rejects other kinds.
std::vector<int> permutation_images(const FiniteGroup& G, int element);

}  // namespace homcount
