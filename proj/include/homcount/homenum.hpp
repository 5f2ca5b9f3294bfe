#pragma once

#include <vector>

#include "homcount/group.hpp"
#include "homcount/numeric.hpp"
#include "homcount/presentation.hpp"

namespace homcount {

struct HomAssignment {
    std::vector<int> images;  // one group element index per generator

    bool operator==(const HomAssignment& rhs) const { return images == rhs.images; }
    bool operator<(const HomAssignment& rhs) const { return images < rhs.images; }
};

// Requires every listed word to evaluate into the given conjugacy class.
struct ClassConstraint {
    std::vector<Word> words;
    int class_id = 0;
};

struct EnumOptions {
    // Budget is |G|^generators * max(1, total letters of relators and
    // constraint words); a hardware-independent proxy for the work done.
    Int budget = Int(100000000);
    int workers = 1;
    bool store = true;  // false streams counts without keeping assignments
};

struct HomSet {
    Presentation presentation;
    FiniteGroup group;
    std::vector<HomAssignment> assignments;  // lexicographic; empty in count-only mode
    Int count = 0;
    bool stored = true;
};

struct OrbitInfo {
    HomAssignment representative;  // lexicographically smallest member
    long long size = 0;
    long long stabilizer_order = 0;
};

struct OrbitDecomposition {
    std::vector<OrbitInfo> orbits;
};

struct FiberEntry {
    HomAssignment base;
    long long fiber_size = 0;
    long long stabilizer_order = 0;
    bool twisted = false;  // member of the sigma-fixed-up-to-conjugacy subset
};

struct TorsorReport {
    Int upstairs_count = 0;
    std::vector<FiberEntry> fibers;  // one entry per downstairs homomorphism
    Rat quotient = 0;                // upstairs_count / |G|
    Int orbit_count = 0;             // conjugation orbits of the twisted subset
    bool pass = false;
};

// Cost of the would-be enumeration under the budget model above.
Int enumeration_cost(const Presentation& P, const FiniteGroup& G,
                     const std::vector<ClassConstraint>& constraints = {});

// All homomorphisms P -> G, in lexicographic order of image tuples. The
// search assigns generators one at a time and prunes with every relator whose
// support is fully assigned. Deterministic for any worker count.
HomSet enumerate_homs(const Presentation& P, const FiniteGroup& G, const EnumOptions& options = {});

HomSet enumerate_constrained(const Presentation& P, const FiniteGroup& G,
                             const std::vector<ClassConstraint>& constraints,
                             const EnumOptions& options = {});

// Conjugation orbits (g acting pointwise on images) with exact stabilizer
// orders. Requires a stored HomSet that is closed under conjugation.
OrbitDecomposition orbit_decomposition(const HomSet& H);

// Subset of phi with phi(sigma(x_i)) = g phi(x_i) g^-1 for a single g and all
// generators. This sigma-forward test is the conjugate-flip of the usual
// definition via sigma^-1, so sigma itself is the only input needed.
HomSet twisted_fixed_subset(const HomSet& H, const AutomorphismData& sigma);

// Checks that restriction from the mapping torus of (P, sigma) is a torsor:
// fibers over twisted points have exactly stabilizer size, fibers elsewhere
// are empty, and the |G|-quotient of the upstairs count is the orbit count of
// the twisted subset. Constraint words must avoid the new stable generator.
TorsorReport verify_torsor(const Presentation& P, const AutomorphismData& sigma,
                           const FiniteGroup& G,
                           const std::vector<ClassConstraint>& constraints = {},
                           const EnumOptions& options = {});

}  // namespace homcount
