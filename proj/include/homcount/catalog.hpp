#pragma once

// Fixed reference instances driven by the verification suite and reused by
// the test binaries: concrete small groups, presentations with infinite
// abelianization, and (presentation, endomorphism) pairs for torsor checks.

#include <string>
#include <vector>

#include "homcount/group.hpp"
#include "homcount/presentation.hpp"
#include "homcount/word.hpp"

namespace homcount::catalog {

// Quaternion group of order 8, built from an explicit table so the
// group_from_table path gets real use. Elements in order
// 1, -1, i, -i, j, -j, k, -k.
FiniteGroup q8_group();

// Groups of order <= 60 for torsor sweeps, plus SL2(F_5) (order 120) for
// divisibility sweeps.
std::vector<FiniteGroup> small_groups();
std::vector<FiniteGroup> divisibility_groups();

struct NamedPresentation {
    std::string name;
    Presentation pres;
};

// Presentations with infinite abelianization (the divisibility catalog).
std::vector<NamedPresentation> infinite_abelianization_presentations();

// Constraint classes are picked per target group at run time; identity is
// class 0, "first other" is class 1 (any group of order >= 2 has one).
enum class ClassPick { Identity, FirstOther };

struct PickedConstraint {
    Word word;  // over the presentation's generators
    ClassPick pick = ClassPick::Identity;
};

struct TorsorInstance {
    std::string name;
    Presentation pres;
    AutomorphismData sigma;
    std::vector<PickedConstraint> constraints;
    // Mapping-torus enumeration walks |G|^(k+1) tuples, so instances with
    // many generators cap the group order they run against.
    long long max_group_order = 60;
};

// Pairs whose sigma is consistent on every finite quotient and, where
// constraints are present, maps each constraint word inside its class.
std::vector<TorsorInstance> torsor_instances();

}  // namespace homcount::catalog
