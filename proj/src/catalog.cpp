#include "homcount/catalog.hpp"

namespace homcount::catalog {

namespace {

// Basis product on {1, i, j, k} as (axis, sign): axis 0 is the real unit.
std::pair<int, int> axis_mul(int a, int b) {
    if (a == 0) return {b, 0};
    if (b == 0) return {a, 0};
    if (a == b) return {0, 1};  // i^2 = j^2 = k^2 = -1
    // ijk cyclic: ij = k, jk = i, ki = j; swapped order flips the sign.
    int c = 6 - a - b;
    bool forward = (b - a + 3) % 3 == 1;
    return {c, forward ? 0 : 1};
}

AutomorphismData identity_sigma(const Presentation& P) {
    AutomorphismData sigma;
    for (int i = 0; i < P.generator_count(); ++i)
        sigma.images.push_back(Word{{i + 1}});
    return sigma;
}

}  // namespace

FiniteGroup q8_group() {
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            auto [axis, sign] = axis_mul(x / 2, y / 2);
            table[x][y] = axis * 2 + ((x % 2) ^ (y % 2) ^ sign);
        }
    return group_from_table(table, "Q8",
                            {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

std::vector<FiniteGroup> small_groups() {
    return {
        build_group(GroupSpec::cyclic(2)),
        build_group(GroupSpec::cyclic(6)),
        build_group(GroupSpec::symmetric(3)),
        q8_group(),
        build_group(GroupSpec::symmetric(4)),
        build_group(GroupSpec::psl2(5)),  // simple of order 60
    };
}

std::vector<FiniteGroup> divisibility_groups() {
    auto out = small_groups();
    out.push_back(build_group(GroupSpec::sl2(5)));  // order 120, center Z/2
    return out;
}

std::vector<NamedPresentation> infinite_abelianization_presentations() {
    std::vector<NamedPresentation> out;
    out.push_back({"torus", surface_presentation(1)});
    out.push_back({"genus2", surface_presentation(2)});
    out.push_back({"klein-bottle",
                   parse_presentation("gens: a, b; rels: a b a^-1 b")});
    // Baumslag-Solitar pattern x^-m y x^n y^-1, matching the fp tests.
    out.push_back({"bs-2-1",
                   parse_presentation("gens: x, y; rels: x^-2 y x y^-1")});
    out.push_back({"bs-2-3",
                   parse_presentation("gens: x, y; rels: x^-2 y x^3 y^-1")});
    out.push_back({"commutator-one-tail",
                   parse_presentation("gens: u, v, z; rels: [u,v] z")});
    out.push_back({"commutator-two-tails",
                   parse_presentation("gens: u, v, z, w; rels: [u,v] z w")});
    return out;
}

std::vector<TorsorInstance> torsor_instances() {
    std::vector<TorsorInstance> out;
    auto add = [&out](std::string name, const std::string& pres_text,
                      const std::string& sigma_text,
                      std::vector<PickedConstraint> constraints = {},
                      long long max_order = 60) {
        Presentation P = parse_presentation(pres_text);
        AutomorphismData sigma = sigma_text.empty()
                                     ? identity_sigma(P)
                                     : parse_automorphism(sigma_text, P);
        out.push_back({std::move(name), std::move(P), std::move(sigma),
                       std::move(constraints), max_order});
    };

    add("free1-identity", "gens: x; rels:", "");
    add("free1-inversion", "gens: x; rels:", "x -> x^-1");
    add("free2-swap", "gens: x, y; rels:", "x -> y; y -> x");
    add("torus-identity", "gens: x, y; rels: [x,y]", "");
    // [x^-1, y^-1] is a conjugate of [x,y], so inversion is consistent.
    add("torus-inversion", "gens: x, y; rels: [x,y]", "x -> x^-1; y -> y^-1");
    add("torus-swap", "gens: x, y; rels: [x,y]", "x -> y; y -> x");
    // In the Klein bottle group a^-1 b a = b^-1, so flipping a keeps the
    // relator: its sigma-image a^-1 b a b is again trivial in the group.
    add("klein-flip", "gens: a, b; rels: a b a^-1 b", "a -> a^-1; b -> b");
    add("infdihedral-swap", "gens: x, y; rels: x^2, y^2", "x -> y; y -> x");
    // Five generators upstairs: keep the targets small.
    add("genus2-handle-swap", "gens: x1, y1, x2, y2; rels: [x1,y1] [x2,y2]",
        "x1 -> x2; y1 -> y2; x2 -> x1; y2 -> y1", {}, 8);
    add("free1-id-constrained", "gens: x; rels:", "",
        {{Word{{1}}, ClassPick::FirstOther}});
    // sigma sends [x,y] to [x^-1,y^-1], a conjugate, so the identity-class
    // constraint (commuting pairs) is sigma-stable.
    add("torus-inversion-constrained", "gens: x, y; rels: [x,y]",
        "x -> x^-1; y -> y^-1",
        {{Word{{1, 2, -1, -2}}, ClassPick::Identity}});
    // sigma sends xy to yx, a conjugate, so the class constraint is stable.
    add("free2-swap-constrained", "gens: x, y; rels:", "x -> y; y -> x",
        {{Word{{1, 2}}, ClassPick::FirstOther}});

    return out;
}

}  // namespace homcount::catalog
