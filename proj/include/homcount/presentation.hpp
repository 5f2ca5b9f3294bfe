#pragma once

#include <string>
#include <vector>

#include "homcount/numeric.hpp"
#include "homcount/word.hpp"

namespace homcount {

struct Presentation {
    std::vector<std::string> generator_names;
    std::vector<Word> relators;

    int generator_count() const { return static_cast<int>(generator_names.size()); }
};

// Generator images of an endomorphism sigma, one word per generator. Whether
// sigma is an automorphism is deliberately not decided here; finite-quotient
// checks downstream report inconsistency instead.
struct AutomorphismData {
    std::vector<Word> images;
};

struct AbelianizationInfo {
    int free_rank = 0;
    std::vector<Int> torsion_divisors;  // elementary divisors > 1, each dividing the next

    bool infinite() const { return free_rank >= 1; }
};

// Grammar: "gens: x, y; rels: [x,y], x^2 y^-3". The rels section may be empty
// or missing. Relators are split on commas at bracket depth zero.
Presentation parse_presentation(const std::string& text);

// Grammar: "x -> x^-1; y -> y". Every generator of P must get exactly one
// image; images are words over P's generators.
AutomorphismData parse_automorphism(const std::string& text, const Presentation& P);

std::string presentation_to_string(const Presentation& P);

// Row j, column i: net exponent of generator i in relator j.
std::vector<std::vector<Int>> exponent_matrix(const Presentation& P);

AbelianizationInfo abelianization(const Presentation& P);

// 2g generators x1, y1, ..., xg, yg with the single relator
// [x1,y1]...[xg,yg]; g = 0 gives the empty presentation.
Presentation surface_presentation(int g);

// Adds a generator t and, per generator x of P, the relator t x t^-1 sigma(x)^-1.
Presentation semidirect_presentation(const Presentation& P, const AutomorphismData& sigma);

}  // namespace homcount
