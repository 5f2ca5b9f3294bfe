#include "homcount/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "homcount/errors.hpp"
#include "homcount/smith.hpp"

namespace homcount {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'') return false;
    return true;
}

// Splits on commas that are not nested inside commutator brackets.
std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
    Presentation P;
    bool saw_gens = false;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(';', pos);
        std::string section = trim(text.substr(pos, next == std::string::npos ? next : next - pos));
        pos = next == std::string::npos ? text.size() + 1 : next + 1;
        if (section.empty()) continue;
        std::size_t colon = section.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected 'gens:' or 'rels:' section, got '" + section + "'");
        std::string key = trim(section.substr(0, colon));
        std::string value = section.substr(colon + 1);
        if (key == "gens") {
            if (saw_gens) throw ParseError("duplicate gens section");
            saw_gens = true;
            if (!trim(value).empty()) {
                for (const std::string& raw : split_top_level(value)) {
                    std::string name = trim(raw);
                    if (!valid_name(name))
                        throw ParseError("bad generator name '" + name + "'");
                    if (std::find(P.generator_names.begin(), P.generator_names.end(), name) !=
                        P.generator_names.end())
                        throw ParseError("duplicate generator '" + name + "'");
                    P.generator_names.push_back(name);
                }
            }
        } else if (key == "rels") {
            if (!saw_gens) throw ParseError("rels section before gens");
            if (trim(value).empty()) continue;
            for (const std::string& raw : split_top_level(value)) {
                std::string rel = trim(raw);
                if (rel.empty()) throw ParseError("empty relator in '" + value + "'");
                P.relators.push_back(parse_word(rel, P.generator_names));
            }
        } else {
            throw ParseError("unknown section '" + key + "'");
        }
    }
    if (!saw_gens) throw ParseError("missing gens section in '" + text + "'");
    return P;
}

AutomorphismData parse_automorphism(const std::string& text, const Presentation& P) {
    AutomorphismData sigma;
    sigma.images.assign(P.generator_names.size(), Word());
    std::vector<bool> assigned(P.generator_names.size(), false);
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(';', pos);
        std::string entry = trim(text.substr(pos, next == std::string::npos ? next : next - pos));
        pos = next == std::string::npos ? text.size() + 1 : next + 1;
        if (entry.empty()) continue;
        std::size_t arrow = entry.find("->");
        if (arrow == std::string::npos)
            throw ParseError("expected '<gen> -> <word>', got '" + entry + "'");
        std::string lhs = trim(entry.substr(0, arrow));
        auto it = std::find(P.generator_names.begin(), P.generator_names.end(), lhs);
        if (it == P.generator_names.end())
            throw ParseError("'" + lhs + "' is not a generator");
        std::size_t idx = static_cast<std::size_t>(it - P.generator_names.begin());
        if (assigned[idx]) throw ParseError("generator '" + lhs + "' mapped twice");
        assigned[idx] = true;
        sigma.images[idx] = parse_word(entry.substr(arrow + 2), P.generator_names);
    }
    for (std::size_t i = 0; i < assigned.size(); ++i)
        if (!assigned[i])
            throw ParseError("no image given for generator '" + P.generator_names[i] + "'");
    return sigma;
}

std::string presentation_to_string(const Presentation& P) {
    std::string out = "gens: ";
    for (std::size_t i = 0; i < P.generator_names.size(); ++i) {
        if (i) out += ", ";
        out += P.generator_names[i];
    }
    out += "; rels: ";
    for (std::size_t i = 0; i < P.relators.size(); ++i) {
        if (i) out += ", ";
        out += word_to_string(P.relators[i], P.generator_names);
    }
    return out;
}

std::vector<std::vector<Int>> exponent_matrix(const Presentation& P) {
    std::vector<std::vector<Int>> m(P.relators.size(),
                                    std::vector<Int>(P.generator_names.size(), 0));
    for (std::size_t j = 0; j < P.relators.size(); ++j)
        for (int v : P.relators[j].letters) m[j][std::abs(v) - 1] += v > 0 ? 1 : -1;
    return m;
}

AbelianizationInfo abelianization(const Presentation& P) {
    AbelianizationInfo info;
    auto diag = smith_normal_form(exponent_matrix(P));
    int rank = 0;
    for (const Int& d : diag) {
        if (d == 0) continue;
        ++rank;
        if (d > 1) info.torsion_divisors.push_back(d);
    }
    info.free_rank = P.generator_count() - rank;
    return info;
}

Presentation surface_presentation(int g) {
    if (g < 0) throw InvalidSpec("genus must be non-negative");
    Presentation P;
    Word relator;
    for (int i = 0; i < g; ++i) {
        P.generator_names.push_back("x" + std::to_string(i + 1));
        P.generator_names.push_back("y" + std::to_string(i + 1));
        relator = relator * commutator(Word::generator(2 * i), Word::generator(2 * i + 1));
    }
    if (g > 0) P.relators.push_back(relator);
    return P;
}

Presentation semidirect_presentation(const Presentation& P, const AutomorphismData& sigma) {
    int k = P.generator_count();
    if (static_cast<int>(sigma.images.size()) != k)
        throw SizeMismatch("automorphism has " + std::to_string(sigma.images.size()) +
                           " images for " + std::to_string(k) + " generators");
    for (const Word& w : sigma.images)
        if (w.max_generator() >= k)
            throw SizeMismatch("automorphism image uses an unknown generator");

    Presentation Q = P;
    std::string tname = "t";
    while (std::find(Q.generator_names.begin(), Q.generator_names.end(), tname) !=
           Q.generator_names.end())
        tname += "'";
    Q.generator_names.push_back(tname);
    Word t = Word::generator(k);
    for (int i = 0; i < k; ++i)
        Q.relators.push_back(t * Word::generator(i) * t.inverse() * sigma.images[i].inverse());
    return Q;
}

}  // namespace homcount
