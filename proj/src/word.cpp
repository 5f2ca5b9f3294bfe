#include "homcount/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>

#include "homcount/errors.hpp"

namespace homcount {

int Word::max_generator() const {
    int m = -1;
    for (int v : letters) m = std::max(m, std::abs(v) - 1);
    return m;
}

Word Word::inverse() const {
    Word w;
    w.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
    return w;
}

void Word::reduce() {
    std::vector<int> out;
    out.reserve(letters.size());
    for (int v : letters) {
        if (!out.empty() && out.back() == -v)
            out.pop_back();
        else
            out.push_back(v);
    }
    letters = std::move(out);
}

Word Word::operator*(const Word& rhs) const {
    Word w;
    w.letters.reserve(letters.size() + rhs.letters.size());
    w.letters = letters;
    for (int v : rhs.letters) {
        if (!w.letters.empty() && w.letters.back() == -v)
            w.letters.pop_back();
        else
            w.letters.push_back(v);
    }
    return w;
}

Word Word::pow(long long k) const {
    Word base = k < 0 ? inverse() : *this;
    long long reps = k < 0 ? -k : k;
    Word out;
    for (long long i = 0; i < reps; ++i) out = out * base;
    return out;
}

Word commutator(const Word& u, const Word& v) { return u * v * u.inverse() * v.inverse(); }

namespace {

struct WordParser {
    const std::string& text;
    const std::vector<std::string>& names;
    const std::map<std::string, int>& index;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(why + " at position " + std::to_string(pos) + " in '" + text + "'");
    }

    long long parse_int() {
        bool neg = false;
        if (!done() && (peek() == '-' || peek() == '+')) neg = text[pos++] == '-';
        if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        long long v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text[pos++] - '0');
            if (v > 1000000) fail("exponent too large");
        }
        return neg ? -v : v;
    }

    std::string parse_identifier() {
        std::size_t start = pos;
        while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
                           peek() == '\''))
            ++pos;
        if (pos == start) fail("expected generator name");
        return text.substr(start, pos - start);
    }

    // Resolves an identifier to generator indices: either one known name, or
    // an unambiguous run of single-character names.
    std::vector<int> resolve(const std::string& id) {
        auto it = index.find(id);
        if (it != index.end()) return {it->second};
        std::vector<int> split;
        for (char c : id) {
            auto cit = index.find(std::string(1, c));
            if (cit == index.end())
                throw ParseError("unknown generator '" + id + "' in '" + text + "'");
            split.push_back(cit->second);
        }
        return split;
    }

    // atom (^ exponent)?, where atom is a name run or a commutator bracket
    Word parse_factor() {
        skip_ws();
        Word prefix, atom;
        if (peek() == '[') {
            ++pos;
            Word u = parse_sequence(",");
            if (done() || peek() != ',') fail("expected ',' in commutator");
            ++pos;
            Word v = parse_sequence("]");
            if (done() || peek() != ']') fail("expected ']'");
            ++pos;
            atom = commutator(u, v);
        } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
            std::vector<int> gens = resolve(parse_identifier());
            for (std::size_t i = 0; i + 1 < gens.size(); ++i)
                prefix = prefix * Word::generator(gens[i]);
            atom = Word::generator(gens.back());
        } else if (peek() == '1') {
            ++pos;  // identity literal
            return Word();
        } else {
            fail("unexpected character '" + std::string(1, peek()) + "'");
        }
        skip_ws();
        if (!done() && peek() == '^') {
            ++pos;
            skip_ws();
            atom = atom.pow(parse_int());
        }
        return prefix * atom;
    }

    Word parse_sequence(const char* stops) {
        Word w;
        while (true) {
            skip_ws();
            if (done()) break;
            if (std::strchr(stops, peek())) break;
            w = w * parse_factor();
        }
        return w;
    }
};

}  // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], static_cast<int>(i));
    WordParser p{text, names, index};
    Word w = p.parse_sequence("");
    p.skip_ws();
    if (!p.done()) p.fail("trailing input");
    return w;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
    if (w.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < w.letters.size()) {
        std::size_t j = i;
        while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
        long long run = static_cast<long long>(j - i);
        int v = w.letters[i];
        int g = std::abs(v) - 1;
        if (!out.empty()) out += " ";
        if (g >= static_cast<int>(names.size()))
            throw IndexOutOfRange("word references generator " + std::to_string(g) +
                                  " beyond the name list");
        out += names[g];
        long long e = v > 0 ? run : -run;
        if (e != 1) out += "^" + std::to_string(e);
        i = j;
    }
    return out;
}

int evaluate_word(const Word& w, const std::vector<int>& images, const FiniteGroup& G) {
    if (w.max_generator() >= static_cast<int>(images.size()))
        throw SizeMismatch("word references generator " + std::to_string(w.max_generator()) +
                           " but only " + std::to_string(images.size()) + " images given");
    int acc = 0;
    for (int v : w.letters) {
        int g = images[std::abs(v) - 1];
        acc = G.mul(acc, v > 0 ? g : G.inv(g));
    }
    return acc;
}

}  // namespace homcount
