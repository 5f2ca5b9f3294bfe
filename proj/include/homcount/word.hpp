#pragma once

#include <string>
#include <vector>

#include "homcount/group.hpp"

namespace homcount {

// A freely reduced word in abstract generators. Letter +(i+1) is generator i,
// letter -(i+1) its inverse; index 0 therefore never appears.
struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> ls) : letters(std::move(ls)) { reduce(); }

    static Word generator(int i) { return Word({i + 1}); }

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }

    // Largest generator index referenced, -1 for the empty word.
    int max_generator() const;

    Word inverse() const;
    Word operator*(const Word& rhs) const;
    Word pow(long long k) const;

    // Cancels adjacent letter/inverse pairs until none remain.
    void reduce();

    bool operator==(const Word& rhs) const { return letters == rhs.letters; }
};

Word commutator(const Word& u, const Word& v);  // u v u^-1 v^-1

// Grammar: juxtaposed atoms, where an atom is a generator name, a commutator
// bracket [u,v], or either followed by ^<integer>. "x^-2 y" is x^-1 x^-1 y.
// A run of letters that is not itself a generator name splits into single-
// character names when that is unambiguous.
Word parse_word(const std::string& text, const std::vector<std::string>& names);

std::string word_to_string(const Word& w, const std::vector<std::string>& names);

// Left-to-right product of the images (inverse images for negative letters).
int evaluate_word(const Word& w, const std::vector<int>& images, const FiniteGroup& G);

}  // namespace homcount
