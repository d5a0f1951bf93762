#pragma once

#include "fstrand/plmap.hpp"
#include "fstrand/strand.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace fstrand {

struct Letter {
    int gen = 0;  // 0 or 1
    bool inverse = false;
    auto operator<=>(const Letter&) const = default;
};

// Words act left to right: "x0 x1" applies x0 first, then x1.
using Word = std::vector<Letter>;

// "x0 x1^-1 x0^2", "x0*x1", "id" or "" for the identity.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);
Word inverse(const Word& w);

const PLMap& generator_map(const Letter& l);
const StrandDiagram& generator_diagram(const Letter& l);

PLMap word_map(const Word& w);
// Concatenation of the generator diagrams, left unreduced.
StrandDiagram word_diagram(const Word& w);

// Every word of length at most max_len over x0, x1 and their inverses.
std::vector<Word> all_words(int max_len);

}  // namespace fstrand
