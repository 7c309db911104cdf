// word.hpp -- terminal words as sequences of letters (letter names may be
// longer than one character), plus the length-then-lexicographic order used
// for all enumeration output.
#pragma once

#include <set>
#include <string>
#include <vector>

namespace cfgraph {

using Letter = std::string;
using Word = std::vector<Letter>;

struct LengthLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

using WordSet = std::set<Word, LengthLexLess>;

/// Renders a word for output. When every letter of the alphabet is a single
/// character the letters are concatenated, otherwise they are joined with
/// single spaces. The empty word renders as "".
std::string render_word(const Word& w, const std::set<std::string>& alphabet);

/// Parses user text into a word over the given alphabet. Text containing
/// whitespace is split into tokens; otherwise, when all alphabet letters are
/// single characters, the text is split character by character. Throws
/// std::runtime_error on letters outside the alphabet or when the split is
/// ambiguous (multi-character letters without separating spaces).
Word parse_word(const std::string& text, const std::set<std::string>& alphabet);

}  // namespace cfgraph
