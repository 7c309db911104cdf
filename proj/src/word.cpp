#include "cfgraph/word.hpp"

#include <sstream>
#include <stdexcept>

namespace cfgraph {

namespace {

bool all_single_char(const std::set<std::string>& alphabet) {
    for (const std::string& a : alphabet)
        if (a.size() != 1) return false;
    return true;
}

}  // namespace

std::string render_word(const Word& w, const std::set<std::string>& alphabet) {
    const bool join = all_single_char(alphabet);
    std::string out;
    for (const Letter& a : w) {
        if (!out.empty() && !join) out += ' ';
        out += a;
    }
    return out;
}

Word parse_word(const std::string& text, const std::set<std::string>& alphabet) {
    Word out;
    if (text.find_first_of(" \t") != std::string::npos) {
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) {
            if (!alphabet.count(tok))
                throw std::runtime_error("letter \"" + tok + "\" is not in the terminal alphabet");
            out.push_back(tok);
        }
        return out;
    }
    if (!all_single_char(alphabet)) {
        if (alphabet.count(text)) return {text};
        throw std::runtime_error(
            "alphabet has multi-character letters; separate the word's letters with spaces");
    }
    for (char c : text) {
        std::string letter(1, c);
        if (!alphabet.count(letter))
            throw std::runtime_error("letter \"" + letter + "\" is not in the terminal alphabet");
        out.push_back(std::move(letter));
    }
    return out;
}

}  // namespace cfgraph
