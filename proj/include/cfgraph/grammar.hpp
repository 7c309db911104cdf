// grammar.hpp -- context-free grammars, Chomsky normal form conversion, and
// the CYK membership oracle the rest of the toolkit is cross-checked against.
#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cfgraph/word.hpp"

namespace cfgraph {

enum class SymbolKind { nonterminal, terminal };

struct Symbol {
    std::string name;
    SymbolKind kind = SymbolKind::nonterminal;

    auto operator<=>(const Symbol&) const = default;
};

inline Symbol nt(std::string name) { return {std::move(name), SymbolKind::nonterminal}; }
inline Symbol term(std::string name) { return {std::move(name), SymbolKind::terminal}; }

/// A production head -> body. An empty body denotes an eps-production; those
/// are legal only in pre-normalization input and are removed by to_cnf.
struct Production {
    std::string head;
    std::vector<Symbol> body;

    auto operator<=>(const Production&) const = default;
};

struct Grammar {
    std::set<std::string> nonterminals;
    std::set<std::string> terminals;
    std::vector<Production> productions;  // duplicate-free, stable order
    std::string start;
};

/// A grammar whose productions are all A -> B C (two nonterminals) or
/// A -> a (one terminal). Construct via to_cnf or require_cnf.
struct CnfGrammar : Grammar {};

/// Parses the grammar file format: one production per line as
/// `HEAD -> SYM SYM ...` with whitespace-separated tokens, `HEAD ->` for an
/// eps-production, `#` comments, blank lines ignored. A token is a
/// nonterminal iff it occurs as some HEAD; the start symbol is the first
/// HEAD. Throws std::runtime_error with a line number on syntax errors and
/// when no productions are present.
Grammar parse_grammar(const std::string& text);

/// Prints a grammar in the grammar file format. The start symbol's
/// productions come first so that re-parsing recovers the same start.
std::string format_grammar(const Grammar& g);

/// Returns a description of the first CNF shape violation, or nullopt when
/// every production is A -> B C or A -> a.
std::optional<std::string> cnf_violation(const Grammar& g);

/// Checked cast; throws std::runtime_error when g is not in CNF shape.
CnfGrammar require_cnf(Grammar g);

struct CnfResult {
    CnfGrammar grammar;
    bool eps_stripped = false;  // the source language contained the empty word
};

/// Converts to Chomsky normal form, preserving L(g, A) \ {eps} for every
/// original nonterminal A. Pipeline: eps-removal, unit-production removal,
/// terminal lifting, binarization. Fresh nonterminals are named N1, N2, ...
/// (skipping taken names). Sets eps_stripped when the empty word was in the
/// start symbol's language. Throws std::runtime_error("... empty eps-free
/// language") when the start symbol derives no non-empty terminal word.
CnfResult to_cnf(const Grammar& g);

/// CYK membership: true iff start derives word. The word must be non-empty
/// and all its letters in g's terminal alphabet; otherwise throws.
bool cyk_member(const CnfGrammar& g, const std::string& start, const Word& word);

/// All words of length 1..max_len derivable from start, by exhaustive
/// cyk_member over the terminal alphabet.
WordSet enumerate_oracle(const CnfGrammar& g, const std::string& start, int max_len);

}  // namespace cfgraph
