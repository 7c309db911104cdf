// monoid.hpp -- the cancellation monoid T over generators N ∪ N' with the
// one-sided relations A A' = eps, and the product monoid W of terminal words
// paired with T-elements.
//
// Elements of T are kept in normal form: a word over the generators that
// contains no occurrence of an unprimed letter immediately followed by its
// primed copy. The single rewrite rule A A' -> eps has no overlapping
// redexes, so normal forms are unique and equality of T-elements is plain
// sequence equality. Note the relation is one-sided: A' A does not reduce.
#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "cfgraph/word.hpp"

namespace cfgraph {

/// A generator of T: a nonterminal name, either plain (member of N) or
/// primed (member of N').
struct TGenerator {
    std::string base;
    bool primed = false;

    auto operator<=>(const TGenerator&) const = default;
};

inline TGenerator plain(std::string base) { return {std::move(base), false}; }
inline TGenerator prime(std::string base) { return {std::move(base), true}; }

/// An element of T in normal form. The empty sequence is the identity.
struct TWord {
    std::vector<TGenerator> letters;

    bool empty() const { return letters.empty(); }
    auto operator<=>(const TWord&) const = default;
};

/// Normal form of an arbitrary generator sequence: one left-to-right scan
/// that pops the accumulator top whenever the incoming letter is the primed
/// copy of the top.
TWord reduce(std::span<const TGenerator> raw);

/// Product in T. Both operands are already reduced, so cancellations can
/// only fire at the concatenation boundary.
TWord t_mul(const TWord& u, const TWord& v);

std::string to_string(const TGenerator& g);
std::string to_string(const TWord& w);  // "eps" for the identity

/// An element of W = Sigma* x T.
struct WPair {
    Word alpha;
    TWord omega;

    auto operator<=>(const WPair&) const = default;
};

/// The operation of W: componentwise concatenation (the T component is
/// multiplied in T, i.e. reduced at the boundary).
WPair w_mul(const WPair& p, const WPair& q);

/// True iff p is the unity element <eps, eps>.
bool is_identity(const WPair& p);

std::string to_string(const WPair& p);

}  // namespace cfgraph
