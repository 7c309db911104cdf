#include "cfgraph/monoid.hpp"

namespace cfgraph {

namespace {

// Appends one generator to a reduced word, keeping it reduced.
void push_reduced(std::vector<TGenerator>& acc, const TGenerator& g) {
    if (g.primed && !acc.empty() && !acc.back().primed && acc.back().base == g.base) {
        acc.pop_back();
    } else {
        acc.push_back(g);
    }
}

}  // namespace

TWord reduce(std::span<const TGenerator> raw) {
    TWord out;
    out.letters.reserve(raw.size());
    for (const TGenerator& g : raw) push_reduced(out.letters, g);
    return out;
}

TWord t_mul(const TWord& u, const TWord& v) {
    TWord out = u;
    for (const TGenerator& g : v.letters) push_reduced(out.letters, g);
    return out;
}

std::string to_string(const TGenerator& g) {
    return g.primed ? g.base + "'" : g.base;
}

std::string to_string(const TWord& w) {
    if (w.empty()) return "eps";
    std::string out;
    for (const TGenerator& g : w.letters) {
        if (!out.empty()) out += ' ';
        out += to_string(g);
    }
    return out;
}

WPair w_mul(const WPair& p, const WPair& q) {
    WPair out;
    out.alpha.reserve(p.alpha.size() + q.alpha.size());
    out.alpha = p.alpha;
    out.alpha.insert(out.alpha.end(), q.alpha.begin(), q.alpha.end());
    out.omega = t_mul(p.omega, q.omega);
    return out;
}

bool is_identity(const WPair& p) { return p.alpha.empty() && p.omega.empty(); }

std::string to_string(const WPair& p) {
    std::string alpha;
    if (p.alpha.empty()) {
        alpha = "eps";
    } else {
        bool single_chars = true;
        for (const Letter& a : p.alpha) single_chars = single_chars && a.size() == 1;
        for (const Letter& a : p.alpha) {
            if (!alpha.empty() && !single_chars) alpha += ' ';
            alpha += a;
        }
    }
    return alpha + "," + to_string(p.omega);
}

}  // namespace cfgraph
