#include "cfgraph/grammar.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cfgraph {

namespace {

void append_unique(std::vector<Production>& out, std::set<Production>& seen, Production p) {
    if (seen.insert(p).second) out.push_back(std::move(p));
}

// Allocates nonterminal names N1, N2, ... that collide with nothing already
// in the grammar.
class FreshNames {
public:
    explicit FreshNames(const Grammar& g) : taken_(g.nonterminals) {
        taken_.insert(g.terminals.begin(), g.terminals.end());
    }

    std::string next() {
        for (;;) {
            std::string cand = "N" + std::to_string(counter_++);
            if (taken_.insert(cand).second) return cand;
        }
    }

private:
    std::set<std::string> taken_;
    int counter_ = 1;
};

std::set<std::string> nullable_set(const Grammar& g) {
    std::set<std::string> nullable;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Production& p : g.productions) {
            if (nullable.count(p.head)) continue;
            bool all = true;
            for (const Symbol& s : p.body)
                all = all && s.kind == SymbolKind::nonterminal && nullable.count(s.name);
            if (all && (changed = nullable.insert(p.head).second)) {}
        }
    }
    return nullable;
}

void check_well_formed(const Grammar& g) {
    if (!g.nonterminals.count(g.start))
        throw std::runtime_error("start symbol \"" + g.start + "\" is not a nonterminal");
    for (const std::string& n : g.nonterminals)
        if (g.terminals.count(n))
            throw std::runtime_error("symbol \"" + n + "\" is both nonterminal and terminal");
    for (const Production& p : g.productions) {
        if (!g.nonterminals.count(p.head))
            throw std::runtime_error("production head \"" + p.head + "\" is not a nonterminal");
        for (const Symbol& s : p.body) {
            const auto& pool =
                s.kind == SymbolKind::nonterminal ? g.nonterminals : g.terminals;
            if (!pool.count(s.name))
                throw std::runtime_error("production body symbol \"" + s.name +
                                         "\" is not declared in the grammar");
        }
    }
}

}  // namespace

Grammar parse_grammar(const std::string& text) {
    struct RawProduction {
        std::string head;
        std::vector<std::string> body;
    };
    std::vector<RawProduction> raw;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        for (std::string tok; ls >> tok;) tokens.push_back(tok);
        if (tokens.empty()) continue;
        if (tokens.size() < 2 || tokens[1] != "->" || tokens[0] == "->")
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": expected `HEAD -> SYM SYM ...`");
        for (size_t i = 2; i < tokens.size(); ++i)
            if (tokens[i] == "->")
                throw std::runtime_error("line " + std::to_string(line_no) +
                                         ": unexpected `->` in production body");
        raw.push_back({tokens[0], {tokens.begin() + 2, tokens.end()}});
    }
    if (raw.empty()) throw std::runtime_error("grammar has no productions");

    Grammar g;
    for (const RawProduction& r : raw) g.nonterminals.insert(r.head);
    for (const RawProduction& r : raw)
        for (const std::string& s : r.body)
            if (!g.nonterminals.count(s)) g.terminals.insert(s);
    g.start = raw.front().head;

    std::set<Production> seen;
    for (const RawProduction& r : raw) {
        Production p{r.head, {}};
        for (const std::string& s : r.body)
            p.body.push_back(g.nonterminals.count(s) ? nt(s) : term(s));
        append_unique(g.productions, seen, std::move(p));
    }
    return g;
}

std::string format_grammar(const Grammar& g) {
    std::string out;
    auto emit = [&](const Production& p) {
        out += p.head;
        out += " ->";
        for (const Symbol& s : p.body) {
            out += ' ';
            out += s.name;
        }
        out += '\n';
    };
    for (const Production& p : g.productions)
        if (p.head == g.start) emit(p);
    for (const Production& p : g.productions)
        if (p.head != g.start) emit(p);
    return out;
}

std::optional<std::string> cnf_violation(const Grammar& g) {
    for (const std::string& n : g.nonterminals)
        if (g.terminals.count(n))
            return "symbol \"" + n + "\" is both nonterminal and terminal";
    if (!g.nonterminals.count(g.start))
        return "start symbol \"" + g.start + "\" is not a nonterminal";
    for (const Production& p : g.productions) {
        if (!g.nonterminals.count(p.head))
            return "production head \"" + p.head + "\" is not a nonterminal";
        const bool term_shape = p.body.size() == 1 &&
                                p.body[0].kind == SymbolKind::terminal &&
                                g.terminals.count(p.body[0].name);
        const bool pair_shape = p.body.size() == 2 &&
                                p.body[0].kind == SymbolKind::nonterminal &&
                                p.body[1].kind == SymbolKind::nonterminal &&
                                g.nonterminals.count(p.body[0].name) &&
                                g.nonterminals.count(p.body[1].name);
        if (!term_shape && !pair_shape) {
            std::string body;
            for (const Symbol& s : p.body) body += " " + s.name;
            return "production " + p.head + " ->" + body +
                   " is neither A -> B C nor A -> a";
        }
    }
    return std::nullopt;
}

CnfGrammar require_cnf(Grammar g) {
    if (auto why = cnf_violation(g)) throw std::runtime_error("not in CNF: " + *why);
    CnfGrammar out;
    static_cast<Grammar&>(out) = std::move(g);
    return out;
}

CnfResult to_cnf(const Grammar& g) {
    check_well_formed(g);

    const std::set<std::string> nullable = nullable_set(g);
    FreshNames fresh(g);

    // eps-removal: every way of dropping nullable occurrences, minus the
    // productions that become empty.
    std::vector<Production> stage;
    {
        std::set<Production> seen;
        for (const Production& p : g.productions) {
            std::vector<size_t> optional_at;
            for (size_t i = 0; i < p.body.size(); ++i)
                if (p.body[i].kind == SymbolKind::nonterminal && nullable.count(p.body[i].name))
                    optional_at.push_back(i);
            if (optional_at.size() > 20)
                throw std::runtime_error("production body has too many nullable symbols");
            for (uint64_t mask = 0; mask < (uint64_t{1} << optional_at.size()); ++mask) {
                Production q{p.head, {}};
                size_t opt = 0;
                for (size_t i = 0; i < p.body.size(); ++i) {
                    if (opt < optional_at.size() && optional_at[opt] == i) {
                        if (!(mask >> opt & 1)) q.body.push_back(p.body[i]);
                        ++opt;
                    } else {
                        q.body.push_back(p.body[i]);
                    }
                }
                if (!q.body.empty()) append_unique(stage, seen, std::move(q));
            }
        }
    }

    // unit-production removal via the unit-reachability closure.
    {
        std::map<std::string, std::set<std::string>> reach;
        for (const std::string& a : g.nonterminals) reach[a] = {a};
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Production& p : stage) {
                if (p.body.size() != 1 || p.body[0].kind != SymbolKind::nonterminal) continue;
                for (auto& [a, set] : reach)
                    if (set.count(p.head) && set.insert(p.body[0].name).second) changed = true;
            }
        }
        std::vector<Production> next;
        std::set<Production> seen;
        for (const Production& p : stage) {
            if (p.body.size() == 1 && p.body[0].kind == SymbolKind::nonterminal) continue;
            for (const auto& [a, set] : reach)
                if (set.count(p.head)) append_unique(next, seen, Production{a, p.body});
        }
        stage = std::move(next);
    }

    // terminal lifting: bodies of length >= 2 refer to terminals through
    // fresh nonterminals, allocated in first-encounter order.
    std::vector<Production> lifted;
    std::map<std::string, std::string> lift_name;
    std::vector<std::string> lift_order;
    {
        std::vector<Production> next;
        std::set<Production> seen;
        for (Production p : stage) {
            if (p.body.size() >= 2) {
                for (Symbol& s : p.body) {
                    if (s.kind != SymbolKind::terminal) continue;
                    auto it = lift_name.find(s.name);
                    if (it == lift_name.end()) {
                        it = lift_name.emplace(s.name, fresh.next()).first;
                        lift_order.push_back(s.name);
                    }
                    s = nt(it->second);
                }
            }
            append_unique(next, seen, std::move(p));
        }
        for (const std::string& t : lift_order)
            append_unique(next, seen, Production{lift_name.at(t), {term(t)}});
        stage = std::move(next);
    }

    // binarization of bodies longer than two.
    std::set<std::string> fresh_nts;
    for (const auto& [t, name] : lift_name) fresh_nts.insert(name);
    {
        std::vector<Production> next;
        std::set<Production> seen;
        for (const Production& p : stage) {
            if (p.body.size() <= 2) {
                append_unique(next, seen, p);
                continue;
            }
            std::string head = p.head;
            for (size_t i = 0; i + 2 < p.body.size(); ++i) {
                std::string cont = fresh.next();
                fresh_nts.insert(cont);
                append_unique(next, seen, Production{head, {p.body[i], nt(cont)}});
                head = cont;
            }
            append_unique(next, seen,
                          Production{head, {p.body[p.body.size() - 2], p.body.back()}});
        }
        stage = std::move(next);
    }

    Grammar out;
    out.nonterminals = g.nonterminals;
    out.nonterminals.insert(fresh_nts.begin(), fresh_nts.end());
    out.terminals = g.terminals;
    out.productions = std::move(stage);
    out.start = g.start;

    // The start symbol must still derive some non-empty word.
    std::set<std::string> productive;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Production& p : out.productions) {
            if (productive.count(p.head)) continue;
            bool all = true;
            for (const Symbol& s : p.body)
                all = all && (s.kind == SymbolKind::terminal || productive.count(s.name));
            if (all && (changed = productive.insert(p.head).second)) {}
        }
    }
    if (!productive.count(out.start))
        throw std::runtime_error("to_cnf: start symbol \"" + out.start +
                                 "\" derives no non-empty word (empty eps-free language)");

    CnfResult result;
    result.grammar = require_cnf(std::move(out));
    result.eps_stripped = nullable.count(g.start) > 0;
    return result;
}

bool cyk_member(const CnfGrammar& g, const std::string& start, const Word& word) {
    if (word.empty())
        throw std::runtime_error("cyk_member: the empty word is outside the eps-free scope");
    if (!g.nonterminals.count(start))
        throw std::runtime_error("cyk_member: unknown start symbol \"" + start + "\"");
    for (const Letter& a : word)
        if (!g.terminals.count(a))
            throw std::runtime_error("cyk_member: letter \"" + a +
                                     "\" is not in the terminal alphabet");

    std::map<std::string, int> id;
    for (const std::string& n : g.nonterminals) id.emplace(n, static_cast<int>(id.size()));
    const size_t blocks = (id.size() + 63) / 64;

    auto set_bit = [&](std::vector<uint64_t>& bits, int i) { bits[i / 64] |= uint64_t{1} << (i % 64); };
    auto get_bit = [&](const std::vector<uint64_t>& bits, int i) {
        return (bits[i / 64] >> (i % 64)) & 1;
    };

    std::map<Letter, std::vector<uint64_t>> term_heads;
    struct BinRule {
        int head, left, right;
    };
    std::vector<BinRule> bin;
    for (const Production& p : g.productions) {
        if (p.body.size() == 1) {
            auto [it, _] = term_heads.try_emplace(p.body[0].name, std::vector<uint64_t>(blocks));
            set_bit(it->second, id.at(p.head));
        } else {
            bin.push_back({id.at(p.head), id.at(p.body[0].name), id.at(p.body[1].name)});
        }
    }

    const size_t n = word.size();
    // tab[i][len] = heads deriving word[i .. i+len)
    std::vector<std::vector<std::vector<uint64_t>>> tab(
        n, std::vector<std::vector<uint64_t>>(n + 1, std::vector<uint64_t>(blocks)));
    for (size_t i = 0; i < n; ++i)
        if (auto it = term_heads.find(word[i]); it != term_heads.end()) tab[i][1] = it->second;
    for (size_t len = 2; len <= n; ++len)
        for (size_t i = 0; i + len <= n; ++i)
            for (size_t k = 1; k < len; ++k)
                for (const BinRule& r : bin)
                    if (get_bit(tab[i][k], r.left) && get_bit(tab[i + k][len - k], r.right))
                        set_bit(tab[i][len], r.head);
    return get_bit(tab[0][n], id.at(start));
}

WordSet enumerate_oracle(const CnfGrammar& g, const std::string& start, int max_len) {
    if (max_len < 1) throw std::runtime_error("enumerate_oracle: max_len must be >= 1");
    if (!g.nonterminals.count(start))
        throw std::runtime_error("enumerate_oracle: unknown start symbol \"" + start + "\"");

    std::vector<Letter> alphabet(g.terminals.begin(), g.terminals.end());
    WordSet out;
    if (alphabet.empty()) return out;
    for (int len = 1; len <= max_len; ++len) {
        std::vector<size_t> odo(len, 0);
        for (;;) {
            Word w;
            w.reserve(len);
            for (size_t d : odo) w.push_back(alphabet[d]);
            if (cyk_member(g, start, w)) out.insert(std::move(w));
            size_t i = 0;
            while (i < odo.size() && ++odo[i] == alphabet.size()) odo[i++] = 0;
            if (i == odo.size()) break;
        }
    }
    return out;
}

}  // namespace cfgraph
