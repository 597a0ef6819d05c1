#include "satkit/cooklevin.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

namespace satkit::cooklevin {

SymbolTable::SymbolTable(const tm::MachineSpec& m) {
    symbols.push_back({SymbolKind::Border, "#"});
    first_state = symbols.size();
    for (const auto& q : m.states) symbols.push_back({SymbolKind::State, q});
    first_tape = symbols.size();
    for (const auto& a : m.tape_alphabet) symbols.push_back({SymbolKind::Tape, a});
}

std::size_t SymbolTable::state(const std::string& q) const {
    for (std::size_t s = first_state; s < first_tape; ++s) {
        if (symbols[s].name == q) return s;
    }
    throw InvalidInput("unknown state '" + q + "'");
}

std::size_t SymbolTable::tape(const tm::Symbol& a) const {
    for (std::size_t s = first_tape; s < symbols.size(); ++s) {
        if (symbols[s].name == a) return s;
    }
    throw InvalidInput("unknown tape symbol '" + a + "'");
}

namespace {

// Rows from the narrowest tableau up to border, 7 interior cells, border.
constexpr int kMinWidth = 4;
constexpr int kMaxWidth = 9;
using Row = std::vector<std::size_t>;

struct Compiled {
    // options[state][symbol] over table indices
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, std::pair<std::size_t, tm::Move>>>>
        options;
    std::vector<bool> halting;
};

Compiled compile(const tm::MachineSpec& m, const SymbolTable& t) {
    Compiled c;
    c.halting.assign(t.size(), false);
    c.halting[t.state(m.accept)] = true;
    c.halting[t.state(m.reject)] = true;
    for (const auto& q : m.states) {
        if (m.halting(q)) continue;
        for (const auto& a : m.tape_alphabet) {
            auto& slot = c.options[{t.state(q), t.tape(a)}];
            for (const auto& tr : m.options(q, a)) {
                slot.push_back({t.state(tr.state), {t.tape(tr.write), tr.move}});
            }
        }
    }
    return c;
}

void collect(const Row& top, const Row& bottom, std::set<Window>& out) {
    for (std::size_t j = 0; j + 2 < top.size(); ++j) {
        out.insert({top[j], top[j + 1], top[j + 2], bottom[j], bottom[j + 1], bottom[j + 2]});
    }
}

}  // namespace

std::set<Window> legal_windows(const tm::MachineSpec& m, const SymbolTable& t) {
    m.validate();
    const Compiled c = compile(m, t);
    const std::size_t n_tape = t.size() - t.first_tape;

    std::set<Window> out;
    for (int width = kMinWidth; width <= kMaxWidth; ++width) {
        const int interior = width - 2;
        Row row(width);
        row[0] = row[width - 1] = t.border();
        std::vector<std::size_t> cells(interior - 1, 0);  // tape contents, as offsets into Γ

        for (int k = 1; k <= interior; ++k) {  // state column
            for (std::size_t q = t.first_state; q < t.first_tape; ++q) {
                std::fill(cells.begin(), cells.end(), 0);
                for (;;) {
                    for (int col = 1, cell = 0; col <= interior; ++col) {
                        row[col] = col == k ? q : t.first_tape + cells[cell++];
                    }
                    if (c.halting[q]) {
                        collect(row, row, out);
                    } else if (k < interior) {
                        const std::size_t a = row[k + 1];
                        for (const auto& [r, wd] : c.options.at({q, a})) {
                            const auto [b, d] = wd;
                            Row next = row;
                            if (d == tm::Move::R) {
                                next[k] = b;
                                next[k + 1] = r;
                            } else if (k == 1) {
                                next[1] = r;
                                next[2] = b;
                            } else {
                                next[k - 1] = r;
                                next[k] = row[k - 1];
                                next[k + 1] = b;
                            }
                            collect(row, next, out);
                        }
                    }
                    // odometer over the tape contents
                    std::size_t i = 0;
                    while (i < cells.size() && ++cells[i] == n_tape) cells[i++] = 0;
                    if (i == cells.size()) break;
                }
            }
        }
    }
    return out;
}

std::set<Window> legal_windows(const tm::MachineSpec& m) { return legal_windows(m, SymbolTable(m)); }

int TableauSpec::var(int row, int col, std::size_t symbol) const {
    return ((row - 1) * p + (col - 1)) * static_cast<int>(table.size()) + static_cast<int>(symbol) + 1;
}

TableauSpec::Cell TableauSpec::cell_of(int v) const {
    if (v < 1 || v > num_vars()) throw InvalidInput("variable " + std::to_string(v) + " is not a tableau variable");
    const int c = static_cast<int>(table.size());
    const int cell = (v - 1) / c;
    return {cell / p + 1, cell % p + 1, static_cast<std::size_t>((v - 1) % c)};
}

namespace {

// Trie over legal windows, one level per window cell.
struct TrieNode {
    std::map<std::size_t, std::size_t> next;
};

std::vector<TrieNode> build_trie(const std::set<Window>& legal) {
    std::vector<TrieNode> nodes(1);
    for (const auto& w : legal) {
        std::size_t at = 0;
        for (std::size_t s : w) {
            auto it = nodes[at].next.find(s);
            if (it == nodes[at].next.end()) {
                nodes.emplace_back();
                it = nodes[at].next.emplace(s, nodes.size() - 1).first;
            }
            at = it->second;
        }
    }
    return nodes;
}

}  // namespace

Encoding encode(const tm::MachineSpec& m, const tm::Word& input, int p, MoveEncoding move) {
    m.validate();
    const int n = static_cast<int>(input.size());
    if (p < n + 3 || p < 4) {
        throw InvalidInput("tableau size p=" + std::to_string(p) + " too small; need p >= max(4, |input| + 3) = " +
                           std::to_string(std::max(4, n + 3)));
    }
    for (const auto& s : input) {
        if (!m.in_input_alphabet(s)) throw InvalidInput("input symbol '" + s + "' is not in the input alphabet");
    }

    Encoding enc;
    enc.spec.p = p;
    enc.spec.table = SymbolTable(m);
    const TableauSpec& spec = enc.spec;
    const SymbolTable& t = spec.table;
    const std::size_t C = t.size();
    CnfFormula& f = enc.formula;
    f.num_vars = spec.num_vars();
    auto X = [&](int i, int j, std::size_t s) { return Literal::pos(spec.var(i, j, s)); };

    for (int i = 1; i <= p; ++i) {
        for (int j = 1; j <= p; ++j) {
            Clause some;
            for (std::size_t s = 0; s < C; ++s) some.push_back(X(i, j, s));
            f.clauses.push_back(std::move(some));
            for (std::size_t s = 0; s < C; ++s) {
                for (std::size_t r = s + 1; r < C; ++r) f.clauses.push_back({~X(i, j, s), ~X(i, j, r)});
            }
        }
    }
    enc.cell_clauses = f.clauses.size();

    std::vector<std::size_t> first(p + 1, t.tape(m.blank));
    first[1] = t.border();
    first[2] = t.state(m.start);
    for (int j = 0; j < n; ++j) first[3 + j] = t.tape(input[j]);
    first[p] = t.border();
    for (int j = 1; j <= p; ++j) f.clauses.push_back({X(1, j, first[j])});
    enc.initial_clauses = static_cast<std::size_t>(p);

    Clause accept;
    const std::size_t qa = t.state(m.accept);
    for (int i = 1; i <= p; ++i) {
        for (int j = 1; j <= p; ++j) accept.push_back(X(i, j, qa));
    }
    f.clauses.push_back(std::move(accept));
    enc.accept_clauses = 1;

    const auto legal = legal_windows(m, t);
    const std::size_t before_move = f.clauses.size();
    const std::array<std::pair<int, int>, 6> offsets{{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}}};

    if (move == MoveEncoding::Prefix) {
        const auto trie = build_trie(legal);
        for (int i = 1; i < p; ++i) {
            for (int j = 1; j + 2 <= p; ++j) {
                // depth-first walk of the trie; every missing child is a
                // shortest illegal prefix
                struct Frame {
                    std::size_t node;
                    Clause prefix;
                };
                std::vector<Frame> stack{{0, {}}};
                while (!stack.empty()) {
                    Frame fr = std::move(stack.back());
                    stack.pop_back();
                    const std::size_t depth = fr.prefix.size();
                    if (depth == 6) continue;
                    const auto [di, dj] = offsets[depth];
                    for (std::size_t s = C; s-- > 0;) {
                        Clause c = fr.prefix;
                        c.push_back(~X(i + di, j + dj, s));
                        auto it = trie[fr.node].next.find(s);
                        if (it == trie[fr.node].next.end()) {
                            f.clauses.push_back(std::move(c));
                        } else {
                            stack.push_back({it->second, std::move(c)});
                        }
                    }
                }
            }
        }
    } else {
        std::vector<Window> illegal;
        Window w{};
        for (;;) {
            if (!legal.count(w)) illegal.push_back(w);
            std::size_t k = 6;
            while (k > 0 && ++w[k - 1] == C) w[--k] = 0;
            if (k == 0) break;
        }
        for (int i = 1; i < p; ++i) {
            for (int j = 1; j + 2 <= p; ++j) {
                for (const auto& bad : illegal) {
                    Clause c;
                    for (int k = 0; k < 6; ++k) c.push_back(~X(i + offsets[k].first, j + offsets[k].second, bad[k]));
                    f.clauses.push_back(std::move(c));
                }
            }
        }
    }
    enc.move_clauses = f.clauses.size() - before_move;
    return enc;
}

std::vector<std::vector<std::size_t>> decode_indices(const TableauSpec& spec, const Assignment& a) {
    const std::size_t C = spec.table.size();
    std::vector<std::vector<std::size_t>> rows(spec.p, std::vector<std::size_t>(spec.p));
    for (int i = 1; i <= spec.p; ++i) {
        for (int j = 1; j <= spec.p; ++j) {
            std::optional<std::size_t> found;
            for (std::size_t s = 0; s < C; ++s) {
                if (!a.get(spec.var(i, j, s)).value_or(false)) continue;
                if (found) {
                    throw InvalidInput("cell (" + std::to_string(i) + ", " + std::to_string(j) +
                                       ") holds more than one symbol");
                }
                found = s;
            }
            if (!found) {
                throw InvalidInput("cell (" + std::to_string(i) + ", " + std::to_string(j) + ") holds no symbol");
            }
            rows[i - 1][j - 1] = *found;
        }
    }
    return rows;
}

std::vector<std::vector<std::string>> decode_tableau(const TableauSpec& spec, const Assignment& a) {
    std::vector<std::vector<std::string>> out;
    for (const auto& row : decode_indices(spec, a)) {
        std::vector<std::string> names;
        for (std::size_t s : row) names.push_back(spec.table.symbols[s].name);
        out.push_back(std::move(names));
    }
    return out;
}

std::string sidecar_json(const TableauSpec& spec) {
    using json = nlohmann::ordered_json;
    auto kind_name = [](SymbolKind k) {
        switch (k) {
            case SymbolKind::Border: return "border";
            case SymbolKind::State: return "state";
            case SymbolKind::Tape: return "tape";
        }
        return "?";
    };
    json doc;
    doc["p"] = spec.p;
    doc["symbols"] = json::array();
    for (const auto& s : spec.table.symbols) doc["symbols"].push_back({{"kind", kind_name(s.kind)}, {"name", s.name}});
    json vars = json::object();
    for (int v = 1; v <= spec.num_vars(); ++v) {
        auto c = spec.cell_of(v);
        const auto& sym = spec.table.symbols[c.symbol];
        vars[std::to_string(v)] = {{"row", c.row}, {"col", c.col}, {"symbol", sym.name}, {"kind", kind_name(sym.kind)}};
    }
    doc["variables"] = std::move(vars);
    return doc.dump(2) + "\n";
}

}  // namespace satkit::cooklevin
