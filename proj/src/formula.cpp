#include "satkit/formula.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace satkit {

Literal Literal::from_dimacs(int value) {
    if (value == 0) throw InvalidInput("0 is not a literal");
    return raw(value);
}

Clause clause(std::initializer_list<int> dimacs) {
    Clause c;
    c.reserve(dimacs.size());
    for (int v : dimacs) c.push_back(Literal::from_dimacs(v));
    return c;
}

CanonicalClause canonicalize(const Clause& c) {
    CanonicalClause out{c, false};
    std::sort(out.literals.begin(), out.literals.end());
    out.literals.erase(std::unique(out.literals.begin(), out.literals.end()), out.literals.end());
    for (std::size_t i = 1; i < out.literals.size(); ++i) {
        if (out.literals[i].var() == out.literals[i - 1].var()) out.tautology = true;
    }
    return out;
}

namespace {

void check_literals(const std::vector<Clause>& clauses, int num_vars, const char* what) {
    if (num_vars < 0) throw InvalidInput("negative variable count");
    for (std::size_t i = 0; i < clauses.size(); ++i) {
        for (Literal l : clauses[i]) {
            if (l.var() < 1 || l.var() > num_vars) {
                throw InvalidInput(std::string(what) + " " + std::to_string(i) + " uses variable " +
                                   std::to_string(l.var()) + " outside 1.." +
                                   std::to_string(num_vars));
            }
        }
    }
}

}  // namespace

void CnfFormula::validate() const { check_literals(clauses, num_vars, "clause"); }
void DnfFormula::validate() const { check_literals(terms, num_vars, "term"); }

// ---------------------------------------------------------------------------

Assignment Assignment::filled(int num_vars, bool value) {
    Assignment a;
    a.values_.assign(static_cast<std::size_t>(num_vars) + 1, value ? 1 : 0);
    a.values_[0] = -1;
    return a;
}

Assignment Assignment::from_bits(const std::vector<bool>& bits) {
    Assignment a;
    a.values_.assign(bits.size() + 1, -1);
    for (std::size_t i = 0; i < bits.size(); ++i) a.values_[i + 1] = bits[i] ? 1 : 0;
    return a;
}

void Assignment::set(int var, bool value) {
    if (var < 1) throw InvalidInput("variable index must be >= 1");
    if (static_cast<std::size_t>(var) >= values_.size()) values_.resize(var + 1, -1);
    values_[var] = value ? 1 : 0;
}

void Assignment::unset(int var) {
    if (var >= 1 && static_cast<std::size_t>(var) < values_.size()) values_[var] = -1;
}

std::optional<bool> Assignment::get(int var) const {
    if (var < 1 || static_cast<std::size_t>(var) >= values_.size() || values_[var] < 0) {
        return std::nullopt;
    }
    return values_[var] == 1;
}

std::optional<bool> Assignment::value(Literal l) const {
    auto v = get(l.var());
    if (!v) return std::nullopt;
    return l.negative() ? !*v : *v;
}

bool Assignment::total_over(int num_vars) const {
    for (int v = 1; v <= num_vars; ++v) {
        if (!has(v)) return false;
    }
    return true;
}

int Assignment::max_var() const {
    for (std::size_t v = values_.size(); v-- > 1;) {
        if (values_[v] >= 0) return static_cast<int>(v);
    }
    return 0;
}

std::size_t Assignment::size() const {
    return static_cast<std::size_t>(std::count_if(values_.begin(), values_.end(),
                                                  [](std::int8_t x) { return x >= 0; }));
}

Assignment Assignment::restricted(int num_vars) const {
    Assignment out;
    for (auto [var, val] : entries()) {
        if (var <= num_vars) out.set(var, val);
    }
    return out;
}

std::vector<std::pair<int, bool>> Assignment::entries() const {
    std::vector<std::pair<int, bool>> out;
    for (std::size_t v = 1; v < values_.size(); ++v) {
        if (values_[v] >= 0) out.emplace_back(static_cast<int>(v), values_[v] == 1);
    }
    return out;
}

bool operator==(const Assignment& a, const Assignment& b) { return a.entries() == b.entries(); }

// ---------------------------------------------------------------------------

Truth evaluate_clause(const Clause& c, const Assignment& a) {
    bool open = false;
    for (Literal l : c) {
        auto v = a.value(l);
        if (!v) {
            open = true;
        } else if (*v) {
            return Truth::True;
        }
    }
    return open ? Truth::Undetermined : Truth::False;
}

Truth evaluate(const CnfFormula& f, const Assignment& a) {
    bool open = false;
    for (const auto& c : f.clauses) {
        switch (evaluate_clause(c, a)) {
            case Truth::False: return Truth::False;
            case Truth::Undetermined: open = true; break;
            case Truth::True: break;
        }
    }
    return open ? Truth::Undetermined : Truth::True;
}

int count_satisfied(const CnfFormula& f, const Assignment& a) {
    if (!a.total_over(f.num_vars)) throw InvalidInput("count_satisfied needs a total assignment");
    int n = 0;
    for (const auto& c : f.clauses) {
        if (evaluate_clause(c, a) == Truth::True) ++n;
    }
    return n;
}

bool evaluate_dnf(const DnfFormula& f, const Assignment& a) {
    if (!a.total_over(f.num_vars)) throw InvalidInput("evaluate_dnf needs a total assignment");
    return std::any_of(f.terms.begin(), f.terms.end(), [&](const Clause& term) {
        return std::all_of(term.begin(), term.end(),
                           [&](Literal l) { return a.value(l).value_or(false); });
    });
}

bool is_horn(const CnfFormula& f) {
    return std::all_of(f.clauses.begin(), f.clauses.end(), [](const Clause& c) {
        return std::count_if(c.begin(), c.end(), [](Literal l) { return l.positive(); }) <= 1;
    });
}

std::size_t max_clause_width(const CnfFormula& f) {
    std::size_t w = 0;
    for (const auto& c : f.clauses) w = std::max(w, c.size());
    return w;
}

std::vector<Clause> clause_set(const CnfFormula& f) {
    std::vector<Clause> out;
    out.reserve(f.clauses.size());
    for (const auto& c : f.clauses) out.push_back(canonicalize(c).literals);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool same_clause_set(const CnfFormula& a, const CnfFormula& b) {
    return a.num_vars == b.num_vars && clause_set(a) == clause_set(b);
}

DnfFormula negate(const CnfFormula& f) {
    DnfFormula d{f.num_vars, {}};
    d.terms.reserve(f.clauses.size());
    for (const auto& c : f.clauses) {
        Clause term;
        term.reserve(c.size());
        for (Literal l : c) term.push_back(~l);
        d.terms.push_back(std::move(term));
    }
    return d;
}

// ---------------------------------------------------------------------------
// DIMACS

namespace {

struct ParsedDimacs {
    int num_vars = 0;
    std::vector<Clause> clauses;
};

bool parse_int(std::string_view tok, long long& out) {
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return res.ec == std::errc{} && res.ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

ParsedDimacs parse_generic(std::string_view text, std::string_view format) {
    ParsedDimacs out;
    long long declared_clauses = -1;
    bool have_header = false;
    Clause current;
    std::size_t current_line = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;

    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        auto toks = split_ws(line);
        if (toks.empty()) {
            if (eol == text.size()) break;
            continue;
        }
        if (toks[0] == "c" || toks[0].front() == 'c') continue;
        if (toks[0] == "%") break;  // SATLIB trailer
        if (toks[0] == "p") {
            if (have_header) {
                throw DimacsError(DimacsErrorKind::MalformedHeader, line_no, "duplicate header");
            }
            long long nv = 0, nc = 0;
            if (toks.size() != 4 || toks[1] != format || !parse_int(toks[2], nv) ||
                !parse_int(toks[3], nc) || nv < 0 || nc < 0 || nv > (1 << 30)) {
                throw DimacsError(DimacsErrorKind::MalformedHeader, line_no,
                                  "expected 'p " + std::string(format) + " <vars> <clauses>'");
            }
            out.num_vars = static_cast<int>(nv);
            declared_clauses = nc;
            have_header = true;
            continue;
        }
        if (!have_header) {
            throw DimacsError(DimacsErrorKind::MissingHeader, line_no,
                              "clause data before the 'p' header");
        }
        for (auto tok : toks) {
            long long v = 0;
            if (!parse_int(tok, v)) {
                throw DimacsError(DimacsErrorKind::BadToken, line_no,
                                  "unexpected token '" + std::string(tok) + "'");
            }
            if (v == 0) {
                out.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (current.empty()) current_line = line_no;
            long long var = v < 0 ? -v : v;
            if (var > out.num_vars) {
                throw DimacsError(DimacsErrorKind::VariableOutOfRange, line_no,
                                  "variable " + std::to_string(var) + " exceeds declared " +
                                      std::to_string(out.num_vars));
            }
            current.push_back(Literal::from_dimacs(static_cast<int>(v)));
        }
        if (eol == text.size()) break;
    }
    if (!have_header) {
        throw DimacsError(DimacsErrorKind::MissingHeader, line_no, "missing 'p' header");
    }
    if (!current.empty()) {
        throw DimacsError(DimacsErrorKind::MissingTerminator, current_line,
                          "clause is not terminated by 0");
    }
    if (static_cast<long long>(out.clauses.size()) != declared_clauses) {
        throw DimacsError(DimacsErrorKind::ClauseCountMismatch, line_no,
                          "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                              std::to_string(out.clauses.size()));
    }
    return out;
}

std::string write_generic(int num_vars, const std::vector<Clause>& clauses, std::string_view format) {
    std::ostringstream os;
    os << "p " << format << ' ' << num_vars << ' ' << clauses.size() << '\n';
    for (const auto& c : clauses) {
        for (Literal l : c) os << l.dimacs() << ' ';
        os << "0\n";
    }
    return os.str();
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text) {
    auto p = parse_generic(text, "cnf");
    return CnfFormula{p.num_vars, std::move(p.clauses)};
}

std::string write_dimacs(const CnfFormula& f) { return write_generic(f.num_vars, f.clauses, "cnf"); }

DnfFormula parse_dimacs_dnf(std::string_view text) {
    auto p = parse_generic(text, "dnf");
    return DnfFormula{p.num_vars, std::move(p.clauses)};
}

std::string write_dimacs_dnf(const DnfFormula& f) { return write_generic(f.num_vars, f.terms, "dnf"); }

std::string to_string(Literal l) {
    return (l.negative() ? "~x" : "x") + std::to_string(l.var());
}

std::string to_string(const Clause& c, std::string_view sep) {
    if (c.empty()) return "()";
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += sep;
        out += to_string(c[i]);
    }
    return out + ")";
}

}  // namespace satkit
