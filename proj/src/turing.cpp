#include "satkit/turing.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace satkit::tm {

namespace {

bool contains(const std::vector<std::string>& xs, const std::string& x) {
    return std::find(xs.begin(), xs.end(), x) != xs.end();
}

char move_char(Move d) { return d == Move::L ? 'L' : 'R'; }

}  // namespace

void MachineSpec::add(const std::string& q, const Symbol& a, const std::string& r, const Symbol& b, Move d) {
    auto& set = delta[{q, a}];
    Transition t{r, b, d};
    auto it = std::lower_bound(set.begin(), set.end(), t);
    if (it == set.end() || *it != t) set.insert(it, std::move(t));
}

void MachineSpec::validate() const {
    auto fail = [](const std::string& what) { throw InvalidInput("machine: " + what); };
    if (!contains(states, start)) fail("start state '" + start + "' is not a state");
    if (!contains(states, accept)) fail("accept state '" + accept + "' is not a state");
    if (!contains(states, reject)) fail("reject state '" + reject + "' is not a state");
    if (accept == reject) fail("accept and reject states coincide");
    if (!in_tape_alphabet(blank)) fail("blank '" + blank + "' is not a tape symbol");
    if (in_input_alphabet(blank)) fail("blank '" + blank + "' is an input symbol");
    for (const auto& s : input_alphabet) {
        if (!in_tape_alphabet(s)) fail("input symbol '" + s + "' is not a tape symbol");
    }
    for (const auto& [key, set] : delta) {
        const auto& [q, a] = key;
        if (!contains(states, q)) fail("delta uses unknown state '" + q + "'");
        if (halting(q)) fail("delta leaves halting state '" + q + "'");
        if (!in_tape_alphabet(a)) fail("delta reads unknown symbol '" + a + "'");
        if (set.empty()) fail("empty delta entry for (" + q + ", " + a + ")");
        for (const auto& t : set) {
            if (!contains(states, t.state)) fail("delta enters unknown state '" + t.state + "'");
            if (!in_tape_alphabet(t.write)) fail("delta writes unknown symbol '" + t.write + "'");
        }
    }
}

bool MachineSpec::deterministic() const {
    return std::all_of(delta.begin(), delta.end(), [](const auto& kv) { return kv.second.size() == 1; });
}

std::vector<Transition> MachineSpec::options(const std::string& q, const Symbol& a) const {
    auto it = delta.find({q, a});
    if (it == delta.end()) return {Transition{reject, a, Move::R}};
    return it->second;
}

std::size_t MachineSpec::branching() const {
    std::size_t b = 1;
    for (const auto& [key, set] : delta) b = std::max(b, set.size());
    return b;
}

bool MachineSpec::in_input_alphabet(const Symbol& s) const { return contains(input_alphabet, s); }
bool MachineSpec::in_tape_alphabet(const Symbol& s) const { return contains(tape_alphabet, s); }

void Configuration::canonicalize(const Symbol& blank) {
    while (tape.size() > head + 1 && tape.back() == blank) tape.pop_back();
    if (tape.size() == head + 1 && tape.back() == blank) tape.pop_back();
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Accept: return "accept";
        case Verdict::Reject: return "reject";
        case Verdict::StepLimitExceeded: return "step_limit_exceeded";
    }
    return "?";
}

Configuration initial_configuration(const MachineSpec& m, const Word& input) {
    for (const auto& s : input) {
        if (!m.in_input_alphabet(s)) throw InvalidInput("input symbol '" + s + "' is not in the input alphabet");
    }
    Configuration c{input, 0, m.start};
    c.canonicalize(m.blank);
    return c;
}

Configuration step(const MachineSpec& m, const Configuration& c, std::size_t choice) {
    if (m.halting(c.state)) throw InvalidInput("cannot step from halting state '" + c.state + "'");
    const auto opts = m.options(c.state, c.read(m.blank));
    if (choice >= opts.size()) {
        throw InvalidInput("choice " + std::to_string(choice) + " out of range for (" + c.state + ", " +
                           c.read(m.blank) + ")");
    }
    const Transition& t = opts[choice];
    Configuration next = c;
    if (next.head >= next.tape.size()) next.tape.resize(next.head + 1, m.blank);
    next.tape[next.head] = t.write;
    next.state = t.state;
    if (t.move == Move::R) {
        ++next.head;
    } else if (next.head > 0) {
        --next.head;
    }
    next.canonicalize(m.blank);
    return next;
}

namespace {

Verdict verdict_of(const MachineSpec& m, const Configuration& c) {
    if (c.state == m.accept) return Verdict::Accept;
    if (c.state == m.reject) return Verdict::Reject;
    return Verdict::StepLimitExceeded;
}

}  // namespace

RunOutcome run_dtm(const MachineSpec& m, const Word& input, std::size_t step_limit,
                   std::vector<Configuration>* trace) {
    if (!m.deterministic()) throw InvalidInput("run_dtm needs a deterministic machine");
    RunOutcome out{Verdict::StepLimitExceeded, 0, initial_configuration(m, input)};
    if (trace) trace->push_back(out.final);
    while (!m.halting(out.final.state) && out.steps_used < step_limit) {
        out.final = step(m, out.final, 0);
        ++out.steps_used;
        if (trace) trace->push_back(out.final);
    }
    out.verdict = verdict_of(m, out.final);
    return out;
}

NtmOutcome run_ntm(const MachineSpec& m, const Word& input, std::size_t depth_limit) {
    const Configuration root = initial_configuration(m, input);
    if (m.halting(root.state)) return {{verdict_of(m, root), 0, root}, std::vector<int>{}};

    const int b = static_cast<int>(m.branching());
    for (std::size_t len = 1; len <= depth_limit; ++len) {
        std::vector<int> choices(len, 1);
        std::optional<Configuration> first_live, first_halted;
        for (;;) {
            // Replay this address from the root. Addresses naming a missing
            // child, or running on past a halting configuration, are skipped.
            Configuration c = root;
            bool valid = true;
            for (int k : choices) {
                if (m.halting(c.state)) {
                    valid = false;
                    break;
                }
                const auto opts = m.options(c.state, c.read(m.blank));
                if (static_cast<std::size_t>(k) > opts.size()) {
                    valid = false;
                    break;
                }
                c = step(m, c, static_cast<std::size_t>(k - 1));
            }
            if (valid) {
                if (c.state == m.accept) return {{Verdict::Accept, len, c}, choices};
                if (m.halting(c.state)) {
                    if (!first_halted) first_halted = c;
                } else if (!first_live) {
                    first_live = c;
                }
            }

            std::size_t pos = len;
            while (pos > 0 && choices[pos - 1] == b) choices[--pos] = 1;
            if (pos == 0) break;
            ++choices[pos - 1];
        }
        if (!first_live) {
            return {{Verdict::Reject, len, first_halted.value_or(root)}, std::nullopt};
        }
        if (len == depth_limit) return {{Verdict::StepLimitExceeded, len, *first_live}, std::nullopt};
    }
    return {{Verdict::StepLimitExceeded, 0, root}, std::nullopt};
}

MachineSpec build_equality_checker() {
    MachineSpec m;
    m.states = {"A", "B", "D", "F0", "F1", "C0", "C1", "C#", "accept", "reject"};
    m.input_alphabet = {"0", "1", "#"};
    m.tape_alphabet = {"0", "1", "#", "x", "_"};
    m.blank = "_";
    m.start = "A";
    m.accept = "accept";
    m.reject = "reject";

    for (const std::string s : {"0", "1"}) {
        const std::string other = s == "0" ? "1" : "0";
        const std::string F = "F" + s, C = "C" + s;
        m.add("A", s, F, "x", Move::R);
        m.add(F, "0", F, "0", Move::R);
        m.add(F, "1", F, "1", Move::R);
        m.add(F, "#", C, "#", Move::R);
        m.add(F, "_", "reject", "_", Move::R);
        m.add(C, "x", C, "x", Move::R);
        m.add(C, s, "B", "x", Move::L);
        m.add(C, other, "reject", other, Move::L);
        m.add("D", s, "D", s, Move::L);
    }
    m.add("B", "x", "B", "x", Move::L);
    m.add("B", "#", "D", "#", Move::L);
    m.add("D", "x", "A", "x", Move::R);
    m.add("A", "#", "C#", "#", Move::R);
    m.add("C#", "x", "C#", "x", Move::R);
    m.add("C#", "_", "accept", "_", Move::L);
    m.add("C#", "#", "reject", "#", Move::L);
    m.add("C#", "0", "reject", "0", Move::L);
    m.add("C#", "1", "reject", "1", Move::L);
    return m;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> tokens(std::string_view text) {
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

MachineSpec parse_machine(std::string_view text) {
    MachineSpec m;
    bool seen_states = false, seen_input = false, seen_tape = false;
    bool seen_start = false, seen_accept = false, seen_reject = false;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++lineno;
        if (line.empty() || line.front() == ';') continue;

        auto colon = line.find(':');
        if (colon == std::string_view::npos) throw ParseError(lineno, "expected '<key>: ...'");
        std::string key(trim(line.substr(0, colon)));
        auto args = tokens(line.substr(colon + 1));

        auto single = [&](std::string& slot, bool& seen) {
            if (args.size() != 1) throw ParseError(lineno, "'" + key + ":' takes exactly one name");
            if (seen) throw ParseError(lineno, "duplicate '" + key + ":' line");
            slot = args[0];
            seen = true;
        };
        auto list = [&](std::vector<std::string>& slot, bool& seen) {
            if (seen) throw ParseError(lineno, "duplicate '" + key + ":' line");
            slot = args;
            seen = true;
        };

        if (key == "states") {
            list(m.states, seen_states);
        } else if (key == "input") {
            list(m.input_alphabet, seen_input);
        } else if (key == "tape") {
            list(m.tape_alphabet, seen_tape);
        } else if (key == "blank") {
            bool dummy = false;
            single(m.blank, dummy);
        } else if (key == "start") {
            single(m.start, seen_start);
        } else if (key == "accept") {
            single(m.accept, seen_accept);
        } else if (key == "reject") {
            single(m.reject, seen_reject);
        } else if (key == "delta") {
            if (args.size() != 6 || args[2] != "->" || (args[5] != "L" && args[5] != "R")) {
                throw ParseError(lineno, "expected 'delta: q a -> r b L|R'");
            }
            m.add(args[0], args[1], args[3], args[4], args[5] == "L" ? Move::L : Move::R);
        } else {
            throw ParseError(lineno, "unknown key '" + key + "'");
        }
    }
    const std::pair<bool, const char*> required[] = {
        {seen_states, "states"}, {seen_input, "input"},   {seen_tape, "tape"},
        {seen_start, "start"},   {seen_accept, "accept"}, {seen_reject, "reject"},
    };
    for (const auto& [seen, name] : required) {
        if (!seen) throw ParseError(lineno, std::string("missing '") + name + ":' line");
    }
    try {
        m.validate();
    } catch (const InvalidInput& e) {
        throw ParseError(lineno, e.what());
    }
    return m;
}

std::string write_machine(const MachineSpec& m) {
    std::ostringstream out;
    auto list = [&](const char* key, const std::vector<std::string>& xs) {
        out << key << ':';
        for (const auto& x : xs) out << ' ' << x;
        out << '\n';
    };
    list("states", m.states);
    list("input", m.input_alphabet);
    list("tape", m.tape_alphabet);
    out << "blank: " << m.blank << '\n';
    out << "start: " << m.start << '\n';
    out << "accept: " << m.accept << '\n';
    out << "reject: " << m.reject << '\n';
    for (const auto& [key, set] : m.delta) {
        for (const auto& t : set) {
            out << "delta: " << key.first << ' ' << key.second << " -> " << t.state << ' ' << t.write << ' '
                << move_char(t.move) << '\n';
        }
    }
    return out.str();
}

Word split_word(std::string_view text) {
    if (std::any_of(text.begin(), text.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); })) {
        return tokens(text);
    }
    Word w;
    for (char ch : text) w.emplace_back(1, ch);
    return w;
}

std::string join_word(const Word& w) {
    const bool compact = std::all_of(w.begin(), w.end(), [](const Symbol& s) { return s.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!compact && i > 0) out += ' ';
        out += w[i];
    }
    return out;
}

std::string format_configuration(const Configuration& c, const Symbol& blank) {
    Word left(c.tape.begin(), c.tape.begin() + static_cast<std::ptrdiff_t>(std::min(c.head, c.tape.size())));
    Word right;
    if (c.head + 1 < c.tape.size()) right.assign(c.tape.begin() + static_cast<std::ptrdiff_t>(c.head + 1), c.tape.end());
    std::string out = join_word(left);
    if (!out.empty()) out += ' ';
    out += "[" + c.state + "] " + c.read(blank);
    if (!right.empty()) out += " " + join_word(right);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

bool dotted(std::string_view s) {
    return s.size() >= kHeadMark.size() && s.substr(s.size() - kHeadMark.size()) == kHeadMark;
}

}  // namespace

Word encode_multitape(const MultitapeSnapshot& s, const Symbol& blank) {
    if (s.tapes.size() != s.heads.size()) throw InvalidInput("one head per tape required");
    Word out{std::string(kTapeSeparator)};
    for (std::size_t i = 0; i < s.tapes.size(); ++i) {
        const Word& tape = s.tapes[i];
        for (const auto& sym : tape) {
            if (sym == kTapeSeparator || dotted(sym)) {
                throw InvalidInput("tape " + std::to_string(i + 1) + " uses reserved symbol '" + sym + "'");
            }
        }
        if (s.heads[i] > tape.size()) {
            throw InvalidInput("head of tape " + std::to_string(i + 1) + " lies outside the tape");
        }
        for (std::size_t c = 0; c < tape.size(); ++c) {
            out.push_back(c == s.heads[i] ? tape[c] + std::string(kHeadMark) : tape[c]);
        }
        if (s.heads[i] == tape.size()) out.push_back(blank + std::string(kHeadMark));
        out.emplace_back(kTapeSeparator);
    }
    return out;
}

MultitapeSnapshot decode_multitape(const Word& cells, const Symbol& blank) {
    if (cells.empty() || cells.front() != kTapeSeparator || cells.back() != kTapeSeparator) {
        throw InvalidInput("multitape encoding must start and end with '#'");
    }
    MultitapeSnapshot s;
    const std::string dotted_blank = blank + std::string(kHeadMark);
    Word tape;
    std::optional<std::size_t> head;
    for (std::size_t i = 1; i < cells.size(); ++i) {
        const Symbol& sym = cells[i];
        if (sym == kTapeSeparator) {
            if (!head) throw InvalidInput("tape " + std::to_string(s.tapes.size() + 1) + " has no head mark");
            if (*head + 1 == tape.size() && tape.back() == blank && cells[i - 1] == dotted_blank) {
                tape.pop_back();
            }
            s.tapes.push_back(std::move(tape));
            s.heads.push_back(*head);
            tape.clear();
            head.reset();
        } else if (dotted(sym)) {
            if (head) throw InvalidInput("tape " + std::to_string(s.tapes.size() + 1) + " has two head marks");
            head = tape.size();
            tape.push_back(sym.substr(0, sym.size() - kHeadMark.size()));
        } else {
            tape.push_back(sym);
        }
    }
    return s;
}

}  // namespace satkit::tm
