#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "satkit/errors.hpp"

// Single-tape Turing machines over string-named states and symbols.

namespace satkit::tm {

using Symbol = std::string;
using Word = std::vector<Symbol>;

enum class Move { L, R };

struct Transition {
    std::string state;
    Symbol write;
    Move move = Move::R;

    friend bool operator==(const Transition&, const Transition&) = default;
    /// Canonical choice order: target state, written symbol, then L before R.
    friend auto operator<=>(const Transition&, const Transition&) = default;
};

struct MachineSpec {
    std::vector<std::string> states;
    std::vector<Symbol> input_alphabet;
    std::vector<Symbol> tape_alphabet;
    Symbol blank = "_";
    std::string start, accept, reject;
    /// (state, read symbol) -> transition set, kept sorted in choice order.
    std::map<std::pair<std::string, Symbol>, std::vector<Transition>> delta;

    /// Adds one option to delta(q, a). Duplicates are ignored.
    void add(const std::string& q, const Symbol& a, const std::string& r, const Symbol& b, Move d);

    /// Throws InvalidInput if the machine breaks a structural rule: halting
    /// states distinct, blank in the tape alphabet but not the input
    /// alphabet, input alphabet inside the tape alphabet, every delta entry
    /// over known states and symbols and never leaving a halting state.
    void validate() const;

    bool deterministic() const;
    bool halting(const std::string& q) const { return q == accept || q == reject; }

    /// The options for (q, a) in choice order. A missing entry is total:
    /// it moves to the reject state, rewriting `a` and moving right.
    std::vector<Transition> options(const std::string& q, const Symbol& a) const;

    /// Largest option count over all delta entries (1 for an empty delta).
    std::size_t branching() const;

    bool in_input_alphabet(const Symbol& s) const;
    bool in_tape_alphabet(const Symbol& s) const;
};

struct Configuration {
    Word tape;
    std::size_t head = 0;
    std::string state;

    /// Reads blank past the right end of the stored tape.
    const Symbol& read(const Symbol& blank) const { return head < tape.size() ? tape[head] : blank; }

    /// Drops blanks to the right of both the head and the last written cell.
    void canonicalize(const Symbol& blank);

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

enum class Verdict { Accept, Reject, StepLimitExceeded };

std::string_view to_string(Verdict v);

struct RunOutcome {
    Verdict verdict = Verdict::StepLimitExceeded;
    std::size_t steps_used = 0;
    Configuration final;
};

/// Start configuration: input on cells 0.., head on cell 0, start state.
/// Throws InvalidInput for symbols outside the input alphabet.
Configuration initial_configuration(const MachineSpec& m, const Word& input);

/// Applies option `choice` (0-based, canonical order) of the current delta
/// set. A left move on cell 0 leaves the head on cell 0. Throws
/// InvalidInput when the state is halting or `choice` is out of range.
Configuration step(const MachineSpec& m, const Configuration& c, std::size_t choice = 0);

/// Deterministic run. When `trace` is given it receives every configuration,
/// the initial one included.
RunOutcome run_dtm(const MachineSpec& m, const Word& input, std::size_t step_limit,
                   std::vector<Configuration>* trace = nullptr);

struct NtmOutcome {
    RunOutcome outcome;
    /// 1-based choices of the accepting branch.
    std::optional<std::vector<int>> choices;
};

/// Deterministic simulation of a nondeterministic machine. Choice strings
/// over {1..b} are tried in length-lexicographic order, each replayed from
/// the initial configuration. Accepts on the first string that ends in the
/// accept state. Rejects at the first length where no string is still
/// running. Reports StepLimitExceeded if some branch is still running after
/// `depth_limit` steps.
NtmOutcome run_ntm(const MachineSpec& m, const Word& input, std::size_t depth_limit);

/// The string-equality machine deciding { s#s : s in {0,1}* }.
MachineSpec build_equality_checker();

// ---------------------------------------------------------------------------
// Text formats

/// Line-oriented machine description:
///
///   states: A B accept reject
///   input: 0 1
///   tape: 0 1 _
///   blank: _            (optional, defaults to _)
///   start: A
///   accept: accept
///   reject: reject
///   delta: A 0 -> B 1 R
///
/// Repeated delta lines for one (state, symbol) pair form a nondeterministic
/// set. Blank lines and lines starting with ';' are ignored.
MachineSpec parse_machine(std::string_view text);
std::string write_machine(const MachineSpec& m);

/// Splits an input string into symbols: on whitespace if it contains any,
/// otherwise one symbol per character.
Word split_word(std::string_view text);
std::string join_word(const Word& w);

/// `left [state] head right`, e.g. `x01 [F1] # 101`.
std::string format_configuration(const Configuration& c, const Symbol& blank);

// ---------------------------------------------------------------------------
// Multitape snapshots on one tape

/// Combining dot above (U+0307) appended to a symbol to mark a head.
inline constexpr std::string_view kHeadMark = "\xCC\x87";
inline constexpr std::string_view kTapeSeparator = "#";

struct MultitapeSnapshot {
    std::vector<Word> tapes;
    std::vector<std::size_t> heads;

    friend bool operator==(const MultitapeSnapshot&, const MultitapeSnapshot&) = default;
};

/// `# t1 # t2 # ... # tk #` with each head cell's symbol dotted. A head one
/// past the end of its tape (in particular on an empty tape) is shown as a
/// dotted blank. Throws InvalidInput if a tape uses '#' or a dotted symbol,
/// or a head lies further right.
Word encode_multitape(const MultitapeSnapshot& s, const Symbol& blank = "_");

/// Inverse of encode_multitape. A trailing dotted blank is read back as a
/// head one past the end of its tape.
MultitapeSnapshot decode_multitape(const Word& cells, const Symbol& blank = "_");

}  // namespace satkit::tm
