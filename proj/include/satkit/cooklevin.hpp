#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "satkit/formula.hpp"
#include "satkit/turing.hpp"

// Tableau encoding of "machine m accepts input w on some branch within p
// rows" as a CNF formula over variables X[i,j,s] (row i, column j, symbol s).

namespace satkit::cooklevin {

enum class SymbolKind { Border, State, Tape };

struct TableauSymbol {
    SymbolKind kind;
    std::string name;

    friend bool operator==(const TableauSymbol&, const TableauSymbol&) = default;
};

/// Symbol alphabet of a tableau: the border '#' (index 0), then the states
/// and then the tape symbols in machine order. Kinds keep a state named like
/// a tape symbol apart from it.
struct SymbolTable {
    std::vector<TableauSymbol> symbols;
    std::size_t first_state = 1;
    std::size_t first_tape = 1;

    explicit SymbolTable(const tm::MachineSpec& m);
    SymbolTable() = default;

    std::size_t size() const { return symbols.size(); }
    std::size_t border() const { return 0; }
    std::size_t state(const std::string& q) const;
    std::size_t tape(const tm::Symbol& a) const;
    bool is_state(std::size_t s) const { return s >= first_state && s < first_tape; }
};

/// Six symbol indices: top row left to right, then bottom row.
using Window = std::array<std::size_t, 6>;

/// Every 2x3 window that appears in some pair of consecutive tableau rows
/// (a configuration and one of its successors, or a halting configuration
/// repeated). Found by enumerating all one-state rows of four to nine
/// columns, applying each delta option and reading off the windows.
///
/// Row conventions: the state symbol sits immediately left of the head
/// cell. A left move on cell 0 keeps the head there. A state next to the
/// right border has no visible head cell and only a halting state may stay
/// there.
std::set<Window> legal_windows(const tm::MachineSpec& m, const SymbolTable& table);
std::set<Window> legal_windows(const tm::MachineSpec& m);

struct TableauSpec {
    int p = 0;
    SymbolTable table;

    int num_vars() const { return p * p * static_cast<int>(table.size()); }
    /// 1-based row, column; symbol index into the table.
    int var(int row, int col, std::size_t symbol) const;

    struct Cell {
        int row;
        int col;
        std::size_t symbol;
    };
    Cell cell_of(int var) const;
};

enum class MoveEncoding {
    /// For each window position and each shortest illegal window prefix, one
    /// clause forbidding that prefix.
    Prefix,
    /// One 6-literal clause per illegal window per position.
    Full,
};

struct Encoding {
    CnfFormula formula;
    TableauSpec spec;
    std::size_t cell_clauses = 0;
    std::size_t initial_clauses = 0;
    std::size_t accept_clauses = 0;
    std::size_t move_clauses = 0;
};

/// Cell, initial, accept and move constraints in that clause order. Needs
/// p >= |input| + 3 and p >= 4. Throws InvalidInput otherwise or when the
/// input leaves the machine's input alphabet.
Encoding encode(const tm::MachineSpec& m, const tm::Word& input, int p,
                MoveEncoding move = MoveEncoding::Prefix);

/// Reads the tableau rows back from an assignment as symbol names. Throws
/// InvalidInput if some cell holds no symbol or more than one.
std::vector<std::vector<std::string>> decode_tableau(const TableauSpec& spec, const Assignment& a);

/// Same rows as symbol indices.
std::vector<std::vector<std::size_t>> decode_indices(const TableauSpec& spec, const Assignment& a);

/// JSON sidecar text: p, the symbol table and variable -> (row, col, symbol).
std::string sidecar_json(const TableauSpec& spec);

}  // namespace satkit::cooklevin
