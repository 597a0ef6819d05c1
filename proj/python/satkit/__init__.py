"""Python bindings for the satkit library.

Formulas are passed as ``(num_vars, clauses)`` with clauses given as lists of
signed DIMACS integers. Assignments come back as ``{variable: bool}``.
"""

from ._satkit import (
    BudgetExceeded,
    InvalidInput,
    ParseError,
    brute_force_sat,
    clique_to_assignment,
    cooklevin_encode,
    equality_checker,
    evaluate,
    find_clique_witness,
    max_sat_decide,
    max_sat_optimum,
    parse_dimacs,
    reduce_to_3color,
    reduce_to_clique,
    reduce_to_hamcycle,
    run_machine,
    run_ntm,
    solve_2sat,
    solve_dnf,
    solve_horn,
    to_3cnf,
    write_dimacs,
)

__all__ = [
    "BudgetExceeded",
    "InvalidInput",
    "ParseError",
    "brute_force_sat",
    "clique_to_assignment",
    "cooklevin_encode",
    "equality_checker",
    "evaluate",
    "find_clique_witness",
    "max_sat_decide",
    "max_sat_optimum",
    "parse_dimacs",
    "reduce_to_3color",
    "reduce_to_clique",
    "reduce_to_hamcycle",
    "run_machine",
    "run_ntm",
    "solve_2sat",
    "solve_dnf",
    "solve_horn",
    "to_3cnf",
    "write_dimacs",
]
