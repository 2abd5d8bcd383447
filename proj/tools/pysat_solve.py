#!/usr/bin/env python3
"""DIMACS in, SAT-competition style answer out, using PySAT's CaDiCaL.

Usage: pysat_solve.py problem.cnf
Prints "s SATISFIABLE" plus "v ..." lines (every declared variable, padded
with negative literals) or "s UNSATISFIABLE"; exits 10 / 20 accordingly.
"""
import sys

from pysat.formula import CNF
from pysat.solvers import Solver


def declared_vars(path):
    with open(path) as f:
        for line in f:
            if line.startswith("p cnf"):
                return int(line.split()[2])
    return 0


def main(path):
    cnf = CNF(from_file=path)
    nv = max(cnf.nv, declared_vars(path))
    with Solver(name="cadical153", bootstrap_with=cnf.clauses) as solver:
        if not solver.solve():
            print("s UNSATISFIABLE")
            return 20
        model = solver.get_model() or []
    assigned = {abs(l): l for l in model}
    lits = [assigned.get(v, -v) for v in range(1, nv + 1)]
    print("s SATISFIABLE")
    for i in range(0, len(lits), 20):
        print("v " + " ".join(map(str, lits[i:i + 20])))
    print("v 0")
    return 10


if __name__ == "__main__":
    sys.exit(main(sys.argv[1]))
