#!/usr/bin/env python3
"""Regenerates the graph fixtures shipped in src/fixture_data.cpp and
data/fixtures/ (edge list plus group JSON per graph).

Usage: python3 tools/gen_fixture_groups.py [repo-root]

Full automorphism groups are enumerated with networkx's VF2 matcher and a
generating set is chosen greedily (first automorphism in enumeration order
not already in the group generated so far, order checked with sympy).
"""
import json
import pathlib
import sys

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher
from sympy.combinatorics import Permutation, PermutationGroup


def heawood():
    # LCF [5,-5]^7: the Hamiltonian cycle 0..13 makes {0,1} an edge
    return nx.LCF_graph(14, [5, -5], 7)


def tutte_coxeter():
    return nx.LCF_graph(30, [-13, -9, 7, -7, 9, 13], 5)


def petersen():
    return nx.convert_node_labels_to_integers(nx.petersen_graph())


def generators(g):
    n = g.number_of_nodes()
    autos = GraphMatcher(g, g).isomorphisms_iter()
    gens = []
    grp = PermutationGroup([Permutation(list(range(n)))])
    total = None
    all_autos = []
    for a in autos:
        all_autos.append([a[i] for i in range(n)])
    total = len(all_autos)
    for img in all_autos:
        p = Permutation(img)
        if not grp.contains(p):
            gens.append(img)
            grp = PermutationGroup([Permutation(x) for x in gens])
            if grp.order() == total:
                break
    return total, gens


def main():
    root = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else ".")
    data_dir = root / "data" / "fixtures"
    data_dir.mkdir(parents=True, exist_ok=True)
    cpp = ["// Generated by tools/gen_fixture_groups.py; do not edit.",
           '#include "fixture_data.hpp"', "",
           "namespace semiprim::fixture_data {", ""]
    names = []
    for name, fn in [("heawood", heawood), ("tutte_coxeter", tutte_coxeter),
                     ("petersen", petersen)]:
        g = fn()
        order, gens = generators(g)
        n = g.number_of_nodes()
        edges = sorted(tuple(sorted(e)) for e in g.edges())
        with open(data_dir / f"{name}.edges", "w") as f:
            f.write(f"# vertices {n}\n")
            for u, v in edges:
                f.write(f"{u} {v}\n")
        group = {"name": name, "degree": n, "generators": gens}
        with open(data_dir / f"{name}.group.json", "w") as f:
            json.dump(group, f)
            f.write("\n")
        bundle = {"name": name, "order": order, "vertices": n,
                  "edges": edges, "generators": gens}
        cpp.append(f'char const* const {name} = R"json({json.dumps(bundle)})json";')
        cpp.append("")
        names.append(name)
    cpp.append("}  // namespace semiprim::fixture_data")
    (root / "src" / "fixture_data.cpp").write_text("\n".join(cpp) + "\n")


if __name__ == "__main__":
    main()
