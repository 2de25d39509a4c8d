#!/usr/bin/env python3
"""Walk through the symmetry finder on solids and hand-made point sets.

Shows the polynomial-time finder against the brute-force one, the two
symmetry predicates that unlock the fast guesswork search, and what
happens on sets with little or no symmetry.
"""

import time

import guesswork as gw


def show(label, ens, brute_check=False):
    t0 = time.perf_counter()
    group = gw.find_symmetries(ens)
    dt = time.perf_counter() - t0
    flags = []
    flags.append("centrally symmetric" if group.centrally_symmetric else "no center")
    flags.append("vertex transitive" if group.vertex_transitive else "several orbits")
    print(f"{label:28} N={ens.n:<3} order {group.order:<4} {', '.join(flags):40} {dt*1000:6.1f} ms")
    if brute_check:
        brute = gw.symmetries_exhaustive(ens)
        assert brute.permutations == group.permutations
        print(f"{'':28} brute force agrees on all {group.order} permutations")


def main():
    print("== the ten solids ==")
    for info in gw.list_solids():
        show(info.name, gw.solid(info.name))

    print("\n== hand-made sets ==")
    square = gw.make_ensemble([[1, 0], [-1, 0], [0, 1], [0, -1]], 1)
    show("square (2-D)", square, brute_check=True)

    box = gw.make_ensemble(
        [[1, 2, 3], [1, 2, -3], [1, -2, 3], [1, -2, -3],
         [-1, 2, 3], [-1, 2, -3], [-1, -2, 3], [-1, -2, -3]], 14
    )
    show("generic box", box, brute_check=True)

    lopsided = gw.make_ensemble([[1, 0, 0], [2, 0, 0], [0, 2, 1]], 5)
    show("lopsided 3-point set", lopsided, brute_check=True)

    print("\nA permutation is a symmetry exactly when it preserves the Gram")
    print("matrix of pairwise inner products; the fast finder only needs to")
    print("try candidate images of one basis, then the rest is forced.")
    e = gw.solid("octahedron")
    basis = gw.find_basis(e)
    print(f"\noctahedron basis (vector indices): {basis}")
    print(f"sorted tuple under that basis:     {gw.e_order(e, basis)}")
    print(f"candidate tuples examined:         {gw.symmetries_fast(e).tuples_examined}"
          f"  (= C(6,3) * 3!)")


if __name__ == "__main__":
    main()
