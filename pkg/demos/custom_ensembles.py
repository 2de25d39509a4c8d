#!/usr/bin/env python3
"""Build your own ensembles: coordinates, scales, documents, search modes.

Stored vectors are unnormalized; the ensemble's scale s is their common
(or maximal) squared norm, and the physical Bloch vector is the stored
one divided by sqrt(s).  Everything stays in the ring: the answer comes
out as an exact fraction of ring elements.
"""

import guesswork as gw
from guesswork.documents import format_document, parse_document


def main():
    # an antipodal pair: one query always suffices
    pair = gw.make_ensemble([[1, 0, 0], [-1, 0, 0]], 1)
    r = gw.compute_guesswork(pair)
    print(f"antipodal pair: g = {r.g_string()}, G_min = {r.gmin_decimal(4)}")

    # three equally spaced vectors in a plane need sqrt(3): use k = 3,
    # doubling so every coordinate is a ring integer
    trine = gw.make_ensemble(
        [[2, 0, 0], [-1, (0, 1), 0], [-1, (0, -1), 0]], 4, k=3
    )
    r = gw.compute_guesswork(trine)
    print(f"planar trine:   g = {r.g_string()}, G_min = {r.gmin_decimal(4)} "
          f"(algorithm: {r.algorithm})")

    # a mixed-norm set: still valid, only the unit ball bound matters
    mixed = gw.make_ensemble([[2, 0, 0], [0, 1, 0], [0, 0, 1]], 4)
    r = gw.compute_guesswork(mixed)
    print(f"mixed norms:    g = {r.g_string()}, G_min = {r.gmin_decimal(4)} "
          f"(algorithm: {r.algorithm})")

    # searches can be pinned to a specific restriction; symmetric modes
    # refuse inputs that lack the symmetry instead of guessing
    try:
        gw.guesswork_symmetric(mixed)
    except gw.PreconditionError as exc:
        print(f"paired search on the mixed set correctly refused: {exc}")

    # ensembles round-trip through the JSON document format
    doc = format_document(trine)
    print("\ndocument for the trine:")
    print(doc)
    assert parse_document(doc) == trine

    print("the same file works on the command line:")
    print("  guesswork --file trine.json --digits 6")
    print("  symmetries --file trine.json")


if __name__ == "__main__":
    main()
