#!/usr/bin/env python3
"""Regenerates the bundled example inputs under data/.

The permutation closure below mirrors the library's breadth-first
enumeration exactly (same start element, queue order and generator order),
so the frozen element indices in the fusion specs stay valid.
"""
import json
import os

HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, "..", "data")


def d8_cayley():
    # elements r^a s^b in the order 1, r, r^2, r^3, rs, r^3 s, s, r^2 s
    elems = [(0, 0), (1, 0), (2, 0), (3, 0), (1, 1), (3, 1), (0, 1), (2, 1)]
    labels = ["1", "r", "r^2", "r^3", "rs", "r^3s", "s", "r^2s"]
    index = {e: i for i, e in enumerate(elems)}

    def mul(x, y):
        a, b = x
        c, d = y
        return ((a + (c if b == 0 else -c)) % 4, (b + d) % 2)

    table = [[index[mul(x, y)] for y in elems] for x in elems]
    return table, labels


def compose(a, b):
    # product a*b acts as "b first, then a"
    return tuple(a[b[i]] for i in range(len(a)))


def closure(degree, gens):
    ident = tuple(range(degree))
    elems = [ident]
    index = {ident: 0}
    head = 0
    while head < len(elems):
        for g in gens:
            p = compose(elems[head], g)
            if p not in index:
                index[p] = len(elems)
                elems.append(p)
        head += 1
    return elems, index


def d8_inside(index, r, s):
    """Indices of 1, r, r^2, r^3, rs, r^3s, s, r^2s and their labels."""
    def pw(p, k):
        out = tuple(range(len(p)))
        for _ in range(k):
            out = compose(out, p)
        return out

    named = [
        (pw(r, 0), "1"), (r, "r"), (pw(r, 2), "r^2"), (pw(r, 3), "r^3"),
        (compose(r, s), "rs"), (compose(pw(r, 3), s), "r^3s"),
        (s, "s"), (compose(pw(r, 2), s), "r^2s"),
    ]
    return [[index[p], lbl] for p, lbl in named]


def main():
    os.makedirs(os.path.join(DATA, "fusion"), exist_ok=True)

    table, labels = d8_cayley()
    with open(os.path.join(DATA, "d8.json"), "w") as f:
        json.dump({"name": "D8", "cayley": table, "labels": labels}, f)
        f.write("\n")

    # S4 with the square's rotation r = (0123) and diagonal reflection
    # s = (13); then <r^2,rs> is the Klein group of double transpositions.
    s4_gens = [[1, 0, 2, 3], [1, 2, 3, 0]]
    elems, index = closure(4, s4_gens)
    assert len(elems) == 24
    with open(os.path.join(DATA, "s4.json"), "w") as f:
        json.dump({"name": "S4", "degree": 4, "perm_generators": s4_gens}, f)
        f.write("\n")
    r = (1, 2, 3, 0)
    s = (0, 3, 2, 1)
    lab = d8_inside(index, r, s)
    spec = {
        "ambient": "../s4.json",
        "p": 2,
        "sylow": sorted(i for i, _ in lab),
        "labels": lab,
    }
    with open(os.path.join(DATA, "fusion", "d8_s4.json"), "w") as f:
        json.dump(spec, f, indent=1)
        f.write("\n")

    # A6 from consecutive 3-cycles; r = (0123)(45), s = (13)(45).
    a6_gens = [
        [1, 2, 0, 3, 4, 5],
        [0, 2, 3, 1, 4, 5],
        [0, 1, 3, 4, 2, 5],
        [0, 1, 2, 4, 5, 3],
    ]
    elems, index = closure(6, a6_gens)
    assert len(elems) == 360
    with open(os.path.join(DATA, "a6.json"), "w") as f:
        json.dump({"name": "A6", "degree": 6, "perm_generators": a6_gens}, f)
        f.write("\n")
    r = (1, 2, 3, 0, 5, 4)
    s = (0, 3, 2, 1, 5, 4)
    lab = d8_inside(index, r, s)
    spec = {
        "ambient": "../a6.json",
        "p": 2,
        "sylow": sorted(i for i, _ in lab),
        "labels": lab,
    }
    with open(os.path.join(DATA, "fusion", "d8_a6.json"), "w") as f:
        json.dump(spec, f, indent=1)
        f.write("\n")

    with open(os.path.join(DATA, "fusion", "d8_inner.json"), "w") as f:
        json.dump({"ambient": "../d8.json", "p": 2}, f, indent=1)
        f.write("\n")

    print("wrote data files")


if __name__ == "__main__":
    main()
