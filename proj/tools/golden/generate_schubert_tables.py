"""Writes Schubert polynomial tables for S_3 and S_4 with sympy.

Each σ_w is computed from scratch: sympy performs the divided differences
by exact rational division, following one reduced word of w0·w found by
breadth-first search. The output matches the library's JSON polynomial
schema and is read by the C++ unit tests.

    python3 tools/golden/generate_schubert_tables.py tests/golden
"""

import itertools
import json
import sys
from pathlib import Path

import sympy as sp


def compose(u, v):
    return tuple(u[v[i] - 1] for i in range(len(v)))


def adjacent(i, n):
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return tuple(images)


def reduced_word(w):
    """Shortest word s_{i1}…s_{ik} equal to w, by BFS from the identity."""
    n = len(w)
    start = tuple(range(1, n + 1))
    parent = {start: None}
    frontier = [start]
    while w not in parent:
        nxt = []
        for u in frontier:
            for i in range(1, n):
                v = compose(u, adjacent(i, n))
                if v not in parent:
                    parent[v] = (u, i)
                    nxt.append(v)
        frontier = nxt
    word = []
    cur = w
    while parent[cur] is not None:
        cur, i = parent[cur]
        word.append(i)
    return list(reversed(word))


def schubert(w, xs):
    n = len(w)
    w0 = tuple(range(n, 0, -1))
    poly = sp.prod(xs[i] ** (n - 1 - i) for i in range(n - 1))
    # w0·w = s_{i1}…s_{ik}; apply ∂_{i1} first.
    for i in reduced_word(compose(w0, w)):
        a, b = xs[i - 1], xs[i]
        swapped = poly.subs({a: b, b: a}, simultaneous=True)
        poly = sp.cancel((poly - swapped) / (a - b))
    return sp.expand(poly)


def to_json(poly, xs, n):
    terms = []
    for monom, coeff in sp.Poly(poly, *xs).terms():
        terms.append({"x": list(monom), "q": [0] * (n - 1), "c": str(coeff)})
    terms.sort(key=lambda t: t["x"])
    return terms


def main(out_dir):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for n in (3, 4):
        xs = sp.symbols(f"x1:{n + 1}")
        table = {}
        for w in itertools.permutations(range(1, n + 1)):
            table[" ".join(map(str, w))] = to_json(schubert(w, xs), xs, n)
        doc = {"n": n, "schubert": table}
        (out / f"schubert_S{n}.json").write_text(json.dumps(doc, indent=1) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/golden")
