#!/usr/bin/env python3
"""Independent brute-force values frozen into the C++ unit tests.

Nothing here calls the library. Run with --check FILE to compare against a frozen copy.
"""

import argparse
import itertools
import json
import sys

import numpy as np
import sympy
from scipy.optimize import linprog


def magic_equations(n):
    """Rows of A with A x = 0 for n x n magic squares, where every line sum equals row 0."""
    lines = [[i * n + j for j in range(n)] for i in range(n)]
    lines += [[i * n + j for i in range(n)] for j in range(n)]
    lines.append([i * n + i for i in range(n)])
    lines.append([i * n + n - 1 - i for i in range(n)])
    rows = []
    for line in lines[1:]:
        r = np.zeros(n * n, dtype=int)
        r[line] += 1
        r[lines[0]] -= 1
        rows.append(r)
    return np.array(rows)


def magic_kernel_dimension(n):
    a = magic_equations(n)
    return n * n - np.linalg.matrix_rank(a)


def magic3_counts(smax):
    counts = []
    for s in range(smax + 1):
        c = 0
        for a, b, d, e in itertools.product(range(s + 1), repeat=4):
            # Fill the square from its top-left 2x2 block and check every line.
            cc = s - a - b
            f = s - d - e
            g = s - a - d
            h = s - b - e
            i = s - cc - f
            sq = [a, b, cc, d, e, f, g, h, i]
            if min(sq) < 0:
                continue
            if g + h + i != s or a + e + i != s or cc + e + g != s:
                continue
            c += 1
        counts.append(c)
    return counts


def latin_squares(n):
    count = 0
    for rows in itertools.product(itertools.permutations(range(n)), repeat=n):
        if all(len({r[j] for r in rows}) == n for j in range(n)):
            count += 1
    return count


def perfect_matchings(vertices, edges):
    edges = [tuple(e) for e in edges]
    total = 0
    for subset in itertools.combinations(edges, len(vertices) // 2):
        covered = [v for e in subset for v in e]
        if sorted(covered) == sorted(vertices):
            total += 1
    return total


def permanent_all_ones(n):
    return sum(1 for _ in itertools.permutations(range(n)))


def birkhoff_f_vector(n):
    perms = list(itertools.permutations(range(n)))
    verts = [np.array([[1 if p[i] == j else 0 for j in range(n)] for i in range(n)]).ravel()
             for p in perms]
    faces = set()
    cells = range(n * n)
    for k in range(n * n + 1):
        for zero in itertools.combinations(cells, k):
            s = frozenset(i for i, v in enumerate(verts) if all(v[c] == 0 for c in zero))
            if s:
                faces.add(s)
    f = {}
    for s in faces:
        pts = np.array([verts[i] for i in sorted(s)])
        dim = np.linalg.matrix_rank(pts[1:] - pts[0]) if len(pts) > 1 else 0
        f[dim] = f.get(dim, 0) + 1
    return [f.get(d, 0) for d in range(max(f) + 1)]


def gamma_edges(n):
    return [(i, j) for i in range(n) for j in range(i, n)]


def vertex_sum_rows(n, edges):
    a = np.zeros((n, len(edges)))
    for k, (i, j) in enumerate(edges):
        a[i, k] += 1
        if j != i:
            a[j, k] += 1
    return a


def polytope_vertices(n, edges):
    """Basic feasible solutions of {x >= 0 : every vertex sum is 1}."""
    a = vertex_sum_rows(n, edges)
    verts = set()
    for basis in itertools.combinations(range(len(edges)), n):
        sub = a[:, basis]
        if abs(np.linalg.det(sub)) < 1e-9:
            continue
        x = np.linalg.solve(sub, np.ones(n))
        if (x < -1e-9).any():
            continue
        full = np.zeros(len(edges))
        full[list(basis)] = x
        verts.add(tuple(np.round(full, 9)))
    return [np.array(v) for v in sorted(verts)]


def gamma_birkhoff_faces(n):
    """Faces of the polytope of K_n with loops whose support is a loop-free spanning 4-cycle."""
    edges = gamma_edges(n)
    verts = polytope_vertices(n, edges)
    supports = set()
    for k in range(len(edges) + 1):
        for zero in itertools.combinations(range(len(edges)), k):
            on = [v for v in verts if all(abs(v[z]) < 1e-9 for z in zero)]
            if not on:
                continue
            support = frozenset(e for e in range(len(edges)) if any(v[e] > 1e-9 for v in on))
            supports.add(support)
    count = 0
    for s in supports:
        es = [edges[e] for e in s]
        if any(i == j for i, j in es) or len(es) != 4:
            continue
        deg = [0] * n
        for i, j in es:
            deg[i] += 1
            deg[j] += 1
        if n == 4 and all(d == 2 for d in deg):
            count += 1
    return count


def positive_edges(n, edges):
    """Edges that are positive in some labeling with all vertex sums equal."""
    m = len(edges)
    a = vertex_sum_rows(n, edges)
    # Variables: x_e (m of them) and the common sum t.
    a_eq = np.hstack([a, -np.ones((n, 1))])
    positive = []
    for e in range(m):
        c = np.zeros(m + 1)
        c[e] = -1
        bounds = [(0, 1)] * m + [(0, None)]
        res = linprog(c, A_eq=a_eq, b_eq=np.zeros(n), bounds=bounds, method="highs")
        if res.status == 0 and -res.fun > 1e-9:
            positive.append(e)
    return positive


def saturation_example():
    x1, x2, x3, t = sympy.symbols("x1 x2 x3 t")
    g = sympy.groebner([x1 * x2 - x1 * x3, 1 - t * x1], t, x1, x2, x3, order="lex")
    return [str(p) for p in g.exprs if t not in p.free_symbols]


def initial_ideal_example():
    xs = sympy.symbols("x1:6")
    x1, x2, x3, x4, x5 = xs
    g = sympy.groebner([x1 * x4 - x5**2, x2 * x3 - x1 * x4], *xs, order="grevlex")
    lead = [sympy.Poly(p, *xs).monoms(order="grevlex")[0] for p in g.exprs]
    return sorted(list(m) for m in lead)


def semimagic2_kernel():
    pts = np.array([[1, 0, 0, 1], [0, 1, 1, 0]]).T
    return int(pts.shape[1] - np.linalg.matrix_rank(pts))


def two_matching_square():
    # The 4-cycle 0-1-2-3-0 in K_4 with every edge labeled 1.
    m = np.zeros((4, 4), dtype=int)
    for i, j in [(0, 1), (1, 2), (2, 3), (3, 0)]:
        m[i, j] = m[j, i] = 1
    return {"symmetric": bool((m == m.T).all()), "row_sums": m.sum(axis=1).tolist()}


def derive():
    k4 = list(itertools.combinations(range(4), 2))
    star = [(0, 1), (0, 2), (0, 3)]
    k33 = [(i, j) for i in range(3) for j in range(3, 6)]
    m3 = magic3_counts(9)
    return {
        "magic4_kernel_dimension": int(magic_kernel_dimension(4)),
        "magic3_counts": m3,
        "magic3_series_0_3_6_9": [m3[0], m3[3], m3[6], m3[9]],
        "natural_sums": {str(n): n * (n * n + 1) // 2 for n in (3, 4, 5, 8)},
        "latin_squares": {"2": latin_squares(2), "3": latin_squares(3)},
        "perfect_matchings": {
            "K6": perfect_matchings(list(range(6)), list(itertools.combinations(range(6), 2))),
            "K33": perfect_matchings(list(range(6)), k33),
        },
        "permanent_ones_3": permanent_all_ones(3),
        "birkhoff3_f_vector": birkhoff_f_vector(3),
        "gamma4_birkhoff2_faces": gamma_birkhoff_faces(4),
        "positive_edges": {"K4": positive_edges(4, k4), "star3": positive_edges(4, star)},
        "saturation_x1x2_minus_x1x3": saturation_example(),
        "initial_ideal_degrevlex": initial_ideal_example(),
        "semimagic2_kernel_dimension": semimagic2_kernel(),
        "two_matching": two_matching_square(),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", help="frozen JSON to compare against")
    args = ap.parse_args()
    values = derive()
    if args.check:
        with open(args.check) as f:
            frozen = json.load(f)
        bad = [k for k in set(values) | set(frozen) if values.get(k) != frozen.get(k)]
        for k in sorted(bad):
            print(f"mismatch {k}: derived {values.get(k)!r}, frozen {frozen.get(k)!r}")
        return 1 if bad else 0
    json.dump(values, sys.stdout, indent=2, sort_keys=True)
    print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
