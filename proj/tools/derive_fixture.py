#!/usr/bin/env python3
"""Derive a concrete (G, G') for the 23-vertex worked example.

The symmetric difference H is fixed by the circuits below. Shared padding
arcs R (present in both G and G') are found by a deterministic backtracking
search so that G = B + R and G' = Rd + R are d-regular and simple, with d the
smallest feasible degree. Writes the two digraphs and a C++ include with R.
"""
import sys
from pathlib import Path

NAMES = ["v", "x00", "x01", "p2", "x10", "w2", "u2", "z00", "z01", "q2", "t2", "z10",
         "x11", "z11", "w1", "p1", "q1", "t1", "u1", "r1", "r2", "s1", "s2"]
IDX = {name: i for i, name in enumerate(NAMES)}

# (tail, head, colour) with B = blue (G only), R = red (G' only)
CIRCUITS = [
    [("v", "x00", "B"), ("x01", "x00", "R"), ("x01", "z00", "B"), ("w1", "z00", "R"),
     ("w1", "w2", "B"), ("z10", "w2", "R"), ("z10", "x11", "B"), ("x10", "x11", "R"),
     ("x10", "v", "B"), ("x11", "v", "R"), ("x11", "x10", "B"), ("z11", "x10", "R"),
     ("z11", "z01", "B"), ("x00", "z01", "R"), ("x00", "x01", "B"), ("v", "x01", "R")],
    [("v", "p2", "B"), ("p1", "p2", "R"), ("p1", "z01", "B"), ("v", "z01", "R")],
    [("v", "x10", "B"), ("q1", "x10", "R"), ("q1", "q2", "B"), ("v", "q2", "R")],
    [("z10", "x10", "B"), ("r1", "x10", "R"), ("r1", "r2", "B"), ("z10", "r2", "R")],
    [("z10", "v", "R"), ("s2", "v", "B"), ("s2", "s1", "R"), ("z10", "s1", "B")],
    [("v", "w2", "B"), ("t1", "w2", "R"), ("t1", "t2", "B"), ("v", "t2", "R")],
    [("v", "u2", "B"), ("u1", "u2", "R"), ("u1", "z00", "B"), ("v", "z00", "R")],
]


def padding(n, d, blue, red):
    h = {(a, b) for a, b in blue} | {(a, b) for a, b in red}
    need_out = [d - sum(1 for a, _ in blue if a == v) for v in range(n)]
    need_in = [d - sum(1 for _, b in blue if b == v) for v in range(n)]
    if min(need_out) < 0 or min(need_in) < 0:
        return None
    arcs = []
    sys.setrecursionlimit(100000)

    def fill(v):
        while v < n and need_out[v] == 0:
            v += 1
        if v == n:
            return all(x == 0 for x in need_in)
        # columns still needing arcs, most constrained first, then by index
        cands = [w for w in range(n) if w != v and need_in[w] > 0 and (v, w) not in h and (v, w) not in arcs]
        cands.sort(key=lambda w: (-need_in[w], w))
        for w in cands:
            arcs.append((v, w))
            need_out[v] -= 1
            need_in[w] -= 1
            if sum(need_out[v + 1:]) + need_out[v] >= 0 and fill(v):
                return True
            arcs.pop()
            need_out[v] += 1
            need_in[w] += 1
        return False

    return sorted(arcs) if fill(0) else None


def write_digraph(path, n, d, arcs):
    lines = [f"{n} {d}"] + [f"{a + 1} {b + 1}" for a, b in sorted(arcs)]
    path.write_text("\n".join(lines) + "\n")


def main():
    root = Path(__file__).resolve().parent.parent
    n = len(NAMES)
    blue = [(IDX[a], IDX[b]) for c in CIRCUITS for a, b, col in c if col == "B"]
    red = [(IDX[a], IDX[b]) for c in CIRCUITS for a, b, col in c if col == "R"]
    for d in range(1, n):
        pad = padding(n, d, blue, red)
        if pad is not None:
            break
    else:
        raise SystemExit("no completion found")
    g = sorted(set(blue) | set(pad))
    g2 = sorted(set(red) | set(pad))
    data = root / "tests" / "data"
    data.mkdir(parents=True, exist_ok=True)
    write_digraph(data / "fixture_G.txt", n, d, g)
    write_digraph(data / "fixture_G2.txt", n, d, g2)
    inc = root / "core" / "src" / "worked_example_padding.inc"
    body = ",\n".join(f"    {{{a}, {b}}}" for a, b in pad)
    inc.write_text(f"// generated by tools/derive_fixture.py\nconstexpr int kFixtureDegree = {d};\n"
                   f"constexpr std::array<std::array<int, 2>, {len(pad)}> kFixturePadding{{{{\n{body}\n}}}};\n")
    print(f"d={d} padding={len(pad)} arcs")


if __name__ == "__main__":
    main()
