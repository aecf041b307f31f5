#!/usr/bin/env python3
"""Regenerates the golden CSVs under crates/core/tests/golden/.

Everything here is an independent re-derivation: plain BFS over adjacency
dicts, closeness as sum(2**-d), L1 profile steps — no code shared with the
Rust crate. If the crate and this script ever disagree, one of them is
wrong and the tests will say so.

All arithmetic is sums of powers of two well inside double precision, so
the values are exact and platform-independent.

Usage: python3 scripts/gen_goldens.py
"""

import os
from collections import deque

OUT_DIR = os.path.join(os.path.dirname(__file__), "..", "crates", "core", "tests", "golden")

N = 40


def vname(i):
    return f"v{i}"


def line_edges(n):
    return [(vname(i), vname(i + 1)) for i in range(1, n)]


def bfs_distances(vertices, adj, src):
    dist = {src: 0}
    q = deque([src])
    while q:
        u = q.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def closeness(vertices, edges):
    adj = {v: set() for v in vertices}
    for u, w in edges:
        adj[u].add(w)
        adj[w].add(u)
    cc = {}
    for v in sorted(vertices):
        dist = bfs_distances(vertices, adj, v)
        total = 0.0
        for w in sorted(vertices):
            if w != v and w in dist:
                total += 2.0 ** -dist[w]
        cc[v] = total
    return cc


def g12(x):
    return "%.12g" % x


def incremental_order(n):
    return list(range(3, n + 1))


def dichotomic_order(n):
    # Far endpoint first, then breadth-first interval midpoints (floor
    # division), skipping indices 1 and 2.
    order = [n]
    queue = deque([(1, n)])
    while queue:
        lo, hi = queue.popleft()
        if hi - lo <= 1:
            continue
        mid = (lo + hi) // 2
        if mid >= 3:
            order.append(mid)
        queue.append((lo, mid))
        queue.append((mid, hi))
    return order


def profile_rows(n, spoke_order):
    vertices = [vname(i) for i in range(1, n + 1)]
    edges = line_edges(n)
    rows = []
    before = closeness(vertices, edges)
    for step, j in enumerate(spoke_order, start=1):
        edges = edges + [(vname(1), vname(j))]
        after = closeness(vertices, edges)
        d = sum(abs(before[v] - after[v]) for v in sorted(vertices))
        rows.append((step, f"{vname(1)}-{vname(j)}", d))
        before = after
    return rows


def write(path, text):
    with open(path, "w", newline="") as fh:
        fh.write(text)
    print(f"wrote {path}")


def main():
    os.makedirs(OUT_DIR, exist_ok=True)

    vertices = [vname(i) for i in range(1, N + 1)]
    cc = closeness(vertices, line_edges(N))
    lines = ["vertex,value"] + [f"{v},{g12(cc[v])}" for v in sorted(vertices)]
    write(os.path.join(OUT_DIR, "closeness_line40.csv"), "\n".join(lines) + "\n")

    profiles = {}
    for name, order in [
        ("profile_incremental_40.csv", incremental_order(N)),
        ("profile_dichotomic_40.csv", dichotomic_order(N)),
    ]:
        rows = profile_rows(N, order)
        profiles[name] = [d for _, _, d in rows]
        lines = ["step,edge,dC"] + [f"{s},{e},{g12(d)}" for s, e, d in rows]
        write(os.path.join(OUT_DIR, name), "\n".join(lines) + "\n")

    # Consistency statements that must hold if the oracle itself is sane.
    inc = profiles["profile_incremental_40.csv"]
    dic = profiles["profile_dichotomic_40.csv"]
    assert len(inc) == len(dic) == N - 2
    assert sum(inc) == sum(dic), "schedules must have identical totals"
    assert dic[0] > inc[0], "long first link must cost more"
    print(f"totals: incremental {sum(inc)!r}, dichotomic {sum(dic)!r}")
    print(f"first steps: incremental {inc[0]!r}, dichotomic {dic[0]!r}")


if __name__ == "__main__":
    main()
