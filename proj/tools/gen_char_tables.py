#!/usr/bin/env python3
"""Regenerate data/chartables/*.json.

Element orderings mirror the C++ constructors in src/group.cpp:
  S_n   permutations of 0..n-1 in lexicographic order, (gh)(x) = g(h(x))
  D4    s^f r^k at index 4f + k
  Q8    b^f a^k at index 4f + k, b^2 = a^2
  Z2xZ2 (i, j) at index 2i + j
All tables here are rational, so every value is written with conductor 1.
The library re-validates each table (orthogonality, class constancy, degrees)
when it loads it.
"""

import itertools
import json
import pathlib
import sys


def rational(v):
    return {"m": 1, "coeffs": [[str(v), "1"]]}


def classes_of(order, mul, inv):
    seen = [False] * order
    out = []
    for x in range(order):
        if seen[x]:
            continue
        cls = sorted({mul(mul(h, x), inv[h]) for h in range(order)})
        for y in cls:
            seen[y] = True
        out.append(cls)
    return out


def inverses(order, mul):
    return [next(j for j in range(order) if mul(i, j) == 0) for i in range(order)]


def table(name, order, mul, chars):
    inv = inverses(order, mul)
    return {
        "group": name,
        "classes": classes_of(order, mul, inv),
        "chars": [{"degree": c[0], "values": [rational(v) for v in c]} for c in chars],
    }


def symmetric(n):
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}

    def mul(a, b):
        g, h = perms[a], perms[b]
        return index[tuple(g[h[x]] for x in range(n))]

    def sign(p):
        s = 1
        for i in range(n):
            for j in range(i + 1, n):
                if p[i] > p[j]:
                    s = -s
        return s

    def fixed(p):
        return sum(1 for i in range(n) if p[i] == i)

    def cycle_type(p):
        seen, lengths = set(), []
        for i in range(n):
            if i in seen:
                continue
            length, j = 0, i
            while j not in seen:
                seen.add(j)
                j = p[j]
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    trivial = [1 for _ in perms]
    sgn = [sign(p) for p in perms]
    standard = [fixed(p) - 1 for p in perms]
    chars = [trivial, sgn, standard]
    if n == 4:
        chars.append([s * f for s, f in zip(sgn, standard)])
        two = {(1, 1, 1, 1): 2, (2, 1, 1): 0, (2, 2): 2, (3, 1): -1, (4,): 0}
        chars.append([two[cycle_type(p)] for p in perms])
    chars.sort(key=lambda c: c[0])
    return table(f"S{n}", len(perms), mul, chars)


def dihedral4_like(name, quaternion):
    def mul(x, y):
        f, k = divmod(x, 4)
        g, l = divmod(y, 4)
        r = (-k if g else k) + l
        bf = f + g
        if bf == 2:
            bf = 0
            if quaternion:
                r += 2
        return bf * 4 + r % 4

    chars = []
    for ca, cb in [(1, 1), (1, -1), (-1, 1), (-1, -1)]:
        chars.append([cb ** (x // 4) * ca ** (x % 4) for x in range(8)])
    chars.append([2 if x == 0 else (-2 if x == 2 else 0) for x in range(8)])
    return table(name, 8, mul, chars)


def klein():
    def mul(x, y):
        return ((x // 2 + y // 2) % 2) * 2 + (x % 2 + y % 2) % 2

    chars = [[(-1) ** (a * (x // 2) + b * (x % 2)) for x in range(4)] for a in (0, 1) for b in (0, 1)]
    return table("Z2xZ2", 4, mul, chars)


def main():
    out_dir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data/chartables")
    out_dir.mkdir(parents=True, exist_ok=True)
    tables = [symmetric(3), symmetric(4), dihedral4_like("D4", False), dihedral4_like("Q8", True), klein()]
    for t in tables:
        path = out_dir / f"{t['group']}.json"
        chars = ",\n  ".join(json.dumps(c) for c in t["chars"])
        text = (f'{{"group": {json.dumps(t["group"])},\n "classes": {json.dumps(t["classes"])},\n'
                f' "chars": [\n  {chars}\n ]}}\n')
        path.write_text(text)
        print(path)


if __name__ == "__main__":
    main()
