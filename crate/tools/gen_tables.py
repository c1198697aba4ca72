#!/usr/bin/env python3
"""Writes the shipped character tables (schema hallmark-ct/1).

Values are sums of roots of unity, {"n": n, "terms": [[coeff, exp], ...]}.
Each table is checked numerically for both orthogonality relations before
it is written; the Rust parser re-checks the first relation exactly.
"""
import cmath
import json
import math
import os
import sys

OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "core", "data", "tables")


def val(n, terms):
    return {"n": n, "terms": [[c, e % n] for c, e in terms if c != 0]}


def integer(k):
    return val(1, [(k, 0)])


def to_complex(v):
    return sum(c * cmath.exp(2j * math.pi * e / v["n"]) for c, e in v["terms"])


def lcm(*xs):
    out = 1
    for x in xs:
        out = out * x // math.gcd(out, x)
    return out


def check(table):
    order = table["order"]
    sizes = [c["size"] for c in table["classes"]]
    assert sum(sizes) == order, table["name"]
    rows = [[to_complex(v) for v in row] for row in table["characters"]]
    assert len(rows) == len(sizes)
    for i, a in enumerate(rows):
        for j, b in enumerate(rows):
            s = sum(z * x * y.conjugate() for z, x, y in zip(sizes, a, b))
            want = order if i == j else 0
            assert abs(s - want) < 1e-6, (table["name"], i, j, s)
    for k in range(len(sizes)):
        for l in range(len(sizes)):
            s = sum(row[k] * row[l].conjugate() for row in rows)
            want = order / sizes[k] if k == l else 0
            assert abs(s - want) < 1e-6, (table["name"], "columns", k, l, s)
    for row in table["characters"]:
        for v in row:
            assert table["exponent"] % v["n"] == 0


def table(name, classes, chars):
    order = sum(c[1] for c in classes)
    t = {
        "schema": "hallmark-ct/1",
        "name": name,
        "order": order,
        "exponent": lcm(*[c[2] for c in classes]),
        "classes": [{"label": l, "size": s, "order": o} for l, s, o in classes],
        "characters": chars,
    }
    check(t)
    return t


def cyclic(n):
    classes = [(f"g^{k}", 1, n // math.gcd(n, k)) for k in range(n)]
    chars = [[val(n, [(1, j * k)]) for k in range(n)] for j in range(n)]
    return table(f"C{n}", classes, chars)


def dihedral(n):
    """Dihedral group of order 2n, n >= 3."""
    classes = [("1", 1, 1)]
    rot = list(range(1, n // 2 + 1))
    for k in rot:
        size = 1 if 2 * k == n else 2
        classes.append((f"r^{k}", size, n // math.gcd(n, k)))
    if n % 2:
        classes.append(("s", n, 2))
        refl = ["s"]
    else:
        classes.append(("s", n // 2, 2))
        classes.append(("sr", n // 2, 2))
        refl = ["s", "sr"]
    linear = [(1, 1), (1, -1)] if n % 2 else [(1, 1), (1, -1), (-1, 1), (-1, -1)]
    chars = []
    for a, b in linear:
        row = [integer(1)] + [integer(a ** k) for k in rot]
        row += [integer(b)] if n % 2 else [integer(b), integer(a * b)]
        chars.append(row)
    for j in range(1, (n - 1) // 2 + 1):
        row = [integer(2)] + [val(n, [(1, j * k), (1, -j * k)]) for k in rot]
        row += [integer(0)] * len(refl)
        chars.append(row)
    return table(f"D{2 * n}", classes, chars)


def trivial():
    return table("trivial", [("1", 1, 1)], [[integer(1)]])


def s4():
    classes = [("1", 1, 1), ("(12)", 6, 2), ("(12)(34)", 3, 2), ("(123)", 8, 3), ("(1234)", 6, 4)]
    rows = [
        [1, 1, 1, 1, 1],
        [1, -1, 1, 1, -1],
        [2, 0, 2, -1, 0],
        [3, 1, -1, 0, -1],
        [3, -1, -1, 0, 1],
    ]
    return table("S4", classes, [[integer(x) for x in r] for r in rows])


def a5():
    classes = [("1", 1, 1), ("2a", 15, 2), ("3a", 20, 3), ("5a", 12, 5), ("5b", 12, 5)]
    i = integer
    # (1+sqrt5)/2 = -z^2 - z^3 and (1-sqrt5)/2 = -z - z^4 with z = exp(2 pi i/5)
    g = val(5, [(-1, 2), (-1, 3)])
    h = val(5, [(-1, 1), (-1, 4)])
    chars = [
        [i(1), i(1), i(1), i(1), i(1)],
        [i(3), i(-1), i(0), g, h],
        [i(3), i(-1), i(0), h, g],
        [i(4), i(0), i(1), i(-1), i(-1)],
        [i(5), i(1), i(-1), i(0), i(0)],
    ]
    return table("A5", classes, chars)


def psl2_3mod4(q):
    """PSL(2,q) for a prime q = 3 mod 4."""
    assert q % 4 == 3
    half_minus, half_plus = (q - 1) // 2, (q + 1) // 2
    classes = [("1", 1, 1), ("u", (q * q - 1) // 2, q), ("u'", (q * q - 1) // 2, q)]
    a_exps = list(range(1, (q - 3) // 4 + 1))
    b_exps = list(range(1, (q + 1) // 4 + 1))
    for l in a_exps:
        classes.append((f"a^{l}", q * (q + 1), half_minus // math.gcd(half_minus, l)))
    for m in b_exps:
        o = half_plus // math.gcd(half_plus, m)
        size = q * (q - 1) // 2 if o == 2 else q * (q - 1)
        classes.append((f"b^{m}", size, o))
    i = integer
    residues = sorted({x * x % q for x in range(1, q)})
    non_residues = [x for x in range(1, q) if x not in residues]
    plus = val(q, [(1, x) for x in residues])  # (-1 + sqrt(-q)) / 2
    minus = val(q, [(1, x) for x in non_residues])  # (-1 - sqrt(-q)) / 2
    chars = [[i(1)] * len(classes)]
    chars.append([i(q), i(0), i(0)] + [i(1)] * len(a_exps) + [i(-1)] * len(b_exps))
    for j in range(1, (q - 3) // 4 + 1):
        row = [i(q + 1), i(1), i(1)]
        row += [val(half_minus, [(1, j * l), (1, -j * l)]) for l in a_exps]
        row += [i(0)] * len(b_exps)
        chars.append(row)
    for j in range(1, (q - 3) // 4 + 1):
        row = [i(q - 1), i(-1), i(-1)] + [i(0)] * len(a_exps)
        row += [val(half_plus, [(-1, j * m), (-1, -j * m)]) for m in b_exps]
        chars.append(row)
    for first, second in ((plus, minus), (minus, plus)):
        row = [i((q - 1) // 2), first, second] + [i(0)] * len(a_exps)
        row += [i((-1) ** (m + 1)) for m in b_exps]
        chars.append(row)
    return table(f"PSL(2,{q})", classes, chars)


def main():
    os.makedirs(OUT, exist_ok=True)
    tables = {
        "trivial": trivial(),
        "c3": cyclic(3),
        "c6": cyclic(6),
        "c15": cyclic(15),
        "d8": dihedral(4),
        "d10": dihedral(5),
        "d12": dihedral(6),
        "s4": s4(),
        "a5": a5(),
        "psl2_7": psl2_3mod4(7),
        "psl2_11": psl2_3mod4(11),
        "psl2_31": psl2_3mod4(31),
    }
    for key, t in tables.items():
        path = os.path.join(OUT, f"{key}.json")
        with open(path, "w") as f:
            json.dump(t, f, separators=(",", ":"))
            f.write("\n")
        print(key, t["order"], len(t["classes"]), file=sys.stderr)


if __name__ == "__main__":
    main()
