"""Independent oracle for tests/golden/kw_diagnostic.txt.

Recomputes the K_W diagnostic with sympy's exact matrix algebra and prints it
in the same layout as KwDiagnostic::render(). Regenerate with

    python3 tests/oracles/kw_diagnostic_oracle.py > tests/golden/kw_diagnostic.txt
"""
from sympy import Matrix, Rational, symbols

d = symbols("d")
M = Matrix([
    [0, 0, 2, 4, 0],
    [0, 0, 9, 15, 0],
    [1, 2 * d - 3, Rational(1, 6) * (13 * d - 9) * (d - 6), Rational(1, 6) * (11 * d**2 - 57 * d + 18), 0],
    [0, -2, -5 * d + 18, -7 * d + 18, 0],
    [0, 0, 0, 0, 1],
])
KW = Matrix([Rational(-3, 5), Rational(3, 5), Rational(11, 12), Rational(-13, 12), 0])

CONVENTIONS = [
    ("ROWS_OLD_IN_NEW", lambda m: m.T),
    ("COLS_OLD_IN_NEW", lambda m: m),
    ("ROWS_NEW_IN_OLD", lambda m: m.T.inv()),
    ("COLS_NEW_IN_OLD", lambda m: m.inv()),
]


def admissible(dd):
    return dd >= 5 and (dd * (dd + 3)) % 6 == 0 and not (dd == 6 and dd * (dd + 3) // 6 == 9)


def fmt(q):
    return str(Rational(q))


def main():
    print("K_W diagnostic: DH coordinates DH(" + ", ".join(fmt(c) for c in KW) + ") -> DIV -> pushforward")
    print("target: h=-3 b=0")
    for name, transform in CONVENTIONS:
        print(f"[{name}]")
        hits = total = 0
        for dd in range(1, 31):
            if not admissible(dd):
                continue
            total += 1
            y = transform(M.subs(d, dd)) * KW
            h = y[2] * (3 * dd - 3) + y[3]
            b = y[0] - Rational(5, 2) * y[2]
            match = h == -3 and b == 0
            hits += match
            print(f"d={dd} n={dd * (dd + 3) // 6} div=DIV(" + ", ".join(fmt(c) for c in y) + ")"
                  f" push=({fmt(h)}, {fmt(b)}) match={'yes' if match else 'no'}")
        print(f"summary {name}: {hits}/{total} match")


if __name__ == "__main__":
    main()
