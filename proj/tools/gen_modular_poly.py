#!/usr/bin/env python3
# Copyright 2026 The quartic-torsion Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerate data/phiN.txt (classical modular polynomials) from q-expansions.

Solves Phi_l(j(q), j(q^l)) = 0 for the symmetric integer coefficients.
Usage: gen_modular_poly.py LEVEL > data/phiLEVEL.txt
"""
import sys
from fractions import Fraction


def sigma3(n):
    return sum(d ** 3 for d in range(1, n + 1) if n % d == 0)


def mul(a, b, n):
    out = [0] * n
    for i, x in enumerate(a):
        if x == 0:
            continue
        for k in range(0, n - i):
            out[i + k] += x * b[k]
    return out


def j_series(n):
    """Coefficients of q*j(q) = E4^3 / prod(1-q^k)^24, indices 0..n-1."""
    e4 = [1] + [240 * sigma3(k) for k in range(1, n)]
    e4c = mul(mul(e4, e4, n), e4, n)
    eta = [1] + [0] * (n - 1)
    for k in range(1, n):
        fac = [0] * n
        fac[0] = 1
        fac[k] = -1
        for _ in range(24):
            eta = mul(eta, fac, n)
    inv = [0] * n
    inv[0] = 1
    for i in range(1, n):
        inv[i] = -sum(eta[k] * inv[i - k] for k in range(1, i + 1))
    return mul(e4c, inv, n)


def laurent_pow(series, shift, e, n):
    """series represents q^shift * sum series[i] q^i; returns (shift*e, coeffs)."""
    out = [1] + [0] * (n - 1)
    for _ in range(e):
        out = mul(out, series, n)
    return shift * e, out


def solve(level):
    top = level + 1
    # pole order up to level*top; need enough terms beyond it
    n = level * top + 2 * top * top + 40
    qj = j_series(n)
    # j(q^l) = q^-l * sum qj[i] q^(l i)
    qjl = [0] * n
    for i in range(n):
        if i * level < n:
            qjl[i * level] = qj[i]
    monos = [(i, k) for i in range(top + 1) for k in range(i + 1)]
    cols = []
    for (i, k) in monos:
        terms = {}
        for (a, b) in ((i, k), (k, i)) if i != k else ((i, k),):
            s1, p1 = laurent_pow(qj, -1, a, n)
            s2, p2 = laurent_pow(qjl, -level, b, n)
            prod = mul(p1, p2, n)
            for idx, c in enumerate(prod):
                if c:
                    terms[s1 + s2 + idx] = terms.get(s1 + s2 + idx, 0) + c
        cols.append(terms)
    lo = -level * top
    hi = lo + n - level * top - 1
    rows = list(range(lo, min(hi, lo + len(monos) + 30)))
    mat = [[Fraction(col.get(r, 0)) for col in cols] for r in rows]
    lead = monos.index((top, 0))
    # move normalization c[top,0] = 1 to the right-hand side
    a = [[row[c] for c in range(len(monos)) if c != lead] + [-row[lead]] for row in mat]
    unknown = [m for m in monos if m != (top, 0)]
    m = len(unknown)
    r = 0
    piv = []
    for c in range(m):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv.append(c)
        r += 1
    if r != m:
        raise SystemExit("underdetermined system")
    for i in range(r, len(a)):
        if a[i][-1] != 0:
            raise SystemExit("inconsistent system")
    sol = {(top, 0): 1}
    for i, c in enumerate(piv):
        v = a[i][-1]
        if v.denominator != 1:
            raise SystemExit("non-integral coefficient")
        sol[unknown[c]] = int(v)
    return sol


def main():
    level = int(sys.argv[1])
    sol = solve(level)
    print(f"# classical modular polynomial Phi_{level}(X,Y) = sum c X^i Y^j")
    print("# lines: i j c with i >= j; symmetric entries (j,i) implied")
    for (i, k) in sorted(sol, reverse=True):
        if sol[(i, k)] != 0:
            print(i, k, sol[(i, k)])


if __name__ == "__main__":
    main()
