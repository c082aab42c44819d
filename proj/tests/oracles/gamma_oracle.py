#!/usr/bin/env python3
"""Independent reference computations for the gamma ideal.

Plain-Python polynomials (dict: sorted variable tuple -> Fraction) and a
sparse Fraction row reduction. Shares no code with the C++ library; its
printed values are frozen into tests/unit/test_gamma_ideal.cpp.
"""
import itertools
import sys
from fractions import Fraction


def t(i, j, k):
    return ("t", min(i, j), max(i, j), k)


def mono_mul(a, b):
    return tuple(sorted(a + b))


def padd(p, q, s=1):
    r = dict(p)
    for m, c in q.items():
        r[m] = r.get(m, 0) + s * c
        if r[m] == 0:
            del r[m]
    return r


def gamma(i, j, k, l, n):
    p = {}
    for lam in range(1, n + 1):
        for m, c in (((t(i, j, lam), t(k, lam, l)), 1), ((t(i, k, lam), t(j, lam, l)), -1)):
            key = tuple(sorted(m))
            p[key] = p.get(key, 0) + c
            if p[key] == 0:
                del p[key]
    return p


def substitute_zero(p, dead):
    return {m: c for m, c in p.items() if not any(v in dead for v in m)}


def raw_hilbert(n):
    R = range(1, n + 1)
    for i, j, k, l in itertools.product(R, R, R, R):
        if len({j, k, l}) == 3:
            yield gamma(i, j, k, l, n)
    for i, j, k, l in itertools.product(R, R, R, R):
        if j != k and j != l:
            yield padd(gamma(i, j, k, k, n), gamma(i, j, l, l, n), -1)


def raw_alternate(n):
    R = range(1, n + 1)
    for i, j, k, l in itertools.product(R, R, R, R):
        if len({j, k, l}) == 3:
            yield gamma(i, j, k, l, n)
    for i, j, k, l in itertools.product(R, R, R, R):
        if j != k and i != l:
            yield padd(gamma(i, j, k, k, n), gamma(j, i, l, l, n), -1)


def dedup(gens):
    seen, out, zeros, dups = set(), [], 0, 0
    for g in gens:
        if not g:
            zeros += 1
            continue
        key = frozenset(g.items())
        neg = frozenset((m, -c) for m, c in g.items())
        if key in seen or neg in seen:
            dups += 1
            continue
        seen.add(key)
        out.append(g)
    return out, zeros, dups


def rank(polys):
    pivots = {}
    r = 0
    for p in polys:
        v = {m: Fraction(c) for m, c in p.items()}
        while v:
            lead = max(v)
            if lead in pivots:
                row = pivots[lead]
                f = v[lead]
                for m, c in row.items():
                    v[m] = v.get(m, 0) - f * c
                    if v[m] == 0:
                        del v[m]
            else:
                f = v[lead]
                pivots[lead] = {m: c / f for m, c in v.items()}
                r += 1
                break
    return r


def main():
    for n in (3, 4, 5):
        dead = {t(i, i, i) for i in range(1, n + 1)}
        hil_raw = list(raw_hilbert(n))
        hil, hz, hd = dedup(hil_raw)
        mini, mz, md = dedup(substitute_zero(g, dead) for g in hil_raw)
        alt, az, ad = dedup(raw_alternate(n))
        print(f"n={n} hilbert raw={len(hil_raw)} zero={hz} dup={hd} kept={len(hil)} rank={rank(hil)}")
        print(f"n={n} miniversal kept={len(mini)} zero={mz} dup={md} rank={rank(mini)}")
        print(f"n={n} alternate kept={len(alt)} zero={az} dup={ad} rank={rank(alt)} joint={rank(hil + alt)}")
        sys.stdout.flush()
    g = gamma(1, 2, 3, 4, 4)
    print("gamma(1,2,3,4;4) terms:", len(g))
    for m, c in sorted(g.items()):
        print("  ", c, m)


if __name__ == "__main__":
    main()
