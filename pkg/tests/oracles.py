"""Naive reference implementations used as oracles in tests.

Everything here enumerates subsets directly with itertools, independent of
the vectorized butterflies in the package, and is deliberately slow:
O(3**n) for the transforms and worse for the interaction index.
"""

import itertools
import math


def members(mask):
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def submasks(mask):
    mem = members(mask)
    for r in range(len(mem) + 1):
        for combo in itertools.combinations(mem, r):
            yield sum(1 << i for i in combo)


def size(mask):
    return bin(mask).count("1")


def naive_mobius(values, n):
    out = []
    for a in range(1 << n):
        acc = 0.0
        for b in submasks(a):
            acc += (-1.0) ** (size(a) - size(b)) * values[b]
        out.append(acc)
    return out


def naive_zeta(coeffs, n):
    return [sum(coeffs[b] for b in submasks(a)) for a in range(1 << n)]


def naive_co_mobius(values, n):
    full = (1 << n) - 1
    out = []
    for a in range(1 << n):
        acc = 0.0
        for b in submasks(a):
            acc += (-1.0) ** size(b) * values[full ^ b]
        out.append(acc)
    return out


def naive_max_recovery(coeffs, n):
    return [max(coeffs[b] for b in submasks(a)) for a in range(1 << n)]


def naive_min_form(m_coeffs, n, t):
    acc = 0.0
    for a in range(1, 1 << n):
        acc += m_coeffs[a] * min(t[i] for i in members(a))
    return acc


def naive_owen_mle(mu_values, n, t):
    acc = 0.0
    for a in range(1 << n):
        term = mu_values[a]
        for i in range(n):
            term *= t[i] if a >> i & 1 else 1.0 - t[i]
        acc += term
    return acc


def naive_interaction(mu_values, n, amask):
    a_members = members(amask)
    a = len(a_members)
    rest = [i for i in range(n) if not amask >> i & 1]
    total = 0.0
    for r in range(len(rest) + 1):
        coeff = math.factorial(n - r - a) * math.factorial(r) / math.factorial(n - a + 1)
        for bcombo in itertools.combinations(rest, r):
            bmask = sum(1 << i for i in bcombo)
            inner = 0.0
            for s in range(a + 1):
                for kcombo in itertools.combinations(a_members, s):
                    kmask = sum(1 << i for i in kcombo)
                    inner += (-1.0) ** (a - s) * mu_values[kmask | bmask]
            total += coeff * inner
    return total
