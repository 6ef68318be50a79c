"""Small finite fields GF(q), q a prime power <= 9, via precomputed tables.

Elements are the integers ``0..q-1``; for ``q = p^k`` the integer's base-``p``
digits are the polynomial coefficients (lowest degree first) modulo the
Conway polynomial listed in ``MODULI``.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import UnsupportedOrder

# q -> (p, k, modulus coefficients lowest first, leading 1 included)
MODULI = {
    2: (2, 1, None),
    3: (3, 1, None),
    4: (2, 2, (1, 1, 1)),        # x^2 + x + 1
    5: (5, 1, None),
    7: (7, 1, None),
    8: (2, 3, (1, 1, 0, 1)),     # x^3 + x + 1
    9: (3, 2, (2, 2, 1)),        # x^2 + 2x + 2
}


class GF:
    """Addition, multiplication and inverse tables for GF(q)."""

    def __init__(self, q):
        if q not in MODULI:
            raise UnsupportedOrder(f"GF({q}) is not supported; choose from {sorted(MODULI)}")
        p, k, mod = MODULI[q]
        self.q, self.p, self.k = q, p, k
        digits = [self._digits(a) for a in range(q)]
        self.add = [[self._undigits([(x + y) % p for x, y in zip(digits[a], digits[b])])
                     for b in range(q)] for a in range(q)]
        self.mul = [[self._undigits(self._polymul(digits[a], digits[b], mod))
                     for b in range(q)] for a in range(q)]
        self.neg = [next(b for b in range(q) if self.add[a][b] == 0) for a in range(q)]
        self.inv = [None] + [next(b for b in range(1, q) if self.mul[a][b] == 1)
                             for a in range(1, q)]

    def _digits(self, a):
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _undigits(self, ds):
        a = 0
        for x in reversed(ds):
            a = a * self.p + x
        return a

    def _polymul(self, a, b, mod):
        p, k = self.p, self.k
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
        if mod is not None:
            for deg in range(len(prod) - 1, k - 1, -1):
                c = prod[deg]
                if c:
                    for i, m in enumerate(mod):
                        prod[deg - k + i] = (prod[deg - k + i] - c * m) % p
        return prod[:k]

    def sub(self, a, b):
        return self.add[a][self.neg[b]]

    def dot(self, u, v):
        acc = 0
        for x, y in zip(u, v):
            acc = self.add[acc][self.mul[x][y]]
        return acc

    def scale(self, c, v):
        return tuple(self.mul[c][x] for x in v)

    def vadd(self, u, v):
        return tuple(self.add[x][y] for x, y in zip(u, v))

    def normalize(self, v):
        """Scale so the first nonzero coordinate is 1 (projective representative)."""
        for x in v:
            if x:
                return self.scale(self.inv[x], v)
        raise ValueError("zero vector has no projective point")


@lru_cache(maxsize=None)
def field(q) -> GF:
    return GF(q)


def projective_points(f: GF, dim):
    """Normalised representatives of the 1-spaces of GF(q)^dim, in lexicographic order."""
    from itertools import product

    pts = []
    for v in product(range(f.q), repeat=dim):
        if any(v) and f.normalize(v) == v:
            pts.append(v)
    return pts
