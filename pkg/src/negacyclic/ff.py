"""Arithmetic in GF(p^m): construction, primitive elements, roots of unity,
traces, and subfield embeddings.

Elements are coordinate tuples in the power basis of the modulus root.  Every
search performed here (default modulus, primitive element, subfield root) scans
candidates in ascending integer encoding, so repeated runs construct identical
objects.  Field and FieldElement are immutable after construction and safe to
share across threads.
"""

from __future__ import annotations

import functools
from typing import Iterator, Optional, Sequence

import numpy as np


class FieldError(ValueError):
    """Invalid field construction or element operation."""


# ---------------------------------------------------------------------------
# integer helpers (desk scale: trial division is plenty)

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    if n % 3 == 0:
        return n == 3
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p), coefficients as int lists (ascending)

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    # f monic
    r = list(a)
    df = len(f) - 1
    while len(r) - 1 >= df and r:
        c = r[-1]
        shift = len(r) - 1 - df
        if c:
            for j in range(df):
                r[shift + j] = (r[shift + j] - c * f[j]) % p
        r.pop()
        _ptrim(r)
    return r


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(c * inv) % p for c in a]
    return a


def _ppow_xq(f: Sequence[int], p: int, steps: int) -> list[list[int]]:
    """Return [x^(p^1), ..., x^(p^steps)] reduced mod f."""
    out = []
    t = [0, 1]  # x
    for _ in range(steps):
        # t <- t^p mod f by square-and-multiply on exponent p
        acc = [1]
        base = list(t)
        e = p
        while e:
            if e & 1:
                acc = _pmod(_pmul(acc, base, p), f, p)
            base = _pmod(_pmul(base, base, p), f, p)
            e >>= 1
        t = acc
        out.append(list(t))
    return out


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    m = len(f) - 1
    if m < 1 or f[-1] != 1:
        return False
    if m == 1:
        return True
    frob = _ppow_xq(f, p, m)
    if _ptrim(list(frob[-1])) != [0, 1]:  # x^(p^m) must equal x
        return False
    for r in factorize(m):
        t = list(frob[m // r - 1])
        if len(t) < 2:
            t += [0] * (2 - len(t))
        t[1] = (t[1] - 1) % p  # x^(p^(m/r)) - x
        _ptrim(t)
        if not t:
            return False  # f splits into factors of degree dividing m/r
        if len(_pgcd(t, f, p)) != 1:
            return False
    return True


def _smallest_factor(f: Sequence[int], p: int) -> list[int]:
    """Smallest-degree, smallest-encoding monic factor of a reducible f."""
    m = len(f) - 1
    for d in range(1, m // 2 + 1):
        for enc in range(p ** d):
            g = [(enc // p ** i) % p for i in range(d)] + [1]
            if not _pmod(f, g, p):
                return g
    return list(f)


def _poly_text(coeffs: Sequence[int]) -> str:
    return ",".join(str(c) for c in coeffs)


class Field:
    """GF(p^m) with a fixed monic irreducible modulus over GF(p).

    When no modulus is supplied the constructor picks the irreducible monic
    polynomial of degree m with primitive root and smallest coefficient
    encoding c0 + c1*p + ... (for m == 1 the conventional modulus is x).
    """

    def __init__(self, p: int, m: int, modulus: Optional[Sequence[int]] = None):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if m < 1:
            raise FieldError(f"extension degree must be >= 1, got {m}")
        self.p = p
        self.m = m
        self.order = p ** m
        if modulus is None:
            modulus = self._search_modulus(p, m)
        modulus = [c % p for c in modulus]
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {m}")
        if m > 1 and not _is_irreducible(modulus, p):
            factor = _smallest_factor(modulus, p)
            raise FieldError(
                f"modulus {_poly_text(modulus)} is reducible over GF({p}); "
                f"divisible by {_poly_text(factor)}"
            )
        self.modulus = tuple(modulus)
        # x^m = -(low part of modulus)
        self._neg_tail = tuple((-c) % p for c in modulus[:m])
        self._unit_factors = factorize(self.order - 1) if self.order > 2 else {}
        self.primitive_flag = self._modulus_root_is_primitive()
        self._tables = None
        self._primitive = None

    @staticmethod
    def _search_modulus(p: int, m: int) -> list[int]:
        if m == 1:
            return [0, 1]  # x, by convention
        for enc in range(p ** m):
            cand = [(enc // p ** i) % p for i in range(m)] + [1]
            if not _is_irreducible(cand, p):
                continue
            f = Field.__new__(Field)
            f.p, f.m, f.order = p, m, p ** m
            f.modulus = tuple(cand)
            f._neg_tail = tuple((-c) % p for c in cand[:m])
            f._unit_factors = factorize(f.order - 1)
            if f._elem((0, 1) + (0,) * (m - 2)).order() == f.order - 1:
                return cand
        raise FieldError(f"no primitive modulus found for GF({p}^{m})")

    def _modulus_root_is_primitive(self) -> bool:
        if self.m == 1:
            return False
        return self.modulus_root().order() == self.order - 1

    # -- element constructors ------------------------------------------------

    def _elem(self, coeffs: Sequence[int]) -> "FieldElement":
        return FieldElement(self, tuple(c % self.p for c in coeffs))

    def zero(self) -> "FieldElement":
        return self._elem((0,) * self.m)

    def one(self) -> "FieldElement":
        return self._elem((1,) + (0,) * (self.m - 1))

    def from_coeffs(self, coeffs: Sequence[int]) -> "FieldElement":
        coeffs = list(coeffs)
        if len(coeffs) > self.m:
            coeffs = [int(c) for c in _pmod([c % self.p for c in coeffs],
                                            list(self.modulus), self.p)]
        coeffs += [0] * (self.m - len(coeffs))
        return self._elem(coeffs)

    def from_int(self, i: int) -> "FieldElement":
        if not 0 <= i < self.order:
            raise FieldError(f"element encoding {i} out of range for {self}")
        return self._elem([(i // self.p ** j) % self.p for j in range(self.m)])

    def modulus_root(self) -> "FieldElement":
        if self.m == 1:
            return self.zero()
        return self.from_int(self.p)

    def elements(self) -> Iterator["FieldElement"]:
        for i in range(self.order):
            yield self.from_int(i)

    def scalar(self, c: int) -> "FieldElement":
        return self._elem((c % self.p,) + (0,) * (self.m - 1))

    # -- identity ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, Field)
                and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus))

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    def descriptor(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": _poly_text(self.modulus)}

    # -- index tables for vectorized code arithmetic --------------------------

    TABLE_CAP = 1024

    def tables(self) -> "FieldTables":
        """Element-index operation tables (index i <-> from_int(i))."""
        if self._tables is None:
            q = self.order
            if q > self.TABLE_CAP:
                raise FieldError(f"index tables limited to order <= {self.TABLE_CAP}")
            dtype = np.int8 if q <= 127 else np.int16
            elems = [self.from_int(i) for i in range(q)]
            enc = {e: i for i, e in enumerate(elems)}
            add = np.zeros((q, q), dtype=dtype)
            mul = np.zeros((q, q), dtype=dtype)
            neg = np.zeros(q, dtype=dtype)
            inv = np.zeros(q, dtype=dtype)
            for i, a in enumerate(elems):
                neg[i] = enc[-a]
                if i:
                    inv[i] = enc[a.inverse()]
                for j, b in enumerate(elems):
                    add[i, j] = enc[a + b]
                    mul[i, j] = enc[a * b]
            self._tables = FieldTables(self, q, dtype, add, neg, mul, inv)
        return self._tables

    def index(self, e: "FieldElement") -> int:
        return e.as_int()


class FieldTables:
    """Numpy add/neg/mul/inv tables over element indices, for vector math."""

    def __init__(self, field, q, dtype, add, neg, mul, inv):
        self.field = field
        self.q = q
        self.dtype = dtype
        self.add = add
        self.neg = neg
        self.mul = mul
        self.inv = inv

    def vec(self, elems) -> np.ndarray:
        return np.array([e.as_int() for e in elems], dtype=self.dtype)


class FieldElement:
    """Immutable element of a Field, stored as power-basis coordinates."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    def _check(self, other: "FieldElement"):
        if self.field != other.field:
            raise FieldError(f"mixed fields: {self.field} vs {other.field}")

    def __add__(self, other):
        self._check(other)
        p = self.field.p
        return FieldElement(self.field, tuple(
            (a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        p = self.field.p
        return FieldElement(self.field, tuple(
            (a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        f = self.field
        p, m = f.p, f.m
        if m == 1:
            return FieldElement(f, ((self.coeffs[0] * other.coeffs[0]) % p,))
        t = [0] * (2 * m - 1)
        a, b = self.coeffs, other.coeffs
        for i in range(m):
            ai = a[i]
            if ai:
                for j in range(m):
                    t[i + j] += ai * b[j]
        tail = f._neg_tail
        for i in range(2 * m - 2, m - 1, -1):
            v = t[i] % p
            if v:
                for j in range(m):
                    t[i - m + j] += v * tail[j]
        return FieldElement(f, tuple(c % p for c in t[:m]))

    def _pow_pos(self, e: int) -> "FieldElement":
        acc = self.field.one()
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __pow__(self, e: int) -> "FieldElement":
        if e >= 0:
            return self._pow_pos(e)
        return self.inverse()._pow_pos(-e)

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise FieldError("zero has no inverse")
        return self._pow_pos(self.field.order - 2)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def order(self) -> int:
        """Multiplicative order (via the factored group order)."""
        if self.is_zero():
            raise FieldError("zero has no multiplicative order")
        o = self.field.order - 1
        if o == 0:
            return 1
        for prime in self.field._unit_factors:
            while o % prime == 0 and self._pow_pos(o // prime).is_one():
                o //= prime
        return o

    def frobenius(self, s: int = 1) -> "FieldElement":
        """The p^s-power map."""
        return self._pow_pos(self.field.p ** s)

    def as_int(self) -> int:
        p = self.field.p
        out = 0
        for c in reversed(self.coeffs):
            out = out * p + c
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, FieldElement)
                and self.field == other.field and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.coeffs, self.field.p, self.field.m))

    def __repr__(self) -> str:
        return f"{self.field}<{self.as_int()}>"


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, m: int, modulus: Optional[tuple]) -> Field:
    return Field(p, m, modulus)


def make_field(p: int, m: int, modulus: Optional[Sequence[int]] = None) -> Field:
    """Construct (or fetch the cached) GF(p^m).

    With no modulus the deterministic default is used; a supplied modulus must
    be monic, degree m, and irreducible, otherwise the error names a factor.
    """
    key = tuple(int(c) for c in modulus) if modulus is not None else None
    return _cached_field(int(p), int(m), key)


def field_from_text(p: int, m: int, text: Optional[str]) -> Field:
    if text is None:
        return make_field(p, m)
    return make_field(p, m, [int(c) for c in text.split(",")])


def primitive_element(field: Field) -> FieldElement:
    """Smallest element (in integer encoding) of full multiplicative order."""
    if field._primitive is None:
        target = field.order - 1
        for i in range(1, field.order):
            e = field.from_int(i)
            if e.order() == target:
                field._primitive = e
                break
        else:  # pragma: no cover - every finite field has a generator
            raise FieldError("no primitive element found")
    return field._primitive


def root_of_unity(field: Field, n: int) -> FieldElement:
    """A deterministic element of exact multiplicative order n.

    Requires n | p^m - 1.  If the field was built from an explicit modulus
    whose root already has order n (the usual way a worked construction pins
    down its root), that root is returned; otherwise alpha^((p^m-1)/n) for the
    canonical primitive element alpha.
    """
    q1 = field.order - 1
    if n < 1 or q1 % n != 0:
        raise FieldError(
            f"no element of order {n} in {field}: {n} does not divide {q1}")
    if field.m > 1:
        r = field.modulus_root()
        if not r.is_zero() and r.order() == n:
            return r
    return primitive_element(field) ** (q1 // n)


def trace(x: FieldElement, s: int = 1) -> FieldElement:
    """Trace of x from GF(p^m) onto the degree-s subfield: sum of x^(p^(s*i)).

    Requires s | m.  The result lies in the subfield (fixed by the p^s-power
    map) but is returned as an element of the ambient field.
    """
    m = x.field.m
    if s < 1 or m % s != 0:
        raise FieldError(f"subfield degree {s} does not divide {m}")
    acc = x
    y = x
    for _ in range(m // s - 1):
        y = y.frobenius(s)
        acc = acc + y
    return acc


class SubfieldEmbedding:
    """Field embedding of GF(p^s) into a host GF(p^m) with s | m.

    The image of the small field's modulus root is the smallest (by integer
    encoding) root of that modulus inside the host, so the embedding is
    deterministic.  project() inverts embed() and raises FieldError for host
    elements outside the embedded copy.
    """

    def __init__(self, host: Field, sub: Field):
        if host.p != sub.p or host.m % sub.m != 0:
            raise FieldError(f"{sub} does not embed in {host}")
        self.host = host
        self.sub = sub
        if host == sub:
            self._root_powers = None
            return
        q_sub = sub.order
        gamma = primitive_element(host) ** ((host.order - 1) // (q_sub - 1))
        candidates = [host.zero()]
        g = host.one()
        for _ in range(q_sub - 1):
            g = g * gamma
            candidates.append(g)
        mod_coeffs = [host.scalar(c) for c in sub.modulus]
        roots = []
        for c in candidates:
            acc = host.zero()
            for co in reversed(mod_coeffs):
                acc = acc * c + co
            if acc.is_zero():
                roots.append(c)
        if not roots:  # pragma: no cover - subfields always contain the roots
            raise FieldError(f"modulus of {sub} has no root in {host}")
        root = min(roots, key=lambda e: e.as_int())
        powers = [self.host.one()]
        for _ in range(sub.m - 1):
            powers.append(powers[-1] * root)
        self._root_powers = powers
        self._project = {}
        for i in range(q_sub):
            e = sub.from_int(i)
            self._project[self.embed(e)] = e

    def embed(self, e: FieldElement) -> FieldElement:
        if e.field != self.sub:
            raise FieldError(f"{e!r} is not in {self.sub}")
        if self._root_powers is None:
            return e
        acc = self.host.zero()
        for c, pw in zip(e.coeffs, self._root_powers):
            if c:
                acc = acc + pw * self.host.scalar(c)
        return acc

    def project(self, e: FieldElement) -> FieldElement:
        if e.field != self.host:
            raise FieldError(f"{e!r} is not in {self.host}")
        if self._root_powers is None:
            return e
        try:
            return self._project[e]
        except KeyError:
            raise FieldError(f"{e!r} is not in the embedded copy of {self.sub}")

    def contains(self, e: FieldElement) -> bool:
        if self._root_powers is None:
            return e.field == self.host
        return e in self._project


@functools.lru_cache(maxsize=None)
def get_embedding(host: Field, sub: Field) -> SubfieldEmbedding:
    return SubfieldEmbedding(host, sub)
