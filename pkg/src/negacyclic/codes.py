"""Constacyclic and negacyclic code objects over small fields.

A lambda-constacyclic code of length n over GF(q) is an ideal (g) of
GF(q)[x]/(x^n - lambda).  ConstacyclicCode carries the polynomial structure
(generator, check, dimension, dual, residue decomposition for even length);
NegacyclicCode specialises to lambda = -1 (and +1 for the cyclic image) and
adds the zero-exponent machinery: q-cyclotomic cosets mod 2n, BCH bounds with
multipliers, the x -> -x map onto cyclic codes, and trace-form codewords.

Code objects are immutable after construction; the distance engines read them
from any number of workers concurrently.
"""

from __future__ import annotations

import math
from typing import Iterable, Optional, Sequence

import numpy as np

from .cosets import CosetTable, build_cosets, mult_order
from .ff import Field, FieldElement, FieldTables, get_embedding, make_field
from .poly import Poly, minimal_polynomial


class CodeError(ValueError):
    """Invalid code construction or operation."""


# ---------------------------------------------------------------------------
# matrix helpers over field-index arrays

def rref(tables: FieldTables, mat: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form over the field; returns (R, pivot columns)."""
    M = np.array(mat, dtype=tables.dtype, copy=True)
    if M.size == 0:
        return M, []
    rows, cols = M.shape
    add, neg, mul, inv = tables.add, tables.neg, tables.mul, tables.inv
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        hits = np.nonzero(M[r:, c])[0]
        if hits.size == 0:
            continue
        i = r + int(hits[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
        M[r] = mul[inv[M[r, c]]][M[r]]
        col = M[:, c].copy()
        col[r] = 0
        live = np.nonzero(col)[0]
        if live.size:
            M[live] = add[M[live], mul[neg[col[live]][:, None], M[r][None, :]]]
        pivots.append(c)
        r += 1
    # drop all-zero rows
    nz = np.any(M != 0, axis=1)
    return M[nz], pivots


def mat_rank(tables: FieldTables, mat: np.ndarray) -> int:
    return len(rref(tables, mat)[1])


def mat_mul(tables: FieldTables, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product over the field (index arrays)."""
    add, mul = tables.add, tables.mul
    out = np.zeros((a.shape[0], b.shape[1]), dtype=tables.dtype)
    for k in range(a.shape[1]):
        out = add[out, mul[a[:, k][:, None], b[k][None, :]]]
    return out


def nullspace(tables: FieldTables, mat: np.ndarray, n: int) -> np.ndarray:
    """Basis of the right null space of mat (rows of the result)."""
    R, pivots = rref(tables, mat)
    free = [c for c in range(n) if c not in pivots]
    neg = tables.neg
    out = np.zeros((len(free), n), dtype=tables.dtype)
    for row_i, f in enumerate(free):
        out[row_i, f] = 1
        for pr, pc in enumerate(pivots):
            out[row_i, pc] = neg[R[pr, f]]
    return out


class LinearCode:
    """A plain linear code given by generator rows (used by the u+v|u-v glue)."""

    def __init__(self, field: Field, gen_rows: np.ndarray):
        self.field = field
        self._rows = np.array(gen_rows, dtype=field.tables().dtype)
        self.n = self._rows.shape[1]
        self.k = self._rows.shape[0]

    def rows(self) -> np.ndarray:
        return self._rows

    def dual_rows(self) -> np.ndarray:
        return nullspace(self.field.tables(), self._rows, self.n)

    def contains(self, word) -> bool:
        t = self.field.tables()
        w = np.asarray(word, dtype=t.dtype).reshape(-1, 1)
        return not mat_mul(t, self.dual_rows(), w).any()

    def encode(self, message) -> np.ndarray:
        t = self.field.tables()
        word = np.zeros(self.n, dtype=t.dtype)
        for m, row in zip(message, self._rows):
            word = t.add[word, t.mul[int(m) % t.q][row]]
        return word


class ConstacyclicCode:
    """lambda-constacyclic code: the ideal (g) of GF(q)[x]/(x^n - lambda)."""

    def __init__(self, field: Field, n: int, lam: FieldElement, g: Poly):
        if lam.is_zero():
            raise CodeError("lambda must be a unit")
        if g.field != field:
            raise CodeError("generator not over the code's field")
        self.field = field
        self.n = n
        self.lam = lam
        g = g.monic() if not g.is_zero() else Poly.x_pow_minus(field, n, lam).monic()
        self.modulus_poly = Poly.x_pow_minus(field, n, lam)
        quot, rem = divmod(self.modulus_poly, g)
        if not rem.is_zero():
            raise CodeError(
                f"generator {g.to_text()} does not divide x^{n} - lambda "
                f"(remainder {rem.to_text()})")
        self.g = g
        self.h = quot.monic()
        self.k = n - int(g.degree)

    # -- vector-side helpers -------------------------------------------------

    def rows(self) -> np.ndarray:
        """Generator rows x^i * g for 0 <= i < k (no reduction needed)."""
        t = self.field.tables()
        if self.k == 0:
            return np.zeros((0, self.n), dtype=t.dtype)
        row = np.zeros(self.n, dtype=t.dtype)
        gi = self.g.to_ints()
        row[:len(gi)] = gi
        out = np.zeros((self.k, self.n), dtype=t.dtype)
        for i in range(self.k):
            out[i] = np.roll(row, i)
        return out

    def dual_rows(self) -> np.ndarray:
        return self.dual().rows()

    def encode(self, message: Sequence[int]) -> np.ndarray:
        t = self.field.tables()
        if len(message) != self.k:
            raise CodeError(f"message length {len(message)} != dimension {self.k}")
        word = np.zeros(self.n, dtype=t.dtype)
        for m, row in zip(message, self.rows()):
            word = t.add[word, t.mul[int(m) % t.q][row]]
        return word

    def word_poly(self, word: Sequence[int]) -> Poly:
        return Poly.from_ints(self.field, [int(w) for w in word])

    def contains(self, word: Sequence[int]) -> bool:
        return (self.word_poly(word) % self.g).is_zero()

    def negashift(self, word: Sequence[int]) -> np.ndarray:
        """(lambda*c_{n-1}, c_0, ..., c_{n-2})."""
        t = self.field.tables()
        w = np.asarray(word, dtype=t.dtype)
        out = np.empty_like(w)
        out[0] = t.mul[self.field.index(self.lam), w[-1]]
        out[1:] = w[:-1]
        return out

    def codewords(self) -> Iterable[np.ndarray]:
        """All q^k words; only sensible at small dimensions."""
        t = self.field.tables()
        rows = self.rows()
        words = np.zeros((1, self.n), dtype=t.dtype)
        for r in range(self.k):
            scaled = [t.add[words, t.mul[v][rows[r]][None, :]] for v in range(t.q)]
            words = np.concatenate(scaled, axis=0)
        return words

    # -- structure ------------------------------------------------------------

    def dual(self) -> "ConstacyclicCode":
        """The dual: lambda^{-1}-constacyclic, generated by reciprocal(h)."""
        return ConstacyclicCode(
            self.field, self.n, self.lam.inverse(), self.h.reciprocal())

    def generator_matrix(self) -> np.ndarray:
        return rref(self.field.tables(), self.rows())[0]

    def parity_check_matrix(self) -> np.ndarray:
        return rref(self.field.tables(), self.dual_rows())[0]

    def residue_decompose(self):
        """Split an even-length negacyclic code over GF(q), q = 1 mod 4, into
        its two half-length constacyclic residue codes.

        Returns (res_minus, res_plus, lam_sqrt): res_minus is (-lam_sqrt)-
        constacyclic with generator gcd(g, x^{n/2} + lam_sqrt); res_plus is
        lam_sqrt-constacyclic with generator gcd(g, x^{n/2} - lam_sqrt).
        """
        if not (-self.lam).is_one():
            raise CodeError("residue decomposition applies to negacyclic codes")
        if self.n % 2 != 0:
            raise CodeError("residue decomposition needs even length")
        if (self.field.order - 1) % 4 != 0:
            raise CodeError(
                f"no square root of -1 in {self.field}: order is not 1 mod 4")
        lam_sqrt = None
        for e in self.field.elements():
            if not e.is_zero() and (e * e + self.field.one()).is_zero():
                lam_sqrt = e
                break
        half = self.n // 2
        x_plus = Poly.x_pow_minus(self.field, half, -lam_sqrt)   # x^{n/2} + lam
        x_minus = Poly.x_pow_minus(self.field, half, lam_sqrt)   # x^{n/2} - lam
        res_minus = ConstacyclicCode(self.field, half, -lam_sqrt,
                                     self.g.gcd(x_plus))
        res_plus = ConstacyclicCode(self.field, half, lam_sqrt,
                                    self.g.gcd(x_minus))
        return res_minus, res_plus, lam_sqrt

    def residue_recombine(self, lam_sqrt: FieldElement,
                          w1: Sequence[int], w2: Sequence[int]) -> np.ndarray:
        """e1*c1 + e2*c2 mod x^n + 1 for residue words c1, c2."""
        half = self.n // 2
        f = self.field
        two_inv = (f.one() + f.one()).inverse()
        c1 = Poly.from_ints(f, [int(v) for v in w1])
        c2 = Poly.from_ints(f, [int(v) for v in w2])
        e1 = Poly.x_pow_minus(f, half, lam_sqrt).scale(lam_sqrt * two_inv)
        e2 = Poly.x_pow_minus(f, half, -lam_sqrt).scale(-(lam_sqrt * two_inv))
        w = (e1 * c1 + e2 * c2) % self.modulus_poly
        out = np.zeros(self.n, dtype=self.field.tables().dtype)
        for i, c in enumerate(w.coeffs):
            out[i] = c.as_int()
        return out

    def descriptor(self) -> dict:
        d = {
            "q": self.field.order,
            "n": self.n,
            "lambda": _lambda_json(self.field, self.lam),
            "g": self.g.to_text(),
            "k": self.k,
        }
        if self.field.m > 1:
            d["base_field"] = self.field.descriptor()
        return d

    def __repr__(self) -> str:
        return f"[{self.n},{self.k}] code over {self.field}"


def _lambda_json(field: Field, lam: FieldElement):
    if lam.is_one():
        return 1
    if (-lam).is_one():
        return -1
    return lam.as_int()


def _lambda_from_json(field: Field, v) -> FieldElement:
    if v == 1:
        return field.one()
    if v == -1:
        return -field.one()
    return field.from_int(int(v))


def uv_construct(c1, c2) -> LinearCode:
    """The (u+v | u-v) combination of two equal-length codes over one field."""
    if c1.field != c2.field:
        raise CodeError("u+v|u-v needs a common field")
    if c1.n != c2.n:
        raise CodeError(f"length mismatch: {c1.n} vs {c2.n}")
    if c1.field.p == 2:
        raise CodeError("u+v|u-v needs odd characteristic")
    t = c1.field.tables()
    r1, r2 = c1.rows(), c2.rows()
    top = np.concatenate([r1, r1], axis=1)
    bot = np.concatenate([r2, t.neg[r2]], axis=1)
    return LinearCode(c1.field, np.concatenate([top, bot], axis=0))


def residue_distance_relation(d1: Optional[int], d2: Optional[int]):
    """Distance of the recombined code from its residue distances.

    Follows the even-length splitting rule: a zero residue doubles the
    other side; otherwise 2*min is exact when 2*min <= max, and only the
    interval [max, 2*min] is determined when 2*min > max.
    """
    if d1 is None and d2 is None:
        raise CodeError("both residues are zero codes")
    if d2 is None:
        return ("exact", 2 * d1)
    if d1 is None:
        return ("exact", 2 * d2)
    lo, hi = min(d1, d2), max(d1, d2)
    if 2 * lo <= hi:
        return ("exact", 2 * lo)
    return ("interval", hi, 2 * lo)


class NegacyclicCode(ConstacyclicCode):
    """Negacyclic (lambda = -1) or cyclic (lambda = +1) code with its zero set.

    Zeros are beta^i for i in zero_exponents, where beta is a fixed primitive
    R-th root of unity in the host field (R = 2n with odd exponents for
    negacyclic codes, R = n with arbitrary exponents for cyclic ones).
    Zero-exponent sets make codes comparable without fixing beta across hosts.
    """

    def __init__(self, field: Field, n: int, lam_int: int, g: Poly,
                 host: Field, beta: FieldElement, table: CosetTable,
                 zero_exponents: frozenset[int]):
        lam = field.one() if lam_int == 1 else -field.one()
        super().__init__(field, n, lam, g)
        self.lam_int = lam_int
        self.R = table.N
        self.host = host
        self.beta = beta
        self.table = table
        self.zero_exponents = zero_exponents
        self._zero_mask = np.zeros(self.R, dtype=bool)
        if zero_exponents:
            self._zero_mask[sorted(zero_exponents)] = True
        elig = self._eligible()
        self.zero_leaders = tuple(sorted(
            {table.leader_of[i] for i in zero_exponents}))
        self.check_leaders = tuple(sorted(
            {table.leader_of[i] for i in elig if i not in zero_exponents}))

    def _eligible(self) -> range:
        return range(1, self.R, 2) if self.lam_int == -1 else range(self.R)

    # -- construction ----------------------------------------------------------

    @staticmethod
    def _context(field: Field, n: int, lam_int: int,
                 host_modulus: Optional[Sequence[int]] = None,
                 host: Optional[Field] = None):
        if lam_int not in (-1, 1):
            raise CodeError("lam_int must be -1 (negacyclic) or +1 (cyclic)")
        if n < 1:
            raise CodeError("length must be positive")
        q0 = field.order
        R = 2 * n if lam_int == -1 else n
        if math.gcd(R, field.p) != 1:
            raise CodeError(f"need gcd({R}, {field.p}) = 1 for semisimple structure")
        table = build_cosets(q0, R)
        if host is None:
            mh = mult_order(q0, R)
            if mh == 1 and host_modulus is None:
                host = field
            else:
                host = make_field(field.p, field.m * mh, host_modulus)
        from .ff import root_of_unity
        beta = root_of_unity(host, R)
        return table, host, beta

    @classmethod
    def from_zeros(cls, field: Field, n: int, zero_leaders: Iterable[int],
                   lam_int: int = -1,
                   host_modulus: Optional[Sequence[int]] = None,
                   host: Optional[Field] = None) -> "NegacyclicCode":
        table, host, beta = cls._context(field, n, lam_int, host_modulus, host)
        R = table.N
        elig = set(range(1, R, 2)) if lam_int == -1 else set(range(R))
        leaders = []
        seen = set()
        for l in zero_leaders:
            l = l % R
            if l not in elig:
                raise CodeError(f"exponent {l} not eligible for lambda={lam_int}")
            can = table.leader_of[l]
            if can in seen:
                raise CodeError(f"cosets overlap at leader {can}")
            seen.add(can)
            leaders.append(can)
        g = Poly.one(field)
        T = set()
        for l in leaders:
            coset = table.cosets[l]
            g = g * minimal_polynomial(beta, coset, field)
            T.update(coset)
        return cls(field, n, lam_int, g, host, beta, table, frozenset(T))

    @classmethod
    def from_check(cls, field: Field, n: int, check_leaders: Iterable[int],
                   lam_int: int = -1,
                   host_modulus: Optional[Sequence[int]] = None,
                   host: Optional[Field] = None) -> "NegacyclicCode":
        """Code whose check polynomial is the product of the given cosets'
        minimal polynomials; its zeros are every other eligible exponent."""
        table, host, beta = cls._context(field, n, lam_int, host_modulus, host)
        R = table.N
        elig = set(range(1, R, 2)) if lam_int == -1 else set(range(R))
        seen = set()
        for l in check_leaders:
            l = l % R
            if l not in elig:
                raise CodeError(f"exponent {l} not eligible for lambda={lam_int}")
            can = table.leader_of[l]
            if can in seen:
                raise CodeError(f"cosets overlap at leader {can}")
            seen.add(can)
        zero_leaders = [l for l in table.leaders
                        if l in elig and l not in seen]
        return cls.from_zeros(field, n, zero_leaders, lam_int,
                              host_modulus, host)

    @classmethod
    def from_generator(cls, field: Field, n: int, g: Poly, lam_int: int = -1,
                       host_modulus: Optional[Sequence[int]] = None,
                       host: Optional[Field] = None) -> "NegacyclicCode":
        table, host, beta = cls._context(field, n, lam_int, host_modulus, host)
        lam = field.one() if lam_int == 1 else -field.one()
        modp = Poly.x_pow_minus(field, n, lam)
        if g.is_zero():
            raise CodeError("generator must be nonzero")
        g = g.monic()
        _, rem = divmod(modp, g)
        if not rem.is_zero():
            raise CodeError(
                f"generator {g.to_text()} does not divide x^{n} "
                f"{'-' if lam_int == 1 else '+'} 1 (remainder {rem.to_text()})")
        elig_leaders = [l for l in table.leaders
                        if (lam_int == 1 or l % 2 == 1)]
        T = set()
        for l in elig_leaders:
            if g(beta ** l).is_zero():
                T.update(table.cosets[l])
        return cls(field, n, lam_int, g, host, beta, table, frozenset(T))

    @classmethod
    def from_descriptor(cls, desc: dict) -> "NegacyclicCode":
        q = int(desc["q"])
        bf = desc.get("base_field")
        if bf is not None:
            field = make_field(int(bf["p"]), int(bf["m"]),
                               [int(c) for c in bf["modulus"].split(",")])
        else:
            field = make_field(q, 1)
        host_modulus = None
        if "host_field" in desc:
            hf = desc["host_field"]
            host_modulus = [int(c) for c in hf["modulus"].split(",")]
        g = Poly.from_text(field, desc["g"])
        return cls.from_generator(field, int(desc["n"]), g,
                                  int(desc["lambda"]), host_modulus)

    # -- zero-set structure ------------------------------------------------------

    def dual(self) -> "NegacyclicCode":
        """Dual code: zeros are the negations of this code's nonzeros."""
        R = self.R
        elig = self._eligible()
        dual_T = {(R - i) % R for i in elig if i not in self.zero_exponents}
        leaders = sorted({self.table.leader_of[i] for i in dual_T})
        d = NegacyclicCode.from_zeros(self.field, self.n, leaders,
                                      self.lam_int, host=self.host)
        recip = self.h.reciprocal()
        if d.g != recip:  # pragma: no cover - internal consistency
            raise CodeError("dual generator disagrees with reciprocal check polynomial")
        return d

    def bch_bound(self, v: int = 1) -> int:
        """Longest run of consecutive zeros seen through the multiplier v.

        For negacyclic codes the run walks odd exponents v*(1+2i) mod 2n; a
        run of length r certifies distance >= r+1 because beta^v is again a
        primitive 2n-th root with (beta^v)^n = -1.
        """
        if math.gcd(v, self.R) != 1:
            raise CodeError(f"multiplier {v} shares a factor with {self.R}")
        n = self.n
        if self.lam_int == -1:
            exps = (v * (1 + 2 * np.arange(n))) % self.R
        else:
            exps = (v * np.arange(n)) % self.R
        member = self._zero_mask[exps]
        if member.all():
            return n
        if not member.any():
            return 1
        # longest circular run of True: gaps between False positions, doubled
        padded = np.concatenate([[False], member, member, [False]])
        false_idx = np.nonzero(~padded)[0]
        best = int(np.max(np.diff(false_idx))) - 1
        return min(best, n - 1) + 1

    def best_bch_multiplier(self) -> tuple[int, int]:
        """Exhaustive multiplier search, deduplicated by q-coset of v."""
        seen = set()
        best = (1, self.bch_bound(1))
        for v in range(1, self.R):
            if math.gcd(v, self.R) != 1 or v in seen:
                continue
            # v and q*v give identical bounds: mark the whole coset
            w = v
            while w not in seen:
                seen.add(w)
                w = (w * self.field.order) % self.R
            b = self.bch_bound(v)
            if b > best[1]:
                best = (v, b)
        return best

    def psi_image(self) -> "NegacyclicCode":
        """The x -> -x image: a cyclic code for odd n, weight-preserving."""
        if self.n % 2 == 0:
            raise CodeError(
                "the x -> -x map between negacyclic and cyclic codes needs odd length")
        g_img = self.g.substitute_neg_x().monic()
        return NegacyclicCode.from_generator(self.field, self.n, g_img,
                                             -self.lam_int)

    # -- trace-form codewords ------------------------------------------------------

    def _check_cosets(self) -> list[tuple[int, tuple[int, ...]]]:
        return [(l, self.table.cosets[l]) for l in self.check_leaders]

    def subfield_elements(self, coset_size: int) -> list[FieldElement]:
        """All elements of GF(q0^coset_size) embedded in the host field."""
        host_q = self.host.order
        sub_q = self.field.order ** coset_size
        if (host_q - 1) % (sub_q - 1) != 0:
            raise CodeError(f"GF({sub_q}) does not embed in {self.host}")
        from .ff import primitive_element
        gamma = primitive_element(self.host) ** ((host_q - 1) // (sub_q - 1))
        out = [self.host.zero(), self.host.one()]
        acc = self.host.one()
        for _ in range(sub_q - 2):
            acc = acc * gamma
            out.append(acc)
        return out

    def _q0_trace(self, y: FieldElement, terms: int) -> FieldElement:
        s = self.field.m
        acc = y
        t = y
        for _ in range(terms - 1):
            t = t.frobenius(s)
            acc = acc + t
        return acc

    def trace_codeword(self, coeffs: Sequence[FieldElement]) -> tuple[int, ...]:
        """Codeword (sum_j Tr(a_j * beta^(-t i_j)))_t for check-coset coefficients.

        coeffs[j] must lie in GF(q0^{m_j}) inside the host field, m_j the size
        of the j-th check coset.  The result is a tuple of base-field indices.
        """
        cosets = self._check_cosets()
        if len(coeffs) != len(cosets):
            raise CodeError(f"expected {len(cosets)} coefficients")
        proj = get_embedding(self.host, self.field)
        mh = self.host.m // self.field.m
        word = [self.field.zero()] * self.n
        for a, (leader, coset) in zip(coeffs, cosets):
            mj = len(coset)
            if a.field != self.host:
                raise CodeError("coefficients must live in the host field")
            if not (a ** (self.field.order ** mj)) == a:
                raise CodeError(
                    f"coefficient {a!r} outside GF({self.field.order}^{mj})")
            theta = self.beta ** ((self.R - leader) % self.R)
            cur = a
            for t in range(self.n):
                word[t] = word[t] + proj.project(self._q0_trace(cur, mj))
                cur = cur * theta
        return tuple(e.as_int() for e in word)

    def trace_code_set(self) -> set[tuple[int, ...]]:
        """All q^k trace-form words, as a set of index tuples."""
        t = self.field.tables()
        proj = get_embedding(self.host, self.field)
        per_coset = []
        for leader, coset in self._check_cosets():
            mj = len(coset)
            theta = self.beta ** ((self.R - leader) % self.R)
            rows = []
            for a in self.subfield_elements(mj):
                cur = a
                row = np.zeros(self.n, dtype=t.dtype)
                for tt in range(self.n):
                    row[tt] = proj.project(self._q0_trace(cur, mj)).as_int()
                    cur = cur * theta
                rows.append(row)
            per_coset.append(np.array(rows))
        words = np.zeros((1, self.n), dtype=t.dtype)
        for rows in per_coset:
            words = t.add[words[:, None, :], rows[None, :, :]].reshape(-1, self.n)
        return {tuple(int(v) for v in w) for w in words}

    def descriptor(self) -> dict:
        d = super().descriptor()
        d["lambda"] = self.lam_int
        d["zero_leaders"] = list(self.zero_leaders)
        d["host_field"] = self.host.descriptor()
        return d
