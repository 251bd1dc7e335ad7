"""Exact arithmetic on truncated symmetric functions in the power-sum basis.

A symmetric function is stored as a finite map from integer partitions to
rational coefficients, representing ``sum c_lam * p_lam`` where
``p_lam = p_{lam_1} * p_{lam_2} * ...`` is a monomial in the power sums.
Every value carries an explicit truncation degree N: all operations are
exact on degrees <= N and silently discard anything above.  Mixing values
with different truncations is an error, never a coercion.

Coefficients are ``fractions.Fraction`` throughout, so every identity
checked by the test suite is an exact equality of rationals.

Partitions are plain tuples of weakly decreasing positive integers.  The
canonical ordering (used by ``terms``, ``str`` and the JSON form) is by
degree, then reverse-lexicographically within a degree: ``(n,)`` first,
``(1,)*n`` last.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

Partition = tuple


def partition_sort_key(lam: Partition):
    """Sort key realizing the canonical (degree, reverse-lex) order."""
    return (sum(lam), tuple(-part for part in lam))


def _validate_partition(lam) -> Partition:
    lam = tuple(lam)
    for i, part in enumerate(lam):
        if not isinstance(part, int) or part < 1:
            raise ValueError(f"partition parts must be positive integers, got {lam!r}")
        if i and lam[i - 1] < part:
            raise ValueError(f"partition parts must be weakly decreasing, got {lam!r}")
    return lam


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n``, each exactly once, in reverse-lex order.

    The empty partition is the unique partition of 0.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []

    def extend(remaining, largest, prefix):
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(largest, remaining), 0, -1):
            extend(remaining - part, part, prefix + (part,))

    extend(n, n, ())
    return tuple(out)


def z_of(lam: Partition) -> int:
    """The centralizer order z_lam = prod_i i^{m_i} m_i!.

    A permutation of cycle type lam has n!/z_lam conjugates; 1/z_lam is the
    coefficient weight used when expanding h_n over partitions.
    """
    lam = _validate_partition(lam)
    z = 1
    mult: dict[int, int] = {}
    for part in lam:
        mult[part] = mult.get(part, 0) + 1
    for part, m in mult.items():
        z *= part**m
        for j in range(2, m + 1):
            z *= j
    return z


def euler_phi(n: int) -> int:
    """Euler's totient, by trial-division factorization."""
    if n < 1:
        raise ValueError("n must be positive")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"coefficients must be exact rationals, got {type(value).__name__}")


class SymFunc:
    """A truncated symmetric function with exact rational coefficients."""

    __slots__ = ("truncation", "_terms")

    def __init__(self, truncation: int, terms=None):
        if not isinstance(truncation, int) or truncation < 1:
            raise ValueError("truncation must be a positive integer")
        clean: dict[Partition, Fraction] = {}
        if terms:
            for lam, coeff in terms.items() if hasattr(terms, "items") else terms:
                lam = _validate_partition(lam)
                if sum(lam) > truncation:
                    raise ValueError(
                        f"term {lam!r} has degree {sum(lam)} above truncation {truncation}"
                    )
                coeff = _as_fraction(coeff)
                if coeff:
                    clean[lam] = clean.get(lam, Fraction(0)) + coeff
                    if not clean[lam]:
                        del clean[lam]
        object.__setattr__(self, "truncation", truncation)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SymFunc is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def _raw(cls, truncation: int, terms: dict) -> "SymFunc":
        # internal fast path: caller guarantees valid keys/values
        self = object.__new__(cls)
        object.__setattr__(self, "truncation", truncation)
        object.__setattr__(self, "_terms", terms)
        return self

    @classmethod
    def zero(cls, truncation: int) -> "SymFunc":
        return cls(truncation, {})

    @classmethod
    def one(cls, truncation: int) -> "SymFunc":
        return cls(truncation, {(): Fraction(1)})

    @classmethod
    def p(cls, k: int, truncation: int) -> "SymFunc":
        """The power sum p_k (zero if k exceeds the truncation)."""
        if not isinstance(k, int) or k < 1:
            raise ValueError("power-sum index must be a positive integer")
        if k > truncation:
            return cls.zero(truncation)
        return cls(truncation, {(k,): Fraction(1)})

    # -- inspection ---------------------------------------------------

    def terms(self):
        """Iterate (partition, coefficient) pairs in canonical order."""
        for lam in sorted(self._terms, key=partition_sort_key):
            yield lam, self._terms[lam]

    def coefficient(self, lam) -> Fraction:
        return self._terms.get(_validate_partition(lam), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def valuation(self):
        """Smallest degree with a nonzero term, or None for the zero function."""
        if not self._terms:
            return None
        return min(sum(lam) for lam in self._terms)

    def degree_part(self, d: int) -> "SymFunc":
        return SymFunc._raw(
            self.truncation,
            {lam: c for lam, c in self._terms.items() if sum(lam) == d},
        )

    def is_homogeneous(self) -> bool:
        return len({sum(lam) for lam in self._terms}) <= 1

    def truncated(self, new_truncation: int) -> "SymFunc":
        """The same function carried at a lower truncation (terms above it
        are dropped).  Raising the truncation is refused: the discarded
        degrees are not recoverable."""
        if new_truncation > self.truncation:
            raise ValueError(
                f"cannot raise truncation {self.truncation} to {new_truncation}"
            )
        return SymFunc._raw(
            new_truncation,
            {lam: c for lam, c in self._terms.items() if sum(lam) <= new_truncation},
        )

    # -- ring structure -----------------------------------------------

    def _check_compatible(self, other: "SymFunc"):
        if not isinstance(other, SymFunc):
            raise TypeError(f"expected SymFunc, got {type(other).__name__}")
        if self.truncation != other.truncation:
            raise ValueError(
                f"truncation mismatch: {self.truncation} vs {other.truncation}"
            )

    def __add__(self, other):
        self._check_compatible(other)
        terms = dict(self._terms)
        for lam, c in other._terms.items():
            acc = terms.get(lam, Fraction(0)) + c
            if acc:
                terms[lam] = acc
            elif lam in terms:
                del terms[lam]
        return SymFunc._raw(self.truncation, terms)

    def __neg__(self):
        return SymFunc._raw(self.truncation, {lam: -c for lam, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _as_fraction(other)
            if not other:
                return SymFunc.zero(self.truncation)
            return SymFunc._raw(
                self.truncation, {lam: c * other for lam, c in self._terms.items()}
            )
        self._check_compatible(other)
        N = self.truncation
        terms: dict[Partition, Fraction] = {}
        for lam, c in self._terms.items():
            wl = sum(lam)
            for mu, d in other._terms.items():
                if wl + sum(mu) > N:
                    continue
                key = tuple(sorted(lam + mu, reverse=True))
                acc = terms.get(key, Fraction(0)) + c * d
                if acc:
                    terms[key] = acc
                elif key in terms:
                    del terms[key]
        return SymFunc._raw(N, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = SymFunc.one(self.truncation)
        for _ in range(exponent):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.truncation == other.truncation and self._terms == other._terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    # -- rendering ----------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        chunks = []
        for lam, c in self.terms():
            mono = _monomial_str(lam)
            if mono == "1":
                chunks.append(str(c))
            elif c == 1:
                chunks.append(mono)
            else:
                chunks.append(f"{c}*{mono}")
        return " + ".join(chunks)

    def __repr__(self):
        return f"SymFunc(N={self.truncation}: {self})"

    # -- serialization ------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "truncation": self.truncation,
            "terms": [
                {
                    "partition": list(lam),
                    "num": str(c.numerator),
                    "den": str(c.denominator),
                }
                for lam, c in self.terms()
            ],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "SymFunc":
        terms = {}
        for entry in obj["terms"]:
            lam = tuple(entry["partition"])
            coeff = Fraction(int(entry["num"]), int(entry["den"]))
            terms[lam] = terms.get(lam, Fraction(0)) + coeff
        return cls(obj["truncation"], terms)


def _monomial_str(lam: Partition) -> str:
    if not lam:
        return "1"
    chunks = []
    i = 0
    while i < len(lam):
        j = i
        while j < len(lam) and lam[j] == lam[i]:
            j += 1
        exp = j - i
        chunks.append(f"p{lam[i]}" if exp == 1 else f"p{lam[i]}^{exp}")
        i = j
    return "*".join(chunks)


# -- the operations beyond the plain ring structure --------------------


def h_gen(n: int, truncation: int) -> SymFunc:
    """The complete homogeneous symmetric function h_n = sum p_lam / z_lam."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    if n > truncation:
        raise ValueError(f"h_{n} exceeds truncation {truncation}")
    return SymFunc._raw(
        truncation, {lam: Fraction(1, z_of(lam)) for lam in partitions_of(n)}
    )


def h_lambda(lam, truncation: int) -> SymFunc:
    """Product h_{lam_1} h_{lam_2} ... (the Young permutation-module character)."""
    lam = _validate_partition(lam)
    out = SymFunc.one(truncation)
    for part in lam:
        out = out * h_gen(part, truncation)
    return out


def adams(k: int, f: SymFunc) -> SymFunc:
    """k-th Adams operation: substitute p_j -> p_{jk}; degrees multiply by k."""
    if not isinstance(k, int) or k < 1:
        raise ValueError("Adams index must be a positive integer")
    N = f.truncation
    terms = {}
    for lam, c in f._terms.items():
        if k * sum(lam) > N:
            continue
        terms[tuple(part * k for part in lam)] = c
    return SymFunc._raw(N, terms)


def plethysm(f: SymFunc, g: SymFunc) -> SymFunc:
    """Plethysm f o g, a ring homomorphism in f sending p_k to adams(k, g).

    g must have no constant term, otherwise the substitution does not
    converge as a formal series.
    """
    f._check_compatible(g)
    if g.coefficient(()):
        raise ValueError("plethysm requires the right argument to have no constant term")
    N = f.truncation
    gval = g.valuation()
    if gval is None:
        gval = N + 1
    adams_cache: dict[int, SymFunc] = {}
    out = SymFunc.zero(N)
    for lam, c in f._terms.items():
        if sum(lam) * gval > N:
            continue
        acc = SymFunc.one(N)
        for part in lam:
            factor = adams_cache.get(part)
            if factor is None:
                factor = adams_cache[part] = adams(part, g)
            acc = acc * factor
            if acc.is_zero():
                break
        out = out + acc * c
    return out


def partial_p(k: int, f: SymFunc) -> SymFunc:
    """Formal partial derivative with respect to p_k."""
    if not isinstance(k, int) or k < 1:
        raise ValueError("derivative index must be a positive integer")
    terms: dict[Partition, Fraction] = {}
    for lam, c in f._terms.items():
        m = lam.count(k)
        if not m:
            continue
        idx = lam.index(k)
        key = lam[:idx] + lam[idx + 1 :]
        acc = terms.get(key, Fraction(0)) + c * m
        if acc:
            terms[key] = acc
        elif key in terms:
            del terms[key]
    return SymFunc._raw(f.truncation, terms)


def d_operator(f: SymFunc, g: SymFunc) -> SymFunc:
    """Apply f(d/dp_1, 2 d/dp_2, 3 d/dp_3, ...) to g.

    Each monomial of f acts by composing the commuting operators
    k * d/dp_k over its parts.
    """
    f._check_compatible(g)
    out = SymFunc.zero(f.truncation)
    for lam, c in f._terms.items():
        cur = g
        for part in lam:
            cur = partial_p(part, cur) * part
            if cur.is_zero():
                break
        out = out + cur * c
    return out


def log_inv(f: SymFunc) -> SymFunc:
    """-log(1 - f) = sum_{k>=1} f^k / k, truncated; f must have valuation >= 1."""
    if f.coefficient(()):
        raise ValueError("log series requires no constant term")
    val = f.valuation()
    if val is None:
        return SymFunc.zero(f.truncation)
    out = f
    power = f
    for k in range(2, f.truncation // val + 1):
        power = power * f
        out = out + power * Fraction(1, k)
    return out


def geom(f: SymFunc) -> SymFunc:
    """1/(1 - f) = sum_{k>=0} f^k, truncated; f must have valuation >= 1."""
    if f.coefficient(()):
        raise ValueError("geometric series requires no constant term")
    out = SymFunc.one(f.truncation)
    val = f.valuation()
    if val is None:
        return out
    power = SymFunc.one(f.truncation)
    for _ in range(f.truncation // val):
        power = power * f
        out = out + power
    return out
