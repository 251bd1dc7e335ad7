"""Wreath-product symmetric functions for the two-element group.

The ring has one family of power-sum generators per conjugacy class of the
group of order two: P_k for the identity class (class tag "e") and Q_k for
the swap class (tag "t"), both of degree k.  A monomial is stored as a
sorted tuple of (k, tag) pairs; values mirror ``SymFunc``: an explicit
truncation degree plus a finite map from monomials to ``Fraction``.

``specialize_s2`` carries these functions onto ordinary symmetric
functions: P_k acts as the k-th Adams operation of the second p_1
derivative, Q_k as twice the k-th Adams operation of the p_2 derivative.
The extension to products is multiplicative; end-to-end correctness of
that convention is pinned by the graph-census tests rather than argued
here.
"""

from __future__ import annotations

from fractions import Fraction

from .symfunc import SymFunc, adams, euler_phi, partial_p, _as_fraction

E_CLASS = "e"
T_CLASS = "t"

WreathMonomial = tuple  # sorted tuple of (k, class-tag) pairs


def _validate_monomial(key) -> WreathMonomial:
    key = tuple(key)
    for k, tag in key:
        if not isinstance(k, int) or k < 1:
            raise ValueError(f"generator index must be a positive integer, got {key!r}")
        if tag not in (E_CLASS, T_CLASS):
            raise ValueError(f"class tag must be {E_CLASS!r} or {T_CLASS!r}, got {key!r}")
    return tuple(sorted(key))


def _degree(key: WreathMonomial) -> int:
    return sum(k for k, _ in key)


def monomial_sort_key(key: WreathMonomial):
    return (_degree(key), key)


class WreathSymFunc:
    """A truncated wreath-product symmetric function over exact rationals."""

    __slots__ = ("truncation", "_terms")

    def __init__(self, truncation: int, terms=None):
        if not isinstance(truncation, int) or truncation < 1:
            raise ValueError("truncation must be a positive integer")
        clean: dict[WreathMonomial, Fraction] = {}
        if terms:
            for key, coeff in terms.items() if hasattr(terms, "items") else terms:
                key = _validate_monomial(key)
                if _degree(key) > truncation:
                    raise ValueError(
                        f"monomial {key!r} has degree {_degree(key)} above truncation {truncation}"
                    )
                coeff = _as_fraction(coeff)
                if coeff:
                    clean[key] = clean.get(key, Fraction(0)) + coeff
                    if not clean[key]:
                        del clean[key]
        object.__setattr__(self, "truncation", truncation)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("WreathSymFunc is immutable")

    @classmethod
    def _raw(cls, truncation: int, terms: dict) -> "WreathSymFunc":
        self = object.__new__(cls)
        object.__setattr__(self, "truncation", truncation)
        object.__setattr__(self, "_terms", terms)
        return self

    @classmethod
    def zero(cls, truncation: int) -> "WreathSymFunc":
        return cls(truncation, {})

    @classmethod
    def one(cls, truncation: int) -> "WreathSymFunc":
        return cls(truncation, {(): Fraction(1)})

    @classmethod
    def gen_p(cls, k: int, truncation: int) -> "WreathSymFunc":
        """The identity-class generator P_k (zero if k exceeds the truncation)."""
        if not isinstance(k, int) or k < 1:
            raise ValueError("generator index must be a positive integer")
        if k > truncation:
            return cls.zero(truncation)
        return cls(truncation, {((k, E_CLASS),): Fraction(1)})

    @classmethod
    def gen_q(cls, k: int, truncation: int) -> "WreathSymFunc":
        """The swap-class generator Q_k (zero if k exceeds the truncation)."""
        if not isinstance(k, int) or k < 1:
            raise ValueError("generator index must be a positive integer")
        if k > truncation:
            return cls.zero(truncation)
        return cls(truncation, {((k, T_CLASS),): Fraction(1)})

    def terms(self):
        for key in sorted(self._terms, key=monomial_sort_key):
            yield key, self._terms[key]

    def coefficient(self, key) -> Fraction:
        return self._terms.get(_validate_monomial(key), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def valuation(self):
        if not self._terms:
            return None
        return min(_degree(key) for key in self._terms)

    def degree_part(self, d: int) -> "WreathSymFunc":
        return WreathSymFunc._raw(
            self.truncation,
            {key: c for key, c in self._terms.items() if _degree(key) == d},
        )

    def _check_compatible(self, other):
        if not isinstance(other, WreathSymFunc):
            raise TypeError(f"expected WreathSymFunc, got {type(other).__name__}")
        if self.truncation != other.truncation:
            raise ValueError(
                f"truncation mismatch: {self.truncation} vs {other.truncation}"
            )

    def __add__(self, other):
        self._check_compatible(other)
        terms = dict(self._terms)
        for key, c in other._terms.items():
            acc = terms.get(key, Fraction(0)) + c
            if acc:
                terms[key] = acc
            elif key in terms:
                del terms[key]
        return WreathSymFunc._raw(self.truncation, terms)

    def __neg__(self):
        return WreathSymFunc._raw(self.truncation, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _as_fraction(other)
            if not other:
                return WreathSymFunc.zero(self.truncation)
            return WreathSymFunc._raw(
                self.truncation, {k: c * other for k, c in self._terms.items()}
            )
        self._check_compatible(other)
        N = self.truncation
        terms: dict[WreathMonomial, Fraction] = {}
        for key1, c in self._terms.items():
            d1 = _degree(key1)
            for key2, d in other._terms.items():
                if d1 + _degree(key2) > N:
                    continue
                key = tuple(sorted(key1 + key2))
                acc = terms.get(key, Fraction(0)) + c * d
                if acc:
                    terms[key] = acc
                elif key in terms:
                    del terms[key]
        return WreathSymFunc._raw(N, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = WreathSymFunc.one(self.truncation)
        for _ in range(exponent):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, WreathSymFunc):
            return NotImplemented
        return self.truncation == other.truncation and self._terms == other._terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __str__(self):
        if not self._terms:
            return "0"
        chunks = []
        for key, c in self.terms():
            mono = _monomial_str(key)
            if mono == "1":
                chunks.append(str(c))
            elif c == 1:
                chunks.append(mono)
            else:
                chunks.append(f"{c}*{mono}")
        return " + ".join(chunks)

    def __repr__(self):
        return f"WreathSymFunc(N={self.truncation}: {self})"

    def to_json_obj(self) -> dict:
        return {
            "truncation": self.truncation,
            "terms": [
                {
                    "key": _grouped_key(key),
                    "num": str(c.numerator),
                    "den": str(c.denominator),
                }
                for key, c in self.terms()
            ],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "WreathSymFunc":
        terms = {}
        for entry in obj["terms"]:
            key = []
            for factor in entry["key"]:
                key.extend([(factor["k"], factor["class"])] * factor["exp"])
            key = tuple(sorted(key))
            coeff = Fraction(int(entry["num"]), int(entry["den"]))
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return cls(obj["truncation"], terms)


def _grouped_key(key: WreathMonomial) -> list:
    out = []
    i = 0
    while i < len(key):
        j = i
        while j < len(key) and key[j] == key[i]:
            j += 1
        out.append({"k": key[i][0], "class": key[i][1], "exp": j - i})
        i = j
    return out


def _monomial_str(key: WreathMonomial) -> str:
    if not key:
        return "1"
    chunks = []
    for factor in _grouped_key(key):
        sym = "P" if factor["class"] == E_CLASS else "Q"
        base = f"{sym}{factor['k']}"
        chunks.append(base if factor["exp"] == 1 else f"{base}^{factor['exp']}")
    return "*".join(chunks)


def wlog_inv(w: WreathSymFunc) -> WreathSymFunc:
    """-log(1 - w), truncated; w must have valuation >= 1."""
    if w.coefficient(()):
        raise ValueError("log series requires no constant term")
    val = w.valuation()
    if val is None:
        return WreathSymFunc.zero(w.truncation)
    out = w
    power = w
    for k in range(2, w.truncation // val + 1):
        power = power * w
        out = out + power * Fraction(1, k)
    return out


def wgeom(w: WreathSymFunc) -> WreathSymFunc:
    """1/(1 - w), truncated; w must have valuation >= 1."""
    if w.coefficient(()):
        raise ValueError("geometric series requires no constant term")
    out = WreathSymFunc.one(w.truncation)
    val = w.valuation()
    if val is None:
        return out
    power = WreathSymFunc.one(w.truncation)
    for _ in range(w.truncation // val):
        power = power * w
        out = out + power
    return out


def dih_char_closed(n: int, truncation: int) -> WreathSymFunc:
    """Closed form for the induced trivial character of the dihedral subgroup
    of the degree-n hyperoctahedral group.

    Rotations contribute (1/2n) sum_{d|n} phi(d) P_d^{n/d}.  Reflections all
    carry the global sign flip: each fixed vertex of the underlying
    reflection yields a Q_1 and each 2-cycle a P_2, giving
    (1/2) Q_1 P_2^{(n-1)/2} for odd n and
    (1/4) (Q_1^2 P_2^{n/2 - 1} + P_2^{n/2}) for even n.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    if n > truncation:
        raise ValueError(f"degree {n} exceeds truncation {truncation}")
    terms: dict[WreathMonomial, Fraction] = {}
    for d in range(1, n + 1):
        if n % d:
            continue
        key = ((d, E_CLASS),) * (n // d)
        terms[key] = terms.get(key, Fraction(0)) + Fraction(euler_phi(d), 2 * n)
    if n % 2:
        key = tuple(sorted(((1, T_CLASS),) + ((2, E_CLASS),) * ((n - 1) // 2)))
        terms[key] = terms.get(key, Fraction(0)) + Fraction(1, 2)
    else:
        key = tuple(sorted(((1, T_CLASS),) * 2 + ((2, E_CLASS),) * (n // 2 - 1)))
        terms[key] = terms.get(key, Fraction(0)) + Fraction(1, 4)
        key = ((2, E_CLASS),) * (n // 2)
        terms[key] = terms.get(key, Fraction(0)) + Fraction(1, 4)
    return WreathSymFunc(truncation, terms)


def dih_series_closed(truncation: int) -> WreathSymFunc:
    """Generating series of all the dihedral characters in one closed form:

        (1/2) sum_{n>=1} (phi(n)/n) * (-log(1 - P_n))
        + (Q_1/2 * (1 + Q_1/2) + P_2/4) / (1 - P_2)

    expanded and truncated.  Its degree-n part equals ``dih_char_closed(n)``.
    """
    N = truncation
    out = WreathSymFunc.zero(N)
    for n in range(1, N + 1):
        out = out + wlog_inv(WreathSymFunc.gen_p(n, N)) * Fraction(euler_phi(n), 2 * n)
    q1 = WreathSymFunc.gen_q(1, N)
    p2 = WreathSymFunc.gen_p(2, N)
    half_q1 = q1 * Fraction(1, 2)
    refl = half_q1 + half_q1 * half_q1 + p2 * Fraction(1, 4)
    return out + refl * wgeom(p2)


def specialize_s2(w: WreathSymFunc, f: SymFunc) -> SymFunc:
    """Carry a wreath-product symmetric function onto ordinary symmetric
    functions along the degree-two restriction of f:

        P_k -> adams(k, d^2 f / dp_1^2)
        Q_k -> 2 * adams(k, d f / dp_2)

    extended linearly and multiplicatively over monomials.
    """
    if w.truncation != f.truncation:
        raise ValueError(f"truncation mismatch: {w.truncation} vs {f.truncation}")
    N = f.truncation
    fpp = partial_p(1, partial_p(1, f))
    fdot = partial_p(2, f)
    cache: dict[tuple, SymFunc] = {}

    def factor(k: int, tag: str) -> SymFunc:
        got = cache.get((k, tag))
        if got is None:
            if tag == E_CLASS:
                got = adams(k, fpp)
            else:
                got = adams(k, fdot) * 2
            cache[(k, tag)] = got
        return got

    out = SymFunc.zero(N)
    for key, c in w._terms.items():
        acc = SymFunc.one(N)
        for k, tag in key:
            acc = acc * factor(k, tag)
            if acc.is_zero():
                break
        out = out + acc * c
    return out


def deg1_iso(lam, truncation: int) -> SymFunc:
    """Degree-one dictionary: the conjugacy class of cycle type lam maps to
    the power-sum monomial p_lam."""
    return SymFunc(truncation, {tuple(lam): Fraction(1)})


def plethysm_deg1(f: SymFunc, g: SymFunc) -> SymFunc:
    """Pairing of a homogeneous degree-k symmetric function against the
    k-fold marked restriction of g; computed as the differential operator
    action ``d_operator(f, g)``."""
    from .symfunc import d_operator

    if not f.is_homogeneous():
        raise ValueError("left argument must be homogeneous")
    return d_operator(f, g)
