"""Sparse bivariate integer polynomials in the variables ``w`` and ``r``.

Terms are keyed by ``(a, b)`` meaning ``w**a * r**b``.  Values are immutable,
hashable and compare by their term maps.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

__all__ = [
    "BivarPoly",
    "PolyParseError",
    "ZERO",
    "ONE",
    "W",
    "R",
    "add",
    "mul",
    "swap_vars",
    "substitute_squares",
    "partial_eval_deriv",
    "parse_poly",
    "render_poly",
]


class PolyParseError(ValueError):
    """Raised when polynomial text does not follow the w/r grammar."""

    def __init__(self, text: str, pos: int, message: str):
        self.text = text
        self.pos = pos
        span = text[pos:pos + 12] or "<end>"
        super().__init__(f"{message} at offset {pos} (near {span!r}) in {text!r}")


class BivarPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = ()):
        acc: dict[tuple[int, int], int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (a, b), c in items:
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent in term {(a, b)}")
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {c!r}")
            acc[(a, b)] = acc.get((a, b), 0) + c
        self._terms = {k: v for k, v in acc.items() if v != 0}
        self._hash = None

    @classmethod
    def monomial(cls, w: int = 0, r: int = 0, coeff: int = 1) -> "BivarPoly":
        return cls({(w, r): coeff})

    @classmethod
    def const(cls, c: int) -> "BivarPoly":
        return cls({(0, 0): c})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def degree(self) -> int:
        """Largest total degree, -1 for the zero polynomial."""
        return max((a + b for a, b in self._terms), default=-1)

    def coeff(self, w: int, r: int) -> int:
        return self._terms.get((w, r), 0)

    def __call__(self, w: int, r: int) -> int:
        return sum(c * w**a * r**b for (a, b), c in self._terms.items())

    def __iter__(self):
        return iter(sorted(self._terms.items(), key=_display_key))

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BivarPoly.const(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other) -> "BivarPoly":
        if isinstance(other, int):
            other = BivarPoly.const(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "BivarPoly":
        return BivarPoly({k: -v for k, v in self._terms.items()})

    def __sub__(self, other) -> "BivarPoly":
        if isinstance(other, int):
            other = BivarPoly.const(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other) -> "BivarPoly":
        return (-self) + other

    def __mul__(self, other) -> "BivarPoly":
        if isinstance(other, int):
            other = BivarPoly.const(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BivarPoly":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = mul(out, base)
            base = mul(base, base)
            n >>= 1
        return out

    def exact_div(self, d: int) -> "BivarPoly":
        """Divide every coefficient by ``d``; raises if any division leaves a remainder."""
        out = {}
        for k, v in self._terms.items():
            q, rem = divmod(v, d)
            if rem:
                raise ArithmeticError(f"coefficient {v} of {render_poly(self)} not divisible by {d}")
            out[k] = q
        return BivarPoly(out)

    def __repr__(self) -> str:
        return f"BivarPoly({render_poly(self)!r})"

    def __str__(self) -> str:
        return render_poly(self)


ZERO = BivarPoly()
ONE = BivarPoly.const(1)
W = BivarPoly.monomial(w=1)
R = BivarPoly.monomial(r=1)


def add(p: BivarPoly, q: BivarPoly) -> BivarPoly:
    acc = dict(p._terms)
    for k, v in q._terms.items():
        acc[k] = acc.get(k, 0) + v
    return BivarPoly(acc)


def mul(p: BivarPoly, q: BivarPoly) -> BivarPoly:
    acc: dict[tuple[int, int], int] = {}
    for (a1, b1), c1 in p._terms.items():
        for (a2, b2), c2 in q._terms.items():
            k = (a1 + a2, b1 + b2)
            acc[k] = acc.get(k, 0) + c1 * c2
    return BivarPoly(acc)


def swap_vars(p: BivarPoly) -> BivarPoly:
    return BivarPoly({(b, a): c for (a, b), c in p._terms.items()})


def substitute_squares(p: BivarPoly) -> BivarPoly:
    """p(w, r) -> p(w**2, r**2)."""
    return BivarPoly({(2 * a, 2 * b): c for (a, b), c in p._terms.items()})


def partial_eval_deriv(p: BivarPoly, var: str) -> int:
    """Formal partial derivative in ``var`` ('w' or 'r') evaluated at w = r = 1."""
    if var == "w":
        return sum(c * a for (a, _), c in p._terms.items())
    if var == "r":
        return sum(c * b for (_, b), c in p._terms.items())
    raise ValueError(f"unknown variable {var!r}")


# Display order: descending total degree, ties put the higher r-power first.
# This is the order used by the printed CWR(K7a1) value ("4r + 3w", "2r^2w + w^3").
def _display_key(item):
    (a, b), _ = item
    return (-(a + b), -b)


def _render_monomial(a: int, b: int) -> str:
    parts = []
    if b:
        parts.append("r" if b == 1 else f"r^{b}")
    if a:
        parts.append("w" if a == 1 else f"w^{a}")
    return "".join(parts)


def render_poly(p: BivarPoly) -> str:
    if not p._terms:
        return "0"
    out = []
    for i, ((a, b), c) in enumerate(sorted(p._terms.items(), key=_display_key)):
        mono = _render_monomial(a, b)
        mag = abs(c)
        body = mono if (mono and mag == 1) else f"{mag}{mono}"
        if i == 0:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f"{'-' if c < 0 else '+'} {body}")
    return " ".join(out)


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>[wr])|(?P<caret>\^)|(?P<sign>[+-])|(?P<star>\*)|(?P<bad>\S))")


def parse_poly(text: str) -> BivarPoly:
    """Parse the w/r notation, e.g. ``"2r^2w + w^3"`` or ``"w r^2 - 3"``.

    Factors within a term may come in any order and may repeat; an optional
    ``*`` between factors is accepted.
    """
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        kind = m.lastgroup
        start = m.start(kind)
        if kind == "bad":
            raise PolyParseError(text, start, f"unexpected character {m.group(kind)!r}")
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    if not tokens:
        raise PolyParseError(text, 0, "empty polynomial")

    terms: dict[tuple[int, int], int] = {}
    i = 0
    n = len(tokens)
    first = True
    while i < n:
        sign = 1
        if tokens[i][0] == "sign":
            sign = -1 if tokens[i][1] == "-" else 1
            i += 1
        elif not first:
            raise PolyParseError(text, tokens[i][2], "expected '+' or '-' between terms")
        if i >= n:
            raise PolyParseError(text, len(text), "dangling sign")
        coeff = None
        a = b = 0
        seen_factor = False
        while i < n and tokens[i][0] in ("int", "var", "star"):
            kind, val, at = tokens[i]
            if kind == "star":
                if not seen_factor:
                    raise PolyParseError(text, at, "'*' without a preceding factor")
                i += 1
                continue
            if kind == "int":
                if coeff is not None or seen_factor:
                    raise PolyParseError(text, at, "coefficient must lead the term")
                coeff = int(val)
                i += 1
            else:
                i += 1
                exp = 1
                if i < n and tokens[i][0] == "caret":
                    i += 1
                    if i >= n or tokens[i][0] != "int":
                        raise PolyParseError(text, tokens[i - 1][2], "'^' must be followed by an integer")
                    exp = int(tokens[i][1])
                    i += 1
                if val == "w":
                    a += exp
                else:
                    b += exp
            seen_factor = True
        if not seen_factor:
            at = tokens[i][2] if i < n else len(text)
            raise PolyParseError(text, at, "expected a term")
        if i < n and tokens[i][0] == "caret":
            raise PolyParseError(text, tokens[i][2], "misplaced '^'")
        c = sign * (1 if coeff is None else coeff)
        terms[(a, b)] = terms.get((a, b), 0) + c
        first = False
    return BivarPoly(terms)
