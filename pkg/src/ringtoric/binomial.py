"""Binomials over edge variables and a Buchberger engine specialised to them.

Every polynomial handled here has the shape ``t^a - t^b``: reduction of a
binomial by binomials only ever produces another binomial or zero, so no
coefficient field is carried around. The leading side is stored as ``plus``
once an order is in play.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from functools import cached_property
from operator import itemgetter
from typing import Iterable, Sequence

import numpy as np

Monomial = tuple[int, ...]


class BudgetExceeded(RuntimeError):
    """A caller-supplied cap (steps, pairs, edges, cycles) was hit."""


@dataclass(frozen=True)
class Binomial:
    plus: Monomial
    minus: Monomial

    def __post_init__(self):
        if len(self.plus) != len(self.minus):
            raise ValueError("exponent vectors differ in length")
        if min(self.plus, default=0) < 0 or min(self.minus, default=0) < 0:
            raise ValueError("negative exponent")
        if self.plus == self.minus:
            raise ValueError("t^a - t^a is the zero polynomial")

    @classmethod
    def _trusted(cls, plus: Monomial, minus: Monomial) -> Binomial:
        """Skip validation for sides already known to be valid."""
        b = object.__new__(cls)
        object.__setattr__(b, "plus", plus)
        object.__setattr__(b, "minus", minus)
        return b

    @classmethod
    def from_supports(cls, q: int, plus: Iterable[int], minus: Iterable[int]) -> Binomial:
        """Build from index lists; repeated indices raise the exponent."""
        p = [0] * q
        m = [0] * q
        for k in plus:
            p[k] += 1
        for k in minus:
            m[k] += 1
        return cls(tuple(p), tuple(m))

    @property
    def q(self) -> int:
        return len(self.plus)

    def negated(self) -> Binomial:
        return Binomial._trusted(self.minus, self.plus)

    @property
    def plus_support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.plus) if e)

    @property
    def minus_support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.minus) if e)

    @property
    def support(self) -> frozenset[int]:
        return self.plus_support | self.minus_support

    @property
    def is_pure(self) -> bool:
        """Sides have disjoint supports (true for every cycle binomial)."""
        return not (self.plus_support & self.minus_support)

    def degrees(self, weights: Sequence[int] | None = None) -> tuple[int, int]:
        if weights is None:
            return sum(self.plus), sum(self.minus)
        return (sum(w * e for w, e in zip(weights, self.plus)),
                sum(w * e for w, e in zip(weights, self.minus)))

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        a, b = self.degrees(weights)
        return a == b

    def vector(self) -> np.ndarray:
        return np.array(self.plus, dtype=np.int64) - np.array(self.minus, dtype=np.int64)

    def to_json(self) -> dict:
        def expand(m):
            return [i for i, e in enumerate(m) for _ in range(e)]

        return {"plus": expand(self.plus), "minus": expand(self.minus), "text": str(self)}

    @classmethod
    def from_json(cls, data: dict, q: int) -> Binomial:
        return cls.from_supports(q, data["plus"], data["minus"])

    def __str__(self) -> str:
        return f"{monomial_str(self.plus)} - {monomial_str(self.minus)}"


def monomial_str(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"t{i + 1}")
        elif e:
            parts.append(f"t{i + 1}^{e}")
    return "*".join(parts) or "1"


@dataclass(frozen=True)
class MonomialOrder:
    """lex, grlex or grevlex over a variable ranking.

    ``permutation`` lists variable indices from largest to smallest;
    ``weights`` (positive) replace total degree in the graded orders.
    """

    kind: str
    permutation: tuple[int, ...]
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("lex", "grlex", "grevlex"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if sorted(self.permutation) != list(range(len(self.permutation))):
            raise ValueError("permutation is not a permutation of 0..q-1")
        if self.weights is not None:
            if len(self.weights) != len(self.permutation) or min(self.weights, default=1) <= 0:
                raise ValueError("weights must be positive, one per variable")

    @classmethod
    def lex(cls, q: int, permutation: Sequence[int] | None = None) -> MonomialOrder:
        return cls("lex", tuple(range(q)) if permutation is None else tuple(permutation))

    @classmethod
    def grlex(cls, q: int, permutation=None, weights=None) -> MonomialOrder:
        perm = tuple(range(q)) if permutation is None else tuple(permutation)
        return cls("grlex", perm, None if weights is None else tuple(weights))

    @classmethod
    def grevlex(cls, q: int, permutation=None, weights=None) -> MonomialOrder:
        perm = tuple(range(q)) if permutation is None else tuple(permutation)
        return cls("grevlex", perm, None if weights is None else tuple(weights))

    @classmethod
    def random(cls, q: int, rng: random.Random) -> MonomialOrder:
        perm = list(range(q))
        rng.shuffle(perm)
        kind = rng.choice(("lex", "grlex", "grevlex"))
        weights = None
        if kind != "lex" and rng.random() < 0.5:
            weights = tuple(rng.randint(1, 4) for _ in range(q))
        return cls(kind, tuple(perm), weights)

    @property
    def q(self) -> int:
        return len(self.permutation)

    @cached_property
    def _ranked(self):
        perm = self.permutation
        # a single index would make itemgetter return a bare int
        return itemgetter(*perm) if len(perm) > 1 else itemgetter(slice(0, len(perm)))

    def key(self, m: Monomial):
        if self.kind == "lex":
            return self._ranked(m)
        if self.weights is None:
            deg = sum(m)
        else:
            deg = sum([w * e for w, e in zip(self.weights, m)])
        if self.kind == "grlex":
            return (deg, self._ranked(m))
        return (deg, tuple([-m[i] for i in reversed(self.permutation)]))

    def to_json(self) -> dict:
        return {"kind": self.kind, "permutation": list(self.permutation),
                "weights": None if self.weights is None else list(self.weights)}


def compare(order: MonomialOrder, a: Monomial, b: Monomial) -> int:
    """-1, 0 or 1 as ``a`` is smaller than, equal to or larger than ``b``."""
    if len(a) != len(b) or len(a) != order.q:
        raise ValueError("length mismatch")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


def oriented(b: Binomial, order: MonomialOrder) -> Binomial:
    """Same binomial up to sign, with the leading monomial as ``plus``."""
    return b if order.key(b.plus) > order.key(b.minus) else b.negated()


def leading_monomial(b: Binomial, order: MonomialOrder) -> Monomial:
    return oriented(b, order).plus


def _divides(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple([x if x > y else y for x, y in zip(a, b)])


def _coprime(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


class _Reducer:
    """Reduction data for a fixed list of binomials under one order."""

    def __init__(self, elements: Sequence[Binomial], order: MonomialOrder):
        self.order = order
        # sparse (index, exponent) lists; leads are usually a few variables
        self.rules: list[tuple[list, list]] = []
        for b in elements:
            self.add(b)

    def add(self, b: Binomial) -> None:
        b = oriented(b, self.order)
        self.rules.append(([(i, e) for i, e in enumerate(b.plus) if e],
                           [(i, e) for i, e in enumerate(b.minus) if e]))

    def step(self, m: Monomial) -> Monomial | None:
        """One reduction of ``m`` by the first rule whose lead divides it."""
        for lead, tail in self.rules:
            for i, e in lead:
                if m[i] < e:
                    break
            else:
                out = list(m)
                for i, e in lead:
                    out[i] -= e
                for i, e in tail:
                    out[i] += e
                return tuple(out)
        return None

    def normal_form(self, hi: Monomial, lo: Monomial, max_steps: int | None = None):
        """Remainder of ``hi - lo`` (``hi`` leading); ``None`` means zero."""
        key = self.order.key
        steps = 0
        lo_key = key(lo)
        while True:
            nxt = self.step(hi)
            if nxt is None:
                break
            steps += 1
            if max_steps is not None and steps > max_steps:
                raise BudgetExceeded(f"normal form exceeded {max_steps} steps")
            if nxt == lo:
                return None
            # the two terms now carry opposite signs; keep the larger first
            nxt_key = key(nxt)
            if nxt_key > lo_key:
                hi = nxt
            else:
                hi, lo, lo_key = lo, nxt, nxt_key
        while True:
            nxt = self.step(lo)
            if nxt is None:
                return hi, lo
            steps += 1
            if max_steps is not None and steps > max_steps:
                raise BudgetExceeded(f"normal form exceeded {max_steps} steps")
            lo = nxt


def s_binomial(f: Binomial, g: Binomial, order: MonomialOrder,
               use_criterion: bool = True) -> Binomial | None:
    """S-polynomial of two binomials, oriented by ``order``.

    ``None`` stands for zero. With ``use_criterion`` a pair with coprime
    leading terms is reported as ``None`` without forming it, since such a
    pair always reduces to zero.
    """
    f = oriented(f, order)
    g = oriented(g, order)
    if use_criterion and _coprime(f.plus, g.plus):
        return None
    lcm = _lcm(f.plus, g.plus)
    # lcm/lead(g) * tail(g) - lcm/lead(f) * tail(f)
    a = tuple([l - x + y for l, x, y in zip(lcm, g.plus, g.minus)])
    b = tuple([l - x + y for l, x, y in zip(lcm, f.plus, f.minus)])
    if a == b:
        return None
    return oriented(Binomial(a, b), order)


def normal_form(f: Binomial, gb: Sequence[Binomial], order: MonomialOrder,
                max_steps: int | None = None) -> Binomial | None:
    """Full remainder of ``f`` modulo ``gb``; reduction uses the first
    applicable element in list order. ``None`` means the remainder is zero."""
    f = oriented(f, order)
    out = _Reducer(gb, order).normal_form(f.plus, f.minus, max_steps)
    return None if out is None else Binomial(*out)


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple[Binomial, ...]
    order: MonomialOrder

    def reducer(self) -> _Reducer:
        return _Reducer(self.elements, self.order)

    def reduce(self, f: Binomial) -> Binomial | None:
        return normal_form(f, self.elements, self.order)

    def contains(self, f: Binomial) -> bool:
        return self.reduce(f) is None

    @property
    def leading_terms(self) -> list[Monomial]:
        return [b.plus for b in self.elements]


def buchberger(gens: Iterable[Binomial], order: MonomialOrder,
               max_pairs: int | None = None, reduce: bool = True) -> GroebnerBasis:
    """Gröbner basis of the ideal generated by ``gens``.

    Pairs are processed smallest-lcm first and pairs with coprime leading
    terms are skipped. Input whose leading terms are pairwise coprime is
    already a Gröbner basis and comes back unchanged (apart from
    orientation); anything else is inter-reduced when ``reduce`` is set.
    Exceeding ``max_pairs`` raises :class:`BudgetExceeded`.
    """
    key = order.key
    basis = [oriented(b, order) for b in gens]
    red = _Reducer(basis, order)
    heap: list = []
    counter = 0

    def push(i, j):
        nonlocal counter
        a, b = basis[i].plus, basis[j].plus
        if _coprime(a, b):
            return
        heapq.heappush(heap, (key(_lcm(a, b)), counter, i, j))
        counter += 1

    for j in range(len(basis)):
        for i in range(j):
            push(i, j)
    if not heap:
        return GroebnerBasis(tuple(basis), order)
    processed = 0
    while heap:
        _, _, i, j = heapq.heappop(heap)
        processed += 1
        if max_pairs is not None and processed > max_pairs:
            raise BudgetExceeded(f"Buchberger exceeded {max_pairs} pairs")
        s = s_binomial(basis[i], basis[j], order, use_criterion=False)
        if s is None:
            continue
        r = red.normal_form(s.plus, s.minus)
        if r is None:
            continue
        basis.append(Binomial(*r))
        red.add(basis[-1])
        for k in range(len(basis) - 1):
            push(k, len(basis) - 1)
    if not reduce:
        return GroebnerBasis(tuple(basis), order)
    return GroebnerBasis(tuple(interreduce(basis, order)), order)


def interreduce(basis: Sequence[Binomial], order: MonomialOrder) -> list[Binomial]:
    """Reduced Gröbner basis from a Gröbner basis: drop redundant leads,
    then fully reduce each tail by the rest."""
    basis = [oriented(b, order) for b in basis]
    keep: list[Binomial] = []
    for i, b in enumerate(basis):
        redundant = False
        for j, c in enumerate(basis):
            if i == j or not _divides(c.plus, b.plus):
                continue
            if c.plus != b.plus or j < i:
                redundant = True
                break
        if not redundant:
            keep.append(b)
    out = []
    for i, b in enumerate(keep):
        others = _Reducer(keep[:i] + keep[i + 1:], order)
        tail = b.minus
        while (nxt := others.step(tail)) is not None:
            tail = nxt
        out.append(Binomial(b.plus, tail))
    return sorted(out, key=lambda b: order.key(b.plus))


def is_groebner_basis(elements: Sequence[Binomial], order: MonomialOrder,
                      use_criterion: bool = False) -> bool:
    """Every S-pair reduces to zero modulo ``elements``."""
    elements = [oriented(b, order) for b in elements]
    red = _Reducer(elements, order)
    for j in range(len(elements)):
        for i in range(j):
            s = s_binomial(elements[i], elements[j], order, use_criterion)
            if s is not None and red.normal_form(s.plus, s.minus) is not None:
                return False
    return True


def kernel_member(A, b: Binomial) -> bool:
    A = np.asarray(A)
    if A.shape[1] != b.q:
        raise ValueError("matrix width does not match the number of variables")
    return not np.any(A @ b.vector())
