"""Closed-form maxima of pattern counts over n-vertex planar graphs.

Every function evaluates exactly in integers and raises
:class:`~planex.errors.DomainError` outside the range where its formula is
stated to hold.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable

from .counting import PatternSpec
from .errors import DomainError


def _need(cond: bool, what: str) -> None:
    if not cond:
        raise DomainError(what)


def f_p2(n: int) -> int:
    _need(n >= 3, "f(n, P2) = 3n - 6 requires n >= 3")
    return 3 * n - 6


def f_p3(n: int) -> int:
    _need(n >= 4, "f(n, P3) = n^2 + 3n - 16 requires n >= 4")
    return n * n + 3 * n - 16


def f_c3(n: int) -> int:
    _need(n >= 6, "f(n, C3) = 3n - 8 requires n >= 6")
    return 3 * n - 8


def f_c4(n: int) -> int:
    _need(n >= 5, "f(n, C4) = (n^2 + 3n - 22)/2 requires n >= 5")
    return (n * n + 3 * n - 22) // 2


def f_star(n: int, k: int) -> int:
    _need(k >= 2 and n >= 4, "f(n, K_{1,k}) requires k >= 2 and n >= 4")
    return 2 * comb(n - 1, k) + 2 * comb(3, k) + (n - 4) * comb(4, k)


def f_k2k(n: int, k: int) -> int:
    _need(k >= 2 and n >= 4, "f(n, K_{2,k}) requires k >= 2 and n >= 4")
    if k == 2:
        return comb(n - 2, 2) + 4 * n - 14
    if (k, n) == (3, 6):
        return 12
    if (k, n) == (4, 6):
        return 3
    return comb(n - 2, k)


def f_p4(n: int) -> int:
    _need(n >= 4, "f(n, P4) requires n >= 4")
    if n == 4:
        return 12
    if n == 7:
        return 147
    if n == 8:
        return 222
    return 7 * n * n - 32 * n + 27


def lemma2_bound(n: int) -> int:
    """Strict upper bound on P4 counts when the minimum degree is at least 4."""
    _need(n >= 6, "minimum degree 4 forces n >= 6")
    return 7 * n * n - 36 * n + 50


@dataclass(frozen=True)
class ClosedForm:
    pattern: PatternSpec
    domain: str
    evaluate: Callable[[int], int]

    def covers(self, n: int) -> bool:
        try:
            self.evaluate(n)
        except DomainError:
            return False
        return True


def closed_form(pattern: PatternSpec) -> ClosedForm:
    kind, k = pattern.kind, pattern.k
    if kind == "P2":
        return ClosedForm(pattern, "n >= 3", f_p2)
    if kind == "P3":
        return ClosedForm(pattern, "n >= 4", f_p3)
    if kind == "P4":
        return ClosedForm(pattern, "n >= 4", f_p4)
    if kind == "C3":
        return ClosedForm(pattern, "n >= 6", f_c3)
    if kind == "C4":
        return ClosedForm(pattern, "n >= 5", f_c4)
    if kind == "Star":
        return ClosedForm(pattern, "k >= 2, n >= 4", lambda n: f_star(n, k))
    return ClosedForm(pattern, "k >= 2, n >= 4", lambda n: f_k2k(n, k))
