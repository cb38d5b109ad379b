"""Dominant weights and Bott's algorithm on a Grassmannian.

Bott's algorithm, for a length-n integer sequence gamma and rho = (n-1, ..., 1, 0):
if gamma + rho has a repeated entry the cohomology vanishes; otherwise the
unique nonvanishing degree is the number of inversions of gamma + rho (the
minimal transposition count needed to sort it, since the entries are distinct),
and the resulting dominant weight is sort_desc(gamma + rho) - rho.

The sets B(s, n) are the dominant-weight supports of the simple equivariant
D-modules on skew-symmetric matrices:

    B(s, 2m)   = { lambda : lambda_{2s} >= 2s-1, lambda_{2s+1} <= 2s,
                   lambda_{2i-1} = lambda_{2i} for all i }
    B(s, 2m+1) = { lambda : lambda_{2s+1} = 2s,
                   lambda_{2i-1} = lambda_{2i} for i <= s,
                   lambda_{2i} = lambda_{2i+1} for i > s }

Both sets are infinite; enumeration is truncated by a caller-supplied bound on
the maximum absolute entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .errors import VerificationError


class DominantWeight:
    """A weakly decreasing integer sequence of fixed ambient length."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Sequence[int]):
        entries = tuple(entries)
        for e in entries:
            if not isinstance(e, int):
                raise ValueError(f"weight entries must be integers, got {e!r}")
        if any(entries[i] < entries[i + 1] for i in range(len(entries) - 1)):
            raise ValueError(f"entries must be weakly decreasing, got {entries}")
        self._entries = entries

    @property
    def entries(self) -> tuple[int, ...]:
        return self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __getitem__(self, i):
        return self._entries[i]

    def __iter__(self):
        return iter(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DominantWeight):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        return f"DominantWeight({self._entries})"


@dataclass(frozen=True)
class BottResult:
    """Outcome of Bott's algorithm: Zero, or cohomology in a single degree."""

    degree: int | None
    weight: DominantWeight | None

    @classmethod
    def zero(cls) -> BottResult:
        return cls(None, None)

    @classmethod
    def cohomology(cls, degree: int, weight: DominantWeight) -> BottResult:
        return cls(degree, weight)

    @property
    def is_zero(self) -> bool:
        return self.degree is None


def bott(gamma: Sequence[int]) -> BottResult:
    """Run Bott's algorithm on an arbitrary integer sequence gamma."""
    n = len(gamma)
    rho = range(n - 1, -1, -1)
    v = [g + r for g, r in zip(gamma, rho)]
    if len(set(v)) < n:
        return BottResult.zero()
    # entries are distinct, so inversion count = minimal transposition count
    inversions = sum(1 for i in range(n) for j in range(i + 1, n) if v[i] < v[j])
    shifted = sorted(v, reverse=True)
    weight = DominantWeight([s - r for s, r in zip(shifted, rho)])
    return BottResult.cohomology(inversions, weight)


def dual(weight: DominantWeight) -> DominantWeight:
    """The dual weight (-w_n, ..., -w_1); an involution."""
    return DominantWeight(tuple(-e for e in reversed(weight.entries)))


def in_B(weight: DominantWeight, s: int, n: int) -> bool:
    """Membership of a length-n dominant weight in B(s, n)."""
    m = n // 2
    if not 0 <= s <= m:
        raise ValueError(f"require 0 <= s <= floor(n/2), got s={s}, n={n}")
    if len(weight) != n:
        return False
    lam = weight.entries
    if n % 2 == 0:
        if any(lam[2 * i] != lam[2 * i + 1] for i in range(m)):
            return False
        if s >= 1 and lam[2 * s - 1] < 2 * s - 1:
            return False
        if s <= m - 1 and lam[2 * s] > 2 * s:
            return False
        return True
    if lam[2 * s] != 2 * s:
        return False
    if any(lam[2 * i - 2] != lam[2 * i - 1] for i in range(1, s + 1)):
        return False
    if any(lam[2 * i - 1] != lam[2 * i] for i in range(s + 1, m + 1)):
        return False
    return True


def _weakly_decreasing(length: int, lo: int, hi: int) -> Iterable[tuple[int, ...]]:
    if length == 0:
        yield ()
        return
    if lo > hi:
        return
    yield from combinations_with_replacement(range(hi, lo - 1, -1), length)


def enumerate_B(s: int, n: int, bound: int) -> set[DominantWeight]:
    """All weights of B(s, n) whose entries have absolute value <= bound."""
    m = n // 2
    if not 0 <= s <= m:
        raise ValueError(f"require 0 <= s <= floor(n/2), got s={s}, n={n}")
    if bound < 1:
        raise ValueError("bound must be a positive integer")
    out: set[DominantWeight] = set()
    if n % 2 == 0:
        # pair values v_i = lambda_{2i-1} = lambda_{2i}
        for v in _weakly_decreasing(m, -bound, bound):
            if s >= 1 and v[s - 1] < 2 * s - 1:
                continue
            if s <= m - 1 and v[s] > 2 * s:
                continue
            out.add(DominantWeight([x for x in v for _ in range(2)]))
        return out
    # odd: (u_1, u_1, ..., u_s, u_s, 2s, t_1, t_1, ..., t_{m-s}, t_{m-s})
    if 2 * s > bound:
        return out
    for u in _weakly_decreasing(s, 2 * s, bound):
        for t in _weakly_decreasing(m - s, -bound, 2 * s):
            head = [x for x in u for _ in range(2)]
            tail = [x for x in t for _ in range(2)]
            out.add(DominantWeight(head + [2 * s] + tail))
    return out


def verify_pushforward(m: int, p: int, bound: int) -> dict:
    """Check the pushforward pattern from 2m x 2m to (2m+1) x (2m+1) matrices.

    For every lambda in the bounded window of B(m-p, 2m), Bott's algorithm is
    applied to (dual(lambda), 0) in length 2m+1.  Every non-vanishing case must
    land in degree exactly 2m-2p with dual image weight in B(m-p, 2m+1); the
    assignment must be injective, and it must cover the entire B(m-p, 2m+1)
    window at bound-2 (images of window-bounded sources shift entries by at
    most 1, so the shrunken window is guaranteed to be reached).

    Returns a JSON-ready report; raises VerificationError naming the offending
    weight on any failure.
    """
    if not 0 <= p <= m:
        raise ValueError(f"require 0 <= p <= m, got p={p}, m={m}")
    if bound < 2 * m:
        raise ValueError(f"bound must be at least 2m = {2 * m}")
    expected_degree = 2 * m - 2 * p
    zero_count = 0
    images: dict[DominantWeight, DominantWeight] = {}
    domain = enumerate_B(m - p, 2 * m, bound)
    for lam in sorted(domain, key=lambda x: x.entries):
        gamma = dual(lam).entries + (0,)
        result = bott(gamma)
        if result.is_zero:
            zero_count += 1
            continue
        if result.degree != expected_degree:
            raise VerificationError(
                f"pushforward(m={m}, p={p}): {lam} lands in degree "
                f"{result.degree}, expected {expected_degree}"
            )
        image = dual(result.weight)
        if not in_B(image, m - p, 2 * m + 1):
            raise VerificationError(
                f"pushforward(m={m}, p={p}): image {image} of {lam} "
                f"is not in B({m - p}, {2 * m + 1})"
            )
        if image in images:
            raise VerificationError(
                f"pushforward(m={m}, p={p}): {lam} and {images[image]} "
                f"share the image {image}"
            )
        images[image] = lam
    if bound >= 2 * m + 2:
        target_window = enumerate_B(m - p, 2 * m + 1, bound - 2)
        missing = target_window - set(images)
        if missing:
            raise VerificationError(
                f"pushforward(m={m}, p={p}): window weight "
                f"{sorted(missing, key=lambda x: x.entries)[0]} has no preimage"
            )
    return {
        "m": m,
        "p": p,
        "bound": bound,
        "checked": len(domain),
        "zero": zero_count,
        "nonzero": len(images),
        "pass": True,
    }
