"""GL-character sets of the equivariant objects on skew-symmetric matrices.

Every decomposition handled here is multiplicity free, so each object is fully
described by a membership test on dominant weights.  Weights of modules built
from W (subspaces of the polynomial ring or its Pfaffian localization) are kept
as W-weights; conditions stated on the dual side are checked through ``dual``.

The membership rules, for a weight mu of ambient length n (m = floor(n/2)):

* invariant ideal I_z (z a partition with m parts): mu is the column-doubled
  weight x^(2) of some partition x >= z;
* fractional-twist module N_{k,e} = I_{(m-k) x e} * Pf^{-e-2k}: mu = nu^(2)
  with nu >= ((-2k)^(m-k), (-e-2k)^k);
* pole-order module <Pf^(-2k)>: mu paired, with dual(mu)_{2k+1} <= 2k;
* simple module D_s: dual(mu) in B(m-s, n).

``verify_limitpfaff`` checks, on a bounded weight window, that <Pf^(-2k)> is
the union over e of the N_{k,e} characters, together with the inclusions
N_{k,e} <= N_{k,e+1} and N_{k,e} <= N_{k+1,e}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import VerificationError
from .partitions import Partition, dominates
from .weights_bott import DominantWeight, _weakly_decreasing, dual, in_B


def _paired_half(entries: tuple[int, ...]) -> tuple[int, ...] | None:
    """For (a, a, b, b, ...) return (a, b, ...); None if not of that shape."""
    if len(entries) % 2:
        return None
    half = entries[0::2]
    if entries != tuple(x for v in half for x in (v, v)):
        return None
    return half


class CharSpec:
    """Base for character-set specifications; subclasses implement contains()."""

    n: int

    def contains(self, mu: DominantWeight) -> bool:
        raise NotImplementedError

    def _check_length(self, mu: DominantWeight) -> tuple[int, ...]:
        if len(mu) != self.n:
            raise ValueError(f"weight has length {len(mu)}, ambient requires {self.n}")
        return mu.entries


@dataclass(frozen=True)
class IdealI(CharSpec):
    """Character of the invariant ideal generated by the x^(2)-isotypic piece of z."""

    z: Partition
    n: int

    def __post_init__(self):
        m = self.n // 2
        if len(self.z.profile) > m:
            raise ValueError(f"z must have at most {m} parts for n={self.n}")

    def contains(self, mu: DominantWeight) -> bool:
        entries = self._check_length(mu)
        m = self.n // 2
        if self.n % 2:
            if entries[-1] != 0:
                return False
            entries = entries[:-1]
        half = _paired_half(entries)
        if half is None or half[-1] < 0:
            return False
        return dominates(half, self.z.padded(m).parts)


@dataclass(frozen=True)
class ModuleN(CharSpec):
    """Character of N_{k,e}, the (m-k) x e invariant ideal twisted by Pf^(-e-2k)."""

    k: int
    e: int
    n: int

    def __post_init__(self):
        if self.n % 2:
            raise ValueError("N_{k,e} requires an even ambient size")
        m = self.n // 2
        if not 0 <= self.k <= m - 1:
            raise ValueError(f"require 0 <= k <= m-1, got k={self.k}, m={m}")
        if self.e < 1:
            raise ValueError(f"require e >= 1, got e={self.e}")

    def threshold(self) -> tuple[int, ...]:
        m = self.n // 2
        return (-2 * self.k,) * (m - self.k) + (-self.e - 2 * self.k,) * self.k

    def contains(self, mu: DominantWeight) -> bool:
        entries = self._check_length(mu)
        half = _paired_half(entries)
        if half is None:
            return False
        return dominates(half, self.threshold())


@dataclass(frozen=True)
class PfPole(CharSpec):
    """Character of the module generated by Pf^(-2k) over the Weyl algebra."""

    k: int
    n: int

    def __post_init__(self):
        if self.n % 2:
            raise ValueError("pole-order modules require an even ambient size")
        m = self.n // 2
        if not 0 <= self.k <= m - 1:
            raise ValueError(f"require 0 <= k <= m-1, got k={self.k}, m={m}")

    def contains(self, mu: DominantWeight) -> bool:
        entries = self._check_length(mu)
        if _paired_half(entries) is None:
            return False
        lam = dual(mu).entries
        return lam[2 * self.k] <= 2 * self.k


@dataclass(frozen=True)
class SimpleD(CharSpec):
    """Character of the simple equivariant module attached to the rank-2s orbit."""

    s: int
    n: int

    def __post_init__(self):
        m = self.n // 2
        if not 0 <= self.s <= m:
            raise ValueError(f"require 0 <= s <= m, got s={self.s}, m={m}")

    def contains(self, mu: DominantWeight) -> bool:
        self._check_length(mu)
        m = self.n // 2
        return in_B(dual(mu), m - self.s, self.n)


def contains(spec: CharSpec, mu: DominantWeight) -> bool:
    """Functional form of spec.contains(mu)."""
    return spec.contains(mu)


def paired_window(m: int, bound: int) -> list[DominantWeight]:
    """All paired dominant weights of length 2m with entries in [-bound, bound]."""
    out = []
    for half in _weakly_decreasing(m, -bound, bound):
        out.append(DominantWeight([x for v in half for x in (v, v)]))
    return out


def verify_limitpfaff(m: int, k: int, bound: int) -> dict:
    """Bounded check that <Pf^(-2k)> is the rising union of the N_{k,e}.

    For every paired weight mu in the window, membership in <Pf^(-2k)> must be
    equivalent to membership in N_{k,e} for some e <= 2*bound + 4m (once e
    exceeds every entry in absolute value, membership stabilizes, so this
    witness bound suffices).  Also asserts the inclusions N_{k,e} <= N_{k,e+1}
    for all e in range, and N_{k,e} <= N_{k+1,e} when k+1 <= m-1.

    Returns a JSON-ready report; raises VerificationError with the offending
    weight on failure.
    """
    n = 2 * m
    if not 0 <= k <= m - 1:
        raise ValueError(f"require 0 <= k <= m-1, got k={k}, m={m}")
    e_max = 2 * bound + 4 * m
    pole = PfPole(k, n)
    modules = [ModuleN(k, e, n) for e in range(1, e_max + 1)]
    next_modules = [ModuleN(k + 1, e, n) for e in range(1, e_max + 1)] if k + 1 <= m - 1 else None
    members = 0
    window = paired_window(m, bound)
    for mu in window:
        flags = [mod.contains(mu) for mod in modules]
        in_pole = pole.contains(mu)
        if in_pole != any(flags):
            raise VerificationError(
                f"limit(m={m}, k={k}): {mu} is "
                f"{'in' if in_pole else 'not in'} the pole-order character but "
                f"{'not ' if in_pole else ''}reached by N_(k,e), e <= {e_max}"
            )
        members += in_pole
        for e_idx in range(e_max - 1):
            if flags[e_idx] and not flags[e_idx + 1]:
                raise VerificationError(
                    f"limit(m={m}, k={k}): {mu} in N_(k,{e_idx + 1}) "
                    f"but not in N_(k,{e_idx + 2})"
                )
        if next_modules is not None:
            for e_idx in range(e_max):
                if flags[e_idx] and not next_modules[e_idx].contains(mu):
                    raise VerificationError(
                        f"limit(m={m}, k={k}): {mu} in N_(k,{e_idx + 1}) "
                        f"but not in N_(k+1,{e_idx + 1})"
                    )
    return {
        "m": m,
        "k": k,
        "bound": bound,
        "e_max": e_max,
        "checked": len(window),
        "members": members,
        "pass": True,
    }
