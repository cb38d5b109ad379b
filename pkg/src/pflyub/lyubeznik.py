"""Lyubeznik numbers of Pfaffian rings: generating functions and tables.

The generating function L_k(q, w) = sum lambda_{i,j} q^i w^j collects the
Lyubeznik numbers of the local ring at the cone point of the rank <= 2k locus
of n x n skew-symmetric matrices.  Two independent routes compute it:

* ``L_closed`` evaluates the closed formulas directly (with the even
  hypersurface case k = m-1 dispatched to (q*w)^(C(n,2)-1));
* ``L_composed`` composes the Grothendieck-group class of the local cohomology
  (reversed so that w tracks j = C(n,2) - inner degree) with the origin
  local cohomology of each basis module.

``build_table`` refuses to emit unless both routes agree exactly, then checks
the structural invariants: entries positive, 0 <= i <= j <= dim, and the
corner entry lambda_{dim,dim} = 1 where dim = k(2n-2k-1).
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass, field
from math import comb

from . import characters, ext_mult, kgroup, origin_localcoh, partitions, weights_bott
from .errors import PathMismatchError, TableInvariantError, VerificationError
from .kgroup import (
    localcoh_class_even_D,
    localcoh_class_even_Q,
    localcoh_class_odd_D_reversed,
    q_to_d,
    reverse_class,
)
from .origin_localcoh import h0_D_even, h0_D_odd, h0_pf_pole, h0_Q
from .partitions import gaussian_binomial
from .polyring import BiLaurentPoly


@dataclass
class LyubeznikTable:
    """The nonzero Lyubeznik numbers lambda_{i,j} of one Pfaffian ring."""

    n: int
    k: int
    dim: int
    ambient: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def validate(self) -> None:
        for (i, j), lam in self.entries.items():
            if lam <= 0:
                raise TableInvariantError(self.n, self.k, f"entry {lam} not positive", (i, j))
            if not 0 <= i <= j <= self.dim:
                raise TableInvariantError(
                    self.n, self.k, f"index outside 0 <= i <= j <= {self.dim}", (i, j)
                )
        corner = self.entries.get((self.dim, self.dim))
        if corner != 1:
            raise TableInvariantError(
                self.n, self.k, f"corner entry is {corner}, expected 1", (self.dim, self.dim)
            )

    def to_obj(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "dim": self.dim,
            "entries": [
                {"i": i, "j": j, "lambda": self.entries[(i, j)]}
                for (i, j) in sorted(self.entries)
            ],
        }

    def to_csv(self) -> str:
        lines = ["i,j,lambda"]
        for (i, j) in sorted(self.entries):
            lines.append(f"{i},{j},{self.entries[(i, j)]}")
        return "\n".join(lines) + "\n"

    def to_latex(self) -> str:
        """A tabular with one row per occupied i, one column per occupied j
        (labels range over [0, dim]; empty rows/columns are omitted)."""
        rows = sorted({i for (i, _) in self.entries})
        cols = sorted({j for (_, j) in self.entries})
        lines = [r"\begin{tabular}{r|" + "c" * len(cols) + "}"]
        lines.append(
            " & ".join([r"$i \backslash j$"] + [f"${j}$" for j in cols]) + r" \\ \hline"
        )
        for i in rows:
            cells = [str(self.entries.get((i, j), 0)) for j in cols]
            lines.append(" & ".join([f"${i}$"] + [f"${c}$" for c in cells]) + r" \\")
        lines.append(r"\end{tabular}")
        return "\n".join(lines) + "\n"


def _check_nk(n: int, k: int) -> int:
    if n < 2:
        raise ValueError(f"require n >= 2, got n={n}")
    m = n // 2
    if not 0 <= k <= m - 1:
        raise ValueError(f"require 0 <= k <= floor(n/2)-1, got k={k}, n={n}")
    return m


def L_closed(n: int, k: int) -> BiLaurentPoly:
    """The generating function of Lyubeznik numbers, by the closed formulas."""
    m = _check_nk(n, k)
    d = comb(n, 2)
    if n % 2 == 0 and k == m - 1:
        return BiLaurentPoly.monomial(1, d - 1, d - 1)
    total = BiLaurentPoly.zero()
    for s in range(k + 1):
        if n % 2 == 0:
            qpart = BiLaurentPoly.q(s * (2 * s + 3)) * _power4(m - 1, s, "q")
            wexp = k * (2 * k + 3) - 4 * s * (k - m + 1)
            wpart = BiLaurentPoly.w(wexp) * _power4(m - s - 2, k - s, "w")
        else:
            qpart = BiLaurentPoly.q(s * (2 * s + 1)) * _power4(m, s, "q")
            wexp = k * (2 * k + 3) - 2 * s * (2 * k - 2 * m + 1)
            wpart = BiLaurentPoly.w(wexp) * _power4(m - s - 1, k - s, "w")
        total = total + qpart * wpart
    return total


def _power4(a: int, b: int, var: str) -> BiLaurentPoly:
    poly = gaussian_binomial(a, b).substitute_power(4)
    return poly if var == "q" else _q_to_w(poly)


def _q_to_w(poly: BiLaurentPoly) -> BiLaurentPoly:
    if not poly.is_q_only():
        raise ValueError("variable rename requires a polynomial in q only")
    return BiLaurentPoly({(0, eq): c for (eq, _), c in poly.terms().items()})


def L_composed(n: int, k: int) -> BiLaurentPoly:
    """The generating function composed from the Grothendieck-group class of
    the local cohomology and the origin local cohomology of each summand."""
    m = _check_nk(n, k)
    d = comb(n, 2)
    if n % 2 == 0:
        cls = reverse_class(localcoh_class_even_Q(m, k), d)
        h = lambda p: h0_Q(m, p)
    else:
        cls = localcoh_class_odd_D_reversed(m, k)
        h = lambda p: h0_D_odd(m, p)
    total = BiLaurentPoly.zero()
    for p, coeff in enumerate(cls.coeffs):
        if coeff.is_zero():
            continue
        total = total + h(p) * _q_to_w(coeff)
    return total


def build_table(n: int, k: int) -> LyubeznikTable:
    """Build the Lyubeznik table, insisting the two routes agree exactly."""
    closed = L_closed(n, k)
    composed = L_composed(n, k)
    if closed != composed:
        keys = sorted(set(closed.terms()) | set(composed.terms()))
        for key in keys:
            if closed.coeff(*key) != composed.coeff(*key):
                raise PathMismatchError(n, k, key, closed.coeff(*key), composed.coeff(*key))
    table = LyubeznikTable(
        n=n,
        k=k,
        dim=k * (2 * n - 2 * k - 1),
        ambient=comb(n, 2),
        entries={key: c for key, c in closed.terms().items()},
    )
    table.validate()
    return table


def valid_k_range(n: int) -> range:
    """The k for which the rank <= 2k locus is a proper subvariety with a
    well-defined table: 0 <= k <= floor(n/2) - 1."""
    return range(n // 2)


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------


def _suite(name: str, checks) -> dict:
    """Run one suite; stop at the suite's first failure but never propagate."""
    checked = 0
    try:
        for step in checks:
            step()
            checked += 1
    except (VerificationError, ValueError, ArithmeticError) as exc:
        return {"name": name, "pass": False, "checked": checked, "error": str(exc)}
    return {"name": name, "pass": True, "checked": checked, "error": None}


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise VerificationError(message)


def _two_path_cell(cell: tuple[int, int]) -> None:
    n, k = cell
    build_table(n, k)


def _suite_two_path(n_max: int, jobs: int = 1) -> dict:
    cells = [(n, k) for n in range(2, n_max + 1) for k in valid_k_range(n)]
    name = "two_path_tables"
    if jobs <= 1:
        return _suite(name, [lambda cell=cell: _two_path_cell(cell) for cell in cells])
    # pure functions: shard cells across workers; aggregation is order-independent
    done = 0
    try:
        with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_two_path_cell, cell) for cell in cells]
            for future in concurrent.futures.as_completed(futures):
                future.result()
                done += 1
    except (VerificationError, ValueError, ArithmeticError) as exc:
        return {"name": name, "pass": False, "checked": done, "error": str(exc)}
    return {"name": name, "pass": True, "checked": done, "error": None}


def _gaussian_checks(a_max: int):
    for a in range(a_max + 1):
        for b in range(a + 1):
            def check(a=a, b=b):
                g = gaussian_binomial(a, b)
                _require(
                    g == partitions.gaussian_binomial_oracle(a, b),
                    f"binomial({a},{b}) disagrees with the box enumeration",
                )
                _require(
                    g == gaussian_binomial(a, a - b),
                    f"binomial symmetry fails at ({a},{b})",
                )
                _require(
                    g.reverse(b * (a - b)) == g,
                    f"binomial inversion fails at ({a},{b})",
                )
                if a > b > 0:
                    pascal = gaussian_binomial(a - 1, b - 1) + BiLaurentPoly.q(b) * gaussian_binomial(a - 1, b)
                    _require(g == pascal, f"Pascal identity fails at ({a},{b})")
            yield check


def _kgroup_checks(m_max: int, m_max_swap: int):
    for m in range(2, m_max + 1):
        for k in range(m - 1):
            def check_decomp(m=m, k=k):
                _require(
                    q_to_d(localcoh_class_even_Q(m, k)) == localcoh_class_even_D(m, k),
                    f"Q-to-D decomposition fails at (m={m}, k={k})",
                )
            yield check_decomp
    for m in range(2, m_max_swap + 1):
        d = comb(2 * m, 2)
        for k in range(m - 1):
            def check_swap(m=m, k=k, d=d):
                reversed_cls = reverse_class(localcoh_class_even_Q(m, k), d)
                expected = []
                for p in range(m + 1):
                    if p <= k:
                        shift = k * (2 * k + 3) - 4 * p * (k - m + 1)
                        expected.append(
                            BiLaurentPoly.q(shift)
                            * gaussian_binomial(m - p - 2, k - p).substitute_power(4)
                        )
                    else:
                        expected.append(BiLaurentPoly.zero())
                _require(
                    reversed_cls == kgroup.KClass("Q", 2 * m, tuple(expected)),
                    f"grading reversal closed form fails at (m={m}, k={k})",
                )
            yield check_swap


def _origin_checks(m_max: int):
    for m in range(1, m_max + 1):
        for p in range(m):
            def check_q(m=m, p=p):
                _require(
                    BiLaurentPoly.q(1) * h0_Q(m, p) == h0_pf_pole(m, m - p - 1),
                    f"pole/indecomposable splice fails at (m={m}, p={p})",
                )
            yield check_q
        for s in range(1, m):
            def check_d(m=m, s=s):
                spliced = h0_pf_pole(m, m - s) + BiLaurentPoly.q(-1) * h0_pf_pole(m, m - s - 1)
                _require(
                    h0_D_even(m, s) == spliced,
                    f"simple-module splice fails at (m={m}, s={s})",
                )
            yield check_d


def _ext_checks(m_max: int):
    for m in range(1, m_max + 1):
        for a in range(1, m + 1):
            for b in (2 * a - 1, 2 * a, 2 * a + 3):
                def check(m=m, a=a, b=b):
                    _require(
                        ext_mult.ext_series_enum(m, a, b) == ext_mult.ext_series_closed(m, a, b),
                        f"Ext series mismatch at (m={m}, a={a}, b={b})",
                    )
                yield check
    for m in range(1, 6):
        for k in range(1, m + 1):
            a = m - k
            if not 1 <= a <= m:
                continue
            for e in range(5):
                def check_sets(m=m, k=k, a=a, e=e):
                    rect = ext_mult.zset_rectangle(m, a, e)
                    if a + 1 <= m:
                        _require(
                            not (rect & ext_mult.zset_thickened(m, a + 1, e)),
                            f"Z-sets not disjoint at (m={m}, a={a}, e={e})",
                        )
                    thick = ext_mult.zset_thickened(m, a, e)
                    sentinel = ext_mult.ZPair(partitions.Partition((), length=m), m - 1)
                    _require(
                        (thick - {sentinel}) <= ext_mult.zset_rectangle(m, a, e + 1),
                        f"Z-set inclusion fails at (m={m}, a={a}, e={e})",
                    )
                yield check_sets


def _bott_checks(m_max: int):
    for m in range(1, m_max + 1):
        for p in range(m + 1):
            def check(m=m, p=p):
                weights_bott.verify_pushforward(m, p, 2 * m + 6)
            yield check


def _character_checks(m_max: int, bound: int):
    for m in range(1, m_max + 1):
        for k in range(m):
            def check(m=m, k=k):
                characters.verify_limitpfaff(m, k, bound)
            yield check


def verify_all(n_max: int, jobs: int = 1) -> dict:
    """Run every verification suite; the tables cover 2 <= n <= n_max, the
    module property suites run at their standard ranges.  Returns a structured
    report; a suite stops at its first failure, the others still run."""
    if n_max < 2:
        raise ValueError(f"require n_max >= 2, got {n_max}")
    suites = [
        _suite_two_path(n_max, jobs),
        _suite("gaussian_binomials", _gaussian_checks(14)),
        _suite("kgroup_identities", _kgroup_checks(10, 8)),
        _suite("origin_splices", _origin_checks(10)),
        _suite("ext_series", _ext_checks(7)),
        _suite("bott_pushforward", _bott_checks(4)),
        _suite("character_limits", _character_checks(3, 6)),
    ]
    return {"n_max": n_max, "pass": all(s["pass"] for s in suites), "suites": suites}
