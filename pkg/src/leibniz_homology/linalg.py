"""Sparse exact linear algebra over Q and over prime fields.

Two engines back every rank/kernel/solve in the package:

* ``ExactEliminator`` — streaming column elimination over Q.  Vectors are
  kept as integer numpy arrays with their content divided out (division-free
  elimination with gcd normalization); arithmetic silently falls back to
  Python big integers when an int64 overflow is possible, so results are
  exact for any input.  Optional combination tracking yields kernel vectors
  and solve witnesses.

* ``ModularEliminator`` — dense batched reduced-echelon elimination mod p.
  Primes are drawn from [260000, 500000) so that every product fits a float64
  exactly even after summing 2^15 terms; the batch reduction is then a BLAS
  matmul.  Ranks mod p never exceed the rank over Q; agreement across two
  independently drawn primes is required before a modular rank is reported.

Column indices below refer to vectors living in F^rows; the eliminators
maintain a reduced basis of the span of the columns seen so far, so the
basis size is the rank.
"""

from __future__ import annotations

import logging
import math
import struct
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

import numpy as np

log = logging.getLogger(__name__)

__all__ = [
    "SparseMatrix",
    "RankCertificate",
    "CapExceededError",
    "PrimeDisagreementError",
    "DenominatorClashError",
    "ExactEliminator",
    "ModularEliminator",
    "SparseModularEliminator",
    "rank",
    "kernel_basis",
    "solve",
    "rank_mod_p",
    "rank_mod_p_streamed",
    "is_probable_prime",
    "draw_primes",
    "PRIME_LO",
    "PRIME_HI",
    "MAX_MODULAR_ROWS",
    "write_column_file",
    "read_column_file",
]

# Random 30-bit primes; the sparse engines work with any p < 2^31 (products
# stay below 2^62 in int64).  The dense fallback engine does exact float64
# matmuls and therefore only accepts primes below DENSE_PRIME_MAX, where
# rows·(p-1)^2 < 2^53 for rows <= 32768.
PRIME_LO = 1 << 29
PRIME_HI = 1 << 30
DENSE_PRIME_MAX = 500_000
MAX_MODULAR_ROWS = 32_768

_INT64_GUARD = 1 << 62
_GCD_TRIGGER = 1 << 40

SparseColumn = Sequence[tuple[int, Union[int, Fraction]]]


class CapExceededError(RuntimeError):
    """A configured size cap was exceeded; message names the offending sizes."""


class PrimeDisagreementError(RuntimeError):
    """Modular ranks disagreed across primes; reported instead of guessed."""


class DenominatorClashError(ArithmeticError):
    """A prime divides a denominator of the input; re-run with a new prime."""


# ---------------------------------------------------------------------------
# Primes.

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17)


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for the sizes used here (n < 3.4e14)."""
    if n < 2:
        return False
    for sp in _MR_WITNESSES:
        if n % sp == 0:
            return n == sp
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def draw_primes(
    rng,
    count: int,
    *,
    lo: int = PRIME_LO,
    hi: int = PRIME_HI,
    exclude_below: int = 0,
    exclude: Sequence[int] = (),
) -> list[int]:
    """Distinct random primes from [lo, hi), reproducible from the rng state."""
    out: list[int] = []
    banned = set(exclude)
    while len(out) < count:
        c = rng.randrange(lo | 1, hi, 2)
        if c <= exclude_below or c in banned or not is_probable_prime(c):
            continue
        banned.add(c)
        out.append(c)
    return out


# ---------------------------------------------------------------------------
# Public matrix type.


class SparseMatrix:
    """Sparse matrix over Q (field=None) or F_p (field=p); no stored zeros."""

    def __init__(self, rows: int, cols: int, entries=None, field: Optional[int] = None):
        self.rows = rows
        self.cols = cols
        self.field = field
        self.entries: dict[tuple[int, int], Union[int, Fraction]] = {}
        if entries:
            for (i, j), v in (entries.items() if isinstance(entries, dict) else entries):
                if not (0 <= i < rows and 0 <= j < cols):
                    raise ValueError(f"entry ({i},{j}) out of range {rows}x{cols}")
                if field is not None:
                    v = int(v) % field
                if v:
                    self.entries[(i, j)] = v

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def get(self, i: int, j: int):
        return self.entries.get((i, j), 0)

    def columns(self) -> list[list[tuple[int, Union[int, Fraction]]]]:
        cols: list[list[tuple[int, Union[int, Fraction]]]] = [[] for _ in range(self.cols)]
        for (i, j), v in self.entries.items():
            cols[j].append((i, v))
        for col in cols:
            col.sort()
        return cols

    def matvec(self, vec: dict[int, Union[int, Fraction]]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for (i, j), v in self.entries.items():
            c = vec.get(j)
            if c:
                out[i] = out.get(i, Fraction(0)) + Fraction(v) * c
        return {i: v for i, v in out.items() if v}

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(
            self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()}, self.field
        )

    @classmethod
    def identity(cls, n: int, field: Optional[int] = None) -> "SparseMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)}, field)

    def __repr__(self) -> str:
        f = "Q" if self.field is None else f"F_{self.field}"
        return f"SparseMatrix({self.rows}x{self.cols} over {f}, nnz={self.nnz})"


@dataclass
class RankCertificate:
    rank: int
    field: str  # "Q" or "Fp"
    method: str  # "exact" | "modular"
    primes_used: list[int] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "rank": self.rank,
            "field": self.field,
            "method": self.method,
            "primes_used": list(self.primes_used),
        }


# ---------------------------------------------------------------------------
# Exact engine.


def _gcd_reduce_int64(v: np.ndarray) -> np.ndarray:
    g = int(np.gcd.reduce(np.abs(v)))
    if g > 1:
        v //= g
    return v


def _gcd_reduce_object(v: np.ndarray) -> tuple[np.ndarray, int]:
    g = 0
    for x in v:
        g = math.gcd(g, abs(int(x)))
        if g == 1:
            break
    if g > 1:
        v = np.array([int(x) // g for x in v], dtype=object)
    return v, g


class ExactEliminator:
    """Streaming reduced column elimination over Q with exact integer rows.

    Columns are fed one at a time; the reduced basis of their span is
    maintained in reduced-echelon form (each basis vector positive-primitive,
    zero at all other pivots).  With ``track=True`` every stored vector v
    carries the exact rational combination of original columns with
    sum(combo[t] * column_t) == v, which yields kernel vectors and solve
    witnesses.
    """

    def __init__(self, rowdim: int, *, track: bool = False):
        self.rowdim = rowdim
        self.track = track
        self.basis: list[np.ndarray] = []
        self.pivots: list[int] = []
        self.combos: list[dict] = []
        self.kernel_combos: list[dict] = []

    @property
    def rank(self) -> int:
        return len(self.basis)

    def _to_vec(self, col: SparseColumn) -> tuple[np.ndarray, int]:
        """Dense integer vector (column scaled by its denominator lcm)."""
        lcm = 1
        for _, v in col:
            if isinstance(v, Fraction):
                lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
        values = [
            (i, int(v * lcm) if isinstance(v, Fraction) else int(v) * lcm) for i, v in col
        ]
        if any(abs(x) >= _INT64_GUARD for _, x in values):
            vo = np.zeros(self.rowdim, dtype=object)
            for i, x in values:
                vo[i] = vo[i] + x if vo[i] else x
            return vo, lcm
        v = np.zeros(self.rowdim, dtype=np.int64)
        for i, x in values:
            v[i] += x
        return v, lcm

    def _axpy(self, a: int, v: np.ndarray, b: int, w: np.ndarray) -> np.ndarray:
        """a*v - b*w with overflow-safe dtype promotion (no hidden scaling)."""
        if v.dtype == np.int64 and w.dtype == np.int64:
            mv = int(np.abs(v).max()) if v.size else 0
            mw = int(np.abs(w).max()) if w.size else 0
            if abs(a) * mv + abs(b) * mw < _INT64_GUARD:
                return a * v - b * w
        vo = v.astype(object) if v.dtype == np.int64 else v
        wo = w.astype(object) if w.dtype == np.int64 else w
        return a * vo - b * wo

    def _normalize(self, v: np.ndarray, combo: Optional[dict]) -> tuple[np.ndarray, Optional[dict]]:
        """Divide out content and make the first nonzero positive; mirror combo."""
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return v, combo
        if v.dtype == np.int64:
            g = int(np.gcd.reduce(np.abs(v[nz])))
        else:
            g = 0
            for i in nz:
                g = math.gcd(g, abs(int(v[i])))
                if g == 1:
                    break
        sign = -1 if int(v[nz[0]]) < 0 else 1
        factor = sign * g
        if factor != 1:
            if v.dtype == np.int64:
                v = v // factor
            else:
                v = np.array([int(x) // factor for x in v], dtype=object)
            if combo is not None:
                combo = {t: x / factor for t, x in combo.items()}
        return v, combo

    def add_column(self, col: SparseColumn, tag=None) -> bool:
        """Feed a column; returns True if it enlarged the span (new pivot)."""
        v, lcm = self._to_vec(col)
        combo: Optional[dict] = {tag: Fraction(lcm)} if self.track else None
        for k in range(len(self.basis)):
            piv = self.pivots[k]
            c = int(v[piv])
            if c == 0:
                continue
            lead = int(self.basis[k][piv])
            g = math.gcd(abs(c), lead)
            a, b = lead // g, c // g
            v = self._axpy(a, v, b, self.basis[k])
            if self.track:
                combo = {t: a * x for t, x in combo.items()}
                for t, x in self.combos[k].items():
                    combo[t] = combo.get(t, Fraction(0)) - b * x
            else:
                # untracked: content reduction is free to happen any time
                if v.dtype == np.int64:
                    m = int(np.abs(v).max()) if v.size else 0
                    if m > _GCD_TRIGGER:
                        v = _gcd_reduce_int64(v)

        if not np.any(v):
            if self.track:
                self.kernel_combos.append({t: x for t, x in combo.items() if x})
            return False

        v, combo = self._normalize(v, combo)
        piv = int(np.nonzero(v)[0][0])
        lead = int(v[piv])
        # Back-reduce existing basis vectors at the new pivot.
        for j in range(len(self.basis)):
            cj = int(self.basis[j][piv])
            if cj == 0:
                continue
            g = math.gcd(abs(cj), lead)
            a, b = lead // g, cj // g
            newrow = self._axpy(a, self.basis[j], b, v)
            newcombo = None
            if self.track:
                newcombo = {t: a * x for t, x in self.combos[j].items()}
                for t, x in combo.items():
                    newcombo[t] = newcombo.get(t, Fraction(0)) - b * x
            newrow, newcombo = self._normalize(newrow, newcombo)
            self.basis[j] = newrow
            if self.track:
                self.combos[j] = newcombo
        self.basis.append(v)
        self.pivots.append(piv)
        if self.track:
            self.combos.append(combo)
        return True

    def kernel_vectors(self) -> list[dict]:
        """Primitive integer kernel combinations (column tag -> int)."""
        out = []
        for combo in self.kernel_combos:
            lcm = 1
            for x in combo.values():
                lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
            ints = {t: int(x * lcm) for t, x in combo.items() if x}
            g = 0
            for x in ints.values():
                g = math.gcd(g, abs(x))
            if g > 1:
                ints = {t: x // g for t, x in ints.items()}
            out.append(ints)
        return out


# ---------------------------------------------------------------------------
# Modular engine.


class ModularEliminator:
    """Dense batched reduced-echelon elimination over F_p (float64 arithmetic).

    Basis rows live in [0, p); reduction of a batch against the basis is a
    single matmul thanks to the reduced-echelon invariant.  rank() never
    exceeds the exact rank of the same columns.
    """

    def __init__(self, rowdim: int, p: int):
        if not is_probable_prime(p):
            raise ValueError(f"{p} is not prime")
        if p >= DENSE_PRIME_MAX:
            raise ValueError(
                f"the dense engine needs p < {DENSE_PRIME_MAX} for exact float64 matmuls"
            )
        if rowdim > MAX_MODULAR_ROWS:
            raise CapExceededError(
                f"modular eliminator limited to {MAX_MODULAR_ROWS} rows, got {rowdim}"
            )
        self.p = p
        self.rowdim = rowdim
        self._cap = min(rowdim, 1024) or 1
        self.R = np.zeros((self._cap, rowdim), dtype=np.float64)
        self.pivots = np.zeros(self._cap, dtype=np.int64)
        self.rank = 0

    @property
    def saturated(self) -> bool:
        return self.rank >= self.rowdim

    def _grow(self, need: int) -> None:
        if need <= self._cap:
            return
        newcap = min(self.rowdim, max(need, self._cap * 2))
        R = np.zeros((newcap, self.rowdim), dtype=np.float64)
        R[: self.rank] = self.R[: self.rank]
        piv = np.zeros(newcap, dtype=np.int64)
        piv[: self.rank] = self.pivots[: self.rank]
        self.R, self.pivots, self._cap = R, piv, newcap

    def process_dense_batch(self, V: np.ndarray) -> None:
        """V: float64 array (rowdim x b) with entries already reduced mod p."""
        p = self.p
        r = self.rank
        if r:
            C = V[self.pivots[:r], :]
            if C.any():
                V -= self.R[:r].T @ C
                np.mod(V, p, out=V)
        new_rows: list[np.ndarray] = []
        new_pivs: list[int] = []
        b = V.shape[1]
        for j in range(b):
            col = V[:, j]
            nz = np.nonzero(col)[0]
            if nz.size == 0:
                continue
            piv = int(nz[0])
            inv = pow(int(col[piv]), -1, p)
            row = np.mod(col * float(inv), p)
            if j + 1 < b:
                coeffs = V[piv, j + 1 :]
                if coeffs.any():
                    V[:, j + 1 :] -= np.outer(row, coeffs)
                    np.mod(V[:, j + 1 :], p, out=V[:, j + 1 :])
            new_rows.append(row)
            new_pivs.append(piv)
            if self.rank + len(new_rows) >= self.rowdim:
                break
        if not new_rows:
            return
        m = len(new_rows)
        N = np.stack(new_rows)
        # reduce new rows against the later new pivots (reduced-echelon form)
        for k in range(m - 1, 0, -1):
            c = N[:k, new_pivs[k]]
            if c.any():
                N[:k] -= np.outer(c, N[k])
                np.mod(N[:k], p, out=N[:k])
        if self.rank:
            C = self.R[: self.rank][:, new_pivs]
            if C.any():
                self.R[: self.rank] -= C @ N
                np.mod(self.R[: self.rank], p, out=self.R[: self.rank])
        self._grow(self.rank + m)
        self.R[self.rank : self.rank + m] = N
        self.pivots[self.rank : self.rank + m] = new_pivs
        self.rank += m

    def process_sparse_columns(self, cols: Iterable[SparseColumn], batch: int = 512) -> None:
        buf: list[SparseColumn] = []
        for col in cols:
            buf.append(col)
            if len(buf) == batch:
                self._flush(buf)
                buf = []
                if self.saturated:
                    return
        if buf:
            self._flush(buf)

    def _flush(self, buf: list[SparseColumn]) -> None:
        V = np.zeros((self.rowdim, len(buf)), dtype=np.float64)
        p = self.p
        for j, col in enumerate(buf):
            for i, v in col:
                if isinstance(v, Fraction):
                    if v.denominator % p == 0:
                        raise DenominatorClashError(f"prime {p} divides a denominator")
                    x = v.numerator * pow(v.denominator, -1, p) % p
                else:
                    x = int(v) % p
                V[i, j] = x
        self.process_dense_batch(V)


class SparseModularEliminator:
    """Sparse reduced-echelon elimination over F_p with dict rows.

    The boundary matrices of this package stay extremely sparse under
    elimination (single-digit average fill), so dictionary rows beat the
    dense engine by an order of magnitude.  The reduced-echelon invariant
    (rows are zero at every pivot but their own) means one pass over a
    column's support fully reduces it.  If fill ever explodes past
    ``dense_switch`` of the row dimension, the state is migrated into a
    dense ``ModularEliminator`` and elimination continues there.
    """

    def __init__(self, rowdim: int, p: int, *, dense_switch: float = 0.125):
        if not is_probable_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.rowdim = rowdim
        self.basis: dict[int, dict[int, int]] = {}  # pivot -> row, lead 1
        self.users: dict[int, set[int]] = {}  # coord -> pivots of rows containing it
        self.fill = 0
        self._dense: Optional[ModularEliminator] = None
        self._switch_fill = max(65_536, int(dense_switch * rowdim * rowdim)) if rowdim else 0

    @property
    def rank(self) -> int:
        if self._dense is not None:
            return self._dense.rank
        return len(self.basis)

    @property
    def saturated(self) -> bool:
        return self.rank >= self.rowdim

    def _to_dense(self) -> None:
        log.info("sparse eliminator fill %d: switching to the dense engine", self.fill)
        dense = ModularEliminator(self.rowdim, self.p)
        pivots = sorted(self.basis)
        dense._grow(len(pivots))
        for k, piv in enumerate(pivots):
            row = np.zeros(self.rowdim, dtype=np.float64)
            for r, v in self.basis[piv].items():
                row[r] = v
            dense.R[k] = row
            dense.pivots[k] = piv
        dense.rank = len(pivots)
        self._dense = dense
        self.basis.clear()
        self.users.clear()

    def add_column(self, col: SparseColumn) -> bool:
        p = self.p
        if self._dense is not None:
            before = self._dense.rank
            self._dense.process_sparse_columns([col], batch=1)
            return self._dense.rank > before
        work: dict[int, int] = {}
        for r, v in col:
            if isinstance(v, Fraction):
                if v.denominator % p == 0:
                    raise DenominatorClashError(f"prime {p} divides a denominator")
                x = v.numerator * pow(v.denominator, -1, p) % p
            else:
                x = int(v) % p
            if x:
                work[r] = x
        basis = self.basis
        hits = [piv for piv in work if piv in basis]
        for piv in sorted(hits):
            c = work.pop(piv, 0)
            if not c:
                continue
            for r2, v2 in basis[piv].items():
                if r2 == piv:
                    continue
                nv = (work.get(r2, 0) - c * v2) % p
                if nv:
                    work[r2] = nv
                elif r2 in work:
                    del work[r2]
        if not work:
            return False
        piv = min(work)
        inv = pow(work[piv], -1, p)
        row = {r: (v * inv) % p for r, v in work.items()}
        # back-reduce the rows that contain the new pivot
        for piv2 in list(self.users.get(piv, ())):
            row2 = basis[piv2]
            c2 = row2.get(piv)
            if not c2:
                continue
            for r2, v2 in row.items():
                nv = (row2.get(r2, 0) - c2 * v2) % p
                if nv:
                    if r2 not in row2:
                        self.users.setdefault(r2, set()).add(piv2)
                        self.fill += 1
                    row2[r2] = nv
                elif r2 in row2:
                    del row2[r2]
                    self.users[r2].discard(piv2)
                    self.fill -= 1
        basis[piv] = row
        for r in row:
            self.users.setdefault(r, set()).add(piv)
        self.fill += len(row)
        if (
            self.fill > self._switch_fill
            and self.rowdim <= MAX_MODULAR_ROWS
            and self.p < DENSE_PRIME_MAX
        ):
            self._to_dense()
        return True

    def process_sparse_columns(self, cols: Iterable[SparseColumn], batch: int = 0) -> None:
        for col in cols:
            self.add_column(col)
            if self.saturated:
                return


# ---------------------------------------------------------------------------
# Public operations.


def rank_mod_p(m: SparseMatrix, p: int) -> int:
    elim = SparseModularEliminator(m.rows if m.rows else 1, p)
    elim.process_sparse_columns(m.columns())
    return elim.rank


def rank_mod_p_streamed(
    columns: Iterable[SparseColumn],
    p: int,
    *,
    rowdim: int,
    batch: int = 512,
) -> int:
    """Rank over F_p with columns generated on demand and discarded after use;
    memory is bounded by the reduced basis, never by the column count."""
    elim = SparseModularEliminator(rowdim if rowdim else 1, p)
    elim.process_sparse_columns(columns, batch=batch)
    return elim.rank


def rank(
    m: SparseMatrix,
    *,
    cap_exact: int = 10_000,
    primes: Optional[Sequence[int]] = None,
    rng=None,
) -> RankCertificate:
    """Exact rank when within the cap, two-prime modular otherwise."""
    if m.cols <= cap_exact:
        elim = ExactEliminator(m.rows if m.rows else 1)
        for col in m.columns():
            elim.add_column(col)
        return RankCertificate(elim.rank, "Q", "exact")
    if primes is None:
        import random

        rng = rng or random.Random(0)
        primes = draw_primes(rng, 2)
    ranks = {p: rank_mod_p(m, p) for p in primes}
    vals = set(ranks.values())
    if len(vals) != 1:
        raise PrimeDisagreementError(f"modular ranks disagree: {ranks}")
    return RankCertificate(vals.pop(), "Fp", "modular", list(primes))


def kernel_basis(m: SparseMatrix) -> list[dict[int, int]]:
    """Exact kernel basis; each vector a primitive integer dict col -> coeff.

    Every returned v satisfies m·v = 0 exactly (re-checked here).
    """
    elim = ExactEliminator(m.rows if m.rows else 1, track=True)
    for j, col in enumerate(m.columns()):
        elim.add_column(col, tag=j)
    vecs = elim.kernel_vectors()
    for v in vecs:
        image = m.matvec({j: Fraction(c) for j, c in v.items()})
        if image:
            raise AssertionError("kernel vector failed exact re-check")
    return vecs


def solve(m: SparseMatrix, b: dict[int, Union[int, Fraction]]) -> Optional[dict[int, Fraction]]:
    """Exact witness x with m·x = b, or None (certified by rank comparison)."""
    elim = ExactEliminator(m.rows if m.rows else 1, track=True)
    for j, col in enumerate(m.columns()):
        elim.add_column(col, tag=j)
    rank_plain = elim.rank
    was_new = elim.add_column(sorted(b.items()), tag="rhs")
    if was_new:
        return None  # rank of [m | b] is rank(m) + 1
    combo = elim.kernel_combos[-1]
    cb = combo.get("rhs")
    if not cb:
        return None
    out = {j: -x / cb for j, x in combo.items() if j != "rhs" and x}
    # exact re-check
    image = m.matvec(out)
    want = {i: Fraction(v) for i, v in b.items() if v}
    if image != want:
        raise AssertionError("solve witness failed exact re-check")
    return out


# ---------------------------------------------------------------------------
# Optional on-disk spill format for streamed columns (internal, versioned).
# Layout (little-endian): magic b"LBZC", u16 version, u64 rowdim, u64 ncols,
# then per column u32 nnz followed by nnz * (u32 delta_index, i64 value);
# row indices are delta-encoded within each column.

_SPILL_MAGIC = b"LBZC"
_SPILL_VERSION = 1


def write_column_file(path, rowdim: int, columns: Iterable[SparseColumn]) -> int:
    cols = list(columns)
    with open(path, "wb") as fh:
        fh.write(_SPILL_MAGIC)
        fh.write(struct.pack("<HQQ", _SPILL_VERSION, rowdim, len(cols)))
        for col in cols:
            entries = sorted((int(i), int(v)) for i, v in col)
            fh.write(struct.pack("<I", len(entries)))
            prev = 0
            for i, v in entries:
                fh.write(struct.pack("<Iq", i - prev, v))
                prev = i
    return len(cols)


def read_column_file(path) -> tuple[int, list[list[tuple[int, int]]]]:
    with open(path, "rb") as fh:
        if fh.read(4) != _SPILL_MAGIC:
            raise ValueError("not a column spill file")
        version, rowdim, ncols = struct.unpack("<HQQ", fh.read(18))
        if version != _SPILL_VERSION:
            raise ValueError(f"unsupported spill version {version}")
        cols = []
        for _ in range(ncols):
            (nnz,) = struct.unpack("<I", fh.read(4))
            col = []
            prev = 0
            for _ in range(nnz):
                d, v = struct.unpack("<Iq", fh.read(12))
                prev += d
                col.append((prev, v))
            cols.append(col)
    return rowdim, cols
