"""Lie algebras of affine indefinite orthogonal type, as exact structure-constant tables.

Everything is built from the defining vector fields on R^n:

    X(i,j) = -x_i d/dx_j + x_j d/dx_i     (rotations, i<j within the p- or q-block)
    Y(i,j) =  x_i d/dx_j + x_j d/dx_i     (boosts, i <= p < j)
    d(i)   =  d/dx_i                      (translations)

A vector field of polynomial degree <= 1 is stored as a pair (A, b) where
A[(i,j)] is the coefficient of x_i d/dx_j and b[j] the coefficient of d/dx_j.
The commutator of two such pairs is again degree <= 1:

    [(A, b), (B, c)] = (AB - BA, B^T b - A^T c)

so all structure constants of so(p,q) and of the affine algebra
h_n = I_n ⋊ so(p,q) come out as exact integers.  Basis order is fixed:
translations by i, then X(i,j) lexicographic (p-block before q-block), then
Y(i,j) lexicographic.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Optional, Sequence, Union

__all__ = [
    "Signature",
    "Translation",
    "RotationX",
    "BoostY",
    "GenericLabel",
    "BasisLabel",
    "LieAlgebra",
    "ValidationReport",
    "ModuleLawError",
    "build_abelian",
    "build_so",
    "build_affine",
    "build_abelian_extension",
    "standard_translation_action",
    "validate",
]


@dataclass(frozen=True)
class Signature:
    """Signature (p, q) of the quadratic form sum x_i^2 (i<=p) - sum x_i^2 (i>p)."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 1:
            raise ValueError("signature requires p >= 1")
        if self.q < 0:
            raise ValueError("signature requires q >= 0")

    @property
    def n(self) -> int:
        return self.p + self.q

    def __str__(self) -> str:
        return f"({self.p},{self.q})"


@dataclass(frozen=True, order=True)
class Translation:
    i: int

    def __str__(self) -> str:
        return f"d({self.i})"


@dataclass(frozen=True, order=True)
class RotationX:
    i: int
    j: int

    def __str__(self) -> str:
        return f"X({self.i},{self.j})"


@dataclass(frozen=True, order=True)
class BoostY:
    i: int
    j: int

    def __str__(self) -> str:
        return f"Y({self.i},{self.j})"


@dataclass(frozen=True, order=True)
class GenericLabel:
    """Opaque label for algebras not built from the canonical fields."""

    name: str

    def __str__(self) -> str:
        return self.name


BasisLabel = Union[Translation, RotationX, BoostY, GenericLabel]


def label_is_valid(label: BasisLabel, sig: Signature) -> bool:
    """Index-range check for canonical labels at the given signature."""
    n, p = sig.n, sig.p
    if isinstance(label, Translation):
        return 1 <= label.i <= n
    if isinstance(label, RotationX):
        i, j = label.i, label.j
        return (1 <= i < j <= p) or (p + 1 <= i < j <= n)
    if isinstance(label, BoostY):
        return 1 <= label.i <= p and p + 1 <= label.j <= n
    return False


def so_labels(sig: Signature) -> list[BasisLabel]:
    """X labels (p-block, then q-block) followed by Y labels, lexicographic."""
    p, n = sig.p, sig.n
    labels: list[BasisLabel] = []
    for i in range(1, p + 1):
        for j in range(i + 1, p + 1):
            labels.append(RotationX(i, j))
    for i in range(p + 1, n + 1):
        for j in range(i + 1, n + 1):
            labels.append(RotationX(i, j))
    for i in range(1, p + 1):
        for j in range(p + 1, n + 1):
            labels.append(BoostY(i, j))
    return labels


# ---------------------------------------------------------------------------
# Degree <= 1 polynomial vector fields as (A, b) pairs.

Field = tuple[dict[tuple[int, int], int], dict[int, int]]


def field_of_label(label: BasisLabel, sig: Signature) -> Field:
    """The defining vector field of a canonical basis label (0-based keys)."""
    if not label_is_valid(label, sig):
        raise ValueError(f"label {label} is not valid for signature {sig}")
    if isinstance(label, Translation):
        return {}, {label.i - 1: 1}
    i, j = label.i - 1, label.j - 1
    if isinstance(label, RotationX):
        return {(i, j): -1, (j, i): 1}, {}
    return {(i, j): 1, (j, i): 1}, {}


def commutator_fields(f: Field, g: Field) -> Field:
    """[(A,b),(B,c)] = (AB - BA, B^T b - A^T c), all dictionaries sparse."""
    A, b = f
    B, c = g
    lin: dict[tuple[int, int], int] = {}
    for (i, k), a in A.items():
        for (k2, j), v in B.items():
            if k == k2:
                key = (i, j)
                lin[key] = lin.get(key, 0) + a * v
    for (i, k), a in B.items():
        for (k2, j), v in A.items():
            if k == k2:
                key = (i, j)
                lin[key] = lin.get(key, 0) - a * v
    const: dict[int, int] = {}
    for i, v in b.items():
        for (i2, j), a in B.items():
            if i == i2:
                const[j] = const.get(j, 0) + v * a
    for i, v in c.items():
        for (i2, j), a in A.items():
            if i == i2:
                const[j] = const.get(j, 0) - v * a
    return ({k: v for k, v in lin.items() if v}, {k: v for k, v in const.items() if v})


def _decompose_field(fld: Field, sig: Signature, index: Mapping[BasisLabel, int]) -> dict[int, int]:
    """Express a degree <= 1 field in the canonical basis; raise if outside the span."""
    A, b = fld
    out: dict[int, int] = {}
    for j, v in b.items():
        out[index[Translation(j + 1)]] = v
    seen: set[tuple[int, int]] = set()
    p = sig.p
    for (i, j) in A.keys():
        if i == j:
            raise ValueError("field has a diagonal linear part; not in so(p,q)")
        key = (min(i, j), max(i, j))
        if key in seen:
            continue
        seen.add(key)
        i1, j1 = key[0] + 1, key[1] + 1  # 1-based, i1 < j1
        upper = A.get((key[0], key[1]), 0)  # coeff of x_{i1} d_{j1}
        lower = A.get((key[1], key[0]), 0)  # coeff of x_{j1} d_{i1}
        same_block = (j1 <= p) or (i1 >= p + 1)
        if same_block:
            # X(i1,j1) contributes (-1, +1); no Y label exists for this pair.
            if upper != -lower:
                raise ValueError(f"linear part at ({i1},{j1}) is not antisymmetric")
            if lower:
                out[index[RotationX(i1, j1)]] = lower
        else:
            # Y(i1,j1) contributes (+1, +1).
            if upper != lower:
                raise ValueError(f"linear part at ({i1},{j1}) is not symmetric")
            if upper:
                out[index[BoostY(i1, j1)]] = upper
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------

Coeff = Union[int, Fraction]


class LieAlgebra:
    """Ordered basis plus sparse structure constants.

    ``structure[(a, b)]`` is the sparse vector of [e_a, e_b]; both orders are
    stored, so antisymmetry is a checkable invariant rather than a storage
    convention.  ``weights`` (0/1 per basis element, when present) grade the
    algebra so that brackets are weight-additive with the weight-2 part zero;
    the affine algebras carry weight 1 on translations and 0 on so(p,q).
    """

    def __init__(
        self,
        labels: Sequence[BasisLabel],
        structure: Mapping[tuple[int, int], Mapping[int, Coeff]],
        *,
        weights: Optional[Sequence[int]] = None,
        sig: Optional[Signature] = None,
        name: str = "lie-algebra",
    ) -> None:
        self.labels: tuple[BasisLabel, ...] = tuple(labels)
        self.dim: int = len(self.labels)
        self.structure: dict[tuple[int, int], dict[int, Coeff]] = {
            pair: {c: v for c, v in vec.items() if v} for pair, vec in structure.items()
        }
        self.structure = {pair: vec for pair, vec in self.structure.items() if vec}
        self.weights: Optional[tuple[int, ...]] = tuple(weights) if weights is not None else None
        self.sig = sig
        self.name = name
        self._index: dict[BasisLabel, int] = {lab: k for k, lab in enumerate(self.labels)}
        if len(self._index) != self.dim:
            raise ValueError("duplicate basis labels")

    # -- basic queries ------------------------------------------------------

    def index(self, label: BasisLabel) -> int:
        return self._index[label]

    def bracket(self, a: int, b: int) -> dict[int, Coeff]:
        """Sparse coefficient vector of [e_a, e_b]."""
        return self.structure.get((a, b), {})

    def bracket_chain(self, va: Mapping[int, Coeff], vb: Mapping[int, Coeff]) -> dict[int, Coeff]:
        """Bilinear extension of the bracket to sparse vectors."""
        out: dict[int, Coeff] = {}
        for a, ca in va.items():
            for b, cb in vb.items():
                for c, s in self.bracket(a, b).items():
                    out[c] = out.get(c, 0) + ca * cb * s
        return {c: v for c, v in out.items() if v}

    @property
    def translation_indices(self) -> tuple[int, ...]:
        return tuple(k for k, lab in enumerate(self.labels) if isinstance(lab, Translation))

    @property
    def so_indices(self) -> tuple[int, ...]:
        return tuple(
            k for k, lab in enumerate(self.labels) if isinstance(lab, (RotationX, BoostY))
        )

    @property
    def rotation_indices(self) -> tuple[int, ...]:
        return tuple(k for k, lab in enumerate(self.labels) if isinstance(lab, RotationX))

    @property
    def boost_indices(self) -> tuple[int, ...]:
        return tuple(k for k, lab in enumerate(self.labels) if isinstance(lab, BoostY))

    def copy(self) -> "LieAlgebra":
        return copy.deepcopy(self)

    def __repr__(self) -> str:
        return f"LieAlgebra({self.name}, dim={self.dim})"


# ---------------------------------------------------------------------------
# Constructors.


def _structure_from_fields(
    labels: Sequence[BasisLabel], sig: Signature
) -> dict[tuple[int, int], dict[int, int]]:
    index = {lab: k for k, lab in enumerate(labels)}
    fields = [field_of_label(lab, sig) for lab in labels]
    structure: dict[tuple[int, int], dict[int, int]] = {}
    for a in range(len(labels)):
        for b in range(a + 1, len(labels)):
            vec = _decompose_field(commutator_fields(fields[a], fields[b]), sig, index)
            if vec:
                structure[(a, b)] = vec
                structure[(b, a)] = {c: -v for c, v in vec.items()}
    return structure


@lru_cache(maxsize=None)
def build_abelian(n: int) -> LieAlgebra:
    """The abelian algebra I_n of translations; every bracket is zero."""
    if n < 1:
        raise ValueError("build_abelian requires n >= 1")
    labels = [Translation(i) for i in range(1, n + 1)]
    return LieAlgebra(labels, {}, weights=[1] * n, name=f"I_{n}")


@lru_cache(maxsize=None)
def build_so(sig: Signature) -> LieAlgebra:
    """so(p,q) on the rotation/boost basis, structure constants from the fields."""
    if sig.n < 2:
        raise ValueError("build_so requires n >= 2")
    labels = so_labels(sig)
    structure = _structure_from_fields(labels, sig)
    alg = LieAlgebra(labels, structure, weights=[0] * len(labels), sig=sig, name=f"so{sig}")
    assert alg.dim == sig.n * (sig.n - 1) // 2
    return alg


@lru_cache(maxsize=None)
def build_affine(sig: Signature) -> LieAlgebra:
    """h_n = I_n ⋊ so(p,q): translations first, then the so(p,q) basis."""
    if sig.n < 2:
        raise ValueError("build_affine requires n >= 2")
    labels: list[BasisLabel] = [Translation(i) for i in range(1, sig.n + 1)]
    labels += so_labels(sig)
    structure = _structure_from_fields(labels, sig)
    weights = [1] * sig.n + [0] * (len(labels) - sig.n)
    alg = LieAlgebra(labels, structure, weights=weights, sig=sig, name=f"h{sig}")
    assert alg.dim == sig.n * (sig.n + 1) // 2
    return alg


class ModuleLawError(ValueError):
    """Raised when proposed action matrices do not define a Lie module."""

    def __init__(self, pair: tuple[BasisLabel, BasisLabel], message: str) -> None:
        self.pair = pair
        super().__init__(f"module law fails at pair {pair[0]}, {pair[1]}: {message}")


Matrix = dict[tuple[int, int], Coeff]


def _as_sparse_matrix(mat, m: int) -> Matrix:
    """Accept dict / nested sequence / numpy array and return a sparse dict."""
    if isinstance(mat, dict):
        out = {k: v for k, v in mat.items() if v}
    else:
        out = {}
        for i, row in enumerate(mat):
            for j, v in enumerate(row):
                v = v if isinstance(v, (int, Fraction)) else Fraction(v).limit_denominator()
                if v:
                    out[(i, j)] = v
    for (i, j) in out:
        if not (0 <= i < m and 0 <= j < m):
            raise ValueError(f"action matrix entry ({i},{j}) outside dimension {m}")
    return out


def _mat_commutator(a: Matrix, b: Matrix) -> Matrix:
    out: dict[tuple[int, int], Coeff] = {}
    for (i, k), va in a.items():
        for (k2, j), vb in b.items():
            if k == k2:
                out[(i, j)] = out.get((i, j), 0) + va * vb
    for (i, k), vb in b.items():
        for (k2, j), va in a.items():
            if k == k2:
                out[(i, j)] = out.get((i, j), 0) - vb * va
    return {k: v for k, v in out.items() if v}


def standard_translation_action(sig: Signature) -> list[Matrix]:
    """Matrices of the standard action of so(p,q) on I_n.

    action(X)·m = [X, m] inside the affine algebra; for a label with field
    matrix A this is -A^T, so build_abelian_extension(build_so(sig), these)
    reproduces build_affine(sig) entry for entry.
    """
    mats = []
    for lab in so_labels(sig):
        A, _ = field_of_label(lab, sig)
        mats.append({(j, i): -v for (i, j), v in A.items()})
    return mats


def build_abelian_extension(
    g: LieAlgebra,
    action: Sequence,
    *,
    m_dim: Optional[int] = None,
    m_labels: Optional[Sequence[BasisLabel]] = None,
) -> LieAlgebra:
    """Abelian extension M ⊕ g with bracket [g1+m1, g2+m2] = [g1,g2] + [g1,m2] - [g2,m1].

    ``action[a]`` is the matrix of m -> [e_a, m] on M.  The matrices must
    satisfy action([a,b]) = action(a)action(b) - action(b)action(a); the
    failing pair is named otherwise.  Basis order: M first, then g.
    """
    if len(action) != g.dim:
        raise ValueError("need one action matrix per basis element of g")
    if m_dim is None:
        if m_labels is not None:
            m_dim = len(m_labels)
        else:
            m_dim = 0
            for mat in action:
                if isinstance(mat, dict):
                    for (i, j) in mat:
                        m_dim = max(m_dim, i + 1, j + 1)
                else:
                    m_dim = max(m_dim, len(mat))
    mats = [_as_sparse_matrix(mat, m_dim) for mat in action]

    for a in range(g.dim):
        for b in range(a + 1, g.dim):
            lhs: dict[tuple[int, int], Coeff] = {}
            for c, s in g.bracket(a, b).items():
                for key, v in mats[c].items():
                    lhs[key] = lhs.get(key, 0) + s * v
            rhs = _mat_commutator(mats[a], mats[b])
            diff = dict(lhs)
            for key, v in rhs.items():
                diff[key] = diff.get(key, 0) - v
            if any(v for v in diff.values()):
                raise ModuleLawError((g.labels[a], g.labels[b]), "action([a,b]) != [action(a),action(b)]")

    if m_labels is None:
        m_labels = [GenericLabel(f"m({i})") for i in range(1, m_dim + 1)]
    labels: list[BasisLabel] = list(m_labels) + list(g.labels)
    structure: dict[tuple[int, int], dict[int, Coeff]] = {}
    # g-g block, shifted by m_dim.
    for (a, b), vec in g.structure.items():
        structure[(a + m_dim, b + m_dim)] = {c + m_dim: v for c, v in vec.items()}
    # mixed block: [m_i, g_a] = -[g_a, m_i] = -action(a)·e_i.
    for a in range(g.dim):
        for (i, j), v in mats[a].items():
            # action(a)·e_j has component v at i:  [g_a, m_j] = sum_i v·m_i
            vec = structure.setdefault((a + m_dim, j), {})
            vec[i] = vec.get(i, 0) + v
    for (a, j) in [k for k in structure if k[0] >= m_dim and k[1] < m_dim]:
        structure[(j, a)] = {c: -v for c, v in structure[(a, j)].items()}
    structure = {k: {c: v for c, v in vec.items() if v} for k, vec in structure.items()}
    structure = {k: vec for k, vec in structure.items() if vec}
    weights = [1] * m_dim + [0] * g.dim
    return LieAlgebra(labels, structure, weights=weights, sig=g.sig, name=f"{g.name}+M{m_dim}")


# ---------------------------------------------------------------------------
# Validation.


@dataclass
class ValidationReport:
    algebra: str
    antisymmetry_ok: bool
    jacobi_ok: bool
    jacobi_failures: list[tuple[BasisLabel, BasisLabel, BasisLabel]] = field(default_factory=list)
    antisymmetry_failures: list[tuple[BasisLabel, BasisLabel]] = field(default_factory=list)
    integral: Optional[bool] = None
    oracle_ok: Optional[bool] = None

    @property
    def ok(self) -> bool:
        checks = [self.antisymmetry_ok, self.jacobi_ok]
        if self.integral is not None:
            checks.append(self.integral)
        if self.oracle_ok is not None:
            checks.append(self.oracle_ok)
        return all(checks)


def validate(alg: LieAlgebra, *, max_failures: int = 5) -> ValidationReport:
    """Check antisymmetry and Jacobi exactly; canonical algebras additionally
    get an integrality check and a recomputation from their defining fields."""
    report = ValidationReport(algebra=alg.name, antisymmetry_ok=True, jacobi_ok=True)
    d = alg.dim
    for a in range(d):
        if alg.bracket(a, a):
            report.antisymmetry_ok = False
            report.antisymmetry_failures.append((alg.labels[a], alg.labels[a]))
        for b in range(a + 1, d):
            vab = alg.bracket(a, b)
            vba = alg.bracket(b, a)
            keys = set(vab) | set(vba)
            if any(vab.get(c, 0) != -vba.get(c, 0) for c in keys):
                report.antisymmetry_ok = False
                if len(report.antisymmetry_failures) < max_failures:
                    report.antisymmetry_failures.append((alg.labels[a], alg.labels[b]))

    for a in range(d):
        for b in range(a + 1, d):
            for c in range(b + 1, d):
                acc: dict[int, Coeff] = {}
                for (x, y, z) in ((a, b, c), (b, c, a), (c, a, b)):
                    for m, s in alg.bracket(x, y).items():
                        for r, t in alg.bracket(m, z).items():
                            acc[r] = acc.get(r, 0) + s * t
                if any(v for v in acc.values()):
                    report.jacobi_ok = False
                    if len(report.jacobi_failures) < max_failures:
                        report.jacobi_failures.append(
                            (alg.labels[a], alg.labels[b], alg.labels[c])
                        )

    canonical = alg.sig is not None and all(
        isinstance(lab, (Translation, RotationX, BoostY)) for lab in alg.labels
    )
    if canonical:
        report.integral = all(
            isinstance(v, int) or (isinstance(v, Fraction) and v.denominator == 1)
            for vec in alg.structure.values()
            for v in vec.values()
        )
        index = {lab: k for k, lab in enumerate(alg.labels)}
        fields = [field_of_label(lab, alg.sig) for lab in alg.labels]
        ok = True
        for a in range(d):
            for b in range(d):
                if a == b:
                    continue
                expect = _decompose_field(commutator_fields(fields[a], fields[b]), alg.sig, index)
                got = {c: v for c, v in alg.bracket(a, b).items() if v}
                if {c: int(v) for c, v in got.items()} != expect:
                    ok = False
        report.oracle_ok = ok
    return report
