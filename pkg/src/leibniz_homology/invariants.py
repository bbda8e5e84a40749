"""Invariant subspaces M^{so(p,q)} as exact kernels, and the named invariant elements.

``invariant_subspace`` stacks the exact action matrices of all acting basis
elements and returns a kernel basis, re-verified by direct annihilation.

The named elements (all exact, integer up to the stated 1/n! prefactor):

* alpha       — the volume element d1 ∧ ... ∧ dn of the top wedge power.
* alpha_tilde — its full tensor antisymmetrization, sum over S_n of
                sgn(s) d_{s(1)} ⊗ ... ⊗ d_{s(n)}.
* delta       — the signed trace element sum_{i<=p} d_i⊗d_i - sum_{i>p} d_i⊗d_i.
* beta        — sum_{m=1..n} (-1)^(m-1) d_m ⊗ (wedge of the complement of m).
* rho         — the invariant of so ⊗ Λ^2: sum X(i,j)⊗d_i∧d_j over p-pairs,
                minus the same over q-pairs, plus sum Y(i,j)⊗d_i∧d_j.
* gamma       — the invariant of so ⊗ Λ^(n-2): lead ⊗ (complement wedge of
                {i,j}) with sign (-1)^(i+j+1) on p-block X pairs and
                (-1)^(i+j) on q-block X pairs and on Y pairs (the unique
                pattern annihilated by so(p,q); confirmed against the kernel
                solver at every tested signature).
* gamma_bar / gamma_bar_prime — the degree-(n-1) tensor lifts of gamma with
                the so-factor first resp. last: for each eligible (i,j) the
                tail runs over all bijections s from the n-2 slots onto
                {1..n} minus {i,j}, signed by sgn(s) relative to the
                increasing order of that complement, with prefactor 1/n!.
* gamma_tilde — gamma_bar + sign * gamma_bar_prime; the surviving sign is
                resolved at runtime by ``resolve_gamma_tilde_sign``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .liealg import BoostY, LieAlgebra, RotationX, Signature, Translation, build_affine
from .linalg import CapExceededError, ExactEliminator
from .repspace import Chain, Space, act, mixed_space, sort_wedge, tensor_space, wedge_space

__all__ = [
    "InvariantBasis",
    "invariant_subspace",
    "make_alpha",
    "make_alpha_tilde",
    "make_delta",
    "make_beta",
    "make_rho",
    "make_gamma",
    "make_gamma_bar",
    "make_gamma_bar_prime",
    "make_gamma_tilde",
    "resolve_gamma_tilde_sign",
    "annihilated_by",
    "proportional",
    "lead_projection",
]

DEFAULT_ROW_CAP = 2_000_000


@dataclass
class InvariantBasis:
    space: Space
    basis: list[Chain]
    dim: int

    def __post_init__(self) -> None:
        assert self.dim == len(self.basis)


def _resolve_acting(acting, space: Space) -> list[int]:
    if isinstance(acting, LieAlgebra):
        if acting is space.algebra:
            return list(range(acting.dim))
        return [space.algebra.index(lab) for lab in acting.labels]
    return [int(x) for x in acting]


def invariant_subspace(
    acting: Union[LieAlgebra, Sequence[int]],
    space: Space,
    *,
    row_cap: int = DEFAULT_ROW_CAP,
) -> InvariantBasis:
    """Exact kernel of the stacked action matrices of all acting elements.

    ``acting`` is a subalgebra given either as a LieAlgebra whose labels are
    resolved inside the ambient algebra of the space, or as explicit ambient
    basis indices.  Chains in the returned basis are primitive integer
    vectors, the lowest-rank word carrying a positive coefficient, and each
    is re-verified to be annihilated exactly.
    """
    gens = _resolve_acting(acting, space)
    rows = len(gens) * space.dim
    if rows > row_cap:
        raise CapExceededError(
            f"stacked action matrix has {rows} rows "
            f"({len(gens)} generators x dim {space.dim}), cap {row_cap}"
        )
    elim = ExactEliminator(rows if rows else 1, track=True)
    for j in range(space.dim):
        w = space.basis_chain(space.unrank_word(j))
        col: list[tuple[int, Union[int, Fraction]]] = []
        for t, x in enumerate(gens):
            image = act(x, w)
            for ww, c in image.coeffs.items():
                col.append((t * space.dim + space.rank_word(ww), c))
        elim.add_column(sorted(col), tag=j)
    chains: list[Chain] = []
    for vec in elim.kernel_vectors():
        coeffs = {space.unrank_word(j): Fraction(c) for j, c in vec.items()}
        chain = Chain(space, coeffs)
        first = min(chain.coeffs, key=space.rank_word)
        if chain.coeffs[first] < 0:
            chain = -1 * chain
        chains.append(chain)
    chains.sort(key=lambda c: space.rank_word(min(c.coeffs, key=space.rank_word)))
    for chain in chains:
        for x in gens:
            if not act(x, chain).is_zero():
                raise AssertionError("kernel chain failed exact annihilation re-check")
    assert len(chains) == space.dim - elim.rank
    return InvariantBasis(space, chains, len(chains))


def annihilated_by(chain: Chain, acting: Union[LieAlgebra, Sequence[int]]) -> bool:
    """True iff every basis element of ``acting`` kills the chain exactly."""
    gens = _resolve_acting(acting, chain.space)
    return all(act(x, chain).is_zero() for x in gens)


def proportional(a: Chain, b: Chain) -> bool:
    """Exact proportionality over Q (both nonzero and parallel, or both zero)."""
    if a.space != b.space:
        return False
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    if set(a.coeffs) != set(b.coeffs):
        return False
    w0 = next(iter(a.coeffs))
    ratio = b.coeffs[w0] / a.coeffs[w0]
    return all(b.coeffs[w] == ratio * a.coeffs[w] for w in a.coeffs)


# ---------------------------------------------------------------------------
# Named elements.


def _trans(h: LieAlgebra, i: int) -> int:
    return h.index(Translation(i))


def make_alpha(sig: Signature) -> Chain:
    """Volume element d1 ∧ ... ∧ dn (coefficient 1)."""
    h = build_affine(sig)
    space = wedge_space(h, sig.n)
    word = tuple(_trans(h, i) for i in range(1, sig.n + 1))
    return space.basis_chain(word)


def make_alpha_tilde(sig: Signature) -> Chain:
    """Alternating sum over S_n of d_{s(1)} ⊗ ... ⊗ d_{s(n)} in the full tensor power."""
    h = build_affine(sig)
    space = tensor_space(h, sig.n)
    coeffs: dict[tuple[int, ...], Fraction] = {}
    base = [_trans(h, i) for i in range(1, sig.n + 1)]
    for perm in itertools.permutations(range(sig.n)):
        word = tuple(base[t] for t in perm)
        coeffs[word] = Fraction(_perm_sign(perm))
    return Chain(space, coeffs)


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        t = start
        while not seen[t]:
            seen[t] = True
            t = perm[t]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def make_delta(sig: Signature) -> Chain:
    """Signed trace element of I ⊗ I (mixed space with translation lead)."""
    h = build_affine(sig)
    space = mixed_space(h, 1, lead=h.translation_indices)
    coeffs = {}
    for i in range(1, sig.n + 1):
        t = _trans(h, i)
        coeffs[(t, t)] = Fraction(1 if i <= sig.p else -1)
    return Chain(space, coeffs)


def _complement_wedge(h: LieAlgebra, n: int, omit: Sequence[int]) -> tuple[int, ...]:
    return tuple(_trans(h, i) for i in range(1, n + 1) if i not in omit)


def make_beta(sig: Signature) -> Chain:
    """The invariant of I ⊗ Λ^(n-1): sum (-1)^(m-1) d_m ⊗ (complement wedge).

    Uniform signs across both blocks; the q-block does not flip (the flipped
    variant is not annihilated, as the kernel solver confirms).
    """
    h = build_affine(sig)
    n = sig.n
    space = mixed_space(h, n - 1, lead=h.translation_indices)
    coeffs = {}
    for m in range(1, n + 1):
        word = (_trans(h, m),) + _complement_wedge(h, n, (m,))
        coeffs[word] = Fraction((-1) ** (m - 1))
    return Chain(space, coeffs)


def make_rho(sig: Signature) -> Chain:
    """The invariant of so ⊗ Λ^2; requires n >= 2 with at least one valid pair."""
    h = build_affine(sig)
    p, n = sig.p, sig.n
    space = mixed_space(h, 2, lead=h.so_indices)
    coeffs: dict[tuple[int, ...], Fraction] = {}
    for i in range(1, p + 1):
        for j in range(i + 1, p + 1):
            coeffs[(h.index(RotationX(i, j)), _trans(h, i), _trans(h, j))] = Fraction(1)
    for i in range(p + 1, n + 1):
        for j in range(i + 1, n + 1):
            coeffs[(h.index(RotationX(i, j)), _trans(h, i), _trans(h, j))] = Fraction(-1)
    for i in range(1, p + 1):
        for j in range(p + 1, n + 1):
            coeffs[(h.index(BoostY(i, j)), _trans(h, i), _trans(h, j))] = Fraction(1)
    return Chain(space, coeffs)


def _gamma_blocks(sig: Signature) -> list[tuple[int, int, object, int]]:
    """(i, j, lead label, sign) for every eligible pair, with the verified signs."""
    p, n = sig.p, sig.n
    out = []
    for i in range(1, p + 1):
        for j in range(i + 1, p + 1):
            out.append((i, j, RotationX(i, j), (-1) ** (i + j + 1)))
    for i in range(p + 1, n + 1):
        for j in range(i + 1, n + 1):
            out.append((i, j, RotationX(i, j), (-1) ** (i + j)))
    for i in range(1, p + 1):
        for j in range(p + 1, n + 1):
            out.append((i, j, BoostY(i, j), (-1) ** (i + j)))
    return out


def make_gamma(sig: Signature) -> Chain:
    """The invariant of so ⊗ Λ^(n-2) (block signs as documented in the module docstring)."""
    h = build_affine(sig)
    n = sig.n
    space = mixed_space(h, n - 2, lead=h.so_indices)
    coeffs: dict[tuple[int, ...], Fraction] = {}
    for i, j, lab, sign in _gamma_blocks(sig):
        word = (h.index(lab),) + _complement_wedge(h, n, (i, j))
        coeffs[word] = Fraction(sign)
    return Chain(space, coeffs)


def _gamma_bar_words(sig: Signature, lead_first: bool) -> dict[tuple[int, ...], Fraction]:
    h = build_affine(sig)
    n = sig.n
    pref = Fraction(1, math.factorial(n))
    coeffs: dict[tuple[int, ...], Fraction] = {}
    for i, j, lab, sign in _gamma_blocks(sig):
        lead = h.index(lab)
        complement = _complement_wedge(h, n, (i, j))
        for perm in itertools.permutations(range(n - 2)):
            tail = tuple(complement[t] for t in perm)
            word = (lead,) + tail if lead_first else tail + (lead,)
            coeffs[word] = coeffs.get(word, Fraction(0)) + pref * sign * _perm_sign(perm)
    return coeffs


def make_gamma_bar(sig: Signature) -> Chain:
    """Tensor lift of gamma with the so-factor leading, prefactor 1/n!."""
    h = build_affine(sig)
    return Chain(tensor_space(h, sig.n - 1), _gamma_bar_words(sig, lead_first=True))


def make_gamma_bar_prime(sig: Signature) -> Chain:
    """Tensor lift of gamma with the so-factor trailing, prefactor 1/n!."""
    h = build_affine(sig)
    return Chain(tensor_space(h, sig.n - 1), _gamma_bar_words(sig, lead_first=False))


def make_gamma_tilde(sig: Signature, sign: int) -> Chain:
    """gamma_bar + sign * gamma_bar_prime for sign in {+1, -1}."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return make_gamma_bar(sig) + sign * make_gamma_bar_prime(sig)


def resolve_gamma_tilde_sign(sig: Signature) -> tuple[Optional[int], dict[int, bool]]:
    """Test both signs for invariance under the full affine algebra.

    Returns (resolved sign or None, {sign: is_invariant}).  Exactly one sign
    is expected to survive; both surviving or neither is reported as None.
    """
    h = build_affine(sig)
    results: dict[int, bool] = {}
    for sign in (1, -1):
        chain = make_gamma_tilde(sig, sign)
        results[sign] = all(act(x, chain).is_zero() for x in range(h.dim))
    survivors = [s for s, ok in results.items() if ok]
    return (survivors[0] if len(survivors) == 1 else None), results


def lead_projection(chain: Chain, lead: Sequence[int]) -> Chain:
    """Project a tensor chain onto lead ⊗ Λ^(k-1): keep the first factor,
    antisymmetrize the trailing factors into a wedge.  Words whose first
    factor is outside ``lead`` are dropped."""
    if chain.space.kind != "tensor":
        raise ValueError("lead_projection expects a tensor chain")
    h = chain.space.algebra
    space = mixed_space(h, chain.space.degree - 1, lead=tuple(lead))
    lead_set = set(lead)
    out: dict[tuple[int, ...], Fraction] = {}
    for word, coeff in chain.coeffs.items():
        if word[0] not in lead_set:
            continue
        tail, sgn = sort_wedge(word[1:])
        if not sgn:
            continue
        new = (word[0],) + tail
        out[new] = out.get(new, Fraction(0)) + coeff * sgn
    return Chain(space, {w: c for w, c in out.items() if c})
