"""Independent polynomial vector-field commutator oracle for the tests.

Fields are stored componentwise as polynomials in dictionary form,
{exponent tuple: coefficient}, and the commutator is computed from

    [v, w]_k = sum_i ( v_i * d w_k / d x_i  -  w_i * d v_k / d x_i )

with generic symbolic differentiation of the monomials.  Nothing here is
shared with the package implementation (which works on (matrix, vector)
pairs), so agreement of structure constants is a genuine cross-check.
"""

from __future__ import annotations

from fractions import Fraction

Poly = dict[tuple[int, ...], Fraction]


def poly_add(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for mono, c in b.items():
        v = out.get(mono, Fraction(0)) + c
        if v:
            out[mono] = v
        elif mono in out:
            del out[mono]
    return out


def poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            mono = tuple(x + y for x, y in zip(m1, m2))
            v = out.get(mono, Fraction(0)) + c1 * c2
            if v:
                out[mono] = v
            elif mono in out:
                del out[mono]
    return out


def poly_diff(a: Poly, var: int) -> Poly:
    out: Poly = {}
    for mono, c in a.items():
        e = mono[var]
        if e:
            m2 = mono[:var] + (e - 1,) + mono[var + 1 :]
            out[m2] = out.get(m2, Fraction(0)) + c * e
    return {m: c for m, c in out.items() if c}


class VectorField:
    """n-component polynomial vector field."""

    def __init__(self, n: int, components: dict[int, Poly]):
        self.n = n
        self.components = {k: dict(p) for k, p in components.items() if p}

    def commutator(self, other: "VectorField") -> "VectorField":
        n = self.n
        comps: dict[int, Poly] = {}
        for k in range(n):
            acc: Poly = {}
            for i in range(n):
                vi = self.components.get(i)
                wi = other.components.get(i)
                wk = other.components.get(k)
                vk = self.components.get(k)
                if vi and wk:
                    acc = poly_add(acc, poly_mul(vi, poly_diff(wk, i)))
                if wi and vk:
                    neg = {m: -c for m, c in poly_mul(wi, poly_diff(vk, i)).items()}
                    acc = poly_add(acc, neg)
            if acc:
                comps[k] = acc
        return VectorField(n, comps)


def _mono(n: int, var: int | None = None) -> tuple[int, ...]:
    e = [0] * n
    if var is not None:
        e[var] = 1
    return tuple(e)


def field_for(label_str: str, n: int) -> VectorField:
    """Field of a label rendered as d(i), X(i,j) or Y(i,j) (1-based)."""
    kind = label_str[0]
    nums = [int(t) for t in label_str[2:-1].split(",")]
    if kind == "d":
        (i,) = nums
        return VectorField(n, {i - 1: {_mono(n): Fraction(1)}})
    i, j = nums
    xi = {_mono(n, i - 1): Fraction(1)}
    xj = {_mono(n, j - 1): Fraction(1)}
    if kind == "X":
        return VectorField(
            n, {j - 1: {m: -c for m, c in xi.items()}, i - 1: dict(xj)}
        )
    if kind == "Y":
        return VectorField(n, {j - 1: dict(xi), i - 1: dict(xj)})
    raise ValueError(f"unknown label {label_str!r}")


def express_in_basis(field: VectorField, p: int, n: int) -> dict[str, Fraction]:
    """Write a degree <= 1 field in the d/X/Y basis of the affine algebra."""
    const: dict[int, Fraction] = {}
    lin: dict[tuple[int, int], Fraction] = {}
    zero = _mono(n)
    for k, poly in field.components.items():
        for mono, c in poly.items():
            if mono == zero:
                const[k] = c
            elif sum(mono) == 1:
                lin[(mono.index(1), k)] = c
            else:
                raise ValueError("field has degree > 1")
    out: dict[str, Fraction] = {}
    for k, c in const.items():
        out[f"d({k + 1})"] = c
    seen = set()
    for (i, j) in list(lin):
        key = (min(i, j), max(i, j))
        if key in seen:
            continue
        seen.add(key)
        i1, j1 = key[0] + 1, key[1] + 1
        upper = lin.get((key[0], key[1]), Fraction(0))
        lower = lin.get((key[1], key[0]), Fraction(0))
        same_block = (j1 <= p) or (i1 >= p + 1)
        if same_block:
            assert upper == -lower, "not in the rotation/boost span"
            if lower:
                out[f"X({i1},{j1})"] = lower
        else:
            assert upper == lower, "not in the rotation/boost span"
            if upper:
                out[f"Y({i1},{j1})"] = upper
    return {k: v for k, v in out.items() if v}


def oracle_bracket(label_a: str, label_b: str, p: int, n: int) -> dict[str, Fraction]:
    """Structure constants of [a, b] straight from the vector fields."""
    va = field_for(label_a, n)
    vb = field_for(label_b, n)
    return express_in_basis(va.commutator(vb), p, n)
