"""Tour 2: invariant subspaces and the named invariant elements.

For each module M of so(p,q) the invariants are computed as the exact kernel
of the stacked action matrices of all generators.  The package also builds
the named generators in closed form and checks they span those kernels:

  alpha        the volume element of the top wedge power
  delta        the signed trace element of I ⊗ I
  beta         the alternating element of I ⊗ Λ^(n-1)
  rho, gamma   the generators of so ⊗ Λ^2 and so ⊗ Λ^(n-2)
  alpha~       the antisymmetrized volume tensor (invariant under all of h_n)
  gamma~       gamma_bar ± gamma_bar', sign resolved by computation

Run:  python demos/invariant_zoo.py
"""

from leibniz_homology import (
    Signature,
    annihilated_by,
    build_affine,
    build_so,
    invariant_subspace,
    make_alpha_tilde,
    make_beta,
    make_delta,
    make_gamma,
    make_gamma_tilde,
    make_rho,
    mixed_space,
    proportional,
    resolve_gamma_tilde_sign,
    wedge_space,
)

for sig in (Signature(2, 2), Signature(2, 3)):
    h = build_affine(sig)
    so = build_so(sig)
    n = sig.n
    print(f"=== signature {sig} (n = {n}) ===")

    dims = [invariant_subspace(so, wedge_space(h, k)).dim for k in range(n + 1)]
    print(f"dim [Λ^k I]^so,  k = 0..{n}:   {dims}   (1 exactly at k = 0 and k = n)")

    dims = [
        invariant_subspace(so, mixed_space(h, k, lead=h.translation_indices)).dim
        for k in range(n + 1)
    ]
    print(f"dim [I ⊗ Λ^k]^so, k = 0..{n}:  {dims}   (1 exactly at k = 1 and k = n-1)")

    dims = [
        invariant_subspace(so, mixed_space(h, k, lead=h.so_indices)).dim
        for k in range(n + 1)
    ]
    note = "(k = 2 and n-2 coincide at n = 4: dimension 2)" if n == 4 else "(1 at k = 2 and n-2)"
    print(f"dim [so ⊗ Λ^k]^so, k = 0..{n}: {dims}   {note}")

    rho, gamma = make_rho(sig), make_gamma(sig)
    b2 = invariant_subspace(so, mixed_space(h, 2, lead=h.so_indices))
    if n >= 5:
        print(f"kernel generator of so ⊗ Λ^2 proportional to rho: {proportional(b2.basis[0], rho)}")
    print(f"delta, beta, rho, gamma annihilated by so(p,q): "
          f"{[annihilated_by(c, so) for c in (make_delta(sig), make_beta(sig), rho, gamma)]}")

    sign, detail = resolve_gamma_tilde_sign(sig)
    print(f"gamma~ sign resolution: +1 invariant: {detail[1]}, -1 invariant: {detail[-1]} "
          f"-> resolved {sign:+d}")
    gt = make_gamma_tilde(sig, sign)
    at = make_alpha_tilde(sig)
    print(f"alpha~ ({len(at.coeffs)} words) and gamma~ ({len(gt.coeffs)} words) "
          f"invariant under all of h_n: "
          f"{annihilated_by(at, range(h.dim))}, {annihilated_by(gt, range(h.dim))}")
    print()
