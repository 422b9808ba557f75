"""Linear algebra over the prime field F_p, and F_p-coordinates of skew polynomials.

Semilinear conditions over K = GF(p^e) become honest linear systems once
every element is written in its e coordinates over F_p; S fixes F_p, so
maps such as u -> rem(f*u, g) are F_p-linear.
"""
import itertools

import numpy as np

from . import _kernels as K
from .ore_poly import SkewPoly


def rref(M, p):
    """(reduced rows, pivot map col -> row or -1)."""
    M = np.ascontiguousarray(np.asarray(M, dtype=np.int64))
    if M.size == 0:
        return M.reshape(0, M.shape[1] if M.ndim == 2 else 0), np.full(
            M.shape[1] if M.ndim == 2 else 0, -1, dtype=np.int64
        )
    return K.rref_kernel(M, int(p))


def rank(M, p):
    return rref(M, p)[0].shape[0]


def nullspace(M, p):
    """Basis (rows) of {x : M x = 0} over F_p."""
    M = np.asarray(M, dtype=np.int64)
    ncols = M.shape[1]
    R, piv = rref(M, p)
    free = [c for c in range(ncols) if piv[c] < 0]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for c in range(ncols):
            r = piv[c]
            if r >= 0:
                basis[k, c] = (-R[r, fc]) % p
    return basis


def solve(M, b, p):
    """One x with M x = b over F_p, or None."""
    M = np.asarray(M, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64).reshape(-1, 1)
    aug = np.hstack([M, b])
    R, piv = rref(aug, p)
    ncols = M.shape[1]
    if piv[ncols] >= 0:
        return None
    x = np.zeros(ncols, dtype=np.int64)
    for c in range(ncols):
        r = piv[c]
        if r >= 0:
            x[c] = R[r, ncols]
    return x


def span(basis, p, limit=None):
    """Iterate over all F_p-combinations of the rows, zero first."""
    basis = np.asarray(basis, dtype=np.int64)
    k = basis.shape[0]
    count = 0
    for combo in itertools.product(range(p), repeat=k):
        if limit is not None and count >= limit:
            return
        count += 1
        yield (np.asarray(combo, dtype=np.int64) @ basis) % p if k else np.zeros(
            basis.shape[1], dtype=np.int64
        )


# ---------------------------------------------------------------------------
# coordinates


def poly_to_vec(f, d):
    """F_p vector of a polynomial of degree < d (coefficient-major)."""
    F = f.field
    v = np.zeros(d * F.e, dtype=np.int64)
    for i, c in enumerate(f.coeffs):
        if i >= d:
            raise ValueError(f"degree {f.degree} does not fit in {d} slots")
        v[i * F.e : (i + 1) * F.e] = F.coords(c)
    return v


def vec_to_poly(field, v):
    e = field.e
    cs = [field.from_coords(v[i : i + e]) for i in range(0, len(v), e)]
    return SkewPoly(field, cs)


def unit_basis(field, d):
    """The F_p basis w^j t^i (i < d, j < e) of polynomials of degree < d."""
    out = []
    for i in range(d):
        for j in range(field.e):
            cs = [0] * field.e
            cs[j] = 1
            out.append(SkewPoly(field, [0] * i + [field.from_coords(cs)]))
    return out


def matrix_of(fn, field, d_in, d_out):
    """Matrix of an F_p-linear map on polynomials, columns = images of unit_basis."""
    cols = [poly_to_vec(fn(u), d_out) for u in unit_basis(field, d_in)]
    if not cols:
        return np.zeros((d_out * field.e, 0), dtype=np.int64)
    return np.stack(cols, axis=1)
