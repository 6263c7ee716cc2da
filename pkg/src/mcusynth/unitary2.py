"""2x2 complex-unitary arithmetic: products, adjoints, powers and 2^k-th roots.

Matrices are plain ``numpy`` arrays of shape (2, 2), dtype complex128.
``unitary_root`` is the one nontrivial operation: it returns the principal
2^k-th root of a unitary, computed from the closed-form eigendecomposition of
a 2x2 matrix (quadratic characteristic polynomial), never an iterative solver.
"""

from __future__ import annotations

import cmath

import numpy as np

ATOL = 1e-12
# externally supplied matrices (circuit files, json gate specs) are accepted
# at a looser grade, since decimal serialization loses bits
INGEST_ATOL = 1e-9

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
S = np.array([[1, 0], [0, 1j]], dtype=complex)
T = np.array([[1, 0], [0, cmath.exp(1j * cmath.pi / 4)]], dtype=complex)

NAMED_GATES = {"I": I2, "X": X, "Y": Y, "Z": Z, "H": H, "S": S, "T": T}


def is_unitary(m: np.ndarray, atol: float = ATOL) -> bool:
    """True if m is 2x2 with m @ m+ == I and |det m| == 1 within atol."""
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2):
        return False
    if np.max(np.abs(m @ m.conj().T - I2)) > atol:
        return False
    return abs(abs(np.linalg.det(m)) - 1.0) <= atol


def require_unitary(m: np.ndarray, atol: float = ATOL, name: str = "matrix") -> np.ndarray:
    """Return m as a complex128 array, raising ValueError if not unitary."""
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2):
        raise ValueError(f"{name} must be 2x2, got shape {m.shape}")
    if not is_unitary(m, atol=atol):
        raise ValueError(f"{name} is not unitary within {atol}")
    return m


def multiply(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product a @ b."""
    return np.asarray(a, dtype=complex) @ np.asarray(b, dtype=complex)


def dagger(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(a, dtype=complex).conj().T


def power(a: np.ndarray, e: int) -> np.ndarray:
    """a**e by repeated squaring; negative exponents use the adjoint."""
    a = np.asarray(a, dtype=complex)
    if e < 0:
        return power(dagger(a), -e)
    result = I2.copy()
    base = a
    while e:
        if e & 1:
            result = result @ base
        base = base @ base
        e >>= 1
    return result


def unitary_root(u: np.ndarray, k: int) -> np.ndarray:
    """Principal 2^k-th root: a unitary v with v**(2**k) == u.

    The eigenvalues of u lie on the unit circle; each eigenphase is taken on
    the principal branch (-pi, pi] and divided by 2^k, which fixes the root
    deterministically.  The spectral projectors come from the resolvent form
    (u - lam2*I)/(lam1 - lam2), so no eigenvector basis is ever chosen.

    A (near-)scalar input short-circuits to exp(i*phi/2^k) * I.  The cutoff
    is an eigenvalue gap of 1e-8: below it the projector denominators would
    amplify double-precision noise past the gap itself, while the scalar
    form errs by at most the gap, which is the smaller of the two.

    k == 0 returns u unchanged, with no spectral round-trip.  Large k is
    fine: the result simply tends to the identity.
    """
    u = require_unitary(u, atol=INGEST_ATOL)
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    if k == 0:
        return u.copy()

    trace = u[0, 0] + u[1, 1]
    det = u[0, 0] * u[1, 1] - u[0, 1] * u[1, 0]
    disc = cmath.sqrt(trace * trace - 4 * det)
    lam1 = (trace + disc) / 2
    lam2 = (trace - disc) / 2
    # eigenvalues of a unitary are unit-modulus; renormalize off rounding
    lam1 /= abs(lam1)
    lam2 /= abs(lam2)

    scale = 1 << k
    if abs(lam1 - lam2) <= 1e-8:
        phi = cmath.phase(trace)
        return cmath.exp(1j * phi / scale) * I2

    if cmath.phase(lam1) > cmath.phase(lam2):
        lam1, lam2 = lam2, lam1
    root1 = cmath.exp(1j * cmath.phase(lam1) / scale)
    root2 = cmath.exp(1j * cmath.phase(lam2) / scale)
    proj1 = (u - lam2 * I2) / (lam1 - lam2)
    proj2 = (u - lam1 * I2) / (lam2 - lam1)
    return root1 * proj1 + root2 * proj2


def random_unitary(rng: np.random.Generator) -> np.ndarray:
    """Haar-style random 2x2 unitary: complex Gaussian matrix + QR."""
    z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))
