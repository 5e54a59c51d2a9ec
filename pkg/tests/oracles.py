"""Independent reference computations used by the test-suite.

Nothing here calls into the package's arithmetic or linear algebra except
where noted; each oracle reaches its answer by a different route.
"""

from __future__ import annotations

import cmath
import functools
import itertools
from fractions import Fraction

import numpy as np

# Euler-form matrix of the five-vertex quiver, rows/cols (a1, a2, b1, b2, b3)
EULER_MATRIX = np.array(
    [
        [1, 0, -1, -1, -1],
        [0, 1, -1, -1, -1],
        [0, 0, 1, 0, 0],
        [0, 0, 0, 1, 0],
        [0, 0, 0, 0, 1],
    ],
    dtype=np.int64,
)

W_COMPLEX = cmath.exp(2j * cmath.pi / 3)


def euler_matrix_form(alpha, beta) -> int:
    return int(np.asarray(alpha) @ EULER_MATRIX @ np.asarray(beta))


def poly_mul_mod(x: tuple, y: tuple) -> tuple:
    """(a + b t)(c + d t) as a degree-2 polynomial, reduced mod t^2 + t + 1."""
    a, b = x
    c, d = y
    coeffs = [Fraction(0)] * 3
    for i, p in enumerate((a, b)):
        for j, q in enumerate((c, d)):
            coeffs[i + j] += Fraction(p) * Fraction(q)
    # t^2 = -t - 1
    c0, c1, c2 = coeffs
    return (c0 - c2, c1 - c2)


def to_complex(x) -> complex:
    return float(x.re) + float(x.om) * W_COMPLEX


def matrix_to_complex(m) -> np.ndarray:
    return np.array([[to_complex(m[i, j]) for j in range(m.cols)] for i in range(m.rows)])


def closed_vertex_subsets(n: int, arrows, labels) -> list[int]:
    """Proper nonempty vertex subsets (bitmasks) closed under nonzero arrows.

    With one-dimensional spaces everywhere, such a subset spans a proper
    subrepresentation; the representation is simple iff none exists.
    """
    succ = [0] * n
    for (s, t), x in zip(arrows, labels):
        if x:
            succ[s] |= 1 << t
    full = (1 << n) - 1
    # reach[mask] = union of successors of the vertices in mask
    reach = [0] * (full + 1)
    out = []
    for mask in range(1, full):
        low = mask & -mask
        reach[mask] = reach[mask ^ low] | succ[low.bit_length() - 1]
        if not reach[mask] & ~mask:
            out.append(mask)
    return out


@functools.lru_cache(maxsize=None)
def _simple_on_support(n: int, support: tuple) -> bool:
    return not closed_vertex_subsets(n, support, (1,) * len(support))


def brute_force_simple(n: int, arrows, labels) -> bool:
    # the verdict depends only on the nonzero support, so cache on it
    return _simple_on_support(n, tuple(itertools.compress(arrows, labels)))


def common_eigenvector_reducible(U, V, n: int) -> bool:
    """Reducibility of (U, V) for n <= 3 by eigenspace intersection.

    An invariant subspace of dimension 1 is a common eigenvector of (U, V); one
    of dimension n - 1 is a common eigenvector of the transposes.  For n <= 3
    every proper invariant subspace has one of these dimensions.  Eigenvalues
    of U are +-1 and of V are the cube roots of unity, all in Q(w).
    """
    from braidforge.exact import OMEGA, ONE, Matrix, kernel_basis

    assert n <= 3
    if n == 1:
        return False
    eye = Matrix.identity(n)
    for A, B in ((U, V), (U.T, V.T)):
        for eu in (ONE, -ONE):
            for ev in (ONE, OMEGA, OMEGA * OMEGA):
                stacked = Matrix.block([[A - eye.scale(eu)], [B - eye.scale(ev)]])
                if kernel_basis(stacked):
                    return True
    return False


def all_small_quivers(max_vertices: int):
    """Every loop-free quiver without parallel arrows on 1..max_vertices
    vertices, with every {0, 1} labeling of its arrows.

    Yields ``(n, arrows, labelings)``.  Each ordered pair is absent, labeled 0
    or labeled 1, so there are 3 ** (n * (n - 1)) cases per vertex count.
    """
    for n in range(1, max_vertices + 1):
        pairs = [(s, t) for s in range(n) for t in range(n) if s != t]
        for present in itertools.product((False, True), repeat=len(pairs)):
            arrows = tuple(itertools.compress(pairs, present))
            yield n, arrows, itertools.product((0, 1), repeat=len(arrows))
