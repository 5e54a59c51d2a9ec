"""Representations of the modular group C2 * C3 and of its five-vertex
bipartite quiver.

A Q-representation stores one matrix per arrow ``a_i -> b_j``; stacking them
gives the base change ``B`` from the eigenbasis of the order-2 generator to
the eigenbasis of the order-3 generator.  Eigenvalue conventions:

* ``a1 -> +1``, ``a2 -> -1`` for ``U`` (order 2),
* ``b1 -> 1``, ``b2 -> w``, ``b3 -> w**2`` for ``V`` (order 3).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .errors import (
    DegenerateBaseChangeError,
    DimensionMismatchError,
    InvalidParameterError,
    NonSquareError,
    ReducibleParameterError,
    SingularMatrixError,
)
from .exact import (
    ONE,
    OMEGA,
    ZERO,
    Cyclotomic,
    Matrix,
    as_rational,
    decode_matrix,
    encode_matrix,
    mat_inverse,
    mat_rank,
    rref,
)
from .quiver import Quiver

__all__ = [
    "ARROWS",
    "QRep",
    "Gamma0Rep",
    "HomExt",
    "westbury_quiver",
    "make_S",
    "make_T",
    "parse_summand",
    "direct_sum",
    "assemble_base_change",
    "to_gamma0",
    "burnside_dimension",
    "is_irreducible",
    "hom_ext",
    "fingerprint",
    "fingerprint_words",
    "DEFAULT_WORDS",
]

# arrow a_i -> b_j as (source vertex, target vertex); vertices are a1, a2, b1, b2, b3
ARROWS: tuple[tuple[int, int], ...] = tuple((i, 2 + j) for i in range(2) for j in range(3))

V_EIGENVALUES = (ONE, OMEGA, OMEGA * OMEGA)


@lru_cache(maxsize=None)
def westbury_quiver() -> Quiver:
    return Quiver(5, ARROWS)


@dataclass(frozen=True)
class QRep:
    """A representation of the Westbury quiver.

    ``maps[k]`` is the matrix of ``ARROWS[k]``, of shape ``b_j x a_i``.
    """

    dim: tuple[int, int, int, int, int]
    maps: tuple[Matrix, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        dim = tuple(int(d) for d in self.dim)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "maps", tuple(self.maps))
        if len(dim) != 5 or any(d < 0 for d in dim):
            raise DimensionMismatchError(f"bad dimension vector {dim}")
        if len(self.maps) != 6:
            raise DimensionMismatchError(f"expected 6 arrow maps, got {len(self.maps)}")
        for (s, t), m in zip(ARROWS, self.maps):
            if m.shape != (dim[t], dim[s]):
                raise DimensionMismatchError(
                    f"arrow {s}->{t} needs shape {(dim[t], dim[s])}, got {m.shape}"
                )

    @property
    def n(self) -> int:
        return self.dim[0] + self.dim[1]

    def map(self, i: int, j: int) -> Matrix:
        """Matrix of the arrow ``a_i -> b_j`` (1-based indices)."""
        return self.maps[3 * (i - 1) + (j - 1)]

    def to_json(self) -> dict:
        return {"dim": list(self.dim), "maps": [encode_matrix(m) for m in self.maps]}

    @classmethod
    def from_json(cls, data: dict) -> "QRep":
        dim = tuple(data["dim"])
        maps = []
        for (s, t), raw in zip(ARROWS, data["maps"]):
            m = decode_matrix(raw)
            if m.rows == 0:
                m = Matrix.zeros(dim[t], dim[s])
            maps.append(m)
        return cls(dim, tuple(maps))


@dataclass(frozen=True)
class Gamma0Rep:
    """A pair (U, V) with ``U**2 = I`` and ``V**3 = I``, checked on construction."""

    n: int
    U: Matrix
    V: Matrix

    def __post_init__(self) -> None:
        eye = Matrix.identity(self.n)
        if self.U.shape != (self.n, self.n) or self.V.shape != (self.n, self.n):
            raise DimensionMismatchError("U and V must be n x n")
        if self.U @ self.U != eye:
            raise ValueError("U does not square to the identity")
        if self.V @ self.V @ self.V != eye:
            raise ValueError("V does not cube to the identity")

    def to_json(self) -> dict:
        return {"n": self.n, "U": encode_matrix(self.U), "V": encode_matrix(self.V)}

    @classmethod
    def from_json(cls, data: dict) -> "Gamma0Rep":
        return cls(int(data["n"]), decode_matrix(data["U"]), decode_matrix(data["V"]))


def _qrep_from_entries(dim, entries: dict[tuple[int, int], Matrix], name: str) -> QRep:
    maps = []
    for s, t in ARROWS:
        maps.append(entries.get((s, t), Matrix.zeros(dim[t], dim[s])))
    return QRep(tuple(dim), tuple(maps), name)


def make_S(i: int, j: int) -> QRep:
    """One-dimensional S_ij: U acts by the sign of a_i, V by the root of b_j."""
    if i not in (1, 2) or j not in (1, 2, 3):
        raise InvalidParameterError(f"S_ij needs i in {{1,2}} and j in {{1,2,3}}, got ({i}, {j})")
    dim = [0] * 5
    dim[i - 1] = 1
    dim[1 + j] = 1
    return _qrep_from_entries(dim, {(i - 1, 1 + j): Matrix.identity(1)}, f"S{i}{j}")


def make_T(i: int, lam, *, strict: bool = True) -> QRep:
    """Two-dimensional T_i(lam), with b-slot ``i`` empty.

    On the two active b-slots (in increasing order) the base change is
    ``[[lam, 1], [1, 1]]``.  ``strict=False`` skips the parameter guards.
    """
    if i not in (1, 2, 3):
        raise InvalidParameterError(f"T_i needs i in {{1,2,3}}, got {i}")
    lam = as_rational(lam)
    if strict:
        if lam == 1:
            raise DegenerateBaseChangeError(f"T{i}(1): base change [[1,1],[1,1]] is singular")
        if lam == 0:
            raise ReducibleParameterError(f"T{i}(0) has an invariant line")
    first, last = [j for j in (1, 2, 3) if j != i]
    dim = [1, 1, 0, 0, 0]
    dim[1 + first] = 1
    dim[1 + last] = 1
    one = Matrix.identity(1)
    entries = {
        (0, 1 + first): Matrix(1, 1, [lam]),
        (0, 1 + last): one,
        (1, 1 + first): one,
        (1, 1 + last): one,
    }
    return _qrep_from_entries(dim, entries, f"T{i}({lam})")


def parse_summand(token: str) -> QRep:
    """Parse ``S11``..``S23`` or ``T<i>:<lambda>`` (e.g. ``T2:3/2``)."""
    token = token.strip()
    if len(token) == 3 and token[0] == "S" and token[1:].isdigit():
        return make_S(int(token[1]), int(token[2]))
    if token.startswith("T") and ":" in token:
        head, lam = token.split(":", 1)
        if head[1:].isdigit():
            return make_T(int(head[1:]), Fraction(lam))
    raise InvalidParameterError(f"cannot parse summand {token!r}; expected S<i><j> or T<i>:<lambda>")


def _block_diag(blocks: Sequence[Matrix]) -> Matrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    entries = [ZERO] * (rows * cols)
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                entries[(r0 + i) * cols + c0 + j] = b[i, j]
        r0 += b.rows
        c0 += b.cols
    return Matrix(rows, cols, entries)


def direct_sum(reps: Sequence[QRep]) -> QRep:
    dim = tuple(sum(r.dim[v] for r in reps) for v in range(5))
    maps = tuple(_block_diag([r.maps[k] for r in reps]) for k in range(6))
    return QRep(dim, maps, "+".join(r.name for r in reps))


def assemble_base_change(r: QRep, *, check: bool = True) -> Matrix:
    """Rows grouped by b-slot, columns by a-slot; block (j, i) is ``a_i -> b_j``.

    Raises :class:`NonSquareError` for an unbalanced dimension vector and,
    when ``check`` is set, :class:`DegenerateBaseChangeError` if ``B`` is
    singular.
    """
    a, b = r.dim[:2], r.dim[2:]
    if sum(a) != sum(b):
        raise NonSquareError(f"unbalanced dimension vector {r.dim}")
    grid = [[r.maps[3 * i + j] for i in range(2) if a[i]] for j in range(3) if b[j]]
    if not grid:
        return Matrix(0, 0, [])
    B = Matrix.block(grid)
    if check and mat_rank(B) < B.rows:
        raise DegenerateBaseChangeError(f"base change of {r.name or r.dim} is singular")
    return B


def _base_change_and_inverse(r: QRep) -> tuple[Matrix, Matrix]:
    B = assemble_base_change(r, check=False)
    try:
        return B, mat_inverse(B)
    except SingularMatrixError as exc:
        raise DegenerateBaseChangeError(f"base change of {r.name or r.dim} is singular") from exc


def to_gamma0(r: QRep) -> Gamma0Rep:
    """U = diag(+1 x a1, -1 x a2) and V = B^-1 diag(1, w, w^2 by b-slot) B."""
    B, Binv = _base_change_and_inverse(r)
    a1, a2, *b = r.dim
    U = Matrix.diag([ONE] * a1 + [-ONE] * a2)
    D = [ev for ev, k in zip(V_EIGENVALUES, b) for _ in range(k)]
    # B^-1 D B without forming D as a matrix: scale the rows of B
    DB = Matrix(B.rows, B.cols, [D[i] * B[i, j] for i in range(B.rows) for j in range(B.cols)])
    return Gamma0Rep(r.n, U, Binv @ DB)


# -- Burnside test -------------------------------------------------------------

# primes p = 1 (mod 3) below 2**25 with a primitive cube root of unity mod p;
# p**2 * n**2 stays below 2**63 for n <= 12 and far beyond
_MOD_PRIMES = (
    (33554383, 11144615),
    (33554371, 2080435),
    (33554347, 26444523),
    (33554341, 17358794),
)


def _reduce_mod(m: Matrix, p: int, w: int) -> Optional[np.ndarray]:
    out = np.empty(m.rows * m.cols, dtype=np.int64)
    for k, x in enumerate(m.entries):
        num = 0
        for q, coeff in ((x.re, 1), (x.om, w)):
            if q:
                if q.denominator % p == 0:
                    return None
                num += q.numerator * pow(q.denominator, -1, p) * coeff
        out[k] = num % p
    return out.reshape(m.rows, m.cols)


def _burnside_modular(gens: Sequence[Matrix], n: int, p: int, w: int) -> Optional[int]:
    """Dimension of the algebra generated mod a prime above ``p``.  This is a
    lower bound for the dimension over Q(w); ``None`` when ``p`` divides a
    denominator."""
    reduced = [_reduce_mod(g, p, w) for g in gens]
    if any(g is None for g in reduced):
        return None
    target = n * n
    basis = np.zeros((0, target), dtype=np.int64)
    pivots: list[int] = []

    def insert(vec: np.ndarray) -> bool:
        nonlocal basis
        if pivots:
            vec = (vec - (vec[pivots] @ basis) % p) % p
        nz = np.flatnonzero(vec)
        if nz.size == 0:
            return False
        piv = int(nz[0])
        vec = vec * pow(int(vec[piv]), -1, p) % p
        if pivots:
            col = basis[:, piv].copy()
            basis = (basis - np.outer(col, vec) % p) % p
        basis = np.vstack([basis, vec])
        pivots.append(piv)
        return True

    eye = np.eye(n, dtype=np.int64)
    insert(eye.reshape(-1))
    queue = [eye]
    while queue and len(pivots) < target:
        X = queue.pop(0)
        for G in reduced:
            Y = (G @ X) % p
            if insert(Y.reshape(-1)):
                queue.append(Y)
                if len(pivots) == target:
                    break
    return len(pivots)


def _burnside_exact(gens: Sequence[Matrix], n: int) -> int:
    target = n * n
    basis: list[tuple[int, list[Cyclotomic]]] = []

    def insert(vec: list[Cyclotomic]) -> bool:
        vec = list(vec)
        # rows were reduced against all earlier rows, so insertion order works
        for piv, row in basis:
            f = vec[piv]
            if f:
                vec = [a - f * b if b else a for a, b in zip(vec, row)]
        piv = next((k for k, x in enumerate(vec) if x), None)
        if piv is None:
            return False
        inv = vec[piv].inverse()
        basis.append((piv, [inv * x if x else x for x in vec]))
        return True

    eye = Matrix.identity(n)
    insert(list(eye.entries))
    queue = [eye]
    while queue and len(basis) < target:
        X = queue.pop(0)
        for G in gens:
            Y = G @ X
            if insert(list(Y.entries)):
                queue.append(Y)
                if len(basis) == target:
                    break
    return len(basis)


def burnside_dimension(gens: Sequence[Matrix], n: int, method: str = "auto") -> int:
    """Dimension of the unital algebra generated by ``gens`` (closure of the
    span of I under left multiplication).

    ``auto`` first computes modulo split primes; a full span there is a full
    span over Q(w).  Otherwise the exact computation decides.
    """
    if method not in ("auto", "exact", "modular"):
        raise ValueError(f"unknown method {method!r}")
    if n == 0:
        return 0
    if method in ("auto", "modular"):
        best = 0
        for p, w in _MOD_PRIMES:
            d = _burnside_modular(gens, n, p, w)
            if d is None:
                continue
            if d == n * n:
                return d
            best = max(best, d)
            if method == "auto":
                break
        if method == "modular":
            return best
    return _burnside_exact(gens, n)


def is_irreducible(g: Gamma0Rep, method: str = "auto") -> bool:
    return burnside_dimension([g.U, g.V], g.n, method) == g.n * g.n


# -- Hom and Ext ---------------------------------------------------------------


@dataclass(frozen=True)
class HomExt:
    hom_dim: int
    ext_dim: int
    cocycle_basis: tuple[tuple[Matrix, ...], ...]


def hom_ext(vrep: QRep, wrep: QRep) -> HomExt:
    """Kernel and cokernel of f(phi)_a = phi_t V_a - W_a phi_s.

    Coordinates of the target are ordered by arrow (a1b1, a1b2, ..., a2b3),
    row-major inside each block; cocycles are the unit vectors at the
    non-pivot coordinates of the row-reduced image.
    """
    dv, dw = vrep.dim, wrep.dim
    offsets = []
    total = 0
    for s, t in ARROWS:
        offsets.append(total)
        total += dw[t] * dv[s]
    codim = total

    images: list[list[Cyclotomic]] = []
    domain_dim = 0
    for v in range(5):
        for r in range(dw[v]):
            for c in range(dv[v]):
                domain_dim += 1
                img = [ZERO] * codim
                for k, (s, t) in enumerate(ARROWS):
                    width = dv[s]
                    if t == v:
                        # (E_rc V_a)[r, y] = V_a[c, y]
                        Va = vrep.maps[k]
                        for y in range(width):
                            img[offsets[k] + r * width + y] += Va[c, y]
                    if s == v:
                        # (W_a E_rc)[x, c] = W_a[x, r]
                        Wa = wrep.maps[k]
                        for x in range(dw[t]):
                            img[offsets[k] + x * width + c] -= Wa[x, r]
                images.append(img)

    reduced, pivots = rref(images) if images else ([], [])
    rank = len(pivots)
    pivot_set = set(pivots)
    free = [c for c in range(codim) if c not in pivot_set]

    cocycles = []
    for coord in free:
        mats = []
        for k, (s, t) in enumerate(ARROWS):
            rows, cols = dw[t], dv[s]
            entries = [ZERO] * (rows * cols)
            local = coord - offsets[k]
            if 0 <= local < rows * cols:
                entries[local] = ONE
            mats.append(Matrix(rows, cols, entries))
        cocycles.append(tuple(mats))
    return HomExt(domain_dim - rank, codim - rank, tuple(cocycles))


# -- fingerprints --------------------------------------------------------------

DEFAULT_WORDS = ("U", "V", "UV", "UVV", "UVUVV", "UVUV")


def fingerprint_words() -> tuple[str, ...]:
    """Default words plus any listed in ``BRAIDFORGE_WORDLIST`` (comma separated)."""
    extra = os.environ.get("BRAIDFORGE_WORDLIST", "")
    words = list(DEFAULT_WORDS)
    for w in extra.split(","):
        w = w.strip().upper()
        if not w:
            continue
        if set(w) - {"U", "V"}:
            raise ValueError(f"fingerprint word {w!r} may only use the letters U and V")
        if w not in words:
            words.append(w)
    return tuple(words)


def _trace_of_product(A: Matrix, B: Matrix) -> Cyclotomic:
    n = A.rows
    total = ZERO
    for i in range(n):
        for k in range(n):
            a = A[i, k]
            if a:
                b = B[k, i]
                if b:
                    total = total + a * b
    return total


def fingerprint(g: Gamma0Rep, words: Optional[Sequence[str]] = None) -> tuple[Cyclotomic, ...]:
    """Traces of the words (default: U, V, UV, UV^2, UVUV^2, (UV)^2)."""
    if words is None:
        words = fingerprint_words()
    letters = {"U": g.U, "V": g.V}
    prefixes: dict[str, Matrix] = {}

    def product(word: str) -> Matrix:
        if len(word) == 1:
            return letters[word]
        if word not in prefixes:
            prefixes[word] = product(word[:-1]) @ letters[word[-1]]
        return prefixes[word]

    out = []
    for w in words:
        if len(w) == 1:
            out.append(letters[w].trace())
        else:
            out.append(_trace_of_product(product(w[:-1]), letters[w[-1]]))
    return tuple(out)
