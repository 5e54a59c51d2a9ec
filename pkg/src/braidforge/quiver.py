"""Quiver combinatorics: Euler forms, strong connectivity, local quivers and
the chain-shaped family quivers used to glue one-dimensional simples."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import compress
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatchError, InvalidParameterError, NegativeCountError
from .exact import Cyclotomic, as_cyc, decode_scalar, encode_scalar

__all__ = [
    "Quiver",
    "LabeledQuiver",
    "euler_form",
    "is_strongly_connected",
    "local_quiver",
    "sigma_quiver",
    "family_dimension",
    "onedim_is_simple",
]


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple[tuple[int, int], ...] = ()
    # indices into ``arrows`` that carry free parameters (sigma quivers only)
    parameter_arrows: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        n = self.vertex_count
        if n < 0:
            raise ValueError("vertex_count must be non-negative")
        arrows = tuple(tuple(a) for a in self.arrows)
        for s, t in arrows:
            if not (0 <= s < n and 0 <= t < n):
                raise ValueError(f"arrow ({s}, {t}) leaves the vertex range")
        object.__setattr__(self, "arrows", arrows)
        object.__setattr__(self, "parameter_arrows", tuple(self.parameter_arrows))

    def loops_at(self, v: int) -> int:
        return sum(1 for s, t in self.arrows if s == t == v)

    def arrow_count(self, s: int, t: int) -> int:
        return sum(1 for a in self.arrows if a == (s, t))

    def to_json(self) -> dict:
        return {"vertices": self.vertex_count, "arrows": [list(a) for a in self.arrows]}

    @classmethod
    def from_json(cls, data: dict) -> "Quiver":
        return cls(int(data["vertices"]), tuple(tuple(a) for a in data["arrows"]))


@dataclass(frozen=True)
class LabeledQuiver:
    quiver: Quiver
    labels: tuple[Cyclotomic, ...]

    def __post_init__(self) -> None:
        labels = tuple(map(as_cyc, self.labels))
        object.__setattr__(self, "labels", labels)
        if len(labels) != len(self.quiver.arrows):
            raise DimensionMismatchError(
                f"{len(labels)} labels for {len(self.quiver.arrows)} arrows"
            )

    def to_json(self) -> dict:
        data = self.quiver.to_json()
        data["labels"] = [encode_scalar(x) for x in self.labels]
        return data

    @classmethod
    def from_json(cls, data: dict) -> "LabeledQuiver":
        return cls(Quiver.from_json(data), tuple(decode_scalar(x) for x in data["labels"]))


def euler_form(q: Quiver, alpha: Sequence[int], beta: Sequence[int]) -> int:
    """chi(alpha, beta) = sum_v alpha_v beta_v - sum_{a: i->j} alpha_i beta_j."""
    if len(alpha) != q.vertex_count or len(beta) != q.vertex_count:
        raise DimensionMismatchError(
            f"dimension vectors of length {len(alpha)}, {len(beta)} "
            f"for a quiver on {q.vertex_count} vertices"
        )
    total = sum(a * b for a, b in zip(alpha, beta))
    for s, t in q.arrows:
        total -= alpha[s] * beta[t]
    return total


def _closure(adjacency: Sequence[int], root: int, scope: int) -> int:
    """Bitmask of the vertices in ``scope`` reachable from ``root``."""
    seen = frontier = 1 << root
    while frontier:
        step = 0
        while frontier:
            low = frontier & -frontier
            step |= adjacency[low.bit_length() - 1]
            frontier ^= low
        frontier = step & scope & ~seen
        seen |= frontier
    return seen


def _strongly_connected(n: int, arrows: Iterable[tuple[int, int]], scope: int) -> bool:
    if scope & (scope - 1) == 0:
        return True
    succ = [0] * n
    pred = [0] * n
    edges = 0
    for s, t in arrows:
        if s != t and (scope >> s) & (scope >> t) & 1:
            succ[s] |= 1 << t
            pred[t] |= 1 << s
            edges += 1
    # k >= 2 vertices need at least k arrows between distinct vertices
    if edges < scope.bit_count():
        return False
    root = (scope & -scope).bit_length() - 1
    # strongly connected iff the root reaches everything forwards and backwards
    return _closure(succ, root, scope) == scope and _closure(pred, root, scope) == scope


def is_strongly_connected(q: Quiver, restrict_to: Optional[Iterable[int]] = None) -> bool:
    if restrict_to is None:
        scope = (1 << q.vertex_count) - 1
    else:
        scope = 0
        for v in restrict_to:
            scope |= 1 << v
    return _strongly_connected(q.vertex_count, q.arrows, scope)


def local_quiver(base: Quiver, dims: Sequence[Sequence[int]]) -> Quiver:
    """One vertex per dimension vector, ``1 - chi(a_i, a_i)`` loops at v_i and
    ``-chi(a_i, a_j)`` arrows v_i -> v_j.  Vertex order follows ``dims``."""
    arrows: list[tuple[int, int]] = []
    for i, a in enumerate(dims):
        for j, b in enumerate(dims):
            chi = euler_form(base, a, b)
            count = 1 - chi if i == j else -chi
            if count < 0:
                kind = "loop" if i == j else "arrow"
                raise NegativeCountError(
                    f"{kind} count {count} between summands {i} and {j}: "
                    "the collection cannot consist of pairwise non-isomorphic stables"
                )
            arrows.extend([(i, j)] * count)
    return Quiver(len(dims), tuple(arrows))


def sigma_quiver(n: int) -> Quiver:
    """The chain quiver hosting the floor(n/2)-parameter family.

    Even ``n``: vertices v1..v_m (m = n/2), a loop at v1 and arrows both ways
    between neighbours.  Odd ``n``: v0 is prepended and there is no loop.
    ``parameter_arrows`` lists the loop (even case) followed by the forward
    arrows; every backward arrow is unlabeled.
    """
    if n < 2:
        raise InvalidParameterError(f"sigma_quiver needs n >= 2, got {n}")
    m = n // 2
    vertices = m if n % 2 == 0 else m + 1
    arrows: list[tuple[int, int]] = []
    params: list[int] = []
    if n % 2 == 0:
        params.append(len(arrows))
        arrows.append((0, 0))
    for k in range(vertices - 1):
        params.append(len(arrows))
        arrows.append((k, k + 1))
        arrows.append((k + 1, k))
    return Quiver(vertices, tuple(arrows), tuple(params))


def sigma_labels(q: Quiver, parameters: Sequence, backward=1) -> LabeledQuiver:
    """Label the parameter arrows of a sigma quiver with ``parameters`` and all
    other arrows with ``backward``."""
    if len(parameters) != len(q.parameter_arrows):
        raise DimensionMismatchError(
            f"{len(q.parameter_arrows)} parameters expected, got {len(parameters)}"
        )
    labels = [as_cyc(backward)] * len(q.arrows)
    for idx, value in zip(q.parameter_arrows, parameters):
        labels[idx] = as_cyc(value)
    return LabeledQuiver(q, tuple(labels))


def family_dimension(q: Quiver) -> int:
    """1 - chi_q(1, 1), i.e. 1 - #vertices + #arrows."""
    ones = [1] * q.vertex_count
    return 1 - euler_form(q, ones, ones)


def onedim_is_simple(lq: LabeledQuiver) -> bool:
    """Simplicity of the representation with a one-dimensional space at every
    vertex: the arrows with nonzero labels must form a strongly connected
    quiver (loops never matter)."""
    q = lq.quiver
    support = compress(q.arrows, lq.labels)
    return _strongly_connected(q.vertex_count, support, (1 << q.vertex_count) - 1)
