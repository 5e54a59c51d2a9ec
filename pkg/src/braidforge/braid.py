"""Lifting modular-group representations to the three-string braid group."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidParameterError, NonScalarCentralError
from .exact import Cyclotomic, Matrix, as_cyc, as_rational, decode_matrix, decode_scalar, encode_matrix, encode_scalar
from .gamma0 import Gamma0Rep, burnside_dimension, westbury_quiver
from .quiver import euler_form

__all__ = [
    "B3Rep",
    "lift_to_b3",
    "check_braid",
    "central_character",
    "recover_gamma0",
    "b3_irreducible",
    "admissible_bound",
    "k_default",
]


@dataclass(frozen=True)
class B3Rep:
    n: int
    s1: Matrix
    s2: Matrix
    mu: Fraction

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "mu": encode_scalar(self.mu),
            "sigma1": encode_matrix(self.s1),
            "sigma2": encode_matrix(self.s2),
        }

    @classmethod
    def from_json(cls, data: dict) -> "B3Rep":
        return cls(
            int(data["n"]),
            decode_matrix(data["sigma1"]),
            decode_matrix(data["sigma2"]),
            as_rational(decode_scalar(data["mu"])),
        )


def lift_to_b3(g: Gamma0Rep, mu) -> B3Rep:
    """sigma1 = mu V^2 U and sigma2 = mu U V^2.

    Then sigma1 sigma2 = mu^2 V and sigma1 sigma2 sigma1 = mu^3 U, so the braid
    relation holds identically and the centre acts by mu^6.
    """
    mu = as_rational(mu)
    if mu == 0:
        raise InvalidParameterError("mu must be nonzero")
    V2 = g.V @ g.V
    return B3Rep(g.n, (V2 @ g.U).scale(mu), (g.U @ V2).scale(mu), mu)


def check_braid(r: B3Rep) -> bool:
    if r.s1.shape != (r.n, r.n) or r.s2.shape != (r.n, r.n):
        return False
    s12 = r.s1 @ r.s2
    return s12 @ r.s1 == r.s2 @ (r.s1 @ r.s2)


def central_character(r: B3Rep) -> Cyclotomic:
    """The scalar by which (sigma1 sigma2)^3 acts."""
    s12 = r.s1 @ r.s2
    c = s12 @ s12 @ s12
    if not c.is_scalar():
        raise NonScalarCentralError("(sigma1 sigma2)^3 is not a scalar matrix")
    return c[0, 0] if r.n else as_cyc(1)


def recover_gamma0(r: B3Rep) -> tuple[Matrix, Matrix]:
    """(U, V) = (mu^-3 s1 s2 s1, mu^-2 s1 s2); no relations are checked."""
    mu = r.mu
    s12 = r.s1 @ r.s2
    return (s12 @ r.s1).scale(1 / mu**3), s12.scale(1 / mu**2)


def b3_irreducible(r: B3Rep, method: str = "auto") -> bool:
    U, V = recover_gamma0(r)
    return burnside_dimension([U, V], r.n, method) == r.n * r.n


def admissible_bound(alpha: Sequence[int]) -> int:
    """2 - chi_Q(alpha, alpha) on the Westbury quiver."""
    return 2 - euler_form(westbury_quiver(), alpha, alpha)


def k_default(n: int) -> int:
    return n // 2 + 1
