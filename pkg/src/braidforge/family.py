"""Gluing families of irreducible Gamma0-representations along the chain
quiver of non-isomorphic two-dimensional summands, and certifying members."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .braid import B3Rep, central_character, check_braid, k_default, lift_to_b3
from .errors import (
    DegenerateBaseChangeError,
    DuplicateLambdaError,
    InvalidParameterError,
    NonScalarCentralError,
    NotSimpleError,
    ReducibleParameterError,
)
from .exact import Cyclotomic, Matrix, as_cyc, as_rational, decode_scalar, encode_scalar
from .gamma0 import (
    ARROWS,
    Gamma0Rep,
    QRep,
    direct_sum,
    fingerprint,
    hom_ext,
    is_irreducible,
    make_S,
    make_T,
    to_gamma0,
)
from .quiver import onedim_is_simple, sigma_labels, sigma_quiver

__all__ = [
    "FamilySpec",
    "Certificate",
    "Member",
    "summand_list",
    "build_family_member",
    "certify_member",
    "realize",
    "pairwise_distinct",
]


def _check_lambdas(lambdas: Sequence[Fraction]) -> None:
    if len(set(lambdas)) != len(lambdas):
        raise DuplicateLambdaError(f"lambdas must be pairwise distinct, got {[str(x) for x in lambdas]}")
    for lam in lambdas:
        if lam == 0:
            raise ReducibleParameterError("lambda = 0 gives a reducible summand")
        if lam == 1:
            raise DegenerateBaseChangeError("lambda = 1 gives a singular base change")


@dataclass(frozen=True)
class FamilySpec:
    """Parameters of one family member: floor(n/2) lambdas, the same number of
    arrow scalars (loop first when n is even, then the forward arrows) and the
    central parameter mu."""

    n: int
    lambdas: tuple[Fraction, ...]
    arrow_scalars: Optional[tuple[Cyclotomic, ...]] = None
    mu: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidParameterError(f"n must be positive, got {self.n}")
        lambdas = tuple(as_rational(x) for x in self.lambdas)
        m = self.n // 2
        if len(lambdas) != m:
            raise InvalidParameterError(f"n = {self.n} needs {m} lambdas, got {len(lambdas)}")
        _check_lambdas(lambdas)
        scalars = self.arrow_scalars
        scalars = tuple(as_cyc(1) for _ in range(m)) if scalars is None else tuple(as_cyc(x) for x in scalars)
        if len(scalars) != m:
            raise InvalidParameterError(f"n = {self.n} needs {m} arrow scalars, got {len(scalars)}")
        mu = as_rational(self.mu)
        if mu == 0:
            raise InvalidParameterError("mu must be nonzero")
        object.__setattr__(self, "lambdas", lambdas)
        object.__setattr__(self, "arrow_scalars", scalars)
        object.__setattr__(self, "mu", mu)

    @property
    def parameter_count(self) -> int:
        return len(self.lambdas) + 1

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "lambdas": [encode_scalar(x) for x in self.lambdas],
            "arrow_scalars": [encode_scalar(x) for x in self.arrow_scalars],
            "mu": encode_scalar(self.mu),
        }

    @classmethod
    def from_json(cls, data: dict) -> "FamilySpec":
        return cls(
            int(data["n"]),
            tuple(as_rational(decode_scalar(x)) for x in data["lambdas"]),
            tuple(decode_scalar(x) for x in data["arrow_scalars"]),
            as_rational(decode_scalar(data["mu"])),
        )


@dataclass(frozen=True)
class Certificate:
    braid_ok: bool
    irreducible: bool
    central_ok: bool
    fingerprint: tuple[Cyclotomic, ...]
    parameter_count: int

    @property
    def accepted(self) -> bool:
        return self.braid_ok and self.irreducible and self.central_ok

    def to_json(self) -> dict:
        return {
            "braid_ok": self.braid_ok,
            "irreducible": self.irreducible,
            "central_ok": self.central_ok,
            "fingerprint": [encode_scalar(x) for x in self.fingerprint],
            "parameter_count": self.parameter_count,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Certificate":
        return cls(
            bool(data["braid_ok"]),
            bool(data["irreducible"]),
            bool(data["central_ok"]),
            tuple(decode_scalar(x) for x in data["fingerprint"]),
            int(data["parameter_count"]),
        )


def summand_list(n: int, lambdas: Sequence) -> list[QRep]:
    """T1(l1), T2(l2), T1(l3), ... with S11 in front when n is odd."""
    lambdas = [as_rational(x) for x in lambdas]
    if len(lambdas) != n // 2:
        raise InvalidParameterError(f"n = {n} needs {n // 2} lambdas, got {len(lambdas)}")
    _check_lambdas(lambdas)
    out = [make_S(1, 1)] if n % 2 else []
    out.extend(make_T(1 if k % 2 == 0 else 2, lam) for k, lam in enumerate(lambdas))
    return out


def build_family_member(spec: FamilySpec, *, strict: bool = True, backward=1) -> QRep:
    """Direct sum of the summands deformed by scaled Ext cocycles.

    Every chain arrow v_i -> v_j with nonzero label x adds x times the first
    cocycle of Ext(V_i, V_j) into block (j, i) of each arrow map; the loop
    uses the self-extension cocycle.  Backward arrows glue with the negated
    cocycle: all T-chain cocycles sit on the a2 -> b3 coordinate, and with the
    plain sign unit labels make that block singular (hence an S13 quotient)
    whenever n is odd and floor(n/2) = 2 mod 3.

    ``strict`` rejects label patterns whose one-dimensional chain
    representation is not simple.
    """
    summands = summand_list(spec.n, spec.lambdas)
    if spec.n == 1:
        return summands[0]
    sigma = sigma_quiver(spec.n)
    labeled = sigma_labels(sigma, spec.arrow_scalars, backward)
    if strict and not onedim_is_simple(labeled):
        raise NotSimpleError(
            f"arrow scalars {[str(x) for x in spec.arrow_scalars]} leave the chain quiver "
            "not strongly connected"
        )

    base = direct_sum(summands)
    # offset of summand k inside the space at Q-vertex v
    offsets = []
    running = [0] * 5
    for rep in summands:
        offsets.append(tuple(running))
        running = [r + d for r, d in zip(running, rep.dim)]

    maps = [list(m.entries) for m in base.maps]
    cocycles: dict[tuple[int, int], tuple[Matrix, ...]] = {}
    parameter = set(sigma.parameter_arrows)
    for idx, ((i, j), x) in enumerate(zip(sigma.arrows, labeled.labels)):
        if not x:
            continue
        if idx not in parameter:
            x = -x
        if (i, j) not in cocycles:
            he = hom_ext(summands[i], summands[j])
            if not he.cocycle_basis:
                raise ValueError(f"no extension from summand {i} to summand {j}")
            cocycles[(i, j)] = he.cocycle_basis[0]
        for k, ((s, t), eps) in enumerate(zip(ARROWS, cocycles[(i, j)])):
            width = base.dim[s]
            r0, c0 = offsets[j][t], offsets[i][s]
            for a in range(eps.rows):
                for b in range(eps.cols):
                    e = eps[a, b]
                    if e:
                        pos = (r0 + a) * width + c0 + b
                        maps[k][pos] = maps[k][pos] + x * e
    glued = tuple(Matrix(m.rows, m.cols, entries) for m, entries in zip(base.maps, maps))
    return QRep(base.dim, glued, f"family(n={spec.n})")


@dataclass(frozen=True)
class Member:
    spec: FamilySpec
    qrep: QRep
    gamma0: Optional[Gamma0Rep]
    b3: Optional[B3Rep]
    certificate: Certificate


def _certify(r: QRep, mu, words=None) -> tuple[Optional[Gamma0Rep], Optional[B3Rep], Certificate]:
    params = k_default(r.n)
    try:
        g = to_gamma0(r)
    except DegenerateBaseChangeError:
        return None, None, Certificate(False, False, False, (), params)
    mu = as_rational(mu)
    b3 = lift_to_b3(g, mu)
    try:
        central_ok = central_character(b3) == mu**6
    except NonScalarCentralError:
        central_ok = False
    cert = Certificate(
        braid_ok=check_braid(b3),
        irreducible=is_irreducible(g),
        central_ok=central_ok,
        fingerprint=fingerprint(g, words),
        parameter_count=params,
    )
    return g, b3, cert


def certify_member(r: QRep, mu, words=None) -> Certificate:
    """Braid relation, central character mu^6 and Burnside irreducibility of
    the lift; a singular base change yields an all-false certificate."""
    return _certify(r, mu, words)[2]


def realize(spec: FamilySpec, *, strict: bool = True, backward=1, words=None) -> Member:
    r = build_family_member(spec, strict=strict, backward=backward)
    g, b3, cert = _certify(r, spec.mu, words)
    return Member(spec, r, g, b3, cert)


def pairwise_distinct(members: Sequence[Gamma0Rep], words=None) -> bool:
    prints = [fingerprint(g, words) for g in members]
    return len(set(prints)) == len(prints)
