"""Command-line front end.

    braidforge gen --n 4 --lambdas 2,3 --mu 1 --out member.json
    braidforge verify member.json
    braidforge quiver euler --alpha 1,1,1,0,1 --beta 1,1,1,0,1
    braidforge quiver local --summands S11,T1:2,T2:3
    braidforge quiver sigma --n 7
    braidforge quiver admissible --alpha 2,2,1,1,2

Exit codes: 0 success, 1 usage or spec error, 2 certification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from datetime import datetime, timezone
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from .braid import B3Rep, b3_irreducible, central_character, check_braid, admissible_bound, recover_gamma0
from .errors import BraidforgeError, CatalogParseError
from .exact import Matrix
from .family import Certificate, FamilySpec, realize
from .gamma0 import Gamma0Rep, fingerprint, fingerprint_words, parse_summand, westbury_quiver
from .quiver import euler_form, family_dimension, local_quiver, sigma_quiver

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CERT = 2

TOOL = "braidforge"


@dataclass(frozen=True)
class CatalogFile:
    version: str
    spec: FamilySpec
    rep: B3Rep
    certificate: Certificate
    words: tuple[str, ...]
    created: str

    def to_json(self) -> dict:
        rep = self.rep.to_json()
        rep["certificate"] = self.certificate.to_json()
        return {
            "tool": TOOL,
            "version": self.version,
            "created": self.created,
            "spec": self.spec.to_json(),
            "fingerprint_words": list(self.words),
            "representation": rep,
        }

    @classmethod
    def from_json(cls, data: dict) -> "CatalogFile":
        try:
            if data.get("tool") != TOOL:
                raise CatalogParseError(f"not a {TOOL} catalog")
            rep = data["representation"]
            return cls(
                version=str(data["version"]),
                spec=FamilySpec.from_json(data["spec"]),
                rep=B3Rep.from_json(rep),
                certificate=Certificate.from_json(rep["certificate"]),
                words=tuple(data["fingerprint_words"]),
                created=str(data["created"]),
            )
        except CatalogParseError:
            raise
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise CatalogParseError(f"malformed catalog: {exc}") from exc


def _depth(obj) -> int:
    if isinstance(obj, list):
        return 1 + max((_depth(x) for x in obj), default=0)
    return 0


def _dump(obj, indent: int = 0) -> str:
    # scalar tuples and matrix rows stay on one line
    pad = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {_dump(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(obj, list) and obj and (_depth(obj) > 2 or any(isinstance(x, dict) for x in obj)):
        items = [pad + _dump(x, indent + 1) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + "  " * indent + "]"
    return json.dumps(obj)


def emit_catalog(cat: CatalogFile) -> str:
    return _dump(cat.to_json()) + "\n"


def parse_catalog(text: str) -> CatalogFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise CatalogParseError("catalog must be a JSON object")
    return CatalogFile.from_json(data)


def write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".braidforge-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _rationals(text: str) -> list[Fraction]:
    if not text.strip():
        return []
    try:
        return [Fraction(t.strip()) for t in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals p/q, got {text!r}") from exc


def _dimvec(text: str) -> list[int]:
    try:
        vec = [int(t) for t in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected five comma-separated integers, got {text!r}") from exc
    if len(vec) != 5 or any(v < 0 for v in vec):
        raise argparse.ArgumentTypeError(f"dimension vector needs five non-negative entries, got {text!r}")
    return vec


def cmd_gen(args) -> int:
    m = args.n // 2
    scalars = args.arrow_scalars if args.arrow_scalars is not None else [Fraction(1)] * m
    try:
        spec = FamilySpec(args.n, tuple(args.lambdas), tuple(scalars), args.mu)
        member = realize(spec)
    except BraidforgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    cert = member.certificate
    if member.b3 is None:
        # singular base change: keep the spec and an all-false certificate
        zero = Matrix.zeros(args.n, args.n)
        rep = B3Rep(args.n, zero, zero, spec.mu)
    else:
        rep = member.b3
    cat = CatalogFile(
        version=__version__,
        spec=spec,
        rep=rep,
        certificate=cert,
        words=fingerprint_words(),
        created=datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ"),
    )
    text = emit_catalog(cat)
    if args.out:
        write_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    status = "accepted" if cert.accepted else "REJECTED"
    print(
        f"n={args.n} braid_ok={cert.braid_ok} irreducible={cert.irreducible} "
        f"central_ok={cert.central_ok}: {status}",
        file=sys.stderr,
    )
    return EXIT_OK if cert.accepted else EXIT_CERT


def verify_catalog(cat: CatalogFile) -> list[tuple[str, bool, str]]:
    """Re-run every check on the stored matrices."""
    rep = cat.rep
    checks: list[tuple[str, bool, str]] = []
    shape_ok = rep.s1.shape == (rep.n, rep.n) and rep.s2.shape == (rep.n, rep.n)
    checks.append(("shape", shape_ok, f"{rep.n}x{rep.n} generators"))
    if not shape_ok:
        return checks

    checks.append(("braid_relation", check_braid(rep), "s1 s2 s1 == s2 s1 s2"))

    try:
        c = central_character(rep)
        expected = rep.mu**6
        checks.append(("central_character", c == expected, f"(s1 s2)^3 = {c}, mu^6 = {expected}"))
    except BraidforgeError as exc:
        checks.append(("central_character", False, str(exc)))

    checks.append(("irreducible", b3_irreducible(rep), "Burnside span of the recovered (U, V)"))

    U, V = recover_gamma0(rep)
    try:
        g = Gamma0Rep(rep.n, U, V)
    except ValueError as exc:
        checks.append(("gamma0_relations", False, str(exc)))
        g = None
    else:
        checks.append(("gamma0_relations", True, "U^2 = I, V^3 = I"))

    stored = cat.certificate
    if g is not None:
        fp = fingerprint(g, cat.words)
        checks.append(("fingerprint", fp == stored.fingerprint, "traces match the stored certificate"))
    checks.append(("parameter_count", stored.parameter_count == cat.spec.parameter_count,
                   f"{stored.parameter_count} stored, {cat.spec.parameter_count} from spec"))

    try:
        rebuilt = realize(cat.spec, words=cat.words)
        same = rebuilt.b3 is not None and rebuilt.b3.s1 == rep.s1 and rebuilt.b3.s2 == rep.s2
        checks.append(("matches_spec", same, "rebuilding the spec gives the stored matrices"))
    except BraidforgeError as exc:
        checks.append(("matches_spec", False, str(exc)))
    return checks


def cmd_verify(args) -> int:
    try:
        with open(args.path, encoding="utf-8") as fh:
            cat = parse_catalog(fh.read())
    except (OSError, CatalogParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    checks = verify_catalog(cat)
    for name, ok, detail in checks:
        print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    return EXIT_OK if all(ok for _, ok, _ in checks) else EXIT_CERT


def cmd_quiver(args) -> int:
    Q = westbury_quiver()
    try:
        if args.qcmd == "euler":
            print(euler_form(Q, args.alpha, args.beta))
        elif args.qcmd == "admissible":
            print(admissible_bound(args.alpha))
        elif args.qcmd == "local":
            reps = [parse_summand(t) for t in args.summands.split(",") if t.strip()]
            delta = local_quiver(Q, [r.dim for r in reps])
            out = delta.to_json()
            out["loops"] = [delta.loops_at(v) for v in range(delta.vertex_count)]
            print(json.dumps(out))
        elif args.qcmd == "sigma":
            sigma = sigma_quiver(args.n)
            out = sigma.to_json()
            out["parameter_arrows"] = list(sigma.parameter_arrows)
            out["family_dimension"] = family_dimension(sigma)
            print(json.dumps(out))
    except (BraidforgeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidforge", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="cmd", required=True)

    gen = sub.add_parser("gen", help="build and certify one family member")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--lambdas", type=_rationals, default=[], help="comma-separated rationals")
    gen.add_argument("--arrow-scalars", type=_rationals, default=None, help="default: all 1")
    gen.add_argument("--mu", type=Fraction, default=Fraction(1))
    gen.add_argument("--out", default=None, help="catalog path (default: stdout)")
    gen.set_defaults(func=cmd_gen)

    ver = sub.add_parser("verify", help="re-certify a catalog file")
    ver.add_argument("path")
    ver.set_defaults(func=cmd_verify)

    quiv = sub.add_parser("quiver", help="quiver calculators")
    qsub = quiv.add_subparsers(dest="qcmd", required=True)
    e = qsub.add_parser("euler")
    e.add_argument("--alpha", type=_dimvec, required=True)
    e.add_argument("--beta", type=_dimvec, required=True)
    loc = qsub.add_parser("local")
    loc.add_argument("--summands", required=True, help="e.g. S11,T1:2,T2:3")
    sig = qsub.add_parser("sigma")
    sig.add_argument("--n", type=int, required=True)
    adm = qsub.add_parser("admissible")
    adm.add_argument("--alpha", type=_dimvec, required=True)
    quiv.set_defaults(func=cmd_quiver)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
