"""Command-line entry point: ``catnuc <group> <command> [options]``.

Exit status 0 means every reported check held, 1 means a mathematical
check failed, 2 means the input could not be used.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field as dc_field
from typing import Callable

from . import io, linalg
from .errors import CatnucError, FieldMismatchError, InternalConsistencyError
from .fields import GF, QQ, Field

EXIT_OK, EXIT_FALSIFIED, EXIT_INPUT = 0, 1, 2


@dataclass
class Report:
    command: str
    seed: int
    checks: list = dc_field(default_factory=list)
    result: dict = dc_field(default_factory=dict)

    def check(self, name: str, passed: bool) -> bool:
        self.checks.append({"name": name, "passed": bool(passed)})
        return bool(passed)

    @property
    def verified(self) -> bool:
        return all(c["passed"] for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "seed": self.seed,
            "checks": self.checks,
            "result": self.result,
            "verified": self.verified,
        }

    def as_text(self) -> str:
        lines = [f"{self.command} (seed {self.seed})"]
        for key, val in self.result.items():
            lines.append(f"  {key}: {val}")
        for c in self.checks:
            lines.append(f"  [{'ok' if c['passed'] else 'FAIL'}] {c['name']}")
        lines.append("verified" if self.verified else "FALSIFIED")
        return "\n".join(lines)


def parse_field(text: str | None) -> Field | None:
    if text is None:
        return None
    t = text.strip().upper()
    if t in ("Q", "QQ"):
        return QQ
    if t.startswith("GF"):
        try:
            return GF(int(t[2:].strip(":()")))
        except ValueError as exc:
            raise io.InputError(f"bad field {text!r}; use Q or GF:p") from exc
    raise io.InputError(f"bad field {text!r}; use Q or GF:p")


def _subspace(S) -> dict:
    return {"dim": S.dim, "basis": [[S.field.format(x) for x in row] for row in S.basis]}


def _matrix(field: Field, m) -> list:
    return io.format_array(field, m)


# ----------------------------------------------------------------- nuclei


def cmd_nuclei_compute(args, rep: Report):
    from .algebra import is_associative, is_subalgebra_closed, restrict
    from .nuclei import nucleus

    A = io.load_algebra(args.algebra, args.field)
    S = nucleus(A, args.side)
    rep.result.update(_subspace(S))
    rep.result["side"] = args.side
    rep.check("closed", is_subalgebra_closed(A, S))
    rep.check("associative", S.dim == 0 or is_associative(restrict(A, S)))


def cmd_nuclei_identity(args, rep: Report):
    from .nuclei import verify_associator_identity

    A = io.load_algebra(args.algebra, args.field)
    rep.result["dim"] = A.dim
    rep.check("associator identity on all basis quadruples", verify_associator_identity(A))


def cmd_nuclei_commutative(args, rep: Report):
    from .nuclei import commutative_nucleus_relations

    A = io.load_algebra(args.algebra, args.field)
    r = commutative_nucleus_relations(A)
    rep.result["is_commutative"] = r.is_commutative
    if r.is_commutative:
        rep.check("left nucleus equals right nucleus", r.left_equals_right)
        rep.check("left nucleus inside middle nucleus", r.left_in_middle)


# ----------------------------------------------------------- multiplicants


def cmd_mult_compute(args, rep: Report):
    from .multiplicants import multiplicant

    f = io.load_linear_map(args.map, args.field)
    S = multiplicant(f, args.side)
    rep.result.update(_subspace(S))
    rep.result["side"] = args.side
    rep.check("closed and multiplicative (certified)", True)


def cmd_mult_identity(args, rep: Report):
    from .multiplicants import verify_multiplicant_identity

    f = io.load_linear_map(args.map, args.field)
    rep.check("multiplicant identity on all basis triples", verify_multiplicant_identity(f))


def cmd_mult_monoid(args, rep: Report):
    from .multiplicants import MonoidMap, monoid_multiplicant

    f = MonoidMap(io.load_monoid(args.source), io.load_monoid(args.target), io.parse_images(args.images))
    r = monoid_multiplicant(f, args.side)
    rep.result.update({"elements": list(r.elements), "contains_unit": r.contains_unit, "side": args.side})
    rep.check("closed under the product", r.closed)


def cmd_mult_pullback(args, rep: Report):
    from .multiplicants import multiplicant_pullback

    r = multiplicant_pullback(io.load_monoid_map(args.f), io.load_monoid_map(args.g))
    rep.result["pairs"] = [list(p) for p in r.pairs]
    rep.check("pullback closed under componentwise product", r.closed)
    rep.check("projection lands in M_l(gf)", r.lands_in_composite)
    rep.check("projection preserves products", r.projection_multiplicative)


# ----------------------------------------------------------------- modcat


def _pairs(args, count: int | None = None):
    R = io.load_coalgebra(args.base, args.field)
    pairs = [io.load_pair(p, R) for p in args.pair]
    if count is not None and len(pairs) != count:
        raise io.InputError(f"this command needs exactly {count} --pair files, got {len(pairs)}")
    return R, pairs


def cmd_modcat_check_inv(args, rep: Report):
    from .modcat import check_inv

    R, pairs = _pairs(args)
    for i, p in enumerate(pairs):
        rep.check(f"pair {i}: invariance condition", check_inv(R, p))


def cmd_modcat_tensor(args, rep: Report):
    from .modcat import check_inv, tensor_pairs

    R, (p, q) = _pairs(args, 2)
    pq = tensor_pairs(p, q)
    rep.result["pair"] = io.pair_to_dict(pq.module, pq.m)
    rep.check("inputs satisfy the invariance condition", check_inv(R, p) and check_inv(R, q))
    rep.check("tensor product satisfies the invariance condition", check_inv(R, pq))


def cmd_modcat_phi(args, rep: Report):
    from .modcat import associativity_constraint, phi_is_morphism

    R, (p, q, r) = _pairs(args, 3)
    phi = associativity_constraint(p, q, r)
    rep.result["phi"] = _matrix(R.field, phi)
    rep.check("constraint is invertible", linalg.rank(phi, R.field) == phi.shape[0])
    rep.check("constraint intertwines m|(n|l) and (m|n)|l", phi_is_morphism(p, q, r))


def cmd_modcat_pentagon(args, rep: Report):
    from .modcat import verify_pentagon

    R, pairs = _pairs(args, 4)
    rep.check("pentagon", verify_pentagon(*pairs))


def cmd_modcat_normalize(args, rep: Report):
    from .modcat import check_normalization

    R, pairs = _pairs(args)
    for i, p in enumerate(pairs):
        rep.check(f"pair {i}: normalised", check_normalization(p))


def cmd_modcat_twist(args, rep: Report):
    from .modcat import check_inv, twist_pair

    R, (p,) = _pairs(args, 1)
    c = io.load_twist(args.twist, R)
    pc = twist_pair(p, c)
    rep.result["pair"] = io.pair_to_dict(pc.module, pc.m)
    rep.check("twisted pair satisfies the invariance condition", check_inv(R, pc))


def cmd_modcat_multiplicant(args, rep: Report):
    from .algebra import LinearMap
    from .modcat import multiplicant_check

    H2 = io.load_coalgebra(args.base, args.field)
    H1 = io.load_coalgebra(args.source_base, args.field) if args.source_base else H2
    if args.map:
        data, _ = io.load_json(args.map)
        mat = io.parse_array(H2.field, io._require(data, "matrix", "map"), (H2.dim, H1.dim))
    else:
        if H1.dim != H2.dim:
            raise io.InputError("--map is required when the bialgebras differ in dimension")
        mat = H2.field.eye(H2.dim)
    f = LinearMap(H1.algebra, H2.algebra, mat)
    for i, path in enumerate(args.pair):
        mp = io.load_multiplicant_pair(path, H1, H2, f)
        rep.check(f"pair {i}: multiplicant condition", multiplicant_check(mp))


# ---------------------------------------------------- cocycles, quasi, split


def cmd_cocycle_check(args, rep: Report):
    from .cocycles import cocycle_check, cocycle_failures

    G = io.load_group(args.group)
    alpha = io.load_cocycle(args.cocycle, G, args.field)
    ok = cocycle_check(alpha)
    if not ok:
        rep.result["failures"] = [list(q) for q in cocycle_failures(alpha)[:10]]
    rep.check("cocycle condition", ok)


def cmd_cocycle_enumerate(args, rep: Report):
    from .cocycles import enumerate_sign_cocycles

    G = io.load_group(args.group)
    found = enumerate_sign_cocycles(G, args.field or QQ)
    rep.result["count"] = len(found)
    if len(found) <= args.limit:
        rep.result["cocycles"] = [io.cocycle_to_dict(a)["values"] for a in found]
    rep.check("enumeration nonempty (contains the trivial cocycle)", len(found) >= 1)


def cmd_quasi_check(args, rep: Report):
    from .quasi import NlkGElement, associator_phi, quasi_coassoc_check

    G = io.load_group(args.group)
    fld = args.field or QQ
    phi, inv = associator_phi(G, fld)
    rep.result["phi_terms"] = len(phi)
    rep.check("Phi Phi^-1 = 1", phi * inv == NlkGElement.one(G, fld, 3))
    rep.check("quasi-coassociativity on generators", quasi_coassoc_check(G, fld))


def cmd_splitting_verify(args, rep: Report):
    from .quasi import splitting_hom

    G = io.load_group(args.group)
    alpha = io.load_cocycle(args.cocycle, G, args.field)
    r = splitting_hom(alpha)
    rep.result.update({"splits_inclusion": r.splits_inclusion, "delta_compatible": r.delta_compatible,
                       "is_cocycle": r.is_cocycle})
    rep.check("pi restricted to k(G) is the identity", r.splits_inclusion)
    rep.check("pi is compatible with the coproducts", r.delta_compatible)


def cmd_selftest(args, rep: Report):
    from .selftest import run_selftest

    for name, passed in run_selftest(args.seed, args.workers, quick=args.quick):
        rep.check(name, passed)


# ------------------------------------------------------------------ parser


def _common_flags(suppress: bool) -> argparse.ArgumentParser:
    # subcommand copies must not overwrite flags given before the group name
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=d(False), help="emit a JSON report")
    common.add_argument("--seed", type=int, default=d(0), help="seed for randomised sweeps")
    common.add_argument("--workers", type=int, default=d(1), help="worker processes for sweeps")
    common.add_argument("--field", default=d(None), help="override the field declared in input files (Q or GF:p)")
    return common


def build_parser() -> argparse.ArgumentParser:
    top, common = _common_flags(False), _common_flags(True)
    parser = argparse.ArgumentParser(prog="catnuc", description=__doc__.splitlines()[0], parents=[top])
    groups = parser.add_subparsers(dest="group", required=True)

    def group(name: str, help_text: str):
        return name, groups.add_parser(name, help=help_text).add_subparsers(dest="cmd", required=True)

    def add(grp, name, fn: Callable, help_text: str):
        gname, sub = grp
        p = sub.add_parser(name, help=help_text, parents=[common])
        p.set_defaults(fn=fn, command_name=f"{gname} {name}")
        return p

    nuc = group("nuclei", "nuclei of an algebra")
    p = add(nuc, "compute", cmd_nuclei_compute, "compute a nucleus")
    p.add_argument("--algebra", required=True)
    p.add_argument("--side", choices=["l", "m", "r"], required=True)
    p = add(nuc, "identity-check", cmd_nuclei_identity, "check the associator identity")
    p.add_argument("--algebra", required=True)
    p = add(nuc, "commutative-report", cmd_nuclei_commutative, "nuclei relations of a commutative algebra")
    p.add_argument("--algebra", required=True)

    mult = group("multiplicant", "multiplicants of maps")
    p = add(mult, "compute", cmd_mult_compute, "multiplicant of a linear map")
    p.add_argument("--map", required=True)
    p.add_argument("--side", choices=["l", "r"], required=True)
    p = add(mult, "identity-check", cmd_mult_identity, "check the multiplicative defect identity")
    p.add_argument("--map", required=True)
    p = add(mult, "monoid", cmd_mult_monoid, "multiplicant of a set map of monoids")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--images", required=True, help="comma-separated images, e.g. 0,2,1")
    p.add_argument("--side", choices=["l", "r"], default="l")
    p = add(mult, "pullback", cmd_mult_pullback, "composition span of two monoid maps")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)

    mod = group("modcat", "module-category element calculus")
    for name, fn, text in [
        ("check-inv", cmd_modcat_check_inv, "invariance condition of pairs"),
        ("tensor", cmd_modcat_tensor, "tensor product of two pairs"),
        ("phi", cmd_modcat_phi, "associativity constraint of three pairs"),
        ("pentagon", cmd_modcat_pentagon, "pentagon for four pairs"),
        ("normalize", cmd_modcat_normalize, "normalisation conditions"),
        ("twist", cmd_modcat_twist, "twist a pair"),
    ]:
        p = add(mod, name, fn, text)
        p.add_argument("--base", required=True, help="coalgebra file")
        p.add_argument("--pair", action="append", required=True)
        if name == "twist":
            p.add_argument("--twist", required=True, help='file {"c": {"i,j": scalar}}')
    p = add(mod, "multiplicant-check", cmd_modcat_multiplicant, "multiplicant condition for bialgebra pairs")
    p.add_argument("--base", required=True, help="target bialgebra H2")
    p.add_argument("--source-base", help="source bialgebra H1 (default: same as --base)")
    p.add_argument("--map", help="file with the matrix of f: H1 -> H2 (default: identity)")
    p.add_argument("--pair", action="append", required=True)

    coc = group("cocycle", "3-cocycles on a finite group")
    p = add(coc, "check", cmd_cocycle_check, "check the cocycle condition")
    p.add_argument("--group", required=True)
    p.add_argument("--cocycle", required=True)
    p = add(coc, "enumerate", cmd_cocycle_enumerate, "all {+-1}-valued cocycles (|G| <= 4)")
    p.add_argument("--group", required=True)
    p.add_argument("--limit", type=int, default=64, help="list tables only when at most this many")

    qb = group("quasibialgebra", "the quasi-bialgebra N_l(k(G))")
    p = add(qb, "check", cmd_quasi_check, "associator and quasi-coassociativity")
    p.add_argument("--group", required=True)

    sp = group("splitting", "splitting homomorphisms")
    p = add(sp, "verify", cmd_splitting_verify, "verify the splitting homomorphism of a cocycle")
    p.add_argument("--group", required=True)
    p.add_argument("--cocycle", required=True)

    p = groups.add_parser("selftest", help="run the oracle suites", parents=[common])
    p.add_argument("--quick", action="store_true", help="smaller sweeps")
    p.set_defaults(fn=cmd_selftest, command_name="selftest")
    return parser


def dispatch(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        args.field = parse_field(args.field)
        if args.workers < 1:
            raise io.InputError("--workers must be at least 1")
        rep = Report(args.command_name, args.seed)
        try:
            args.fn(args, rep)
        except InternalConsistencyError as exc:
            rep.check(f"internal consistency: {exc}", False)
    except (io.InputError, CatnucError, FieldMismatchError, ValueError, KeyError, TypeError) as exc:
        msg = f"error: {exc}"
        if getattr(args, "json", False):
            print(io.dumps({"command": getattr(args, "command_name", None), "seed": args.seed,
                            "error": str(exc), "error_type": type(exc).__name__}), file=out)
        print(msg, file=err)
        return EXIT_INPUT
    print(io.dumps(rep.as_dict()) if args.json else rep.as_text(), file=out)
    return EXIT_OK if rep.verified else EXIT_FALSIFIED


def main(argv: list[str] | None = None) -> None:
    sys.exit(dispatch(argv))


if __name__ == "__main__":  # pragma: no cover
    main()
