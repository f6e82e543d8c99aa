"""``cantorkit`` command line.

Exit codes: 0 success, 1 parse error (including bad arguments), 2 domain
error.  Every command prints one canonical line; ``--json`` switches to a
compact JSON object instead.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import abgroup, modlin, ordinal, ringpoly, setcore
from .cardinal import CardCmp, Mode
from .errors import CantorkitError, DomainError, NotBijective, NotDomain, NotInjective, ParseError
from .parsing import (
    eval_cardinal,
    eval_ordinal,
    parse_cardinal_expr,
    parse_map,
    parse_matrix,
    parse_ordinal_expr,
    parse_relation,
    parse_set,
    parse_vector,
)


class UsageError(ParseError):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _num(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    return x


def _nums(rows):
    return [[_num(x) for x in r] for r in rows]


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False, default=str)


class Result:
    """A canonical text line plus its JSON twin."""

    def __init__(self, text: str, data: dict):
        self.text = text
        self.data = data


# ord / card

def ordinal_to_json(a: ordinal.Ordinal):
    return [[ordinal_to_json(e), c] for e, c in a.terms]


def cmd_ord(args):
    value = eval_ordinal(parse_ordinal_expr(args.expr))
    text = ordinal.render(value)
    return Result(text, {"ordinal": text, "cnf": ordinal_to_json(value),
                         "cardinality": str(ordinal.ord_cardinality(value))})


def cmd_card(args):
    mode = Mode(args.mode)
    value = eval_cardinal(parse_cardinal_expr(args.expr), mode)
    if isinstance(value, CardCmp):
        return Result(value.value, {"cmp": value.value, "mode": mode.value})
    return Result(str(value), {"cardinal": str(value), "kind": value.kind, "value": value.value,
                               "mode": mode.value})


# set

def _codomain(args):
    return parse_set(args.codomain) if getattr(args, "codomain", None) else None


def cmd_set(args):
    op = args.set_op
    if op == "kind":
        f = parse_map(args.map, _codomain(args))
        flags = setcore.check_function_kind(f)
        text = " ".join(k for k in ("injective", "surjective", "bijective") if flags[k]) or "none"
        return Result(text, flags)
    if op == "invert":
        g = setcore.invert_bijection(parse_map(args.map, _codomain(args)))
        return Result(str(g), {"map": str(g)})
    if op == "sb":
        f = parse_map(args.f, parse_set(args.B) if args.B else None)
        g = parse_map(args.g, parse_set(args.A) if args.A else None)
        A = parse_set(args.A) if args.A else f.domain
        B = parse_set(args.B) if args.B else g.domain
        f = setcore.FiniteMap(f.domain, B, f.pairs)
        g = setcore.FiniteMap(g.domain, A, g.pairs)
        h = setcore.schroeder_bernstein_finite(A, B, f, g)
        return Result(str(h), {"map": str(h)})
    if op == "sbn":
        p = setcore.CountableInjectionPair(_affine(args.f), _affine(args.g), args.fuel)
        in_e = setcore.sb_in_E(p, args.x)
        hx = setcore.sb_point_countable(p, args.x)
        return Result(str(hx), {"x": args.x, "h": hx, "in_E": in_e})
    if op == "powerset":
        subsets = setcore.powerset(parse_set(args.set))
        text = "[" + ",".join(map(str, subsets)) + "]"
        return Result(text, {"count": len(subsets), "subsets": [str(s) for s in subsets]})
    if op == "chi":
        chi = setcore.characteristic_function(parse_set(args.X), parse_set(args.A))
        return Result(str(chi), {"map": str(chi)})
    if op == "order":
        carrier = parse_set(args.carrier) if args.carrier else None
        flags = setcore.check_order(parse_relation(args.relation, carrier))
        text = " ".join(k for k in ("partial", "linear", "well") if flags[k]) or "none"
        return Result(text, flags)
    if op == "iso":
        iso = setcore.order_isomorphism(parse_relation(args.p), parse_relation(args.q))
        text = "none" if iso is None else str(iso)
        return Result(text, {"map": None if iso is None else str(iso)})
    raise AssertionError(op)


_AFFINE = re.compile(r"\s*(\d*)\s*\*?\s*n\s*(?:\+\s*(\d+))?\s*|\s*(\d+)\s*")


def _affine(text):
    """``a*n + b`` (or ``an+b``) as a Python function on naturals."""
    m = _AFFINE.fullmatch(text)
    if not m:
        raise ParseError(f"expected an affine map like '2n+1', got {text!r}", 0, ("a*n+b",))
    if m.group(3) is not None:
        raise ParseError("a constant map is not injective", 0, ("a*n+b",))
    a = int(m.group(1)) if m.group(1) else 1
    b = int(m.group(2)) if m.group(2) else 0
    if a == 0:
        raise ParseError("a constant map is not injective", 0, ("a*n+b",))
    return lambda n: a * n + b


# abgroup

def _matrix(args, attr="matrix"):
    return parse_matrix(getattr(args, attr), attr)


def cmd_abgroup(args):
    op = args.ab_op
    if op == "classify":
        c = abgroup.classify(_matrix(args), args.cols)
        return Result(_dumps(c.to_json()), c.to_json())
    if op == "snf":
        s = abgroup.smith_normal_form(_matrix(args), args.cols)
        data = {"diag": list(s.diag), "U": s.U, "D": s.D, "V": s.V}
        return Result(_dumps(data), data)
    if op == "iso":
        a, b = _matrix(args), _matrix(args, "other")
        iso = abgroup.are_isomorphic(a, b, args.cols, args.other_cols)
        return Result("true" if iso else "false", {"isomorphic": iso})
    if op == "divisors":
        ed = abgroup.elementary_divisors(abgroup.classify(_matrix(args), args.cols))
        return Result(_dumps(ed), {"elementary_divisors": ed})
    if op == "cosets":
        table = abgroup.quotient_enumerate(_matrix(args), args.cols)
        reps = [list(r) for r in table.representatives]
        return Result(_dumps(reps), {"count": len(reps), "moduli": list(table.moduli), "representatives": reps})
    if op == "order":
        k = abgroup.element_order(args.modulus, args.a)
        return Result(str(k), {"order": k})
    if op == "cyclic":
        spec = abgroup.INFINITE if args.order in ("inf", "infinite") else _int(args.order, "order")
        c = abgroup.cyclic_classify(spec)
        return Result(_dumps(c.to_json()), c.to_json())
    if op == "kernel":
        ki = abgroup.hom_kernel_image(_matrix(args), args.cols)
        data = {"kernel": ki.kernel_basis, "image": ki.image_basis, "cokernel": ki.cokernel.to_json(),
                "first_iso": ki.first_iso_holds}
        return Result(_dumps(data), data)
    raise AssertionError(op)


def _int(text, name):
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"{name}: expected an integer, got {text!r}", 0, ("<integer>",)) from None


# poly / ideal

def cmd_poly(args):
    ring = ringpoly.RingSpec.parse(args.ring)
    polys = [ringpoly.Polynomial.parse(ring, t) for t in args.operands]
    op = args.poly_op
    need = {"add": 2, "sub": 2, "mul": 2, "deg": 1, "divmod": 2, "series-mul": 2, "series-add": 2}[op]
    if len(polys) != need:
        raise UsageError(f"poly {op} takes {need} operand(s)")
    if op == "deg":
        d = ringpoly.poly_deg(polys[0])
        return Result(str(d), {"degree": d.value})
    if op in ("series-mul", "series-add"):
        if args.precision is None:
            raise UsageError(f"poly {op} needs --precision")
        f, g = (ringpoly.TruncatedSeries.from_polynomial(p, args.precision) for p in polys)
        s = ringpoly.series_mul(f, g) if op == "series-mul" else ringpoly.series_add(f, g)
        return Result(str(s), {"series": str(s), "precision": s.precision, "coeffs": [_num(c) for c in s.coeffs]})
    if op == "divmod":
        q, r = ringpoly.poly_divmod(*polys)
        return Result(f"{q} ; {r}", {"quotient": str(q), "remainder": str(r)})
    fn = {"add": ringpoly.poly_add, "sub": ringpoly.poly_sub, "mul": ringpoly.poly_mul}[op]
    p = fn(*polys)
    return Result(str(p), {"polynomial": str(p), "coeffs": [_num(c) for c in p.coeffs]})


def _ideal(ring, text):
    gens = [t for t in text.split(",")]
    if ring == ringpoly.Z:
        return ringpoly.IdealZ([_int(t.strip(), "generator") for t in gens])
    return ringpoly.IdealFx(ring, [ringpoly.Polynomial.parse(ring, t) for t in gens])


def cmd_ideal(args):
    op = args.ideal_op
    if op in ("maximal", "units", "field"):
        n = args.n
        if op == "maximal":
            gens = ringpoly.maximal_ideals_modn(n)
            return Result("{" + ", ".join(f"({d})" for d in gens) + "}", {"n": n, "maximal": gens})
        if op == "units":
            u, z = ringpoly.units_and_zero_divisors(n)
            return Result(f"units {_dumps(u)} zero_divisors {_dumps(z)}", {"units": u, "zero_divisors": z})
        table = ringpoly.finite_domain_to_field(n)
        text = " ".join(f"{a}:{b}" for a, b in table.items())
        return Result(text, {"n": n, "inverses": {str(a): b for a, b in table.items()}})
    ring = ringpoly.RingSpec.parse(args.ring)
    if ring != ringpoly.Z and not ring.is_field:
        raise DomainError(f"{ring} is not a principal ideal domain handled here (use Z or a field)")
    if op == "gen":
        g = ringpoly.ideal_principal_generator(_ideal(ring, ",".join(args.items)))
        return Result(str(g), {"generator": str(g)})
    if op == "member":
        if len(args.items) < 2:
            raise UsageError("ideal member takes an element and at least one generator")
        I = _ideal(ring, ",".join(args.items[1:]))
        a = _int(args.items[0], "element") if ring == ringpoly.Z else ringpoly.Polynomial.parse(ring, args.items[0])
        ok = ringpoly.ideal_member(a, I)
        return Result("true" if ok else "false", {"member": ok})
    if op == "acc":
        chain = [_ideal(ring, t) for t in args.items]
        n = ringpoly.acc_stabilize(chain)
        return Result(str(n), {"stabilizes_at": n})
    raise AssertionError(op)


# lin

def _field(args):
    f = ringpoly.RingSpec.parse(args.field)
    if not f.is_field:
        raise DomainError(f"{f} is not a field")
    return f


def _render_vectors(vs) -> str:
    return "[" + ",".join("(" + ",".join(str(x) for x in v) + ")" for v in vs) + "]"


def _vectors(args):
    rows = _matrix(args, "vectors")
    dim = args.dim if args.dim is not None else (len(rows[0]) if rows else 0)
    return modlin.VectorList(_field(args), dim, rows)


def cmd_lin(args):
    op = args.lin_op
    if op == "independent":
        ok = modlin.is_independent(_vectors(args))
        return Result("true" if ok else "false", {"independent": ok})
    if op == "span":
        ok = modlin.span_member(_vectors(args), parse_vector(args.vector))
        return Result("true" if ok else "false", {"member": ok})
    if op in ("sieve", "extend"):
        v = _vectors(args)
        out = modlin.sieve_basis(v) if op == "sieve" else modlin.extend_to_basis(v)
        text = _render_vectors(out.vectors)
        return Result(text, {"basis": _nums(out.vectors)})
    if op == "ranknull":
        T = modlin.LinearMap(_field(args), _matrix(args), args.cols)
        ker, im = modlin.rank_nullity(T)
        text = f"ker {_render_vectors(ker.vectors)} im {_render_vectors(im.vectors)}"
        return Result(text, {"kernel": _nums(ker.vectors), "image": _nums(im.vectors),
                             "nullity": len(ker), "rank": len(im)})
    if op == "stacked":
        rows = _matrix(args)
        n = args.cols if args.cols is not None else (len(rows[0]) if rows else 0)
        basis, mult = modlin.stacked_basis(rows, n)
        data = {"basis": basis, "multipliers": list(mult)}
        return Result(_dumps(data), data)
    if op == "projective":
        ok = modlin.is_projective_zmodule(_matrix(args), args.cols)
        return Result("true" if ok else "false", {"projective": ok})
    if op == "section":
        base = ringpoly.RingSpec.parse(args.base)
        rel = parse_matrix(args.relations, "relations") if args.relations else ()
        ses = modlin.SES(base, parse_matrix(args.f, "f"), parse_matrix(args.g, "g"), relations=rel)
        sp = modlin.split_section(ses)
        h, k = _nums(sp.section), _nums(sp.retraction)
        data = {"section": h, "retraction": k, "decomposition": sp.decomposition_verified}
        return Result(_dumps({"section": h, "retraction": k}), data)
    raise AssertionError(op)


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=[m.value for m in Mode], default=argparse.SUPPRESS)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    parser = _ArgumentParser(prog="cantorkit", parents=[common],
                             description="Exact set, cardinal, ordinal and algebra calculator.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("ord", parents=[common], help="evaluate an ordinal expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_ord)

    p = sub.add_parser("card", parents=[common], help="evaluate a cardinal expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_card)

    p = sub.add_parser("set", parents=[common], help="finite sets, maps and orders")
    ss = p.add_subparsers(dest="set_op", required=True, parser_class=_ArgumentParser)
    q = ss.add_parser("kind", parents=[common]); q.add_argument("map"); q.add_argument("--codomain")
    q = ss.add_parser("invert", parents=[common]); q.add_argument("map"); q.add_argument("--codomain")
    q = ss.add_parser("sb", parents=[common])
    q.add_argument("--f", required=True); q.add_argument("--g", required=True)
    q.add_argument("--A"); q.add_argument("--B")
    q = ss.add_parser("sbn", parents=[common])
    q.add_argument("x", type=int); q.add_argument("--f", default="2n"); q.add_argument("--g", default="2n")
    q.add_argument("--fuel", type=int, default=1024)
    q = ss.add_parser("powerset", parents=[common]); q.add_argument("set")
    q = ss.add_parser("chi", parents=[common]); q.add_argument("X"); q.add_argument("A")
    q = ss.add_parser("order", parents=[common]); q.add_argument("relation"); q.add_argument("--carrier")
    q = ss.add_parser("iso", parents=[common]); q.add_argument("p"); q.add_argument("q")
    p.set_defaults(func=cmd_set)

    p = sub.add_parser("abgroup", parents=[common], help="finitely generated abelian groups")
    ss = p.add_subparsers(dest="ab_op", required=True, parser_class=_ArgumentParser)
    for name in ("classify", "snf", "divisors", "cosets", "kernel", "iso"):
        q = ss.add_parser(name, parents=[common])
        q.add_argument("--matrix", required=True)
        q.add_argument("--cols", type=int)
        if name == "iso":
            q.add_argument("--other", required=True)
            q.add_argument("--other-cols", type=int)
    q = ss.add_parser("order", parents=[common])
    q.add_argument("--modulus", type=int, required=True); q.add_argument("a", type=int)
    q = ss.add_parser("cyclic", parents=[common]); q.add_argument("order")
    p.set_defaults(func=cmd_abgroup)

    p = sub.add_parser("poly", parents=[common], help="polynomials and truncated series")
    p.add_argument("poly_op", choices=["add", "sub", "mul", "deg", "divmod", "series-add", "series-mul"])
    p.add_argument("operands", nargs="+")
    p.add_argument("--ring", required=True)
    p.add_argument("--precision", type=int)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("ideal", parents=[common], help="ideals in Z, F[x] and Z/n")
    ss = p.add_subparsers(dest="ideal_op", required=True, parser_class=_ArgumentParser)
    for name in ("gen", "member", "acc"):
        q = ss.add_parser(name, parents=[common])
        q.add_argument("items", nargs="+")
        q.add_argument("--ring", default="Z")
    for name in ("maximal", "units", "field"):
        q = ss.add_parser(name, parents=[common]); q.add_argument("n", type=int)
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("lin", parents=[common], help="linear algebra and Z-modules")
    ss = p.add_subparsers(dest="lin_op", required=True, parser_class=_ArgumentParser)
    for name in ("independent", "span", "sieve", "extend"):
        q = ss.add_parser(name, parents=[common])
        q.add_argument("--vectors", required=True)
        q.add_argument("--field", default="Q")
        q.add_argument("--dim", type=int)
        if name == "span":
            q.add_argument("--vector", required=True)
    q = ss.add_parser("ranknull", parents=[common])
    q.add_argument("--matrix", required=True); q.add_argument("--field", default="Q")
    q.add_argument("--cols", type=int)
    for name in ("stacked", "projective"):
        q = ss.add_parser(name, parents=[common])
        q.add_argument("--matrix", required=True); q.add_argument("--cols", type=int)
    q = ss.add_parser("section", parents=[common])
    q.add_argument("--base", default="Z"); q.add_argument("--f", required=True)
    q.add_argument("--g", required=True); q.add_argument("--relations")
    p.set_defaults(func=cmd_lin)
    return parser


def _diagnostic(exc: CantorkitError) -> dict:
    data = {"error": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, ParseError):
        data["offset"] = exc.offset
        data["expected"] = list(exc.expected)
    if isinstance(exc, NotDomain):
        data["witness"] = list(exc.witness)
    if isinstance(exc, NotBijective):
        data["collision"] = list(exc.collision) if exc.collision else None
        data["unhit"] = exc.unhit
    if isinstance(exc, NotInjective):
        data["map"] = exc.name
        data["collision"] = list(exc.collision) if exc.collision else None
    return data


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    as_json = "--json" in argv
    try:
        args = build_parser().parse_args(argv)
        as_json = getattr(args, "json", False)
        if not hasattr(args, "mode"):
            args.mode = Mode.BASE.value
        result = args.func(args)
    except CantorkitError as exc:
        code = 1 if isinstance(exc, ParseError) else 2
        _report(exc, as_json, stdout, stderr)
        return code
    except (ValueError, ZeroDivisionError, OSError) as exc:
        _report(DomainError(str(exc)), as_json, stdout, stderr)
        return 2
    print(_dumps(result.data) if as_json else result.text, file=stdout)
    return 0


def _report(exc, as_json, stdout, stderr):
    if as_json:
        print(_dumps(_diagnostic(exc)), file=stdout)
    else:
        print(f"error[{type(exc).__name__}]: {exc}", file=stderr)


def entry():
    sys.exit(main())
