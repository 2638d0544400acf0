"""Batch command-line surface.

Every command prints deterministic text (or versioned JSON with
``--format json``) and uses exit codes to separate outcomes: 0 success,
1 mathematical negative (not related, not a member, not stabilized in
the window, ...), 2 usage or parse error, 3 computation cap exceeded.
"""

from __future__ import annotations

import json
import sys

import click

from .chains import (
    ChainSpec,
    chain_from_document,
    detect_stabilization,
    invariance_check,
    project,
    symmetrize,
)
from .gb import (
    CapExceeded,
    EngineLimits,
    FiniteIdeal,
    ideal_equal,
    universal_gb_check,
)
from .order import LEX, PermutedLexOrder
from .parse import ParseError, parse_polynomial, parse_polynomials, parse_variable, render_polynomial
from .perm import Permutation
from .poly import Polynomial
from .reduce import normal_form, reduce_step, truncation_gb_check, verify_trace
from .toric import (
    ToricSpec,
    conjecture_probe,
    kernel_by_elimination,
    sorting_matrix,
    squarefree_generating_set,
    squarefree_stabilization_experiment,
    toric_chain,
    toric_kernel,
)
from .wqo import bad_sequence_element, cancellation_witness, goodness_scan, injection_divisor

SCHEMA = "symgb.cli/1"

EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class _Settings:
    def __init__(self, fmt, limits, max_level, seed):
        self.fmt = fmt
        self.limits = limits
        self.max_level = max_level
        self.seed = seed


def _emit(ctx, command: str, payload: dict, text: str, negative: bool = False):
    settings = ctx.obj
    if settings.fmt == "json":
        doc = {"schema": SCHEMA, "command": command, "status": "negative" if negative else "ok"}
        doc.update(payload)
        click.echo(json.dumps(doc, sort_keys=True))
    else:
        click.echo(text)
    if negative:
        ctx.exit(EXIT_NEGATIVE)


def _poly(text: str) -> Polynomial:
    if text.startswith("@"):
        polys = _read_poly_file(text[1:])
        if len(polys) != 1:
            raise click.exceptions.UsageError(
                f"{text[1:]}: expected exactly one polynomial, found {len(polys)}"
            )
        return polys[0]
    try:
        return parse_polynomial(text)
    except ParseError as exc:
        raise click.exceptions.UsageError(str(exc)) from exc


def _polys(texts) -> list[Polynomial]:
    """Each argument is an inline polynomial or @path to a file of them."""
    out = []
    for t in texts:
        if t.startswith("@"):
            out.extend(_read_poly_file(t[1:]))
        else:
            out.append(_poly(t))
    return out


def _permutation(text: str) -> Permutation:
    body = text.strip()
    if body in ("", "()", "id", "identity"):
        return Permutation.identity()
    cycles = []
    for chunk in body.replace(")", ")|").split("|"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise click.exceptions.UsageError(f"bad cycle notation: {text!r}")
        inner = chunk[1:-1].replace(",", " ").split()
        try:
            cycles.append(tuple(int(s) for s in inner))
        except ValueError:
            raise click.exceptions.UsageError(f"bad cycle notation: {text!r}") from None
    try:
        return Permutation.from_cycles(*cycles)
    except ValueError as exc:
        raise click.exceptions.UsageError(str(exc)) from exc


def _read_poly_file(path: str) -> list[Polynomial]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_polynomials(fh.read())
    except ParseError as exc:
        raise click.exceptions.UsageError(f"{path}: {exc}") from exc
    except OSError as exc:
        raise click.exceptions.UsageError(str(exc)) from exc


def _chain_from_options(ctx, spec_path, f_text, k) -> ChainSpec:
    if spec_path and f_text:
        raise click.exceptions.UsageError("give either --spec or --f, not both")
    if spec_path:
        with open(spec_path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        if doc.get("kind") == "toric":
            spec = ToricSpec(int(doc["k"]), _poly(doc["f"]))
            return toric_chain(spec, ctx.obj.limits)
        return chain_from_document(doc)
    if f_text:
        if not k:
            raise click.exceptions.UsageError("--f needs --k")
        return toric_chain(ToricSpec(k, _poly(f_text)), ctx.obj.limits)
    raise click.exceptions.UsageError("a chain is required: --spec FILE or --f POLY --k K")


@click.group()
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.option("--max-degree", type=int, default=40, show_default=True,
              help="Degree cap for the basis engine.")
@click.option("--max-pairs", type=int, default=200000, show_default=True,
              help="S-pair cap for the basis engine.")
@click.option("--max-level", type=int, default=8, show_default=True,
              help="Highest chain level any command may compute.")
@click.option("--seed", type=int, default=0, show_default=True,
              help="Seed for sampled modes.")
@click.pass_context
def main(ctx, fmt, max_degree, max_pairs, max_level, seed):
    """Exact computations with symmetric ideals: orders with witnesses,
    equivariant reduction, finite Groebner bases, chains and toric kernels.

    Polynomial arguments are inline texts; @PATH reads them from a UTF-8
    file instead, one polynomial per line with '#' comments.
    """
    ctx.obj = _Settings(fmt, EngineLimits(max_degree, max_pairs), max_level, seed)


def run():
    try:
        outcome = main(standalone_mode=False)
    except CapExceeded as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_CAP)
    except click.exceptions.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        sys.exit(EXIT_USAGE)
    except click.exceptions.Abort:
        sys.exit(EXIT_USAGE)
    except click.exceptions.Exit as exc:
        sys.exit(exc.exit_code)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    sys.exit(outcome if isinstance(outcome, int) else 0)


@main.group()
def order():
    """Term-order comparisons and cancellation witnesses."""


@order.command("cmp")
@click.option("--permute", default="", help="Compare under the sigma-twisted order.")
@click.argument("left")
@click.argument("right")
@click.pass_context
def order_cmp(ctx, permute, left, right):
    v, w = _poly(left), _poly(right)
    for p, name in ((v, left), (w, right)):
        if len(p) != 1 or p.terms()[0][1] != 1:
            raise click.exceptions.UsageError(f"not a monomial: {name!r}")
    active = PermutedLexOrder(_permutation(permute)) if permute else LEX
    c = active.compare(v.monomials()[0], w.monomials()[0])
    word = {-1: "less", 0: "equal", 1: "greater"}[c]
    _emit(ctx, "order cmp", {"result": word}, word)


@order.command("witness")
@click.argument("small")
@click.argument("large")
@click.pass_context
def order_witness(ctx, small, large):
    v, w = _poly(small).monomials()[0], _poly(large).monomials()[0]
    report = cancellation_witness(v, w)
    if not report.related:
        _emit(ctx, "order witness", report.to_dict(), "not related", negative=True)
        return
    check = report.validate()
    text = (
        f"related: sigma = {report.sigma.cycle_string()}, "
        f"cofactor = {render_polynomial(Polynomial.from_monomial(report.cofactor))}, "
        f"verified = {'yes' if check else 'NO'}"
    )
    payload = report.to_dict()
    payload["verified"] = check
    _emit(ctx, "order witness", payload, text)


@main.command("divides-upto-injection")
@click.argument("small")
@click.argument("large")
@click.pass_context
def divides_upto_injection(ctx, small, large):
    v, w = _poly(small).monomials()[0], _poly(large).monomials()[0]
    pi = injection_divisor(v, w)
    if pi is None:
        _emit(ctx, "divides-upto-injection", {"related": False}, "absent", negative=True)
        return
    _emit(
        ctx,
        "divides-upto-injection",
        {"related": True, "injection": {str(k): t for k, t in pi.as_dict().items()}},
        f"injection: {pi!r}",
    )


@main.group()
def wqo():
    """Good/bad sequence scanning."""


@wqo.command("scan")
@click.option("--relation", type=click.Choice(["higman", "injection"]), default="higman",
              show_default=True)
@click.option("--file", "path", default=None, help="Read monomials from a file, one per line.")
@click.argument("monomials", nargs=-1)
@click.pass_context
def wqo_scan(ctx, relation, path, monomials):
    polys = _read_poly_file(path) if path else _polys(monomials)
    if not polys:
        raise click.exceptions.UsageError("no monomials given")
    seq = [p.monomials()[0] for p in polys]
    hit = goodness_scan(seq, relation)
    if hit is None:
        _emit(ctx, "wqo scan", {"good_pair": None}, "absent (bad sequence)", negative=True)
        return
    _emit(ctx, "wqo scan", {"good_pair": list(hit)}, f"good pair: ({hit[0]}, {hit[1]})")


@main.command("badseq")
@click.argument("n", type=int)
@click.pass_context
def badseq(ctx, n):
    m = bad_sequence_element(n)
    text = render_polynomial(Polynomial.from_monomial(m))
    _emit(ctx, "badseq", {"monomial": text}, text)


@main.command("reduce")
@click.option("--by", "basis", multiple=True, required=True, help="Basis polynomial (repeatable).")
@click.argument("poly")
@click.pass_context
def reduce_cmd(ctx, basis, poly):
    f = _poly(poly)
    outcome = reduce_step(f, _polys(basis))
    if outcome is None:
        _emit(ctx, "reduce", {"reducible": False}, "irreducible", negative=True)
        return
    h, step = outcome
    text = f"{render_polynomial(h)}\nstep: {json.dumps(step.to_dict(), sort_keys=True)}"
    _emit(ctx, "reduce", {"reducible": True, "result": render_polynomial(h), "step": step.to_dict()}, text)


@main.command("normal-form")
@click.option("--by", "basis", multiple=True, required=True)
@click.option("--tail", is_flag=True, help="Also reduce trailing terms.")
@click.argument("poly")
@click.pass_context
def normal_form_cmd(ctx, basis, tail, poly):
    f = _poly(poly)
    B = _polys(basis)
    residue, trace = normal_form(f, B, tail=tail)
    ok = verify_trace(f, trace)
    text = (
        f"residue: {render_polynomial(residue)}\n"
        f"steps: {len(trace.steps)}\n"
        f"trace verified: {'yes' if ok else 'NO'}"
    )
    payload = {"residue": render_polynomial(residue), "trace": trace.to_dict(), "verified": ok}
    _emit(ctx, "normal-form", payload, text)


@main.group()
def gb():
    """Finite Groebner-basis computations."""


def _render_basis(polys) -> tuple[list[str], str]:
    texts = [render_polynomial(g) for g in polys]
    return texts, "\n".join(texts) if texts else "0"


@gb.command("buchberger")
@click.argument("gens", nargs=-1, required=True)
@click.pass_context
def gb_buchberger(ctx, gens):
    ideal = FiniteIdeal(_polys(gens), limits=ctx.obj.limits)
    texts, text = _render_basis(ideal.groebner_basis())
    _emit(ctx, "gb buchberger", {"basis": texts}, text)


@gb.command("membership")
@click.option("--gens", "-g", multiple=True, required=True)
@click.argument("poly")
@click.pass_context
def gb_membership(ctx, gens, poly):
    f = _poly(poly)
    gen_polys = _polys(gens)
    universe = set()
    for g in gen_polys + [f]:
        universe.update(g.variables())
    ideal = FiniteIdeal(gen_polys, sorted(universe), limits=ctx.obj.limits)
    member = ideal.membership(f)
    _emit(ctx, "gb membership", {"member": member}, "member" if member else "not a member",
          negative=not member)


@gb.command("equal")
@click.option("--left", "-l", multiple=True, required=True)
@click.option("--right", "-r", multiple=True, required=True)
@click.pass_context
def gb_equal(ctx, left, right):
    lp, rp = _polys(left), _polys(right)
    universe = set()
    for g in lp + rp:
        universe.update(g.variables())
    universe = sorted(universe)
    eq = ideal_equal(
        FiniteIdeal(lp, universe, limits=ctx.obj.limits),
        FiniteIdeal(rp, universe, limits=ctx.obj.limits),
    )
    _emit(ctx, "gb equal", {"equal": eq}, "equal" if eq else "not equal", negative=not eq)


@gb.command("eliminate")
@click.option("--drop", "-d", multiple=True, required=True, help="Variable to eliminate.")
@click.argument("gens", nargs=-1, required=True)
@click.pass_context
def gb_eliminate(ctx, drop, gens):
    gen_polys = _polys(gens)
    universe = set()
    for g in gen_polys:
        universe.update(g.variables())
    try:
        drop_vars = [parse_variable(d) for d in drop]
    except ParseError as exc:
        raise click.exceptions.UsageError(str(exc)) from exc
    universe.update(drop_vars)
    ideal = FiniteIdeal(gen_polys, sorted(universe), limits=ctx.obj.limits)
    texts, text = _render_basis(ideal.eliminate(drop_vars).groebner_basis())
    _emit(ctx, "gb eliminate", {"basis": texts}, text)


@gb.command("truncate-check")
@click.option("--basis", "-b", multiple=True, required=True)
@click.option("--gens", "-g", multiple=True, required=True)
@click.option("--n", type=int, required=True)
@click.pass_context
def gb_truncate_check(ctx, basis, gens, n):
    ok = truncation_gb_check(_polys(basis), _polys(gens), n)
    _emit(ctx, "gb truncate-check", {"certified": ok},
          "certified on truncation" if ok else "not a basis for the truncation",
          negative=not ok)


@gb.command("universal-check")
@click.option("--n", type=int, required=True)
@click.option("--mode", type=click.Choice(["exhaustive", "sampled"]), default="exhaustive",
              show_default=True)
@click.argument("gens", nargs=-1, required=True)
@click.pass_context
def gb_universal_check(ctx, n, mode, gens):
    ok = universal_gb_check(_polys(gens), n, mode=mode, seed=ctx.obj.seed, limits=ctx.obj.limits)
    _emit(ctx, "gb universal-check", {"universal": ok},
          "universal basis" if ok else "not universal", negative=not ok)


@main.command("symmetrize")
@click.option("--m", type=int, required=True)
@click.argument("gens", nargs=-1, required=True)
@click.pass_context
def symmetrize_cmd(ctx, m, gens):
    out = symmetrize(_polys(gens), m)
    texts, text = _render_basis(out)
    _emit(ctx, "symmetrize", {"generators": texts, "count": len(texts)}, text)


@main.command("project")
@click.option("--n", type=int, required=True)
@click.option("--m", type=int, default=None, help="Ambient level (defaults to the support).")
@click.argument("gens", nargs=-1, required=True)
@click.pass_context
def project_cmd(ctx, n, m, gens):
    out = project(_polys(gens), n, m, ctx.obj.limits)
    texts, text = _render_basis(out)
    _emit(ctx, "project", {"generators": texts}, text)


@main.group()
def chain():
    """Invariant chains: inclusion checks and stabilization windows."""


_chain_options = [
    click.option("--spec", "spec_path", default=None, help="Chain document (JSON)."),
    click.option("--f", "f_text", default=None, help="Defining polynomial of a kernel chain."),
    click.option("--k", type=int, default=None, help="Arity for --f."),
]


def _with_chain_options(fn):
    for option in reversed(_chain_options):
        fn = option(fn)
    return fn


@chain.command("check")
@_with_chain_options
@click.option("--window", nargs=2, type=int, required=True, metavar="LO HI")
@click.pass_context
def chain_check(ctx, spec_path, f_text, k, window):
    if max(window) > ctx.obj.max_level:
        raise CapExceeded("max-level", f"window reaches {max(window)} > {ctx.obj.max_level}")
    spec = _chain_from_options(ctx, spec_path, f_text, k)
    report = invariance_check(spec, tuple(window), ctx.obj.limits)
    _emit(ctx, "chain check", report.to_dict(), report.to_text(), negative=not report.ok)


@chain.command("stabilize")
@_with_chain_options
@click.option("--n-hi", type=int, required=True)
@click.pass_context
def chain_stabilize(ctx, spec_path, f_text, k, n_hi):
    if n_hi > ctx.obj.max_level:
        raise CapExceeded("max-level", f"n_hi = {n_hi} > {ctx.obj.max_level}")
    spec = _chain_from_options(ctx, spec_path, f_text, k)
    report = detect_stabilization(spec, n_hi, ctx.obj.limits)
    _emit(ctx, "chain stabilize", report.to_dict(), report.to_text(),
          negative=report.stabilization_index is None)


@main.group()
def toric():
    """Kernels of substitution maps and the square-free experiment."""


@toric.command("matrix")
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.pass_context
def toric_matrix(ctx, n, k):
    m = sorting_matrix(n, k)
    _emit(ctx, "toric matrix", m.to_dict(), m.to_text())


@toric.command("kernel")
@click.option("--f", "f_text", default=None)
@click.option("--k", type=int, default=None)
@click.option("--n", type=int, required=True)
@click.option("--bind", "-b", multiple=True, metavar="x[..]=POLY",
              help="Explicit binding (repeatable), instead of --f/--k.")
@click.pass_context
def toric_kernel_cmd(ctx, f_text, k, n, bind):
    if bind and f_text:
        raise click.exceptions.UsageError("give either --bind or --f/--k, not both")
    if bind:
        bindings = []
        for item in bind:
            if "=" not in item:
                raise click.exceptions.UsageError(f"binding must look like x[1]=t[1]^2: {item!r}")
            var_text, image_text = item.split("=", 1)
            try:
                bindings.append((parse_variable(var_text.strip()), _poly(image_text)))
            except ParseError as exc:
                raise click.exceptions.UsageError(str(exc)) from exc
        ideal = kernel_by_elimination(bindings, n, ctx.obj.limits)
    else:
        if not (f_text and k):
            raise click.exceptions.UsageError("kernel needs --bind or both --f and --k")
        ideal = toric_kernel(ToricSpec(k, _poly(f_text)), n, ctx.obj.limits)
    texts, text = _render_basis(ideal.groebner_basis())
    _emit(ctx, "toric kernel", {"basis": texts}, text)


@toric.command("squarefree")
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.pass_context
def toric_squarefree(ctx, n, k):
    texts, text = _render_basis(squarefree_generating_set(n, k))
    _emit(ctx, "toric squarefree", {"generators": texts}, text)


@toric.command("experiment")
@click.option("--k", type=int, required=True)
@click.option("--n-hi", type=int, required=True)
@click.pass_context
def toric_experiment(ctx, k, n_hi, ):
    report = squarefree_stabilization_experiment(
        k, n_hi, ctx.obj.limits, max_level=ctx.obj.max_level
    )
    _emit(ctx, "toric experiment", report.to_dict(), report.to_text(), negative=not report.ok)


@toric.command("probe")
@click.option("--f", "f_text", required=True)
@click.option("--k", type=int, required=True)
@click.option("--n-hi", type=int, required=True)
@click.pass_context
def toric_probe(ctx, f_text, k, n_hi):
    report = conjecture_probe(
        ToricSpec(k, _poly(f_text)), n_hi, ctx.obj.limits, max_level=ctx.obj.max_level
    )
    _emit(ctx, "toric probe", report.to_dict(), report.to_text(),
          negative=report.stabilization.stabilization_index is None)


if __name__ == "__main__":
    run()
