# lattice_spectra/cli.py
"""
Command-line front end.

    python -m lattice_spectra torus classify --rcos 1/2 --rsq 1 --json
    python -m lattice_spectra count reps --form 1,0,1 --n 5

stdout carries the result only (text, or one JSON object with --json);
diagnostics and logs go to stderr. Exit codes: 0 success, 1 bad input,
2 search bound exhausted.
"""
from __future__ import annotations

import argparse
import logging
import sys
from typing import Callable, List, Optional, Sequence, Tuple

from pydantic import BaseModel

from . import qform, repcount, spectra, witness
from .config import parse_int, settings
from .errors import DomainError, SearchExhausted, SpectraError
from .exactnum import parse_value
from .qform import Form
from .records import (
    AmbiguityRecord,
    AutRecord,
    ClassGroupRecord,
    ClassificationRecord,
    CompositionRecord,
    DiscriminantRecord,
    ErrorRecord,
    FormRecord,
    HistogramRecord,
    MapRecord,
    MultiplicityRecord,
    PrimeRecord,
    QuadrantRecord,
    ReductionRecord,
    RepSetRecord,
    SampleRecord,
    TorusFormRecord,
    WitnessRecord,
    dump,
)

log = logging.getLogger(__name__)

Result = Tuple[BaseModel, str]


class _Parser(argparse.ArgumentParser):
    # --b and --c must not resolve as prefixes of --bound or --box
    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message):
        raise DomainError(f"{self.prog}: {message}")


def _int(text: str) -> int:
    try:
        return parse_int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc


def _form(text: str) -> Form:
    return Form.parse(text)


def _point(text: str) -> Tuple[int, int]:
    parts = [t.strip() for t in text.split(",")]
    if len(parts) != 2:
        raise DomainError(f"expected 'x,y', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise DomainError(f"expected integers 'x,y', got {text!r}") from exc


def _bound(args) -> Optional[int]:
    return getattr(args, "bound", None)


def _box(args) -> int:
    return getattr(args, "box", settings.BOX)


def _fmt_points(points) -> str:
    return " ".join(f"({x},{y})" for x, y in points) or "-"


def _fmt_map(t) -> str:
    (p, q), (r, s) = t.as_rows()
    return f"[[{p},{q}],[{r},{s}]]"


# ============================================================
# qform
# ============================================================

def _qform_reduce(args) -> Result:
    f = _form(args.form)
    reduced, t = qform.reduce(f)
    rec = ReductionRecord(form=FormRecord.from_form(f), reduced=FormRecord.from_form(reduced), certificate=MapRecord.from_map(t))
    return rec, f"{reduced}\ncertificate {_fmt_map(t)}"


def _qform_classgroup(args) -> Result:
    forms = qform.class_group(args.disc)
    text = "\n".join([f"h({args.disc}) = {len(forms)}"] + [str(f) for f in forms])
    return ClassGroupRecord.from_forms(args.disc, forms), text


def _qform_compose(args) -> Result:
    f, g = _form(args.form), _form(args.other)
    h = qform.compose(f, g)
    rec = CompositionRecord(left=FormRecord.from_form(f), right=FormRecord.from_form(g), product=FormRecord.from_form(h))
    return rec, str(h)


def _qform_aut(args) -> Result:
    f = _form(args.form)
    proper = qform.proper_automorphisms(f)
    improper = qform.improper_automorphism(f)
    rec = AutRecord(
        form=FormRecord.from_form(f),
        order=str(len(proper)),
        proper=[MapRecord.from_map(t) for t in proper],
        improper=None if improper is None else MapRecord.from_map(improper),
    )
    lines = [f"|Aut+| = {len(proper)}"] + [_fmt_map(t) for t in proper]
    if improper is not None:
        lines.append(f"improper {_fmt_map(improper)}")
    return rec, "\n".join(lines)


def _qform_ambiguous(args) -> Result:
    f = _form(args.form)
    improper = qform.improper_automorphism(f)
    rec = AmbiguityRecord(
        form=FormRecord.from_form(f),
        ambiguous=improper is not None,
        improper=None if improper is None else MapRecord.from_map(improper),
    )
    return rec, "ambiguous" if improper is not None else "not ambiguous"


def _qform_disc(args) -> Result:
    d = qform.discriminant(_form(args.form))
    return DiscriminantRecord.from_discriminant(d), f"delta={d.delta} delta0={d.delta0} conductor={d.conductor}"


# ============================================================
# count
# ============================================================

def _rep_text(rs) -> str:
    head = f"R={rs.R}"
    if rs.R_plus is not None:
        head += f" r_plus={rs.R_plus} r_full={rs.R_full}"
    return f"{head}\n{_fmt_points(rs.solutions)}"


def _count_reps(args) -> Result:
    f = _form(args.form)
    if args.primitive:
        rs = repcount.primitive_representations(f, args.n)
    else:
        rs = repcount.representations(f, args.n)
    return RepSetRecord.from_rep_set(rs), _rep_text(rs)


def _count_histogram(args) -> Result:
    f = _form(args.form)
    hist = witness.multiplicity_histogram(f, args.nmax)
    text = "\n".join(f"{r}: {freq}" for r, freq in hist.items())
    return HistogramRecord.from_histogram(f, args.nmax, hist), text


def _count_quadrant(args) -> Result:
    count, sols = repcount.first_quadrant_count(args.m, args.n, args.N)
    rec = QuadrantRecord(m=str(args.m), n=str(args.n), N=str(args.N), count=str(count), solutions=[[str(x), str(y)] for x, y in sols])
    return rec, f"{count}\n{_fmt_points(sols)}"


def _count_irrational(args) -> Result:
    rs = repcount.representations_irrational(parse_value(args.b), parse_value(args.c), parse_value(args.z), _box(args))
    return RepSetRecord.from_rep_set(rs), _rep_text(rs)


# ============================================================
# witness
# ============================================================

def _witness_text(w, eigenvalue: Optional[str] = None) -> str:
    lines = [f"k={w.target_count} value={w.value}"]
    if w.prime is not None:
        lines[0] += f" prime={w.prime}"
    if eigenvalue:
        lines.append(f"eigenvalue {eigenvalue}")
    lines.append(_fmt_points(w.solutions))
    return "\n".join(lines)


def _witness_prime(args) -> Result:
    try:
        avoid = [int(t) for t in args.avoid.split(",") if t.strip()]
    except ValueError as exc:
        raise DomainError(f"--avoid must be a comma separated list of integers, got {args.avoid!r}") from exc
    w = witness.find_represented_prime(_form(args.form), avoid, _bound(args))
    return PrimeRecord.from_witness(w), f"{w.p} = F({w.rep[0]},{w.rep[1]})"


def _witness_theorem_q(args) -> Result:
    w = witness.theorem_q_witness(args.m, args.n, args.k, _bound(args))
    return WitnessRecord.from_witness(w), _witness_text(w)


def _witness_surjectivity(args) -> Result:
    w = witness.surjectivity_witness(_form(args.form), args.k, _bound(args))
    return WitnessRecord.from_witness(w), _witness_text(w)


# ============================================================
# rect / torus
# ============================================================

def _class_text(ms) -> str:
    text = f"{ms.tag.value}\n{ms.case}"
    reading = ms.statement_reading
    if reading is not None and not reading.consistent:
        text += f"\nnote: rcos = {reading.alpha}*rsq + {reading.beta} reading gives {reading.tag.value}"
    return text


def _rect_classify(args) -> Result:
    ms = spectra.rect_classify(spectra.RectangleSpec.parse(args.ratio_sq))
    return ClassificationRecord.from_set(ms), _class_text(ms)


def _rect_mult(args) -> Result:
    N, sols = spectra.rect_level(spectra.RectangleSpec.parse(args.ratio_sq), args.m0, args.n0)
    rec = MultiplicityRecord(multiplicity=str(len(sols)), level=str(N), solutions=[[str(x), str(y)] for x, y in sols])
    return rec, f"{len(sols)}\nN={N} {_fmt_points(sols)}"


def _rect_witness(args) -> Result:
    rw = spectra.rect_witness(spectra.RectangleSpec.parse(args.ratio_sq), args.k, _bound(args))
    eig = rw.eigenvalue_text()
    return WitnessRecord.from_witness(rw.witness, eigenvalue=eig), _witness_text(rw.witness, eig)


def _torus(args) -> spectra.TorusSpec:
    return spectra.TorusSpec.parse(args.rcos, args.rsq)


def _torus_form(args) -> Result:
    data = spectra.torus_form(_torus(args))
    text = (
        f"{data.form}\n"
        f"alpha={data.alpha} beta={data.beta} gamma={data.gamma} delta={data.delta} tau={data.tau} "
        f"discriminant={data.discriminant.delta}"
    )
    return TorusFormRecord.from_data(data), text


def _torus_classify(args) -> Result:
    ms = spectra.torus_classify(_torus(args))
    return ClassificationRecord.from_set(ms), _class_text(ms)


def _torus_mult(args) -> Result:
    gen = _point(args.gen)
    m = spectra.torus_multiplicity(_torus(args), gen, _box(args))
    return MultiplicityRecord(multiplicity=str(m), generator=[str(gen[0]), str(gen[1])]), str(m)


def _torus_sample(args) -> Result:
    s = spectra.multiplicity_set_sample(_torus(args), args.nmax, _box(args))
    text = "{" + ",".join(str(m) for m in s.observed) + "}" + f" over {s.levels} levels"
    return SampleRecord.from_sample(s), text


def _torus_four(args) -> Result:
    gen, sols = spectra.torus_four_witness(_torus(args), _box(args))
    rec = MultiplicityRecord(multiplicity="4", generator=[str(gen[0]), str(gen[1])], solutions=[[str(x), str(y)] for x, y in sols])
    return rec, f"({gen[0]},{gen[1]})\n{_fmt_points(sols)}"


# ============================================================
# Parser
# ============================================================

def _common() -> argparse.ArgumentParser:
    # attached to the top level and to every leaf so flags work in either position
    p = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit one JSON object")
    p.add_argument("--bound", type=_int, default=argparse.SUPPRESS, help=f"search cap (default {settings.SEARCH_BOUND})")
    p.add_argument("--box", type=_int, default=argparse.SUPPRESS, help=f"scan box half-width (default {settings.BOX})")
    p.add_argument("-v", "--verbose", action="count", default=argparse.SUPPRESS, help="-v info, -vv debug")
    return p


def _leaf(group, name: str, handler: Callable, common, help_text: str) -> argparse.ArgumentParser:
    p = group.add_parser(name, parents=[common], help=help_text)
    p.set_defaults(handler=handler)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="lattice-spectra", description="Laplace eigenvalue multiplicities on rectangles and flat tori.", parents=[common])
    top = parser.add_subparsers(dest="group", metavar="{qform,count,witness,rect,torus}")

    # qform
    g = top.add_parser("qform", help="binary quadratic forms").add_subparsers(dest="command")
    p = _leaf(g, "reduce", _qform_reduce, common, "reduced form with certificate")
    p.add_argument("--form", required=True)
    p = _leaf(g, "classgroup", _qform_classgroup, common, "reduced forms of a discriminant")
    p.add_argument("--disc", type=_int, required=True)
    p = _leaf(g, "compose", _qform_compose, common, "class group product")
    p.add_argument("--form", required=True)
    p.add_argument("--with", dest="other", required=True)
    p = _leaf(g, "aut", _qform_aut, common, "automorphism group")
    p.add_argument("--form", required=True)
    p = _leaf(g, "ambiguous", _qform_ambiguous, common, "is the form equivalent to (a,-b,c)")
    p.add_argument("--form", required=True)
    p = _leaf(g, "disc", _qform_disc, common, "discriminant, fundamental part and conductor")
    p.add_argument("--form", required=True)

    # count
    g = top.add_parser("count", help="representation counts").add_subparsers(dest="command")
    p = _leaf(g, "reps", _count_reps, common, "all representations of n")
    p.add_argument("--form", required=True)
    p.add_argument("--n", type=_int, required=True)
    p.add_argument("--primitive", action="store_true")
    p = _leaf(g, "histogram", _count_histogram, common, "frequency of each R(n), 1 <= n <= nmax")
    p.add_argument("--form", required=True)
    p.add_argument("--nmax", type=_int, required=True)
    p = _leaf(g, "quadrant", _count_quadrant, common, "solutions of m x^2 + n y^2 = N with x, y >= 1")
    p.add_argument("--m", type=_int, required=True)
    p.add_argument("--n", type=_int, required=True)
    p.add_argument("--N", type=_int, required=True)
    p = _leaf(g, "irrational", _count_irrational, common, "solutions of x^2 + b xy + c y^2 = z")
    p.add_argument("--b", required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--z", required=True)

    # witness
    g = top.add_parser("witness", help="verified constructive searches").add_subparsers(dest="command")
    p = _leaf(g, "prime", _witness_prime, common, "smallest represented prime")
    p.add_argument("--form", required=True)
    p.add_argument("--avoid", default="")
    p = _leaf(g, "theorem-q", _witness_theorem_q, common, "p^(2k-1) = m x^2 + n y^2 with exactly k positive solutions")
    p.add_argument("--m", type=_int, required=True)
    p.add_argument("--n", type=_int, required=True)
    p.add_argument("--k", type=_int, required=True)
    p = _leaf(g, "surjectivity", _witness_surjectivity, common, "n with r_plus(n) = k")
    p.add_argument("--form", required=True)
    p.add_argument("--k", type=_int, required=True)

    # rect
    g = top.add_parser("rect", help="Dirichlet rectangles").add_subparsers(dest="command")
    p = _leaf(g, "classify", _rect_classify, common, "multiplicity set")
    p.add_argument("--ratio-sq", required=True)
    p = _leaf(g, "mult", _rect_mult, common, "multiplicity of the (m0, n0) eigenvalue")
    p.add_argument("--ratio-sq", required=True)
    p.add_argument("--m0", type=_int, required=True)
    p.add_argument("--n0", type=_int, required=True)
    p = _leaf(g, "witness", _rect_witness, common, "an eigenvalue of multiplicity k")
    p.add_argument("--ratio-sq", required=True)
    p.add_argument("--k", type=_int, required=True)

    # torus
    g = top.add_parser("torus", help="flat tori given by (r cos t, r^2)").add_subparsers(dest="command")
    for name, handler, help_text in (
        ("form", _torus_form, "integer form of a rational torus"),
        ("classify", _torus_classify, "multiplicity set"),
        ("mult", _torus_mult, "multiplicity at a dual lattice point"),
        ("sample", _torus_sample, "observed multiplicities at desk scale"),
        ("four", _torus_four, "a multiplicity-4 eigenvalue of an irrational torus"),
    ):
        p = _leaf(g, name, handler, common, help_text)
        p.add_argument("--rcos", required=True)
        p.add_argument("--rsq", required=True)
        if name == "mult":
            p.add_argument("--gen", required=True, help="x,y")
        if name == "sample":
            p.add_argument("--nmax", type=_int, default=None)

    return parser


def _configure_logging(verbose: int) -> None:
    level = settings.LOG_LEVEL
    if verbose >= 2:
        level = "DEBUG"
    elif verbose == 1:
        level = "INFO"
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("lattice_spectra").setLevel(level)


def main(argv: Optional[Sequence[str]] = None) -> int:
    tokens: List[str] = list(sys.argv[1:] if argv is None else argv)
    as_json = "--json" in tokens
    parser = build_parser()
    try:
        args = parser.parse_args(tokens)
        _configure_logging(getattr(args, "verbose", 0))
        handler = getattr(args, "handler", None)
        if handler is None:
            raise DomainError("missing command.\nHint: lattice-spectra --help")
        record, text = handler(args)
    except SystemExit as exc:
        # --help
        return int(exc.code or 0)
    except SpectraError as exc:
        code = 2 if isinstance(exc, SearchExhausted) else 1
        if as_json:
            print(dump(ErrorRecord.from_exception(exc)))
        print(f"error: {exc}", file=sys.stderr)
        return code

    print(dump(record) if as_json else text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
