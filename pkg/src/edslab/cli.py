"""Command-line front end: config loading, dispatch, report emission.

Configs are flat INI files: a [field] section picking the base field, a
[curve] or [twist] section describing the curve, optional [point],
[point2], [curve2], [twist2] sections, and a [params] section with the
command knobs. Every mathematical value is a string in the expression
grammar of the algebra package, so configs stay diff-friendly and
language-neutral.

Reports are deterministic. The same config bytes produce the same
output bytes, in CSV (fixed column schemas, comment lines carrying the
command name, a 12-hex digest of the config, and the package version)
or JSONL (one self-describing record per line). Exit codes: 0 clean,
1 usage or config error, 2 mathematical assertion failure.
"""

import argparse
import configparser
import hashlib
import json
import sys
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction

from . import __version__, eds, ffexp
from .algebra.fields import FieldElem, PrimeField, Rationals
from .algebra.parse import format_poly, format_ratfunc, parse_poly
from .algebra.poly import Poly
from .algebra.ratfunc import FunctionField, RatFunc
from .curve import CurvePoint, curve_invariants, curve_new, quadratic_twist
from .errors import (
    EdslabError,
    ParseError,
    UnknownCommand,
    ValidationError,
)

COMMANDS = (
    "curve-info",
    "eds-seq",
    "gcd-table",
    "stability",
    "lemma1",
    "divisibility",
    "divpoly-check",
    "gm-gcd",
    "ff-classify",
    "ff-lowerbound",
    "ff-ppower",
    "count-points",
)

_KINDS = ("Q", "Fp", "QT", "FpT")

_SECTION_KEYS = {
    "field": {"kind", "p"},
    "curve": {"a1", "a2", "a3", "a4", "a6"},
    "curve2": {"a1", "a2", "a3", "a4", "a6"},
    "twist": {"a", "b", "delta"},
    "twist2": {"a", "b", "delta"},
    "point": {"x", "y", "x_den", "y_den"},
    "point2": {"x", "y", "x_den", "y_den"},
    "params": {
        "n_max",
        "N",
        "base_n",
        "i",
        "guard_degree",
        "m_max",
        "search_bound",
        "n",
        "a",
        "b",
    },
}

# (minimum value) for the integer params; the rest are expression strings.
_INT_PARAMS = {
    "n_max": 1,
    "N": 1,
    "base_n": 1,
    "i": 0,
    "guard_degree": 1,
    "m_max": 2,
    "search_bound": 1,
    "n": 1,
}

_SECTION_ORDER = ("field", "curve", "twist", "point", "curve2", "twist2", "point2", "params")


@dataclass(frozen=True)
class RunConfig:
    """Validated run description; raw strings are kept for round-tripping.

    The digest is excluded from equality so that a config and its
    canonical reprint compare equal even though the bytes differ.
    """

    kind: str
    p: object
    curve: object
    twist: object
    curve2: object
    twist2: object
    point: object
    point2: object
    params: object
    digest: str = dataclass_field(compare=False, default="")


@dataclass(frozen=True)
class Section:
    """One table of a report: a name, a column tuple, and value rows."""

    name: str
    columns: tuple
    rows: tuple


@dataclass(frozen=True)
class Report:
    command: str
    digest: str
    version: str
    sections: tuple


# --------------------------------------------------------------------------
# config loading


def _freeze(section):
    return tuple(sorted(section.items())) if section is not None else None


def _thaw(frozen):
    return dict(frozen) if frozen is not None else None


def _scalar_field(kind, p):
    if kind in ("Q", "QT"):
        return Rationals()
    return PrimeField(p)


def _parse_field_value(text, field, where, constant=False):
    """Parse one expression string, renaming errors after the config key."""
    try:
        poly = parse_poly(text, field)
    except EdslabError as exc:
        raise ValidationError(where, str(exc)) from exc
    if constant and poly.degree > 0:
        raise ValidationError(where, f"expected a constant, got degree {poly.degree}")
    return poly


def load_config(path):
    """Read and validate a config file; see the module docstring for shape."""
    with open(path, "rb") as fh:
        raw = fh.read()
    return load_config_bytes(raw)


def load_config_bytes(raw):
    digest = hashlib.sha256(raw).hexdigest()[:12]
    parser = configparser.ConfigParser(
        interpolation=None, delimiters=("=",), comment_prefixes=("#", ";")
    )
    parser.optionxform = str
    try:
        parser.read_string(raw.decode("utf-8"))
    except (UnicodeDecodeError, configparser.Error) as exc:
        raise ParseError(f"config syntax: {exc}", 0) from exc

    sections = {}
    for name in parser.sections():
        if name not in _SECTION_KEYS:
            raise ValidationError(name, "unknown section")
        body = dict(parser.items(name))
        unknown = set(body) - _SECTION_KEYS[name]
        if unknown:
            raise ValidationError(f"{name}.{sorted(unknown)[0]}", "unknown key")
        sections[name] = body

    if "field" not in sections:
        raise ValidationError("field", "section missing")
    kind = sections["field"].get("kind")
    if kind not in _KINDS:
        raise ValidationError("field.kind", f"must be one of {', '.join(_KINDS)}")
    p = None
    if kind in ("Fp", "FpT"):
        text = sections["field"].get("p")
        if text is None:
            raise ValidationError("field.p", "required for Fp and FpT")
        try:
            p = int(text)
        except ValueError as exc:
            raise ValidationError("field.p", f"not an integer: {text!r}") from exc
        if p < 5:
            raise ValidationError("field.p", f"must be at least 5, got {p}")
        try:
            PrimeField(p)
        except (ValueError, EdslabError) as exc:
            raise ValidationError("field.p", str(exc)) from exc
    elif "p" in sections["field"]:
        raise ValidationError("field.p", "only meaningful for Fp and FpT")

    k = _scalar_field(kind, p)
    ff_kind = kind in ("QT", "FpT")

    for slot in ("", "2"):
        if sections.get("curve" + slot) and sections.get("twist" + slot):
            raise ValidationError(f"curve{slot}", f"give [curve{slot}] or [twist{slot}], not both")
        tw = sections.get("twist" + slot)
        if tw is not None:
            if not ff_kind:
                raise ValidationError(f"twist{slot}", "needs a function-field kind (QT or FpT)")
            for key in ("a", "b"):
                if key not in tw:
                    raise ValidationError(f"twist{slot}.{key}", "required")
                _parse_field_value(tw[key], k, f"twist{slot}.{key}", constant=True)
            if "delta" in tw:
                delta = _parse_field_value(tw["delta"], k, f"twist{slot}.delta")
                if delta.degree < 1:
                    raise ValidationError(
                        f"twist{slot}.delta",
                        "constant delta gives the trivial twist, where every "
                        "statement holds vacuously; rejected",
                    )
        cv = sections.get("curve" + slot)
        if cv is not None:
            for key, text in cv.items():
                _parse_field_value(text, k, f"curve{slot}.{key}", constant=not ff_kind)
        pt = sections.get("point" + slot)
        if pt is not None:
            for key in ("x", "y"):
                if key not in pt:
                    raise ValidationError(f"point{slot}.{key}", "required")
            for key, text in pt.items():
                _parse_field_value(text, k, f"point{slot}.{key}", constant=not ff_kind)

    params = dict(sections.get("params", {}))
    for key, text in params.items():
        if key in _INT_PARAMS:
            try:
                value = int(text)
            except ValueError as exc:
                raise ValidationError(f"params.{key}", f"not an integer: {text!r}") from exc
            if value < _INT_PARAMS[key]:
                raise ValidationError(
                    f"params.{key}", f"must be at least {_INT_PARAMS[key]}, got {value}"
                )

    return RunConfig(
        kind=kind,
        p=p,
        curve=_freeze(sections.get("curve")),
        twist=_freeze(sections.get("twist")),
        curve2=_freeze(sections.get("curve2")),
        twist2=_freeze(sections.get("twist2")),
        point=_freeze(sections.get("point")),
        point2=_freeze(sections.get("point2")),
        params=_freeze(sections.get("params", {})),
        digest=digest,
    )


def format_config(cfg):
    """Canonical reprint; load_config_bytes inverts it up to the digest."""
    out = []
    named = {
        "field": {"kind": cfg.kind, **({"p": str(cfg.p)} if cfg.p is not None else {})},
        "curve": _thaw(cfg.curve),
        "twist": _thaw(cfg.twist),
        "point": _thaw(cfg.point),
        "curve2": _thaw(cfg.curve2),
        "twist2": _thaw(cfg.twist2),
        "point2": _thaw(cfg.point2),
        "params": _thaw(cfg.params),
    }
    for name in _SECTION_ORDER:
        body = named[name]
        if not body:
            continue
        out.append(f"[{name}]")
        for key in sorted(body):
            out.append(f"{key} = {body[key]}")
        out.append("")
    return "\n".join(out)


# --------------------------------------------------------------------------
# materialization


def _materialize_pair(cfg, which=1):
    """Build (curve, point) for slot 1 or 2; slot 2 falls back to slot 1."""
    suffix = "" if which == 1 else "2"
    curve_sec = _thaw(cfg.curve if which == 1 else cfg.curve2)
    twist_sec = _thaw(cfg.twist if which == 1 else cfg.twist2)
    point_sec = _thaw(cfg.point if which == 1 else cfg.point2)

    if which == 2 and curve_sec is None and twist_sec is None:
        E, P = _materialize_pair(cfg, 1)
        if point_sec is not None:
            P = _build_point(E, point_sec, "point2")
        return E, P

    k = _scalar_field(cfg.kind, cfg.p)
    if twist_sec is not None:
        a = parse_poly(twist_sec["a"], k).coefficient(0)
        b = parse_poly(twist_sec["b"], k).coefficient(0)
        if "delta" not in twist_sec:
            raise ValidationError(f"twist{suffix}.delta", "required for this command")
        delta = parse_poly(twist_sec["delta"], k)
        td = quadratic_twist(a, b, delta)
        if point_sec is not None:
            return td.curve, _build_point(td.curve, point_sec, "point" + suffix)
        if td.point is None:
            raise ValidationError(
                f"twist{suffix}",
                "delta is not T^3 + a*T + b, so there is no canonical point; "
                f"add a [point{suffix}] section",
            )
        return td.curve, td.point
    if curve_sec is not None:
        if cfg.kind in ("QT", "FpT"):
            base = FunctionField(k)
        else:
            base = k
        coeffs = {}
        for key in ("a1", "a2", "a3", "a4", "a6"):
            text = curve_sec.get(key, "0")
            poly = parse_poly(text, k)
            coeffs[key] = poly if cfg.kind in ("QT", "FpT") else poly.coefficient(0)
        E = curve_new(base, coeffs["a1"], coeffs["a2"], coeffs["a3"], coeffs["a4"], coeffs["a6"])
        if point_sec is None:
            raise ValidationError(f"point{suffix}", "section required for this command")
        return E, _build_point(E, point_sec, "point" + suffix)
    raise ValidationError(f"curve{suffix}", f"a [curve{suffix}] or [twist{suffix}] section is required")


def _build_point(E, point_sec, where):
    k = E.base if not isinstance(E.base, FunctionField) else E.base.coefficient_field
    xs = parse_poly(point_sec["x"], k)
    ys = parse_poly(point_sec["y"], k)
    xd = parse_poly(point_sec.get("x_den", "1"), k)
    yd = parse_poly(point_sec.get("y_den", "1"), k)
    if xd.is_zero or yd.is_zero:
        raise ValidationError(where, "zero denominator")
    if isinstance(E.base, FunctionField):
        return CurvePoint(E.base.elem(RatFunc(xs, xd)), E.base.elem(RatFunc(ys, yd)))
    x = E.base.elem(xs.coefficient(0)) / E.base.elem(xd.coefficient(0))
    y = E.base.elem(ys.coefficient(0)) / E.base.elem(yd.coefficient(0))
    return CurvePoint(x, y)


def _materialize_twist_spec(cfg):
    if cfg.kind != "FpT":
        raise ValidationError("field.kind", "this command needs FpT")
    twist_sec = _thaw(cfg.twist)
    if twist_sec is None:
        raise ValidationError("twist", "section required")
    if "delta" not in twist_sec:
        raise ValidationError("twist.delta", "required for this command")
    k = PrimeField(cfg.p)
    a = parse_poly(twist_sec["a"], k).coefficient(0).raw
    b = parse_poly(twist_sec["b"], k).coefficient(0).raw
    delta = parse_poly(twist_sec["delta"], k)
    P = Q = None
    if cfg.point is not None:
        ff = FunctionField(k)
        sec = _thaw(cfg.point)
        P = _build_point_over(ff, sec, "point", k)
    if cfg.point2 is not None:
        ff = FunctionField(k)
        sec = _thaw(cfg.point2)
        Q = _build_point_over(ff, sec, "point2", k)
    return ffexp.make_twist_spec(cfg.p, a, b, delta, P=P, Q=Q)


def _build_point_over(ff, point_sec, where, k):
    xs = parse_poly(point_sec["x"], k)
    ys = parse_poly(point_sec["y"], k)
    xd = parse_poly(point_sec.get("x_den", "1"), k)
    yd = parse_poly(point_sec.get("y_den", "1"), k)
    if xd.is_zero or yd.is_zero:
        raise ValidationError(where, "zero denominator")
    return CurvePoint(ff.elem(RatFunc(xs, xd)), ff.elem(RatFunc(ys, yd)))


def _param(params, key, default):
    if key in params:
        return int(params[key]) if key in _INT_PARAMS else params[key]
    return default


# --------------------------------------------------------------------------
# cell formatting


def _cell(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Poly):
        return format_poly(value)
    if isinstance(value, RatFunc):
        return format_ratfunc(value)
    if isinstance(value, FieldElem):
        return str(value.raw)
    if value is None:
        return ""
    return str(value)


def _jsonval(value):
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    return _cell(value)


# --------------------------------------------------------------------------
# command handlers


def _kv_section(pairs):
    return Section("summary", ("key", "value"), tuple((k, v) for k, v in pairs))


def _cmd_curve_info(cfg, params):
    E, _ = _materialize_pair(cfg)
    inv = curve_invariants(E)
    j = inv.j
    if isinstance(E.base, FunctionField):
        j_constant = j.num.degree <= 0 and j.den.degree <= 0
    else:
        j_constant = True
    rows = [
        ("b2", inv.b2),
        ("b4", inv.b4),
        ("b6", inv.b6),
        ("b8", inv.b8),
        ("c4", inv.c4),
        ("disc", inv.disc),
        ("j", j),
        ("j_constant", j_constant),
    ]
    return [Section("invariant", ("key", "value"), tuple(rows))]


def _cmd_eds_seq(cfg, params):
    E, P = _materialize_pair(cfg)
    n_max = _param(params, "n_max", 12)
    seq = eds.eds_sequence(E, P, n_max)
    rows = [
        (e.n, e.degD, e.degD / (e.n * e.n), e.D)
        for e in seq
    ]
    return [Section("sequence", ("n", "deg_D", "deg_over_n2", "D"), tuple(rows))]


def _cmd_gcd_table(cfg, params):
    E1, P1 = _materialize_pair(cfg, 1)
    E2, P2 = _materialize_pair(cfg, 2)
    n_max = _param(params, "n_max", 12)
    span = range(1, n_max + 1)
    table = eds.gcd_table(E1, P1, E2, P2, [(i, j) for i in span for j in span])
    rows = [(r.n1, r.n2, r.degg, r.g) for r in table]
    return [Section("table", ("n1", "n2", "deg_gcd", "gcd"), tuple(rows))]


def _cmd_stability(cfg, params):
    E1, P1 = _materialize_pair(cfg, 1)
    E2, P2 = _materialize_pair(cfg, 2)
    n_max = _param(params, "n_max", 12)
    rep = eds.stability_scan(E1, P1, E2, P2, n_max)
    stable = set(rep.stable_set)
    rows = [(n, n in stable) for n in range(1, n_max + 1)]
    summary = _kv_section(
        [
            ("baseline_deg", rep.baseline.degg),
            ("baseline_gcd", rep.baseline.g),
            ("modulus_estimate", rep.modulus_estimate),
            ("exceptional", ";".join(str(n) for n in rep.exceptional_set)),
        ]
    )
    return [Section("diagonal", ("n", "stable"), tuple(rows)), summary]


def _cmd_lemma1(cfg, params):
    E, P = _materialize_pair(cfg)
    m_max = _param(params, "m_max", 6)
    search_bound = _param(params, "search_bound", eds.LEMMA1_SEARCH_BOUND)
    rep = eds.lemma1_check(E, P, m_max, search_bound)
    rows = [(r.m, r.divides, r.cofactor_coprime) for r in rep.rows]
    summary = _kv_section(
        [
            ("base_index", rep.base_index),
            ("base_D", rep.base_D),
            ("all_ok", rep.all_ok),
        ]
    )
    return [Section("rows", ("m", "divides", "cofactor_coprime"), tuple(rows)), summary]


def _cmd_divisibility(cfg, params):
    E, P = _materialize_pair(cfg)
    n_max = _param(params, "n_max", 12)
    rep = eds.divisibility_check(E, P, n_max)
    rows = [(m, n) for m, n in rep.counterexamples]
    summary = _kv_section(
        [
            ("n_max", rep.n_max),
            ("pairs_checked", rep.pairs_checked),
            ("all_ok", rep.all_ok),
        ]
    )
    return [Section("counterexample", ("m", "n"), tuple(rows)), summary]


def _cmd_divpoly_check(cfg, params):
    E, P = _materialize_pair(cfg)
    n = _param(params, "n", 8)
    rep = eds.division_poly_crosscheck(E, P, n)
    rows = [(r.k, r.match) for r in rep.rows]
    return [
        Section("rows", ("k", "match"), tuple(rows)),
        _kv_section([("all_ok", rep.all_ok)]),
    ]


def _cmd_gm_gcd(cfg, params):
    if cfg.kind != "QT":
        raise ValidationError("field.kind", "gm-gcd needs QT")
    if "a" not in params or "b" not in params:
        raise ValidationError("params.a", "params.a and params.b are required for gm-gcd")
    k = Rationals()
    a = parse_poly(params["a"], k)
    b = parse_poly(params["b"], k)
    n_max = _param(params, "n_max", 12)
    rep = eds.gm_gcd_scan(a, b, n_max)
    rows = [(r.n, r.degg, r.g) for r in rep.rows]
    order_rows = [(r.m, r.coprime) for r in rep.order_rows]
    summary = _kv_section(
        [("degenerate", rep.degenerate), ("order_all_ok", rep.order_all_ok)]
    )
    return [
        Section("table", ("n", "deg_gcd", "gcd"), tuple(rows)),
        Section("order", ("m", "coprime"), tuple(order_rows)),
        summary,
    ]


def _cmd_ff_classify(cfg, params):
    spec = _materialize_twist_spec(cfg)
    N = _param(params, "N", 1)
    s_plus, s_minus, excluded = ffexp.classify_primes(spec, N)
    rows = (
        [(pi, pi.degree, "plus", "") for pi in s_plus]
        + [(pi, pi.degree, "minus", "") for pi in s_minus]
        + [(pi, pi.degree, "excluded", reason) for pi, reason in excluded]
    )
    rows.sort(key=lambda r: tuple(r[0].raw_coeffs))
    density = spec.p**N / (2 * N)
    summary = _kv_section(
        [
            ("n_plus", len(s_plus)),
            ("n_minus", len(s_minus)),
            ("n_excluded", len(excluded)),
            ("density", density),
        ]
    )
    return [Section("primes", ("pi", "degree", "class", "detail"), tuple(rows)), summary]


def _cmd_ff_lowerbound(cfg, params):
    spec = _materialize_twist_spec(cfg)
    N = _param(params, "N", 1)
    reports = ffexp.lower_bound_experiment(spec, N)
    rows = []
    summary_rows = []
    ratios = []
    for rep in reports:
        for r in rep.rows:
            rows.append(
                (
                    rep.N,
                    rep.sign,
                    rep.n,
                    r.pi,
                    r.degree,
                    r.legendre,
                    r.n_pi,
                    r.annihilates_P,
                    r.annihilates_Q,
                )
            )
        n, half_n, half_qn, sum_deg = rep.comparison
        summary_rows.append((sum_deg, n, half_n, half_qn))
        ratios.append((f"ratio_sign_{rep.sign:+d}", rep.sum_deg / rep.n))
    kv = _kv_section([("q_dependent", spec.q_dependent)] + ratios)
    return [
        Section(
            "rows",
            (
                "N",
                "sign",
                "n",
                "pi",
                "deg_pi",
                "legendre",
                "n_pi",
                "annihilates_P",
                "annihilates_Q",
            ),
            tuple(rows),
        ),
        Section("summary_rows", ("sum_deg", "n", "half_n", "half_qN"), tuple(summary_rows)),
        kv,
    ]


def _cmd_ff_ppower(cfg, params):
    spec = _materialize_twist_spec(cfg)
    base_n = _param(params, "base_n", 3)
    i = _param(params, "i", 1)
    guard = _param(params, "guard_degree", ffexp.DEFAULT_DEGREE_GUARD)
    rep = ffexp.ppower_check(spec, base_n, i, guard_degree=guard)
    rows = [
        (rep.base_n, rep.i, rep.deg_base, rep.deg_lifted, rep.bound, rep.holds, rep.vacuous)
    ]
    return [
        Section(
            "rows",
            ("base_n", "i", "deg_base", "deg_lifted", "bound", "holds", "vacuous"),
            tuple(rows),
        )
    ]


def _cmd_count_points(cfg, params):
    if cfg.p is None:
        raise ValidationError("field.kind", "count-points needs Fp or FpT")
    twist_sec = _thaw(cfg.twist)
    if twist_sec is None:
        raise ValidationError("twist", "section with a and b required")
    k = PrimeField(cfg.p)
    a = parse_poly(twist_sec["a"], k).coefficient(0).raw
    b = parse_poly(twist_sec["b"], k).coefficient(0).raw
    count, a1 = ffexp.count_points(a, b, cfg.p)
    return [Section("rows", ("count", "a1"), ((count, a1),))]


_HANDLERS = {
    "curve-info": _cmd_curve_info,
    "eds-seq": _cmd_eds_seq,
    "gcd-table": _cmd_gcd_table,
    "stability": _cmd_stability,
    "lemma1": _cmd_lemma1,
    "divisibility": _cmd_divisibility,
    "divpoly-check": _cmd_divpoly_check,
    "gm-gcd": _cmd_gm_gcd,
    "ff-classify": _cmd_ff_classify,
    "ff-lowerbound": _cmd_ff_lowerbound,
    "ff-ppower": _cmd_ff_ppower,
    "count-points": _cmd_count_points,
}


def run_command(cfg, command, n_max=None, N=None, guard_degree=None):
    """Dispatch one command against a loaded config and collect the report.

    The keyword arguments mirror the CLI flags and override the matching
    [params] entries.
    """
    handler = _HANDLERS.get(command)
    if handler is None:
        raise UnknownCommand(f"unknown command {command!r}")
    params = dict(_thaw(cfg.params) or {})
    for key, value in (("n_max", n_max), ("N", N), ("guard_degree", guard_degree)):
        if value is not None:
            if key in _INT_PARAMS and value < _INT_PARAMS[key]:
                raise ValidationError(
                    key, f"must be at least {_INT_PARAMS[key]}, got {value}"
                )
            params[key] = str(value)
    sections = handler(cfg, params)
    return Report(command, cfg.digest, __version__, tuple(sections))


# --------------------------------------------------------------------------
# emission


def render_csv(report):
    lines = [
        f"# command={report.command}",
        f"# config={report.digest}",
        f"# version={report.version}",
    ]
    for section in report.sections:
        lines.append(",".join(section.columns))
        for row in section.rows:
            lines.append(",".join(_cell(v) for v in row))
    return "\n".join(lines) + "\n"


def render_jsonl(report):
    records = [
        {
            "record": "header",
            "command": report.command,
            "config": report.digest,
            "version": report.version,
        }
    ]
    for section in report.sections:
        for row in section.rows:
            rec = {"record": "row", "section": section.name}
            for col, val in zip(section.columns, row):
                rec[col] = _jsonval(val)
            records.append(rec)
    return "\n".join(json.dumps(r, separators=(",", ":")) for r in records) + "\n"


def emit_report(report, fmt="csv", dest=None):
    """Write the report as CSV or JSONL to dest (a path) or stdout."""
    if fmt == "csv":
        text = render_csv(report)
    elif fmt == "jsonl":
        text = render_jsonl(report)
    else:
        raise ValidationError("format", f"unknown format {fmt!r}")
    if dest is None:
        sys.stdout.write(text)
    else:
        with open(dest, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


# --------------------------------------------------------------------------
# entry point


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_argparser():
    parser = _ArgumentParser(prog="edslab", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--config", required=True, help="path to the INI config")
    parser.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    parser.add_argument("--out", default=None, help="output path (default stdout)")
    parser.add_argument("--n-max", type=int, default=None)
    parser.add_argument("--N", type=int, default=None)
    parser.add_argument("--guard-degree", type=int, default=None)
    return parser


def main(argv=None):
    parser = _build_argparser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"edslab: {exc}", file=sys.stderr)
        return 1
    try:
        cfg = load_config(args.config)
        report = run_command(
            cfg, args.command, n_max=args.n_max, N=args.N, guard_degree=args.guard_degree
        )
    except (ParseError, ValidationError, UnknownCommand) as exc:
        print(f"edslab: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"edslab: {exc}", file=sys.stderr)
        return 1
    except (EdslabError, AssertionError) as exc:
        print(f"edslab: assertion failed: {exc}", file=sys.stderr)
        return 2
    try:
        emit_report(report, args.format, args.out)
    except OSError as exc:
        print(f"edslab: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
