"""Point set, polynomial and certificate file formats.

All numbers are exact: integers, or rationals written as ``"num/den"``.
Point sets and polynomials are JSON documents; certificate reports are flat
``key: value`` text with a fixed field order.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from fewdist.clp import Certificate, Check, SparsePairPoly
from fewdist.errors import FewDistError, ParseError
from fewdist.geometry import DistanceSpectrum, PointSet
from fewdist.linalg import Inertia

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


def parse_rational(value) -> Fraction:
    if isinstance(value, bool):
        raise ParseError(f"not a number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL.match(value)
        if m:
            num = int(m.group(1))
            den = int(m.group(2)) if m.group(2) is not None else 1
            if den == 0:
                raise ParseError(f"zero denominator in {value!r}")
            return Fraction(num, den)
    raise ParseError(f"expected an integer or 'num/den' string, got {value!r}")


def format_rational(q: Fraction):
    """JSON value for ``q``: a bare int when integral, else ``"num/den"``."""
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def rational_text(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None


def _count(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{what} must be an integer, got {value!r}")
    return value


def parse_pointset(text: str) -> PointSet:
    doc = _load_json(text)
    if not isinstance(doc, dict) or "dimension" not in doc or "points" not in doc:
        raise ParseError("point set file needs 'dimension' and 'points'")
    dim = _count(doc["dimension"], "dimension")
    raw = doc["points"]
    if not isinstance(raw, list) or not all(isinstance(p, list) for p in raw):
        raise ParseError("'points' must be a list of coordinate lists")
    pts = [[parse_rational(x) for x in p] for p in raw]
    try:
        return PointSet(dim, pts)
    except FewDistError:
        raise
    except ValueError as e:
        raise ParseError(str(e)) from None


def dump_pointset(points: PointSet) -> str:
    lines = [
        "  [" + ", ".join(json.dumps(format_rational(x)) for x in p) + "]" for p in points
    ]
    return (
        "{\n"
        f'  "dimension": {points.dimension},\n'
        '  "points": [\n'
        + ",\n".join("  " + ln for ln in lines)
        + "\n  ]\n}\n"
    )


def parse_polynomial(text: str) -> SparsePairPoly:
    """Sparse pair polynomial::

        {"num_vars": 1, "degree_bound": 2,
         "terms": [{"x": [1], "y": [1], "coeff": "3/2"}]}

    ``degree_bound`` is optional and defaults to the exact degree.
    """
    doc = _load_json(text)
    if not isinstance(doc, dict) or "num_vars" not in doc or "terms" not in doc:
        raise ParseError("polynomial file needs 'num_vars' and 'terms'")
    nv = _count(doc["num_vars"], "num_vars")
    bound = doc.get("degree_bound")
    if bound is not None:
        bound = _count(bound, "degree_bound")
    terms = []
    for t in doc["terms"]:
        if not isinstance(t, dict) or not {"x", "y", "coeff"} <= t.keys():
            raise ParseError(f"term {t!r} needs 'x', 'y' and 'coeff'")
        alpha = [_count(e, "exponent") for e in t["x"]]
        beta = [_count(e, "exponent") for e in t["y"]]
        terms.append((alpha, beta, parse_rational(t["coeff"])))
    try:
        return SparsePairPoly(nv, terms, declared_degree_bound=bound)
    except ValueError as e:
        raise ParseError(str(e)) from None


def dump_polynomial(p: SparsePairPoly) -> str:
    terms = [
        '    {"x": %s, "y": %s, "coeff": %s}'
        % (json.dumps(list(a)), json.dumps(list(b)), json.dumps(format_rational(c)))
        for a, b, c in p.terms
    ]
    return (
        "{\n"
        f'  "num_vars": {p.num_vars},\n'
        f'  "degree_bound": {p.declared_degree_bound},\n'
        '  "terms": [\n' + ",\n".join(terms) + "\n  ]\n}\n"
    )


REPORT_FORMAT = "fewdist-certificate"


def _flag(b: bool) -> str:
    return "true" if b else "false"


def dump_certificate(
    cert: Certificate,
    *,
    version: str,
    input_digest: str,
    timestamp: str | None = None,
) -> str:
    fields = [
        ("format", REPORT_FORMAT),
        ("version", version),
        ("input_sha256", input_digest),
    ]
    if timestamp is not None:
        fields.append(("timestamp", timestamp))
    fields += [
        ("set_size", cert.set_size),
        ("dimension", cert.dimension),
        ("s", cert.s),
        ("spectrum", " ".join(rational_text(q) for q in cert.spectrum)),
        ("clp_rank", cert.clp_rank),
        ("inertia_positive", cert.clp_inertia.positive),
        ("inertia_negative", cert.clp_inertia.negative),
        ("inertia_zero", cert.clp_inertia.zero),
        ("dim_s", cert.dim_s_value),
        ("bbs_bound", cert.bbs_value),
        ("symmetrized", _flag(cert.symmetrized)),
        ("scalar_matrix", _flag(cert.scalar_matrix)),
        ("scalar", rational_text(cert.scalar)),
    ]
    for c in cert.checks:
        fields.append(
            (f"check.{c.name}", f"{c.lhs} {c.relation} {c.rhs} {'pass' if c.passed else 'fail'}")
        )
    fields.append(("result", "pass" if cert.passed else "fail"))
    return "".join(f"{k}: {v}\n".replace(": \n", ":\n") for k, v in fields)


def parse_certificate(text: str) -> tuple[Certificate, dict[str, str]]:
    """Inverse of :func:`dump_certificate`; returns the certificate and the
    metadata fields (version, digest, timestamp)."""
    fields: dict[str, str] = {}
    checks = []
    for line in text.splitlines():
        if not line.strip():
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise ParseError(f"malformed report line {line!r}")
        value = value.strip()
        if key.startswith("check."):
            parts = value.split()
            if len(parts) != 4 or parts[3] not in ("pass", "fail"):
                raise ParseError(f"malformed check line {line!r}")
            checks.append(
                Check(key[len("check."):], int(parts[0]), parts[1], int(parts[2]), parts[3] == "pass")
            )
        else:
            fields[key] = value
    if fields.get("format") != REPORT_FORMAT:
        raise ParseError("not a certificate report")
    try:
        cert = Certificate(
            set_size=int(fields["set_size"]),
            dimension=int(fields["dimension"]),
            s=int(fields["s"]),
            spectrum=DistanceSpectrum(tuple(parse_rational(v) for v in fields["spectrum"].split())),
            clp_rank=int(fields["clp_rank"]),
            clp_inertia=Inertia(
                int(fields["inertia_positive"]),
                int(fields["inertia_negative"]),
                int(fields["inertia_zero"]),
            ),
            dim_s_value=int(fields["dim_s"]),
            bbs_value=int(fields["bbs_bound"]),
            checks=tuple(checks),
            symmetrized=fields["symmetrized"] == "true",
            scalar_matrix=fields["scalar_matrix"] == "true",
            scalar=parse_rational(fields["scalar"]),
        )
    except KeyError as e:
        raise ParseError(f"report is missing field {e.args[0]!r}") from None
    meta = {k: fields[k] for k in ("version", "input_sha256", "timestamp", "result") if k in fields}
    return cert, meta


def human_certificate(cert: Certificate, source: str = "") -> str:
    inr = cert.clp_inertia
    head = f"Certificate for {source}" if source else "Certificate"
    spec = ", ".join(rational_text(q) for q in cert.spectrum) or "(none)"
    lines = [
        head,
        f"  points: {cert.set_size} in dimension {cert.dimension}",
        f"  squared distances: {spec}  (s = {cert.s})",
        f"  M = {rational_text(cert.scalar)} * I: {'yes' if cert.scalar_matrix else 'NO'}",
        f"  rank M = {cert.clp_rank}, inertia r+ = {inr.positive}, r- = {inr.negative}, r0 = {inr.zero}",
        f"  dim_s(A) = {cert.dim_s_value}, C(d+s, s) = {cert.bbs_value}",
        f"  {cert.set_size} = r+ = {inr.positive} <= dim_s = {cert.dim_s_value} "
        f"<= C({cert.dimension}+{cert.s}, {cert.s}) = {cert.bbs_value}",
    ]
    for c in cert.checks:
        lines.append(f"  [{'ok' if c.passed else 'FAIL'}] {c.name}: {c.lhs} {c.relation} {c.rhs}")
    lines.append(f"  result: {'PASS' if cert.passed else 'FAIL'}")
    return "\n".join(lines) + "\n"
