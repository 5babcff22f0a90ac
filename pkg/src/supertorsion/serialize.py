"""JSON (de)serialization for every domain type.

Conventions: rationals as "num/den" strings (plain "num" when integral),
prime-field elements as decimal residue strings, polynomial coefficient
arrays ascending by degree, field specs as {"kind": "Q"} or
{"kind": "Fp", "p": <int>}.
"""

from __future__ import annotations

from fractions import Fraction

from .certificates import TorsionCertificate, VerificationReport, build_certificate
from .curves import AffinePoint, SuperellipticCurve
from .errors import SchemaViolation, SupertorsionError
from .fields import QQ, Field, FieldElement, PrimeField
from .poly import Poly
from .twopacket import AdmissibilityVerdict, PacketFamily


def field_to_json(field: Field) -> dict:
    if field.kind == "Q":
        return {"kind": "Q"}
    return {"kind": "Fp", "p": field.p}


def field_from_json(doc) -> Field:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise SchemaViolation(f"not a field spec: {doc!r}")
    if doc["kind"] == "Q":
        return QQ
    if doc["kind"] == "Fp":
        try:
            return PrimeField(int(doc["p"]))
        except (KeyError, ValueError, TypeError, SupertorsionError) as e:
            raise SchemaViolation(f"bad prime field spec: {doc!r}") from e
    raise SchemaViolation(f"unknown field kind {doc['kind']!r}")


def elem_to_str(x: FieldElement) -> str:
    return str(x.value)


def elem_from_str(field: Field, s) -> FieldElement:
    if isinstance(s, int):
        return field(s)
    if not isinstance(s, str):
        raise SchemaViolation(f"scalar must be a string: {s!r}")
    try:
        if field.kind == "Q":
            return field(Fraction(s))
        return field(int(s))
    except (ValueError, ZeroDivisionError) as e:
        raise SchemaViolation(f"cannot parse scalar {s!r}") from e


def poly_to_json(f: Poly) -> list:
    return [elem_to_str(c) for c in f.coeffs]


def poly_from_json(field: Field, doc) -> Poly:
    if not isinstance(doc, list):
        raise SchemaViolation(f"polynomial must be a list: {doc!r}")
    return Poly(field, [elem_from_str(field, c) for c in doc])


def curve_to_json(curve: SuperellipticCurve) -> dict:
    return {"d": curve.d, "n": curve.n, "field": field_to_json(curve.field),
            "f": poly_to_json(curve.f)}


def curve_from_json(doc) -> SuperellipticCurve:
    _need_keys(doc, ("d", "field", "f"), "curve")
    field = field_from_json(doc["field"])
    f = poly_from_json(field, doc["f"])
    try:
        curve = SuperellipticCurve(field, int(doc["d"]), f)
    except SupertorsionError as e:
        raise SchemaViolation(f"invalid curve: {e}") from e
    if "n" in doc and int(doc["n"]) != curve.n:
        raise SchemaViolation(f"declared n = {doc['n']} but deg f = {curve.n}")
    return curve


def point_to_json(point: AffinePoint) -> dict:
    return {"x": elem_to_str(point.x), "y": elem_to_str(point.y)}


def point_from_json(field: Field, doc) -> AffinePoint:
    _need_keys(doc, ("x", "y"), "point")
    return AffinePoint(elem_from_str(field, doc["x"]), elem_from_str(field, doc["y"]))


def certificate_to_json(cert: TorsionCertificate) -> dict:
    return {
        "n": cert.n, "d": cert.d, "m0": cert.m0,
        "field": field_to_json(cert.field),
        "a": elem_to_str(cert.a), "B": elem_to_str(cert.B),
        "q": poly_to_json(cert.q), "v": poly_to_json(cert.v),
        "f": poly_to_json(cert.f),
    }


def certificate_from_json(doc) -> TorsionCertificate:
    _need_keys(doc, ("n", "d", "field", "a", "B", "q"), "certificate")
    field = field_from_json(doc["field"])
    try:
        cert = build_certificate(int(doc["n"]), int(doc["d"]),
                                 elem_from_str(field, doc["a"]),
                                 elem_from_str(field, doc["B"]),
                                 poly_from_json(field, doc["q"]))
    except SupertorsionError as e:
        raise SchemaViolation(f"invalid certificate: {e}") from e
    for key, poly in (("v", cert.v), ("f", cert.f)):
        if key in doc and poly_from_json(field, doc[key]) != poly:
            raise SchemaViolation(f"declared {key} disagrees with (a, B, q)")
    if "m0" in doc and int(doc["m0"]) != cert.m0:
        raise SchemaViolation(f"declared m0 = {doc['m0']} but m0 = {cert.m0}")
    return cert


def report_to_json(report: VerificationReport) -> dict:
    return {
        "passed": report.passed,
        "oracle_order": report.oracle_order,
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                   for c in report.checks],
    }


def packet_family_to_json(fam: PacketFamily) -> dict:
    return {
        "field": field_to_json(fam.field), "p": fam.p, "n": fam.n,
        "ell0": fam.ell0, "m0": fam.m0,
        "I": [elem_to_str(e) for e in fam.I],
        "lambda": elem_to_str(fam.lam), "C": elem_to_str(fam.C),
        "A1": elem_to_str(fam.A1), "A2": elem_to_str(fam.A2),
        "B1": elem_to_str(fam.B1), "B2": elem_to_str(fam.B2),
        "u": poly_to_json(fam.u), "v": poly_to_json(fam.v),
        "f": poly_to_json(fam.f), "sign": fam.sign, "twisted": fam.twisted,
    }


def admissibility_to_json(verdict: AdmissibilityVerdict) -> dict:
    return {
        "n": verdict.n, "d": verdict.d, "m0": verdict.m0, "ell0": verdict.ell0,
        "slack": verdict.slack, "verdict": verdict.verdict,
        "reasons": list(verdict.reasons),
        "char0_only": "necessary conditions proved for characteristic 0",
    }


def _need_keys(doc, keys, what):
    if not isinstance(doc, dict):
        raise SchemaViolation(f"{what} must be an object: {doc!r}")
    missing = [k for k in keys if k not in doc]
    if missing:
        raise SchemaViolation(f"{what} is missing keys {missing}")
