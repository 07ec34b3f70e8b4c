"""Configuration schema for orbifold configurations, and the pipeline
that turns a parsed configuration into an invariant report.

Configurations are JSON documents.  Schema (all coordinates 0-based):

{
  "name": str,
  "ambient_weights": [int, ...],
  "variety": {                       # V inside the ambient space
    "degrees": [int, ...],           # [] means V is the ambient space
    "exponents": [int, ...] | null,  # diagonal member, one per coordinate
    "certified_quasismooth": bool    # external certificate, optional
  },
  "divisor": {                       # D as a complete intersection in the
    "degrees": [int, ...],           # ambient space (including V's degrees)
    "h11": int                       # h^{1,1}(D), default 1 (Lefschetz)
  },
  "sigma": [                         # components of the self-intersection
    {"degrees": [int, ...], "multiplicity": int,
     "weights": [int, ...] | absent  # defaults to the ambient weights
    }, ...
  ],
  "involution": {
    "permutation": [int, ...],
    "phase_powers": [int, ...]       # eps_i = i ** phase_powers[i]
  },
  "polynomials": [                   # forms that the involution preserves
    {"name": str,
     "terms": [{"exponents": [int, ...], "coeff": str}, ...]}, ...
  ],
  "assume_simply_connected": bool,   # smooth locus etc.; not machine-checked
  "overrides": {"chi_V": int, "h31_V": int}  # optional, testing only
}

``dump_config(load_config(text))`` is canonical and idempotent, giving a
bit-exact round-trip of the schema.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from spin7 import charnum, invariants, wps


class SchemaError(ValueError):
    """The configuration document does not match the schema."""


class AdmissibilityFailure(ValueError):
    """A mathematical admissibility check failed; reasons attached."""

    def __init__(self, reasons: list[str]):
        super().__init__("; ".join(reasons))
        self.reasons = list(reasons)


@dataclass(frozen=True)
class SigmaSpec:
    weights: tuple[int, ...]
    degrees: tuple[int, ...]
    multiplicity: int


@dataclass(frozen=True)
class Configuration:
    """A parsed configuration document."""

    name: str
    ambient_weights: tuple[int, ...]
    variety_degrees: tuple[int, ...]
    variety_exponents: tuple[int, ...] | None
    certified_quasismooth: bool
    divisor_degrees: tuple[int, ...]
    divisor_h11: int
    sigma: tuple[SigmaSpec, ...]
    involution: wps.InvolutionDatum
    polynomials: tuple[tuple[str, wps.Polynomial], ...]
    assume_simply_connected: bool
    overrides: dict[str, int]

    def variety_datum(self) -> wps.CompleteIntersectionDatum:
        return wps.CompleteIntersectionDatum(
            wps.WeightedSpace(self.ambient_weights),
            self.variety_degrees,
            self.variety_exponents,
            self.certified_quasismooth)


def _require(condition: bool, message: str):
    if not condition:
        raise SchemaError(message)


def _int_list(value: Any, where: str) -> tuple[int, ...]:
    _require(isinstance(value, list)
             and all(isinstance(x, int) and not isinstance(x, bool)
                     for x in value),
             f"{where} must be a list of integers")
    return tuple(value)


def load_config(text: str) -> Configuration:
    """Parse and validate a configuration document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from None
    _require(isinstance(doc, dict), "top level must be an object")
    known = {"name", "ambient_weights", "variety", "divisor", "sigma",
             "involution", "polynomials", "assume_simply_connected",
             "overrides"}
    unknown = set(doc) - known
    _require(not unknown, f"unknown fields: {sorted(unknown)}")
    for field in ("name", "ambient_weights", "variety", "divisor", "sigma",
                  "involution"):
        _require(field in doc, f"missing field: {field}")

    name = doc["name"]
    _require(isinstance(name, str) and name, "name must be a nonempty string")
    weights = _int_list(doc["ambient_weights"], "ambient_weights")
    n1 = len(weights)

    variety = doc["variety"]
    _require(isinstance(variety, dict), "variety must be an object")
    vdeg = _int_list(variety.get("degrees", []), "variety.degrees")
    vexp_raw = variety.get("exponents")
    vexp = (None if vexp_raw is None
            else _int_list(vexp_raw, "variety.exponents"))
    certified = bool(variety.get("certified_quasismooth", False))

    divisor = doc["divisor"]
    _require(isinstance(divisor, dict), "divisor must be an object")
    ddeg = _int_list(divisor.get("degrees", []), "divisor.degrees")
    _require(len(ddeg) > len(vdeg) and ddeg[:len(vdeg)] == vdeg,
             "divisor.degrees must extend variety.degrees by the cut of D")
    h11 = divisor.get("h11", 1)
    _require(isinstance(h11, int) and h11 >= 1, "divisor.h11 must be >= 1")

    sigma_docs = doc["sigma"]
    _require(isinstance(sigma_docs, list) and sigma_docs,
             "sigma must be a nonempty list")
    sigma = []
    for i, s in enumerate(sigma_docs):
        _require(isinstance(s, dict), f"sigma[{i}] must be an object")
        s_weights = (_int_list(s["weights"], f"sigma[{i}].weights")
                     if "weights" in s else weights)
        s_degrees = _int_list(s.get("degrees", []), f"sigma[{i}].degrees")
        mult = s.get("multiplicity", 1)
        _require(isinstance(mult, int) and mult >= 1,
                 f"sigma[{i}].multiplicity must be a positive integer")
        _require(len(s_weights) - 1 - len(s_degrees) == 2,
                 f"sigma[{i}] must describe a surface")
        sigma.append(SigmaSpec(s_weights, s_degrees, mult))

    inv_doc = doc["involution"]
    _require(isinstance(inv_doc, dict), "involution must be an object")
    perm = _int_list(inv_doc.get("permutation", []),
                     "involution.permutation")
    phases = _int_list(inv_doc.get("phase_powers", []),
                       "involution.phase_powers")
    _require(len(perm) == n1 and len(phases) == n1,
             "involution entries must match the number of coordinates")
    try:
        involution = wps.InvolutionDatum(perm, phases)
    except ValueError as exc:
        raise SchemaError(f"involution: {exc}") from None

    polys = []
    for i, p in enumerate(doc.get("polynomials", [])):
        _require(isinstance(p, dict) and isinstance(p.get("name"), str),
                 f"polynomials[{i}] must be an object with a name")
        terms = p.get("terms", [])
        _require(isinstance(terms, list) and terms,
                 f"polynomials[{i}].terms must be a nonempty list")
        entries = []
        for t in terms:
            _require(isinstance(t, dict), "each term must be an object")
            exps = _int_list(t.get("exponents", []), "term exponents")
            _require(len(exps) == n1, "term exponents must cover all "
                     "coordinates")
            coeff = t.get("coeff", "1")
            _require(isinstance(coeff, str), "term coeff must be a string")
            try:
                entries.append((exps, wps.GaussianRational.parse(coeff)))
            except ValueError as exc:
                raise SchemaError(str(exc)) from None
        polys.append((p["name"], wps.parse_polynomial(entries)))

    overrides = doc.get("overrides", {})
    _require(isinstance(overrides, dict)
             and set(overrides) <= {"chi_V", "h31_V"}
             and all(isinstance(v, int) for v in overrides.values()),
             "overrides may set integers chi_V and h31_V only")

    try:
        config = Configuration(
            name=name,
            ambient_weights=weights,
            variety_degrees=vdeg,
            variety_exponents=vexp,
            certified_quasismooth=certified,
            divisor_degrees=ddeg,
            divisor_h11=h11,
            sigma=tuple(sigma),
            involution=involution,
            polynomials=tuple(polys),
            assume_simply_connected=bool(
                doc.get("assume_simply_connected", True)),
            overrides=dict(overrides),
        )
        config.variety_datum()  # validates weights/degrees/exponents
    except SchemaError:
        raise
    except ValueError as exc:
        raise SchemaError(str(exc)) from None
    return config


def dump_config(config: Configuration) -> str:
    """Serialize a configuration canonically (stable key order, 2-space
    indentation, trailing newline)."""
    doc: dict[str, Any] = {
        "name": config.name,
        "ambient_weights": list(config.ambient_weights),
        "variety": {
            "degrees": list(config.variety_degrees),
            "exponents": (None if config.variety_exponents is None
                          else list(config.variety_exponents)),
            "certified_quasismooth": config.certified_quasismooth,
        },
        "divisor": {
            "degrees": list(config.divisor_degrees),
            "h11": config.divisor_h11,
        },
        "sigma": [
            {"weights": list(s.weights), "degrees": list(s.degrees),
             "multiplicity": s.multiplicity}
            for s in config.sigma
        ],
        "involution": {
            "permutation": list(config.involution.permutation),
            "phase_powers": list(config.involution.phase_powers),
        },
        "polynomials": [
            {"name": name,
             "terms": [{"exponents": list(exps), "coeff": str(coeff)}
                       for exps, coeff in sorted(poly.items())]}
            for name, poly in config.polynomials
        ],
        "assume_simply_connected": config.assume_simply_connected,
        "overrides": config.overrides,
    }
    return json.dumps(doc, indent=2) + "\n"


# ---------------------------------------------------------------------------
# analysis pipeline
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AnalysisResult:
    """Everything computed while analyzing a configuration."""

    config: Configuration
    checks: tuple[tuple[str, str], ...]   # (check name, outcome note)
    chi_V: charnum.ChiResult
    h31_V: int
    chi_D: int
    h21_D: int
    k: int
    sigma_numbers: tuple[tuple[int, int, int], ...]  # (chi, p_g, mult)
    report: invariants.InvariantReport


def analyze(config: Configuration,
            allow_uncertified: bool = False) -> AnalysisResult:
    """Run all admissibility checks and compute the invariant report.

    Raises ``AdmissibilityFailure`` when a mathematical check fails and
    ``wps.UnsupportedError`` when a check cannot be mechanized and no
    certificate or override permits skipping it.
    """
    checks: list[tuple[str, str]] = []
    reasons: list[str] = []
    variety = config.variety_datum()
    space = variety.space

    ok, violations = wps.well_formed(variety)
    checks.append(("well-formed (V)", "pass" if ok else "FAIL"))
    if not ok:
        reasons.extend(f"well-formedness: {v}" for v in violations)
        raise AdmissibilityFailure(reasons)

    if len(config.divisor_degrees) <= 2:
        divisor = wps.CompleteIntersectionDatum(space,
                                                config.divisor_degrees)
        ok_d, violations_d = wps.well_formed(divisor)
        checks.append(("well-formed (D)", "pass" if ok_d else "FAIL"))
        if not ok_d:
            reasons.extend(f"well-formedness of D: {v}"
                           for v in violations_d)
            raise AdmissibilityFailure(reasons)
    else:
        checks.append(("well-formed (D)",
                       "skipped: more than two hypersurfaces"))

    if variety.degrees and variety.exponents is None:
        if not (variety.certified_quasismooth or allow_uncertified):
            raise wps.UnsupportedError(
                "unsupported: general quasismoothness; supply diagonal "
                "exponents, a certificate, or --allow-uncertified")
        checks.append(("quasismooth (V)", "certified externally"))
    else:
        qs_ok, qs_note = wps.diagonal_quasismooth(variety)
        checks.append(("quasismooth (V)", "pass" if qs_ok else "FAIL"))
        if not qs_ok:
            raise AdmissibilityFailure([f"quasismoothness: {qs_note}"])

    iso = wps.isolated_z4_check(variety)
    checks.append(("isolated Z4 singularities",
                   "pass" if (iso.ok and iso.action_ok and iso.k >= 1)
                   else "FAIL"))
    if not iso.ok or not iso.action_ok:
        reasons.extend(f"singularities: {r}" for r in iso.reasons)
        raise AdmissibilityFailure(reasons or ["singularities: check failed"])
    if iso.k < 1:
        raise AdmissibilityFailure(
            ["singularities: the singular locus is empty"])

    inv_check = wps.involution_check(
        variety, config.involution,
        [poly for _, poly in config.polynomials])
    checks.append(("involution", "pass" if inv_check.ok else "FAIL"))
    if not inv_check.ok:
        reasons.extend(f"involution: {r}" for r in inv_check.reasons)
        raise AdmissibilityFailure(reasons)

    anticanonical = wps.anticanonical_degree(variety)
    divisor_cut = sum(config.divisor_degrees) - sum(config.variety_degrees)
    checks.append(("anticanonical divisor degree",
                   "pass" if divisor_cut == anticanonical else "FAIL"))
    if divisor_cut != anticanonical:
        raise AdmissibilityFailure(
            [f"divisor degree {divisor_cut} does not match the "
             f"anticanonical degree {anticanonical}"])

    orders = []
    for group in iso.points:
        orders.extend([group.stratum.order] * group.count)

    chi_v = charnum.euler_characteristics(
        space.weights, config.variety_degrees, orders)
    chi_v_val = config.overrides.get("chi_V", chi_v.chi_top)

    if config.variety_degrees:
        assert variety.exponents is not None
        hodge_row = charnum.steenbrink_hodge(space.weights,
                                             config.variety_degrees[0])
        h31 = hodge_row[1]  # h^{n-2, 1} = h^{3,1} for a 4-fold
    else:
        h31 = 0  # the ambient space has rational cohomology generated
        # in degree 2, so no (3,1)-classes
    h31 = config.overrides.get("h31_V", h31)

    chi_d = charnum.euler_characteristics(
        space.weights, config.divisor_degrees).chi_top
    h21_d = charnum.cy3_hodge_from_chi(chi_d, config.divisor_h11)

    sigma_numbers = []
    for s in config.sigma:
        chi_s, _, pg_s = charnum.noether_pg(s.weights, s.degrees)
        sigma_numbers.append((chi_s, pg_s, s.multiplicity))

    cfg = invariants.OrbifoldConfiguration(
        chi_V=chi_v_val,
        h31_V=h31,
        chi_D=chi_d,
        h21_D=h21_d,
        k=iso.k,
        orders=tuple(orders),
        sigma=tuple(invariants.SigmaComponent(c, p, m)
                    for c, p, m in sigma_numbers),
        simply_connected=config.assume_simply_connected,
    )
    try:
        report = invariants.compute_report(cfg)
    except ValueError as exc:
        raise AdmissibilityFailure([str(exc)]) from None
    return AnalysisResult(
        config=config,
        checks=tuple(checks),
        chi_V=chi_v,
        h31_V=h31,
        chi_D=chi_d,
        h21_D=h21_d,
        k=iso.k,
        sigma_numbers=tuple(sigma_numbers),
        report=report,
    )
