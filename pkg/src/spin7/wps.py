"""Weighted projective spaces and admissibility checks.

Implements the arithmetic around complex weighted projective spaces
CP^n_a: well-formedness of hypersurfaces and complete intersections,
singular strata from weight gcds, quasismoothness certification for
diagonal (Fermat-type) members, the isolated-Z4-singularity condition,
antiholomorphic involutions of coordinate-swap type, and a brute-force
scan for weight systems passing the necessary admissibility conditions.

Checks that would require general commutative algebra (Groebner bases,
arbitrary polynomials) are deliberately out of scope; they raise
``UnsupportedError`` so a caller can certify externally.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction


class UnsupportedError(ValueError):
    """The datum is outside the machine-checkable fragment."""


# ---------------------------------------------------------------------------
# Gaussian rationals (coefficients of defining polynomials)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GaussianRational:
    """An exact complex number re + im*i with rational parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    def __truediv__(self, other: "GaussianRational") -> "GaussianRational":
        n = other.norm()
        if not n:
            raise ZeroDivisionError("division by zero")
        return self * other.conjugate() * GaussianRational(Fraction(1) / n)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        im_text = "i" if mag == 1 else f"{mag}i"
        return f"{self.re}{sign}{im_text}"

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Parse literals like '1', '-2/3', 'i', '-i', '2i', '1+2i'."""
        m = _COMPLEX_PATTERN.match(text)
        if not m or (m.group("re") is None and m.group("im") is None):
            raise ValueError(f"bad complex rational literal: {text!r}")
        re_part = Fraction(m.group("re")) if m.group("re") else Fraction(0)
        im_part = Fraction(0)
        if m.group("im"):
            body = m.group("im")[:-1]  # strip the trailing i
            if body in ("", "+"):
                im_part = Fraction(1)
            elif body == "-":
                im_part = Fraction(-1)
            else:
                im_part = Fraction(body)
        return cls(re_part, im_part)


_COMPLEX_PATTERN = re.compile(
    r"^\s*(?P<re>[+-]?\d+(?:/\d+)?(?![0-9/]*i))?\s*"
    r"(?P<im>[+-]?(?:\d+(?:/\d+)?)?i)?\s*$")

I_UNIT = GaussianRational(Fraction(0), Fraction(1))


def unit_power(k: int) -> GaussianRational:
    """i**k as an exact Gaussian rational."""
    return [GaussianRational(Fraction(1)), I_UNIT,
            GaussianRational(Fraction(-1)),
            GaussianRational(Fraction(0), Fraction(-1))][k % 4]


# A polynomial in the homogeneous coordinates: exponent tuple -> coefficient.
Polynomial = dict[tuple[int, ...], GaussianRational]


def parse_polynomial(entries) -> Polynomial:
    """Build a polynomial from [(exponent tuple, coeff literal or value)]."""
    poly: Polynomial = {}
    for exps, coeff in entries:
        c = (coeff if isinstance(coeff, GaussianRational)
             else GaussianRational.parse(str(coeff)))
        key = tuple(int(e) for e in exps)
        if key in poly:
            raise ValueError(f"repeated monomial {key}")
        if c:
            poly[key] = c
    return poly


# ---------------------------------------------------------------------------
# weighted spaces and strata
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WeightedSpace:
    """The weight system of CP^n_a."""

    weights: tuple[int, ...]

    def __post_init__(self):
        if len(self.weights) < 2:
            raise ValueError("need at least two weights")
        if any(a < 1 for a in self.weights):
            raise ValueError("weights must be positive")
        if math.gcd(*self.weights) != 1:
            raise ValueError("weights must have gcd 1")

    @property
    def n(self) -> int:
        return len(self.weights) - 1


@dataclass(frozen=True)
class SingularStratum:
    """A maximal singular stratum {z_j = 0 for j not in indices}."""

    indices: tuple[int, ...]  # 0-based, sorted
    order: int                # isotropy order m = gcd of the weights on S
    local_weights: tuple[int, ...]  # residues a_j mod m for j not in indices

    @property
    def dimension(self) -> int:
        return len(self.indices) - 1


def singular_strata(space: WeightedSpace) -> list[SingularStratum]:
    """Maximal singular strata: subsets S with gcd >= 2 that cannot be
    enlarged without lowering the gcd."""
    a = space.weights
    n1 = len(a)
    found = []
    for r in range(1, n1 + 1):
        for combo in itertools.combinations(range(n1), r):
            m = math.gcd(*(a[i] for i in combo))
            if m < 2:
                continue
            extendable = any(
                j not in combo and math.gcd(m, a[j]) == m
                for j in range(n1))
            if extendable:
                continue
            residues = tuple(a[j] % m for j in range(n1) if j not in combo)
            found.append(SingularStratum(combo, m, residues))
    found.sort(key=lambda s: s.indices)
    return found


# ---------------------------------------------------------------------------
# complete intersections
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CompleteIntersectionDatum:
    """A (possibly empty) list of hypersurfaces in CP^n_a.

    ``exponents`` describes a diagonal defining polynomial
    f = sum c_i z_i^{e_i} for a single hypersurface; None means the
    member is not diagonal (machine certification unavailable).
    """

    space: WeightedSpace
    degrees: tuple[int, ...] = ()
    exponents: tuple[int, ...] | None = None
    certified_quasismooth: bool = False

    def __post_init__(self):
        if any(d < 1 for d in self.degrees):
            raise ValueError("degrees must be positive")
        if len(self.degrees) > self.space.n:
            raise ValueError("too many hypersurfaces")
        if self.exponents is not None:
            if len(self.degrees) != 1:
                raise ValueError(
                    "diagonal exponents apply to a single hypersurface")
            if len(self.exponents) != len(self.space.weights):
                raise ValueError("one exponent per coordinate")
            d = self.degrees[0]
            for e, a in zip(self.exponents, self.space.weights):
                if e < 1 or e * a != d:
                    raise ValueError(
                        "diagonal exponents must satisfy e_i * a_i = d")

    @property
    def dimension(self) -> int:
        return self.space.n - len(self.degrees)


def _gcd_omitting(weights: tuple[int, ...], omit: set[int]) -> int:
    rest = [a for i, a in enumerate(weights) if i not in omit]
    return math.gcd(*rest) if rest else 0


def well_formed(ci: CompleteIntersectionDatum) -> tuple[bool, list[str]]:
    """Divisibility conditions making adjunction valid.

    Supports the ambient space itself and complete intersections of at
    most two hypersurfaces; raises ``UnsupportedError`` beyond that.
    """
    a = ci.space.weights
    k = len(ci.degrees)
    if k > 2:
        raise UnsupportedError(
            "unsupported: general well-formedness for three or more "
            "hypersurfaces")
    violations: list[str] = []
    n1 = len(a)
    for i in range(n1):
        if _gcd_omitting(a, {i}) != 1:
            violations.append(
                f"gcd of weights omitting index {i} is not 1")
    if k >= 1:
        for i, j in itertools.combinations(range(n1), 2):
            g = _gcd_omitting(a, {i, j})
            if k == 1:
                if ci.degrees[0] % g:
                    violations.append(
                        f"gcd {g} omitting indices {{{i},{j}}} does not "
                        f"divide the degree {ci.degrees[0]}")
            else:
                if any(d % g for d in ci.degrees):
                    violations.append(
                        f"gcd {g} omitting indices {{{i},{j}}} does not "
                        f"divide both degrees {ci.degrees}")
    if k == 2:
        for trio in itertools.combinations(range(n1), 3):
            g = _gcd_omitting(a, set(trio))
            if all(d % g for d in ci.degrees):
                violations.append(
                    f"gcd {g} omitting indices {set(trio)} divides "
                    f"neither degree of {ci.degrees}")
    return (not violations, violations)


def anticanonical_degree(ci: CompleteIntersectionDatum) -> int:
    """Degree of -K in O(1)-units: sum of weights minus sum of degrees."""
    return sum(ci.space.weights) - sum(ci.degrees)


def linear_cone_detect(ci: CompleteIntersectionDatum) -> list[int]:
    """Indices i with a_i equal to the hypersurface degree (the defining
    polynomial may contain the bare coordinate z_i)."""
    if len(ci.degrees) != 1:
        raise ValueError("linear-cone detection applies to one hypersurface")
    d = ci.degrees[0]
    return [i for i, a in enumerate(ci.space.weights) if a == d]


def diagonal_quasismooth(ci: CompleteIntersectionDatum
                         ) -> tuple[bool, str]:
    """Certify quasismoothness of a diagonal member (or the ambient space).

    A diagonal polynomial with every variable present has gradient
    vanishing only at the origin, so the affine cone is smooth.
    """
    if not ci.degrees:
        return True, "ambient space; nothing to certify"
    if ci.exponents is None:
        raise UnsupportedError(
            "unsupported: general quasismoothness; supply diagonal "
            "exponents or certify externally")
    d = ci.degrees[0]
    for i, a in enumerate(ci.space.weights):
        if d % a:
            return False, (f"variable not represented: weight {a} at index "
                           f"{i} admits no pure power of degree {d}")
    return True, "diagonal member with every variable present"


# ---------------------------------------------------------------------------
# isolated Z4 singularities
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SingularPointGroup:
    """Isolated singular points of the variety lying on one ambient stratum."""

    stratum: SingularStratum
    count: int
    residues: tuple[int, ...]  # local weights of the variety directions


@dataclass(frozen=True)
class IsolatedCheck:
    ok: bool                      # all singular intersections are isolated
    k: int                        # number of singular points on the variety
    action_ok: bool               # every local action is the scalar Z4 model
    points: tuple[SingularPointGroup, ...]
    reasons: tuple[str, ...]


def isolated_z4_check(ci: CompleteIntersectionDatum) -> IsolatedCheck:
    """Check that the variety meets the ambient singular locus in isolated
    points whose local model is the scalar Z4 action.

    Supported shapes: the ambient space itself, or a single diagonal
    hypersurface.  The local action check requires every residue weight
    (mod the isotropy order m) to be the same unit, so that after
    normalizing the generator the action is multiplication by i on every
    coordinate; this also forces m = 4 with exactly four transverse
    directions.
    """
    if len(ci.degrees) > 1 or (ci.degrees and ci.exponents is None):
        raise UnsupportedError(
            "unsupported: isolated-singularity check needs the ambient "
            "space or a single diagonal hypersurface")
    strata = singular_strata(ci.space)
    reasons: list[str] = []
    groups: list[SingularPointGroup] = []
    isolated = True
    action_ok = True
    vdim = ci.dimension
    for stratum in strata:
        if not ci.degrees:
            if stratum.dimension > 0:
                isolated = False
                reasons.append(
                    f"stratum {stratum.indices} has complex dimension "
                    f"{stratum.dimension}: singular locus not isolated")
                continue
            count = 1
            residues = stratum.local_weights
        else:
            s = stratum.indices
            if len(s) == 1:
                # diagonal member contains c * z_i^{e_i}, so the
                # coordinate point is not on the variety
                continue
            if len(s) == 2:
                i, j = s
                a = ci.space.weights
                e = ci.exponents
                if a[i] != a[j]:
                    raise UnsupportedError(
                        "unsupported: stratum with unequal weights")
                count = e[i]  # roots of z_i^e + c z_j^e, all simple
                residues = stratum.local_weights
            else:
                isolated = False
                reasons.append(
                    f"stratum {stratum.indices} meets the hypersurface in "
                    "a positive-dimensional set")
                continue
        m = stratum.order
        if m != 4:
            action_ok = False
            reasons.append(
                f"stratum {stratum.indices}: isotropy order {m}, not 4")
        if len(residues) != vdim or len(set(residues)) != 1 \
                or math.gcd(residues[0], m) != 1:
            action_ok = False
            reasons.append(
                f"stratum {stratum.indices}: local weights {residues} are "
                "not a single unit repeated over the variety directions")
        groups.append(SingularPointGroup(stratum, count, residues))
    k = sum(g.count for g in groups)
    return IsolatedCheck(ok=isolated, k=k, action_ok=action_ok,
                         points=tuple(groups), reasons=tuple(reasons))


# ---------------------------------------------------------------------------
# involutions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InvolutionDatum:
    """An antiholomorphic map z_i -> eps_i * conj(z_{sigma(i)}) with
    eps_i = i^{phase_powers[i]}."""

    permutation: tuple[int, ...]          # sigma, 0-based
    phase_powers: tuple[int, ...]         # exponents of i, mod 4

    def __post_init__(self):
        n1 = len(self.permutation)
        if sorted(self.permutation) != list(range(n1)):
            raise ValueError("not a permutation")
        if any(self.permutation[j] != i
               for i, j in enumerate(self.permutation)):
            raise ValueError("the permutation must square to the identity")
        if len(self.phase_powers) != n1:
            raise ValueError("one phase per coordinate")

    def phase(self, i: int) -> GaussianRational:
        return unit_power(self.phase_powers[i])


@dataclass(frozen=True)
class InvolutionCheck:
    ok: bool
    fixed_count: int
    reasons: tuple[str, ...]


def _projective_involution_unit(space: WeightedSpace,
                                inv: InvolutionDatum) -> int | None:
    """Exponent q such that the square of the map is scaling by i^q,
    i.e. phase(i) * conj(phase(sigma(i))) = (i^q)^{a_i} for all i."""
    sigma, p, a = inv.permutation, inv.phase_powers, space.weights
    for q in range(4):
        if all((p[i] - p[sigma[i]] - q * a[i]) % 4 == 0
               for i in range(len(a))):
            return q
    return None


def _polynomial_preserved(poly: Polynomial,
                          inv: InvolutionDatum) -> tuple[bool, str]:
    """Is poly o rho a scalar multiple of conj(poly)?"""
    sigma = inv.permutation
    transformed: Polynomial = {}
    for exps, coeff in poly.items():
        new_exps = [0] * len(sigma)
        phase = GaussianRational(Fraction(1))
        for i, e in enumerate(exps):
            new_exps[sigma[i]] = e
            if e:
                phase = phase * unit_power(inv.phase_powers[i] * e)
        transformed[tuple(new_exps)] = coeff * phase
    conj = {exps: c.conjugate() for exps, c in poly.items()}
    if set(transformed) != set(conj):
        missing = set(transformed) ^ set(conj)
        return False, f"monomial support not preserved: {sorted(missing)}"
    scale = None
    for exps, c in transformed.items():
        ratio = c / conj[exps]
        if scale is None:
            scale = ratio
        elif not (ratio - scale == GaussianRational()):
            return False, (f"monomial {exps}: coefficient ratio {ratio} "
                           f"differs from {scale}")
    return True, ""


def involution_check(ci: CompleteIntersectionDatum,
                     inv: InvolutionDatum,
                     polynomials: list[Polynomial]) -> InvolutionCheck:
    """Verify the involution requirements of an admissible configuration.

    Checks: weight compatibility and projective involutivity; each
    supplied polynomial (defining equations and divisor cuts) maps to a
    scalar multiple of its own conjugate; and the fixed locus on the
    variety equals the isolated singular set.  The fixed-locus analysis
    is implemented for the coordinate-pairing shape of the maps used
    here; other shapes raise ``UnsupportedError``.
    """
    sigma = inv.permutation
    a = ci.space.weights
    reasons: list[str] = []
    if len(sigma) != len(a):
        raise ValueError("involution size does not match the space")
    for i in range(len(a)):
        if sigma[sigma[i]] != i:
            reasons.append(f"permutation is not an involution at index {i}")
        if a[sigma[i]] != a[i]:
            reasons.append(f"weights differ along the permutation: "
                           f"a[{i}]={a[i]}, a[{sigma[i]}]={a[sigma[i]]}")
    if reasons:
        return InvolutionCheck(False, 0, tuple(reasons))
    if _projective_involution_unit(ci.space, inv) is None:
        reasons.append("map squared is not a projective identity")
        return InvolutionCheck(False, 0, tuple(reasons))

    for idx, poly in enumerate(polynomials):
        ok, why = _polynomial_preserved(poly, inv)
        if not ok:
            reasons.append(f"polynomial {idx} not preserved: {why}")
    if reasons:
        return InvolutionCheck(False, 0, tuple(reasons))

    # fixed locus: coordinates in "free" 2-cycles must vanish at any
    # fixed point, since there eps_i * conj(eps_j) must be 1
    free: set[int] = set()
    for i in range(len(a)):
        j = sigma[i]
        if j != i:
            ratio = inv.phase(i) * inv.phase(j).conjugate()
            if not (ratio - GaussianRational(Fraction(1))
                    == GaussianRational()):
                free.add(i)
                free.add(j)
    support = [i for i in range(len(a)) if i not in free]

    singular = isolated_z4_check(ci)
    for group in singular.points:
        if not set(group.stratum.indices) <= set(support):
            reasons.append(
                f"singular points on stratum {group.stratum.indices} are "
                "not fixed by the involution")
    if reasons:
        return InvolutionCheck(False, 0, tuple(reasons))

    fixed_count = _fixed_locus_count(ci, inv, support, reasons)
    if fixed_count is None:
        return InvolutionCheck(False, 0, tuple(reasons))
    if fixed_count != singular.k:
        reasons.append(
            f"fixed locus has {fixed_count} points but the singular set "
            f"has {singular.k}")
        return InvolutionCheck(False, fixed_count, tuple(reasons))
    return InvolutionCheck(True, fixed_count, tuple(reasons))


def _fixed_locus_count(ci: CompleteIntersectionDatum, inv: InvolutionDatum,
                       support: list[int],
                       reasons: list[str]) -> int | None:
    """Count fixed points of the involution on the variety.

    ``support`` lists the coordinates allowed to be nonzero at a fixed
    point.  Returns None (appending a reason) when the fixed locus is
    positive-dimensional or the shape is out of scope.
    """
    sigma = inv.permutation
    if not ci.degrees:
        if len(support) != 1:
            reasons.append(
                "fixed locus of the involution is positive-dimensional "
                f"(free coordinates {support})")
            return None
        return 1  # the coordinate point, fixed since sigma fixes it
    if ci.exponents is None:
        raise UnsupportedError(
            "unsupported: fixed-locus analysis needs a diagonal member")
    if len(support) == 1:
        # the single coordinate point is not on a diagonal hypersurface
        return 0
    if len(support) == 2:
        i, j = support
        e = ci.exponents
        if e[i] != e[j]:
            raise UnsupportedError(
                "unsupported: unequal exponents on the fixed block")
        if sigma[i] == j:
            # roots [t, 1] with t^e determined; |t| = 1 for the diagonal
            # members used here, and then every root is fixed exactly
            # when the two phases agree
            if inv.phase_powers[i] % 4 == inv.phase_powers[j] % 4:
                return e[i]
            return 0
        # sigma fixes i and j separately: [t, 1] fixed iff
        # t^2 = eps_i / eps_j, at most 2 of the e roots; the paper's
        # configurations never need this case to succeed
        raise UnsupportedError(
            "unsupported: fixed block with two separately-fixed coordinates")
    reasons.append(
        f"fixed-locus analysis unsupported for {len(support)} free "
        "coordinates")
    return None


# ---------------------------------------------------------------------------
# admissibility scan
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ScanCandidate:
    weights: tuple[int, ...]
    accepted: bool
    reasons: tuple[str, ...]
    datum: CompleteIntersectionDatum | None = None


def scan_admissible(max_weight: int, ambient_dim: int) -> list[ScanCandidate]:
    """Scan sorted weight tuples for ambient spaces V = CP^n_a passing the
    necessary admissibility conditions, with the anticanonical Fermat
    member as the divisor D.

    Necessary conditions only: well-formedness, a diagonal quasismooth
    anticanonical member, a non-empty isolated singular locus with the
    scalar Z4 local model, and a weight-pairing for an involution of the
    coordinate-swap type.  Not a proof of admissibility.
    """
    results: list[ScanCandidate] = []
    if ambient_dim < 3:
        return results
    n1 = ambient_dim + 1
    for weights in itertools.combinations_with_replacement(
            range(1, max_weight + 1), n1):
        if math.gcd(*weights) != 1:
            continue
        space = WeightedSpace(weights)
        reasons: list[str] = []
        d = sum(weights)
        if any(d % a for a in weights):
            reasons.append("anticanonical degree admits no diagonal member")
            results.append(ScanCandidate(weights, False, tuple(reasons)))
            continue
        exponents = tuple(d // a for a in weights)
        member = CompleteIntersectionDatum(space, (d,), exponents)
        ok_wf, violations = well_formed(member)
        if not ok_wf:
            reasons.extend(violations)
        ambient = CompleteIntersectionDatum(space)
        iso = isolated_z4_check(ambient)
        if iso.k == 0:
            reasons.append("singular locus is empty")
        if not iso.ok:
            reasons.extend(iso.reasons or ("singular locus not isolated",))
        elif not iso.action_ok:
            reasons.extend(iso.reasons or ("local action is not the "
                                           "scalar Z4 model",))
        if iso.ok and iso.k:
            singular_support = set()
            for group in iso.points:
                singular_support |= set(group.stratum.indices)
            from collections import Counter
            counts = Counter(weights[i] for i in range(n1)
                             if i not in singular_support)
            odd = [w for w, c in counts.items() if c % 2]
            if odd:
                reasons.append(
                    "no weight-pairing involution: odd number of "
                    f"non-singular coordinates of weight {odd}")
        accepted = not reasons
        results.append(ScanCandidate(
            weights, accepted, tuple(reasons),
            member if accepted else None))
    results.sort(key=lambda c: c.weights)
    return results
