"""Corrections to the classical printed source of the formulas in this package.

The closed-form tables and displayed fractions that this library reproduces
come from an eighteenth-century printing that contains typesetting slips.
Each entry below records one printed reading that contradicts the source's
own recurrence law (or its own decimal values printed alongside), together
with the corrected reading and the evidence that fixes it.  The recurrence is
authoritative: every ``affects_value`` entry is asserted against the
recurrence-derived value in the test suite.

Entries are addressed by content (what the formula computes), not by page or
section, and are exported in machine-readable form via :func:`as_dicts` /
:func:`as_json`.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

__all__ = ["Erratum", "ERRATA", "by_key", "as_dicts", "as_json"]


@dataclass(frozen=True)
class Erratum:
    key: str  # stable identifier
    location: str  # which formula/table the slip sits in
    printed: str  # the reading as printed
    corrected: str  # the reading the recurrence forces
    evidence: str  # what confirms the correction
    affects_value: bool  # False: display slip only, no computed value changes


ERRATA: tuple[Erratum, ...] = (
    Erratum(
        key="antiderivative-log-denominator",
        location="closed form of I_0(x) in the log case (c = f^2)",
        printed="(1/f)*log((f^2 x - b + f*sqrt(radicand)) / (a f + b))",
        corrected="(1/f)*log((f^2 x - b + f*sqrt(radicand)) / (a f - b))",
        evidence="normalisation I_0(0) = 0 forces the denominator a f - b; "
        "the substitution z = c x - b derivation produces the same constant",
        affects_value=True,
    ),
    Erratum(
        key="antiderivative-trig-sign",
        location="closed form of I_0(x) in the trig case (c = -g^2)",
        printed="-(1/g)*arcsin((g^2 x + b)/sqrt(disc)) + (1/g)*arcsin(b/sqrt(disc))",
        corrected="+(1/g)*arcsin((g^2 x + b)/sqrt(disc)) - (1/g)*arcsin(b/sqrt(disc))",
        evidence="the derivative of I_0 must equal 1/sqrt(radicand) > 0, so "
        "I_0 is increasing; the printed sign makes it decreasing",
        affects_value=True,
    ),
    Erratum(
        key="x2-closed-form-denominator",
        location="closed form of I_2 at the root",
        printed="(3b^2 - a^2 c)/(2ac) * delta - 3ab/(2c^2)",
        corrected="(3b^2 - a^2 c)/(2c^2) * delta - 3ab/(2c^2)",
        evidence="reduction recurrence; the factor-form table row "
        "(1*3*b^2/(1*2*c^2) - a^2/(1*2*c)) printed beside it",
        affects_value=True,
    ),
    Erratum(
        key="x3-table-constant-factors",
        location="factor-form table row for I_3, constant part",
        printed="-1*3*5*a*b^2/(1*2*c^3) + 1*2*2*2*a^3/(1*2*3*c^2)",
        corrected="-1*3*5*a*b^2/(1*2*3*c^3) + 1*2*2*a^3/(1*2*3*c^2)",
        evidence="reduction recurrence; the unsimplified closed form "
        "-(15ab^2)/(6c^3) + 2a^3/(3c^2) printed two rows earlier",
        affects_value=True,
    ),
    Erratum(
        key="x4-closed-form-constant",
        location="closed form of I_4 at the root, constant part",
        printed="-35ab^3/(8c^4) + 55c^3 b/(24c^3)",
        corrected="-35ab^3/(8c^4) + 55a^3 b/(24c^3)",
        evidence="reduction recurrence (the printed term is not even "
        "dimensionally consistent); the factor-form table row "
        "1*5*11*a^3 b/(1*2*3*4*c^3) confirms a^3 b",
        affects_value=True,
    ),
    Erratum(
        key="x4-table-symbols",
        location="factor-form table row for I_4",
        printed="... + 1*3*3*b^4/(1*2*3*4*c^2) in the delta bracket; "
        "-1*3*5*7*a*b^4/(1*2*3*4*c^4) in the constant",
        corrected="... + 1*3*3*a^4/(1*2*3*4*c^2); -1*3*5*7*a*b^3/(1*2*3*4*c^4)",
        evidence="reduction recurrence; the unsimplified closed form of I_4 "
        "(35b^4/(8c^4) - 15a^2 b^2/(4c^3) + 3a^4/(8c^2)) printed beside it",
        affects_value=True,
    ),
    Erratum(
        key="log-table-depth2-numerator",
        location="log-family convergent table, depth-2 entry",
        printed="6n^2 / (3n^2 - m^2)",
        corrected="6mn / (3n^2 - m^2)",
        evidence="relation scale (3n, -m^2) applied to 0/1 and 2m/n",
        affects_value=True,
    ),
    Erratum(
        key="log-table-depth4-numerator",
        location="log-family convergent table, depth-4 entry",
        printed="(210 m n^3 - 111 m^3 n) / (105 n^4 - 90 m^2 n^2 + 9 m^4)",
        corrected="(210 m n^3 - 110 m^3 n) / (105 n^4 - 90 m^2 n^2 + 9 m^4)",
        evidence="relation scale (7n, -9m^2); at m=1, n=2 the recurrence "
        "gives 1460/1329, which requires the coefficient 110",
        affects_value=True,
    ),
    Erratum(
        key="log-table-depth5-numerator",
        location="log-family convergent table, depth-5 entry",
        printed="(1980 n^4 - 1470 m^3 n^2 + 128 m^5) / "
        "(945 n^5 - 1050 m^2 n^3 + 225 m^4 n)",
        corrected="(1890 m n^4 - 1470 m^3 n^2 + 128 m^5) / "
        "(945 n^5 - 1050 m^2 n^3 + 225 m^4 n)",
        evidence="relation scale (9n, -16m^2); the denominator is printed "
        "correctly and pins the row",
        affects_value=True,
    ),
    Erratum(
        key="difference-row4-power",
        location="difference table, depth-4 minus depth-3 row",
        printed="2*4*9*m^4 / ((15n^3 - 9m^2 n)(105n^4 - 9 m^2 n^2 + 9m^4))",
        corrected="2*4*9*m^7 / ((15n^3 - 9m^2 n)(105n^4 - 90 m^2 n^2 + 9m^4))",
        evidence="determinant identity p_k q_{k-1} - p_{k-1} q_k = "
        "(-1)^(k-1) * prod(alpha); the neighbouring rows carry m^5 and m^9",
        affects_value=True,
    ),
    Erratum(
        key="atan-sqrt3-depth3-fraction",
        location="arctangent family at msq=3, n=3 (value pi/(6*sqrt(3))), "
        "three-term convergent",
        printed="49/102 = 0.30247",
        corrected="49/162 = 0.30247",
        evidence="its own decimal: 49/162 = 0.302469...; 49/102 = 0.480...; "
        "relation scale (15, +12) applied to 1/3 and 9/30",
        affects_value=True,
    ),
    Erratum(
        key="log-three-halves-depth3-decimal",
        location="worked example ln(3/2), three-term convergent decimal",
        printed="2/(5 - 25/371) = 0.4054654",
        corrected="2/(5 - 25/371) = 0.4054645",
        evidence="exact arithmetic: 2/(5 - 25/371) = 742/1830 = 371/915 = "
        "0.40546448...; the printed digits transpose the last two places",
        affects_value=True,
    ),
    Erratum(
        key="completed-cf-fifth-numerator",
        location="displayed a/delta fraction, fifth partial numerator",
        printed="2b*a^2 c",
        corrected="25*a^2 c",
        evidence="the partial numerators are k^2 * a^2 c = 1, 4, 9, 16, 25, ...",
        affects_value=False,
    ),
    Erratum(
        key="log-integer-display-denominator",
        location="displayed ln(i) fraction, third partial denominator",
        printed="5(i - 1)",
        corrected="5(i + 1)",
        evidence="the partial denominators are (2k-1)(i+1)",
        affects_value=False,
    ),
)


def by_key(key: str) -> Erratum:
    for e in ERRATA:
        if e.key == key:
            return e
    raise KeyError(key)


def as_dicts() -> list[dict]:
    return [asdict(e) for e in ERRATA]


def as_json(indent: int = 2) -> str:
    return json.dumps(as_dicts(), indent=indent)
