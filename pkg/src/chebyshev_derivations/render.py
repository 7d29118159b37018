"""Text, LaTeX and JSON emitters.

Term order is graded-lex descending with x_n the most significant variable, and the
variables inside a monomial are written from the highest index down, so every emitter
is byte-deterministic.
"""

from __future__ import annotations

import json
from collections.abc import Sequence
from fractions import Fraction
from typing import TYPE_CHECKING, Any

from chebyshev_derivations.models import OutputFormat

if TYPE_CHECKING:
    from chebyshev_derivations.multipoly import Exponents, MultiPoly
    from chebyshev_derivations.unipoly import UniPoly


def _join(pieces: Sequence[tuple[Fraction, str]], times: str, frac: bool = False) -> str:
    """Join (coefficient, monomial) pairs into a signed sum."""
    if not pieces:
        return "0"
    out: list[str] = []
    for position, (coeff, monomial) in enumerate(pieces):
        magnitude = abs(coeff)
        if monomial and magnitude == 1:
            body = monomial
        else:
            number = _latex_number(magnitude) if frac else str(magnitude)
            body = f"{number}{times}{monomial}" if monomial else number
        if position == 0:
            out.append(f"-{body}" if coeff < 0 else body)
        else:
            out.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(out)


def _latex_number(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return rf"\frac{{{value.numerator}}}{{{value.denominator}}}"


def _text_monomial(exps: Exponents) -> str:
    factors = []
    for index in range(len(exps) - 1, -1, -1):
        power = exps[index]
        if power == 0:
            continue
        factors.append(f"x{index}" if power == 1 else f"x{index}^{power}")
    return "*".join(factors)


def _latex_monomial(exps: Exponents) -> str:
    factors = []
    for index in range(len(exps) - 1, -1, -1):
        power = exps[index]
        if power == 0:
            continue
        factors.append(f"x_{{{index}}}" if power == 1 else f"x_{{{index}}}^{{{power}}}")
    return " ".join(factors)


def multipoly_text(poly: MultiPoly) -> str:
    return _join([(c, _text_monomial(e)) for e, c in poly.sorted_terms()], "*")


def multipoly_latex(poly: MultiPoly) -> str:
    return _join([(c, _latex_monomial(e)) for e, c in poly.sorted_terms()], " ", frac=True)


def _uni_pieces(poly: UniPoly, var: str) -> list[tuple[Fraction, str]]:
    pieces = []
    for power in range(len(poly.coeffs) - 1, -1, -1):
        coeff = poly.coeffs[power]
        if coeff == 0:
            continue
        if power == 0:
            monomial = ""
        elif power == 1:
            monomial = var
        else:
            monomial = f"{var}^{power}"
        pieces.append((coeff, monomial))
    return pieces


def unipoly_text(poly: UniPoly) -> str:
    return _join(_uni_pieces(poly, "x"), "*")


def dumps_json(payload: Any) -> str:
    """The single JSON encoding used for every machine-readable output."""
    return json.dumps(payload, indent=2, ensure_ascii=False)


def render_multipoly(poly: MultiPoly, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.LATEX:
        return multipoly_latex(poly)
    if fmt is OutputFormat.JSON:
        return dumps_json(poly.to_json())
    return multipoly_text(poly)
