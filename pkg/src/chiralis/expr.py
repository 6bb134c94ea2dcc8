"""Expression parser, pretty printer and evaluator (surface syntax)."""

from __future__ import annotations

from fractions import Fraction

from .core import State


def format_scalar(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_monomial(alg, mono) -> str:
    if not mono:
        return "1"
    parts = [f"{alg.gens[g].name}({idx})" for g, idx in mono]
    if len(parts) == 1:
        return parts[0]
    return ":" + " ".join(parts) + ":"


def format_state(s: State) -> str:
    """Deterministic printing; output re-parses to an equal state."""
    if s.is_zero():
        return "0"
    out = []
    for mono, coeff in sorted(s.terms.items()):
        body = format_monomial(s.alg, mono)
        mag = abs(coeff)
        if body == "1":
            piece = format_scalar(mag)
        elif mag == 1:
            piece = body
        else:
            piece = f"{format_scalar(mag)} {body}"
        if not out:
            out.append(piece if coeff > 0 else f"- {piece}")
        else:
            out.append(("+ " if coeff > 0 else "- ") + piece)
    return " ".join(out)
