"""Exact classification of real polynomials by Hurwitz-type criteria."""

from ._hsi import (
    DomainError,
    ParseError,
    classify,
    dual,
    generate,
    hurwitz_minors,
    parse,
    run_cli,
    stieltjes,
    strange,
)

__all__ = [
    "DomainError",
    "ParseError",
    "classify",
    "dual",
    "generate",
    "hurwitz_minors",
    "parse",
    "run_cli",
    "stieltjes",
    "strange",
]
