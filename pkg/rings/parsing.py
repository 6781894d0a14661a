"""Textual forms of ideals and elements.

Ideals are products of prime factors with optional integer exponents::

    A                      the unit ideal
    [T^2+T+1]^2*inf0^-1    genus-0 rings: monic irreducibles and inf0
    P(0,1)*P[2](3,1)^-1    elliptic rings: P(x,y) over F_q, P[d](x,y) over F_q^d
"""
import re

from utils.errors import ParameterError

from .base import FieldElement, IdealRep

_FACTOR = re.compile(
    r"(?P<base>\[.+\]|inf0|P(?:\[\d+\])?\([^)]*\))(?:\^\(?(?P<exp>-?\d+)\)?)?"
)


def split_top_level(text, sep="*"):
    parts, depth, current = [], 0, []
    for ch in text:
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    if depth != 0:
        raise ParameterError(f"unbalanced brackets in {text!r}")
    return [p.strip() for p in parts]


def parse_ideal(ring, text):
    text = "".join(text.split())
    if text in ("", "A", "1"):
        return ring.unit_ideal()
    factors = []
    for token in split_top_level(text):
        m = _FACTOR.fullmatch(token)
        if not m:
            raise ParameterError(f"cannot read ideal factor {token!r} in {text!r}")
        place = ring.parse_place(m.group("base"))
        factors.append((place, int(m.group("exp") or 1)))
    return IdealRep(ring, factors)


def parse_element(ring, text):
    return FieldElement(ring, ring.parse_element_value(text))
