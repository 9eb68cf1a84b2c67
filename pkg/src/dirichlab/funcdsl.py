"""Text format of piecewise functions.

Grammar::

    spec     := segment (";" segment)* | expr
    segment  := interval ":" expr
    interval := "[" bound "," bound ")" | "[" bound "," bound "]"
    bound    := rational ("pi")?
    expr     := ["-"] term (("+" | "-") term)*
    term     := number "*" atom | atom | number
    atom     := "x^" int | "x" | "exp(" linear ")"
              | "cos(" linear [("+" | "-") number] ")" | "cos(" rational ")"
              | "sin(" linear [("+" | "-") number] ")" | "sin(" rational ")"
    linear   := [sign] [number "*"] "x"

Numbers are ``p/q`` or decimals. A bare ``expr`` is one segment on
``[0, 2pi]``. Only the last segment may be closed on the right.
"""

import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

from pyparsing import (
    Group,
    Literal,
    Opt,
    ParseException,
    ParserElement,
    ParseResults,
    Regex,
    StringEnd,
    Suppress,
    Word,
    ZeroOrMore,
    nums,
)

from .consts import COSINE, EXPONENTIAL, POWER, SINE
from .exceptions import FunctionSyntaxError, TilingError
from .piecewise import Bound, PiecewiseFunction, Segment, Term

logger = logging.getLogger(__name__)

_FULL_PERIOD = (Bound(0), Bound(2, pi=True))


def _rational(toks: ParseResults) -> Fraction:
    sign = -1 if toks[0] == "-" else 1
    return sign * Fraction(toks[-1])


def _linear(toks: ParseResults) -> Fraction:
    sign = -1 if len(toks) and toks[0] == "-" else 1
    numbers = [t for t in toks if isinstance(t, Fraction)]
    return sign * (numbers[0] if numbers else Fraction(1))


def _make_grammar() -> Tuple[ParserElement, ParserElement]:
    lpar = Suppress("(")
    rpar = Suppress(")")
    sign = Literal("+") | Literal("-")
    digits = r"\d+/\d+|\d+(\.\d+)?"

    unsigned = Regex(digits).set_parse_action(lambda toks: Fraction(toks[0]))
    rational = (Opt(sign) + Regex(digits)).set_parse_action(_rational)

    bound = (rational + Opt(Literal("pi"))).set_parse_action(
        lambda toks: Bound(toks[0], pi=len(toks) > 1)
    )
    interval = Group(
        Suppress("[") + bound + Suppress(",") + bound + (Literal(")") | Literal("]"))
    )

    linear = (
        Opt(sign) + Opt(unsigned + Suppress("*")) + Suppress("x")
    ).set_parse_action(_linear)
    phase = (sign + unsigned).set_parse_action(
        lambda toks: toks[1] if toks[0] == "+" else -toks[1]
    )

    power = (Suppress("x") + Opt(Suppress("^") + Word(nums))).set_parse_action(
        lambda toks: (POWER, Fraction(toks[0]) if len(toks) else Fraction(1), 0)
    )
    exponential = (Suppress("exp") + lpar + linear + rpar).set_parse_action(
        lambda toks: (EXPONENTIAL, toks[0], 0)
    )

    def trig(name: str, kind: str) -> ParserElement:
        oscillating = (linear + Opt(phase)).set_parse_action(
            lambda toks: (kind, toks[0], toks[1] if len(toks) > 1 else 0)
        )
        constant = rational.copy().set_parse_action(
            lambda toks: (kind, 0, _rational(toks))
        )
        return Suppress(name) + lpar + (oscillating | constant) + rpar

    atom = exponential | trig("cos", COSINE) | trig("sin", SINE) | power

    # Every term comes out as a (coefficient, atom) pair.
    term = (
        (unsigned + Suppress("*") + atom).set_parse_action(
            lambda toks: (toks[0], toks[1])
        )
        | atom.copy().add_parse_action(lambda toks: (Fraction(1), toks[0]))
        | unsigned.copy().add_parse_action(lambda toks: (toks[0], (POWER, 0, 0)))
    )
    expr = Group(Opt(Literal("-")) + term + ZeroOrMore(sign + term))

    segment = (interval + Suppress(":") + expr).set_parse_action(
        lambda toks: ("segment", toks[0], toks[1])
    )
    spec = (segment + ZeroOrMore(Suppress(";") + segment)) | expr

    return spec + StringEnd(), bound + StringEnd()


_GRAMMAR, _BOUND = _make_grammar()


def _build_terms(expr: ParseResults) -> Tuple[Term, ...]:
    terms = []
    sign = 1
    for item in expr:
        if isinstance(item, str):
            sign = -1 if item == "-" else 1
            continue

        coefficient, (kind, parameter, extra) = item
        phase = extra if kind in (COSINE, SINE) else 0
        terms.append(Term(kind, sign * coefficient, parameter, phase))
        sign = 1

    return tuple(terms)


def _build_function(results: ParseResults) -> PiecewiseFunction:
    groups = list(results)
    if not isinstance(groups[0], tuple):
        lo, hi = _FULL_PERIOD
        return PiecewiseFunction((Segment(lo, hi, _build_terms(groups[0])),))

    segments = []
    for index, (_, interval, expr) in enumerate(groups):
        lo, hi, closing = interval
        last = index == len(groups) - 1

        if last and closing != "]":
            raise TilingError(
                "The last interval must be closed: [%r, %r)" % (lo.value, hi.value)
            )
        if not last and closing != ")":
            raise TilingError(
                "Interior interval must be half-open: [%r, %r]"
                % (lo.value, hi.value)
            )

        segments.append(Segment(lo, hi, _build_terms(expr)))

    return PiecewiseFunction(tuple(segments))


def parse_function(text: str) -> PiecewiseFunction:
    """Parse function spec text.

    Raises:
        FunctionSyntaxError: If the text does not follow the grammar.
        TilingError: If intervals leave a gap or overlap.
        UnsupportedExponentError: If a power exponent is above 12.
    """
    try:
        results = _GRAMMAR.parse_string(text, parse_all=True)

    except ParseException as e:
        raise FunctionSyntaxError(
            "Invalid function spec %r" % text, e.lineno, e.col
        ) from e

    return _build_function(results)


def parse_bound(text: str) -> Bound:
    """Parse a single bound such as ``3/2pi`` or ``-0.5``."""
    try:
        results = _BOUND.parse_string(text, parse_all=True)

    except ParseException as e:
        raise FunctionSyntaxError("Invalid bound %r" % text, e.lineno, e.col) from e

    return results[0]


def parse_corpus(text: str) -> List[PiecewiseFunction]:
    """Parse one function spec per line, skipping blanks and ``#`` comments."""
    functions = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue

        try:
            functions.append(parse_function(content))

        except FunctionSyntaxError as e:
            raise FunctionSyntaxError(
                "Invalid corpus entry %r" % content, lineno, e.column
            ) from e

    logger.debug("parsed %d corpus entries", len(functions))
    return functions


def format_bound(bound: Bound) -> str:
    text = str(bound.coefficient)
    return text + "pi" if bound.pi else text


def _format_linear(rate: Fraction) -> str:
    if rate == 1:
        return "x"
    if rate == -1:
        return "-x"

    return "%s*x" % rate


def _format_atom(term: Term) -> str:
    if term.kind == POWER:
        k = int(term.parameter)
        return "x" if k == 1 else "x^%d" % k

    if term.kind == EXPONENTIAL:
        return "exp(%s)" % _format_linear(term.parameter)

    name = "cos" if term.kind == COSINE else "sin"
    if term.parameter == 0:
        return "%s(%s)" % (name, term.phase)

    phase = ""
    if term.phase > 0:
        phase = "+%s" % term.phase
    elif term.phase < 0:
        phase = "-%s" % -term.phase

    return "%s(%s%s)" % (name, _format_linear(term.parameter), phase)


def _format_terms(terms: Sequence[Term]) -> str:
    pieces = []
    for index, term in enumerate(terms):
        magnitude = abs(term.coefficient)

        if term.kind == POWER and term.parameter == 0:
            body = str(magnitude)
        elif magnitude == 1:
            body = _format_atom(term)
        else:
            body = "%s*%s" % (magnitude, _format_atom(term))

        if index == 0:
            pieces.append("-" + body if term.coefficient < 0 else body)
        else:
            pieces.append(("- " if term.coefficient < 0 else "+ ") + body)

    return " ".join(pieces)


def format_function(f: PiecewiseFunction) -> str:
    """Return the canonical spec text of ``f``."""
    parts = []
    for index, segment in enumerate(f.segments):
        closing = "]" if index == len(f.segments) - 1 else ")"
        parts.append(
            "[%s,%s%s: %s"
            % (
                format_bound(segment.lo),
                format_bound(segment.hi),
                closing,
                _format_terms(segment.terms),
            )
        )

    return " ; ".join(parts)
