import re

from core.errors import GaugeSyntaxError
from gauges.families import GaugeFamily, PowerFamily, canonical, jump

_POW = re.compile(r"^pow\(\s*([0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?)\s*\)$")
_JUMP = re.compile(r"^jump\((.*)\)$")


def parse_gauge(descriptor: str) -> GaugeFamily:
    """
    Parse a gauge descriptor:

        theta | pow(c) | jump(<descriptor>)

    e.g. "jump(jump(theta))" or "pow(0.5)".
    """
    if not isinstance(descriptor, str):
        raise GaugeSyntaxError(f"gauge descriptor must be a string, got {descriptor!r}", module="gauge")
    text = descriptor.strip()
    if text == "theta":
        return canonical()
    match = _POW.match(text)
    if match:
        c = float(match.group(1))
        if c <= 0:
            raise GaugeSyntaxError(f"pow exponent must be positive in {descriptor!r}", module="gauge")
        return PowerFamily(c)
    match = _JUMP.match(text)
    if match and _balanced(match.group(1)):
        return jump(parse_gauge(match.group(1)))
    raise GaugeSyntaxError(f"unrecognized gauge descriptor {descriptor!r}", module="gauge")


def _balanced(text: str) -> bool:
    depth = 0
    for ch in text:
        depth += {"(": 1, ")": -1}.get(ch, 0)
        if depth < 0:
            return False
    return depth == 0
