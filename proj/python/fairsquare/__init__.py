"""Fair division of two-dimensional cakes under geometric shape constraints.

The heavy lifting happens in the C++ extension; this wrapper turns its
JSON-string surface into dictionaries. All numbers are exact rationals
serialized as "p/q" strings.
"""

import json
from fractions import Fraction

from _fairsquare import (  # noqa: F401
    divide as _divide,
    verify as _verify,
    prop_bound as _prop_bound,
    pools as _pools,
    is_r_fat,
    render_svg as _render_svg,
)

__all__ = [
    "divide",
    "verify",
    "prop_bound",
    "pools",
    "is_r_fat",
    "render_svg",
    "to_fraction",
]


def to_fraction(value):
    """Parse a "p/q" string (or int) into a Fraction."""
    if isinstance(value, int):
        return Fraction(value)
    return Fraction(value)


def divide(instance, strict=False):
    """Run the instance's protocol; returns the allocation as a dict."""
    return json.loads(_divide(json.dumps(instance), strict))


def verify(instance, allocation, bound=""):
    """Re-check an allocation against its instance."""
    return json.loads(_verify(json.dumps(instance), json.dumps(allocation), bound))


def prop_bound(cake, family, n, k=0, L="", R=""):
    """One row of the proportionality bounds table."""
    return json.loads(_prop_bound(cake, family, n, k, L, R))


def pools(cake, n, eps="1/64", certify=False):
    """A water-pool impossibility instance (optionally oracle-certified)."""
    return json.loads(_pools(cake, n, eps, certify))


def render_svg(instance, strict=False):
    """Run the instance and render the allocation as an SVG document."""
    return _render_svg(json.dumps(instance), strict)
