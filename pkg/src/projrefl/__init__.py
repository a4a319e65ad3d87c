"""Exact combinatorics and invariant theory of projective reflection groups G(r,p,q,n)."""

from .group import (
    CapExceeded,
    Element,
    GroupParams,
    ParameterError,
    canonicalize,
    dual_params,
    enumerate_group,
    identity,
    inverse,
    multiply,
    parse_element,
    validate_params,
)
from .stats import StatProfile, stat_profile

__version__ = "0.1.0"
