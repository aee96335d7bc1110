"""Poincare series of spherical eigenfunctions on AdS3 quotients."""

import json as _json

from ._ads3 import *  # noqa: F401,F403
from ._ads3 import independence_certificate as _independence_certificate
from ._ads3 import nonvanishing_check as _nonvanishing_check


def independence_certificate(*args, **kwargs):
    """Certificate report as a dict."""
    return _json.loads(_independence_certificate(*args, **kwargs))


def nonvanishing_check(*args, **kwargs):
    """Nonvanishing report as a dict."""
    return _json.loads(_nonvanishing_check(*args, **kwargs))
