"""Certificate toolkit for a pointless del Pezzo surface of degree 2.

The compiled extension carries the actual operations; this package layer only
locates it (installed layout first, then a build tree pointed to by
DP2CERT_EXT_DIR) and adds a JSON convenience wrapper.
"""

import json as _json

try:
    from ._core import *  # noqa: F401,F403
    from ._core import run_claim, __version__  # noqa: F401
except ImportError:  # build-tree layout
    import os
    import sys

    _ext_dir = os.environ.get("DP2CERT_EXT_DIR")
    if _ext_dir and _ext_dir not in sys.path:
        sys.path.insert(0, _ext_dir)
    from _core import *  # noqa: F401,F403
    from _core import run_claim, __version__  # noqa: F401


def run_claim_dict(claim, **kwargs):
    """Run one claim and return the certificate as a dict."""
    return _json.loads(run_claim(claim, **kwargs))
