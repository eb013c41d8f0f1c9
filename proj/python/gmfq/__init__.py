"""q-exponents of generalized modular functions.

Thin python surface over the C++ core: eigenform coefficients, exact
exponent series, and the sign/Sato-Tate/integrality reports.
"""

try:
    from ._gmfq import *  # noqa: F401,F403  (installed layout)
except ImportError:
    from _gmfq import *  # noqa: F401,F403  (in-tree build on PYTHONPATH)

__version__ = "0.1.0"
