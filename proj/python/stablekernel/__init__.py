"""Isotropic alpha-stable transition densities and their fractional derivatives.

Orders kappa are exact rationals: pass a ``KappaOrder``, an ``int`` or a ``"num/den"`` string.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
