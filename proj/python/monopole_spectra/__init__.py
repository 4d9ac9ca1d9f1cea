"""Bound-state spectra of a charged particle in a global-monopole background.

Thin Python layer over the C++ core: closed-form Kratzer and screened-Kratzer
spectra, the self-energy series S(alpha), normalized radial wavefunctions and
an independent finite-difference eigensolver for cross-validation.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401
