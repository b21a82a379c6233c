"""Exact S-idempotent computations in group rings.

Thin python facade over the _sidem extension module: arithmetic in
Z2[Cn], idempotent enumeration and S-classification, the explicit witness
constructions at order 2p (p a Mersenne prime), and exact group algebras
over Q(zeta_n) and prime fields.
"""

try:
    from ._sidem import *  # noqa: F401,F403  (installed wheel layout)
    from ._sidem import __doc__ as _doc
except ImportError:  # development layout: extension on PYTHONPATH
    from _sidem import *  # noqa: F401,F403
    from _sidem import __doc__ as _doc

__all__ = [name for name in dir() if not name.startswith("_")]
