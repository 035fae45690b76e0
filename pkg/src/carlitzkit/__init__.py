"""Generalised Carlitz modules over difference fields.

Subpackages: finite fields and Laurent series in 1/theta (``fields``,
``laurent``), skew polynomial rings (``skew``), the Carlitz module and its
exponential (``carlitz``), Anderson-Thakur functions and L-series
(``anderson_thakur``), the gamma-function instance over C (``gamma_numerics``)
and the verification runner (``suites``, ``cli``).
"""

__version__ = "0.1.0"
