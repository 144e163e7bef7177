"""Finite-field character sums, Gaussian hypergeometric series and closed-form
point counts for y^2 = x^d + a x + b (family "A") and y^2 = x^d + a x^(d-1) + b
(family "B").

Field elements are passed as integer codes in [0, q): the base-p digits of a
code are the coefficients of the element's polynomial representative. For a
prime field the code is the residue itself.
"""

from ._core import Engine, Error, series_template

__all__ = ["Engine", "Error", "series_template"]
