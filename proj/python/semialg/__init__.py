"""Exact semi-algebraic analysis toolkit: polynomials over Q, real-root
isolation, Thom encodings, plane decompositions, exponent bounds and
empirical exponent estimators."""

try:
    from semialg._semialg import *          # installed layout
except ImportError:                          # pragma: no cover
    from _semialg import *                   # in-tree build layout

__all__ = [name for name in dir() if not name.startswith("_")]
