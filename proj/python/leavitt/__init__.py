"""Leavitt and Cohn path algebras of finite graphs over exact fields."""

from ._core import Algebra, Element, ExpressionError, GraphError, NotSkewError, run

__all__ = ["Algebra", "Element", "ExpressionError", "GraphError", "NotSkewError", "run"]
