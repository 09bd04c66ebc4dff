"""Shared text syntax for polynomials, matrices and quadratic-field elements.

Polynomials: ``3/2*x^3 - x + 5``, ``x*(x-1)/2`` (case-insensitive variable,
``^`` for powers) or a coefficient list low-to-high ``[5, -1, 0, 3/2]``.
Matrices: ``[[0,8],[1,0]]`` or ``0,8; 1,0``.
"""
from __future__ import annotations

import ast
import re
from fractions import Fraction

from ..errors import ParseError
from .poly import QPoly, ZPoly

MAX_EXPONENT = 100_000


def _segment(src: str, node: ast.AST) -> str:
    seg = ast.get_source_segment(src, node) or type(node).__name__
    return seg.replace("**", "^")


class _Evaluator:
    def __init__(self, src: str, var: str | None):
        self.src = src
        self.var = var.lower() if var else None

    def poly(self, node) -> QPoly:
        if isinstance(node, ast.Constant):
            if isinstance(node.value, bool) or not isinstance(node.value, int):
                raise ParseError("expected an integer literal", _segment(self.src, node))
            return QPoly((node.value,))
        if isinstance(node, ast.Name):
            if self.var is None or node.id.lower() != self.var:
                raise ParseError("unknown symbol", node.id)
            return QPoly((0, 1))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.UAdd, ast.USub)):
            val = self.poly(node.operand)
            return -val if isinstance(node.op, ast.USub) else val
        if isinstance(node, ast.BinOp):
            op = node.op
            if isinstance(op, ast.Pow):
                base = self.poly(node.left)
                exp = self.poly(node.right)
                if exp.degree > 0 or (exp and exp.coeffs[0].denominator != 1):
                    raise ParseError("exponent must be a nonnegative integer", _segment(self.src, node.right))
                e = int(exp.coeffs[0]) if exp else 0
                if e < 0 or e > MAX_EXPONENT:
                    raise ParseError("exponent out of range", _segment(self.src, node.right))
                return base**e
            left, right = self.poly(node.left), self.poly(node.right)
            if isinstance(op, ast.Add):
                return left + right
            if isinstance(op, ast.Sub):
                return left - right
            if isinstance(op, ast.Mult):
                return left * right
            if isinstance(op, ast.Div):
                if right.degree != 0:
                    raise ParseError("division only by a nonzero constant", _segment(self.src, node.right))
                return left * (1 / right.coeffs[0])
        raise ParseError("unsupported syntax", _segment(self.src, node))

    def constant(self, node) -> Fraction:
        val = self.poly(node)
        if val.degree > 0:
            raise ParseError("expected a constant", _segment(self.src, node))
        return val.coeffs[0] if val else Fraction(0)


def _parse_expr(text: str) -> tuple[str, ast.AST]:
    if not text.strip():
        raise ParseError("empty input")
    src = text.strip().replace("^", "**")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        offset = (exc.offset or 1) - 1
        tok = re.match(r"\S+", src[offset:]) if offset < len(src) else None
        raise ParseError("syntax error near", (tok.group(0) if tok else src[-1:]).replace("**", "^")) from None
    return src, tree.body


def parse_poly(text: str, var: str = "x") -> QPoly:
    """Parse a rational polynomial in the shared syntax."""
    src, body = _parse_expr(text)
    ev = _Evaluator(src, var)
    if isinstance(body, (ast.List, ast.Tuple)):
        return QPoly([ev.constant(e) for e in body.elts])
    return ev.poly(body)


def parse_zpoly(text: str, var: str = "x") -> ZPoly:
    q = parse_poly(text, var)
    if not q.is_integral():
        raise ParseError("expected integer coefficients", text.strip())
    return q.to_zpoly()


def parse_matrix(text: str) -> list[list[Fraction]]:
    """Parse ``[[a,b],[c,d]]`` or ``a,b; c,d`` into rows of Fractions."""
    stripped = text.strip()
    if ";" in stripped and not stripped.startswith("[["):
        stripped = "[" + ",".join(f"[{r}]" for r in stripped.split(";")) + "]"
    src, body = _parse_expr(stripped)
    ev = _Evaluator(src, None)
    if not isinstance(body, (ast.List, ast.Tuple)) or not body.elts:
        raise ParseError("expected a matrix", text.strip())
    rows = []
    for r in body.elts:
        if not isinstance(r, (ast.List, ast.Tuple)):
            raise ParseError("expected a matrix row", _segment(src, r))
        rows.append([ev.constant(e) for e in r.elts])
    if any(len(r) != len(rows) for r in rows):
        raise ParseError("matrix must be square", text.strip())
    return rows


def parse_int_matrix(text: str) -> list[list[int]]:
    rows = parse_matrix(text)
    if any(x.denominator != 1 for r in rows for x in r):
        raise ParseError("expected integer entries", text.strip())
    return [[int(x) for x in r] for r in rows]


def parse_quadratic_element(text: str) -> tuple[int, int]:
    """Parse ``a+b*w`` into integer coordinates (a, b) in the basis {1, w}."""
    q = parse_poly(text, var="w")
    if q.degree > 1 or not q.is_integral():
        raise ParseError("expected a + b*w with integers a, b", text.strip())
    return int(q[0]), int(q[1])
