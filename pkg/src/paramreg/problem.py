"""Problem files: JSON objects whose scalars are strings ("6/5", "-0.25") or integers.

Floats are rejected because they cannot carry exact rationals. Errors name
the offending location, e.g. ``A[1][2][0]``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .core import Interval, ParametricLinearSystem, ParametricMatrix, Vector


class ProblemError(ValueError):
    pass


@dataclass(frozen=True)
class ProblemFile:
    matrix: ParametricMatrix
    b0: Vector | None = None
    b: tuple[Vector, ...] | None = None

    @property
    def n(self) -> int:
        return self.matrix.n

    @property
    def K(self) -> int:
        return self.matrix.K

    @property
    def has_rhs(self) -> bool:
        return self.b0 is not None

    def system(self) -> ParametricLinearSystem:
        if self.b0 is None:
            raise ProblemError("b0: right-hand side required for this command")
        b = self.b if self.b is not None else tuple(tuple(Fraction(0) for _ in range(self.n)) for _ in range(self.K))
        return ParametricLinearSystem(self.matrix, self.b0, b)


def parse_scalar(x, path: str = "value") -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ProblemError(f"{path}: expected a string or integer scalar, got {type(x).__name__}")
    try:
        return Fraction(x.strip() if isinstance(x, str) else x)
    except (ValueError, ZeroDivisionError):
        raise ProblemError(f"{path}: unparseable scalar {x!r}") from None


def format_scalar(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _list(x, path: str, length: int | None = None) -> list:
    if not isinstance(x, list):
        raise ProblemError(f"{path}: expected a list")
    if length is not None and len(x) != length:
        raise ProblemError(f"{path}: dimension mismatch, expected length {length}, got {len(x)}")
    return x


def _vector(x, path: str, n: int) -> Vector:
    return tuple(parse_scalar(v, f"{path}[{i}]") for i, v in enumerate(_list(x, path, n)))


def _matrix(x, path: str, n: int):
    return tuple(_vector(row, f"{path}[{i}]", n) for i, row in enumerate(_list(x, path, n)))


def _int(obj: dict, key: str, minimum: int) -> int:
    if key not in obj:
        raise ProblemError(f"{key}: missing")
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, int) or v < minimum:
        raise ProblemError(f"{key}: expected an integer >= {minimum}")
    return v


def problem_from_dict(obj) -> ProblemFile:
    if not isinstance(obj, dict):
        raise ProblemError("<root>: expected an object")
    unknown = set(obj) - {"n", "K", "A0", "A", "p", "b0", "b", "name", "comment"}
    if unknown:
        raise ProblemError(f"{sorted(unknown)[0]}: unknown field")
    n, K = _int(obj, "n", 1), _int(obj, "K", 0)
    for key in ("A0", "A", "p"):
        if key not in obj:
            raise ProblemError(f"{key}: missing")
    A0 = _matrix(obj["A0"], "A0", n)
    A = tuple(_matrix(m, f"A[{k}]", n) for k, m in enumerate(_list(obj["A"], "A", K)))
    p = []
    for k, iv in enumerate(_list(obj["p"], "p", K)):
        lo, hi = _vector(iv, f"p[{k}]", 2)
        if lo > hi:
            raise ProblemError(f"p[{k}]: lower bound exceeds upper bound")
        p.append(Interval(lo, hi))
    b0 = b = None
    if "b0" in obj:
        b0 = _vector(obj["b0"], "b0", n)
        if "b" in obj:
            b = tuple(_vector(v, f"b[{k}]", n) for k, v in enumerate(_list(obj["b"], "b", K)))
    elif "b" in obj:
        raise ProblemError("b: given without b0")
    return ProblemFile(ParametricMatrix(A0, A, tuple(p)), b0, b)


def parse_problem(text: str) -> ProblemFile:
    try:
        obj = json.loads(text, parse_float=lambda s: float(s))
    except json.JSONDecodeError as e:
        raise ProblemError(f"<root>: malformed JSON ({e})") from None
    return problem_from_dict(obj)


def load_problem(path) -> ProblemFile:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ProblemError(f"{path}: {e.strerror}") from None
    return parse_problem(text)


def problem_to_dict(prob: ProblemFile) -> dict:
    pm = prob.matrix
    vec = lambda v: [format_scalar(x) for x in v]  # noqa: E731
    mat = lambda m: [vec(r) for r in m]  # noqa: E731
    out = {
        "n": pm.n,
        "K": pm.K,
        "A0": mat(pm.A0),
        "A": [mat(a) for a in pm.A],
        "p": [[format_scalar(iv.lo), format_scalar(iv.hi)] for iv in pm.p],
    }
    if prob.b0 is not None:
        out["b0"] = vec(prob.b0)
        if prob.b is not None:
            out["b"] = [vec(v) for v in prob.b]
    return out


def _dump(x, indent: int = 0) -> str:
    """JSON with innermost lists (rows, intervals, vectors) kept on one line."""
    pad = " " * indent
    if isinstance(x, dict):
        items = [f'{pad}  {json.dumps(k)}: {_dump(v, indent + 2).lstrip()}' for k, v in x.items()]
        return pad + "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(x, list) and x and isinstance(x[0], list):
        return pad + "[\n" + ",\n".join(_dump(v, indent + 2) for v in x) + "\n" + pad + "]"
    return pad + json.dumps(x)


def serialize_problem(prob: ProblemFile) -> str:
    return _dump(problem_to_dict(prob)) + "\n"
