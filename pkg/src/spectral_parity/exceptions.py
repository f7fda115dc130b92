"""Error taxonomy.

Strict raise policy: every failure surfaces immediately with its parameters.
See: docs/architecture/decisions/0002-error-handling-strict-policy.md
"""

from __future__ import annotations


class GraphParseError(ValueError):
    """Malformed edge-list or graph6 input, with the position of the first fault."""

    def __init__(self, message: str, line: int | None = None, byte: int | None = None) -> None:
        self.line = line
        self.byte = byte
        where = []
        if line is not None:
            where.append(f"line {line}")
        if byte is not None:
            where.append(f"byte {byte}")
        suffix = f" ({', '.join(where)})" if where else ""
        super().__init__(f"{message}{suffix}")


class SizeLimitError(RuntimeError):
    """An exhaustive procedure was asked to run above its size budget."""

    def __init__(self, what: str, limit: int, actual: int, advice: str | None = None) -> None:
        self.what = what
        self.limit = limit
        self.actual = actual
        message = f"{what} = {actual} exceeds the budget of {limit}"
        if advice:
            message = f"{message}; {advice}"
        super().__init__(message)


class ConvergenceError(RuntimeError):
    """Power iteration hit its iteration cap before the residual met the tolerance."""

    def __init__(
        self, best_value: float, best_residual: float, iterations: int, tol: float
    ) -> None:
        self.best_value = best_value
        self.best_residual = best_residual
        self.iterations = iterations
        self.tol = tol
        super().__init__(
            f"No convergence after {iterations} iterations: best estimate {best_value!r} "
            f"with residual {best_residual:.3e} > tol {tol:.3e}"
        )


class ComplexRootsError(ArithmeticError):
    """A cubic handed to the real-root solver has a complex-conjugate root pair."""

    def __init__(self, coefficients: tuple, discriminant: float) -> None:
        self.coefficients = coefficients
        self.discriminant = discriminant
        super().__init__(
            f"Cubic with coefficients {coefficients} has a complex root pair "
            f"(discriminant {discriminant!r} < 0)"
        )


class GenerationError(RuntimeError):
    """The random graph generator could not satisfy its constraints."""

    def __init__(self, message: str, attempts: int = 0, accepted: int = 0) -> None:
        self.attempts = attempts
        self.accepted = accepted
        super().__init__(f"{message} (attempts={attempts}, accepted={accepted})")
