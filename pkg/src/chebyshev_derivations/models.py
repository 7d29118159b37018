"""Data models for derivation results, identity reports, and run configuration."""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator

from chebyshev_derivations.exactnum import format_rational
from chebyshev_derivations.multipoly import MultiPoly
from chebyshev_derivations.unipoly import UniPoly


class Kind(str, Enum):
    """Which Chebyshev family / derivation."""
    FIRST = "first"
    SECOND = "second"


class IdentityId(str, Enum):
    """Identities that can be verified; declaration order is report order."""
    T_I = "T_i"
    T_II = "T_ii"
    T_III = "T_iii"
    U_I = "U_i"
    U_II = "U_ii"
    U_III = "U_iii"
    HG_T = "HG_T"
    HG_U = "HG_U"

    @property
    def cli_name(self) -> str:
        return self.value.lower().replace("_", "-")

    @classmethod
    def from_cli(cls, name: str) -> IdentityId:
        for member in cls:
            if member.cli_name == name:
                return member
        raise ValueError(f"unknown identity {name!r}")


class OutputFormat(str, Enum):
    """Rendering of polynomials and reports."""
    TEXT = "text"
    LATEX = "latex"
    JSON = "json"


class Method(str, Enum):
    """How a Cayley element is produced."""
    CLOSED = "closed"
    DIXMIER = "dixmier"


class Source(str, Enum):
    """Provenance of a Cayley element."""
    CLOSED_FORM = "closed-form"
    DIXMIER_ORACLE = "dixmier-oracle"


class LambdaKind(str, Enum):
    """The slice lambda with D(lambda) = -1."""
    FIRST = "-x1/x0"
    SECOND = "-x1/(2*x0)"


class Command(str, Enum):
    """CLI subcommands."""
    CAYLEY = "cayley"
    VERIFY = "verify"
    DERIVATION_TABLE = "derivation-table"
    SERIES_CHECK = "series-check"


class _PolyModel(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)


class DixmierElement(_PolyModel):
    """Cleared Dixmier image x_0^(n-1) * sigma(x_n)."""

    n: int = Field(ge=1)
    kind: Kind
    value: MultiPoly
    lambda_kind: LambdaKind

    @field_serializer("value")
    def _dump_value(self, value: MultiPoly) -> dict[str, Any]:
        return value.to_json()


class CayleyElement(_PolyModel):
    """A kernel generator of a Chebyshev derivation."""

    n: int = Field(ge=1)
    kind: Kind
    poly: MultiPoly
    source: Source

    @field_serializer("poly")
    def _dump_poly(self, poly: MultiPoly) -> dict[str, Any]:
        return poly.to_json()

    @model_validator(mode="after")
    def _check_shape(self) -> CayleyElement:
        if self.n == 1 and self.poly.is_zero():
            # x_1 is the slice itself, so sigma(x_1) = 0.
            return self
        if not self.poly.is_homogeneous(self.n):
            raise ValueError(f"Cayley element of order {self.n} is not homogeneous")
        leading = [0] * self.poly.nvars
        leading[0] = self.n - 1
        leading[self.n] = 1
        if self.poly.coefficient(leading) != 1:
            raise ValueError("coefficient of x_n * x_0^(n-1) must be 1")
        return self


class IdentityReport(_PolyModel):
    """Outcome of checking one identity at one n."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True, populate_by_name=True)

    identity_id: IdentityId
    n: int
    computed_constant: Fraction | None = None
    expected_constant: Fraction
    passed: bool = Field(serialization_alias="pass")
    residual: UniPoly | None = None
    error: str | None = None

    @field_serializer("computed_constant")
    def _dump_computed(self, value: Fraction | None) -> str:
        return "non-constant" if value is None else format_rational(value)

    @field_serializer("expected_constant")
    def _dump_expected(self, value: Fraction) -> str:
        return format_rational(value)

    @field_serializer("residual")
    def _dump_residual(self, value: UniPoly | None) -> dict[str, Any] | None:
        return None if value is None else value.to_json()

    @classmethod
    def from_residual(
        cls,
        identity_id: IdentityId,
        n: int,
        residual: UniPoly,
        expected: Fraction,
    ) -> IdentityReport:
        """Derive ``passed`` from the residual; keep the residual only on failure."""
        computed = residual.constant_value()
        passed = computed is not None and computed == expected
        return cls(
            identity_id=identity_id,
            n=n,
            computed_constant=computed,
            expected_constant=expected,
            passed=passed,
            residual=None if passed else residual,
        )

    @classmethod
    def from_error(
        cls, identity_id: IdentityId, n: int, expected: Fraction, error: Exception
    ) -> IdentityReport:
        return cls(
            identity_id=identity_id,
            n=n,
            expected_constant=expected,
            passed=False,
            error=f"{type(error).__name__}: {error}",
        )

    def to_json(self) -> dict[str, Any]:
        return self.model_dump(mode="json", by_alias=True, exclude_none=False)

    def to_text(self) -> str:
        computed = self.model_dump(mode="json")["computed_constant"]
        status = "PASS" if self.passed else "FAIL"
        line = (
            f"{self.identity_id.value} n={self.n} computed={computed} "
            f"expected={format_rational(self.expected_constant)} {status}"
        )
        if self.error:
            line += f" ({self.error})"
        return line


class SeriesCheck(BaseModel):
    """Outcome of one generating-function or derivative-expansion check."""

    model_config = ConfigDict(frozen=True)

    check: str
    kind: Kind
    parameter: int
    passed: bool = Field(serialization_alias="pass")

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.check} kind={self.kind.value} n={self.parameter} {status}"


class RunConfig(BaseModel):
    """Validated CLI invocation."""

    model_config = ConfigDict(frozen=True)

    command: Command
    kind: Kind = Kind.FIRST
    n: int = Field(default=1, ge=0)
    n_from: int = Field(default=1, ge=0)
    n_to: int = Field(default=12, ge=0)
    format: OutputFormat = OutputFormat.TEXT
    method: Method = Method.CLOSED
    output_path: Path | None = None
    max_n: int = 64

    @model_validator(mode="after")
    def _check_ranges(self) -> RunConfig:
        if self.n_from > self.n_to:
            raise ValueError(f"n_from ({self.n_from}) must not exceed n_to ({self.n_to})")
        if self.command in (Command.CAYLEY, Command.VERIFY):
            low = self.n if self.command is Command.CAYLEY else self.n_from
            if low < 1:
                raise ValueError(f"{self.command.value} needs n >= 1")
        largest = max(self.n, self.n_to) if self.command is Command.VERIFY else self.n
        if largest > self.max_n:
            raise ValueError(f"n = {largest} exceeds the configured cap CHEB_MAX_N = {self.max_n}")
        return self
