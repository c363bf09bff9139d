"""
Pydantic models for generator configuration and self-test reports.
"""

from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from calculus.kernel import validate_name

DEFAULT_POOL: Tuple[str, ...] = ("x", "y", "z")


class GenConfig(BaseModel):
    """Bounds and seed for random term generation."""

    model_config = ConfigDict(frozen=True)

    max_size: int = Field(ge=1, description="Largest term size (constructor count) to emit")
    name_pool: Tuple[str, ...] = Field(
        DEFAULT_POOL, min_length=1, description="Variable names generators may use"
    )
    seed: int = Field(
        0,
        ge=-(2**63),
        lt=2**64,
        description="Seed for the generator's PRNG (64-bit)",
    )

    @field_validator("name_pool")
    @classmethod
    def _check_names(cls, pool: Tuple[str, ...]) -> Tuple[str, ...]:
        for name in pool:
            validate_name(name)
        return pool


class SelftestConfig(BaseModel):
    """Parameters for the shipped property suite."""

    model_config = ConfigDict(frozen=True)

    cases: int = Field(10_000, ge=1, description="Random cases per suite")
    max_size: int = Field(30, ge=1, description="Largest random term size")
    seed: int = Field(0, description="Base seed; every suite derives its own stream")
    exhaustive_size: int = Field(
        7, ge=1, description="Bound for the exhaustive sweeps over the pool (x, y)"
    )
    walk_steps: int = Field(8, ge=0, description="Longest random alpha walk")
    suites: Optional[List[str]] = Field(
        None, description="Run only these suites (all when None)"
    )


class SuiteResult(BaseModel):
    """Outcome of one property suite."""

    name: str = Field(description="Suite name")
    cases: int = Field(description="Number of cases checked")
    failures: int = Field(0, description="Number of failing cases")
    counterexample: Optional[str] = Field(
        None, description="Printed form of the first failing case"
    )
    seconds: float = Field(0.0, description="Wall time spent in the suite")

    @property
    def status(self) -> Literal["pass", "fail"]:
        return "pass" if self.failures == 0 else "fail"


class SelftestReport(BaseModel):
    """Summary of a self-test run, suites sorted by name."""

    results: List[SuiteResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(result.failures == 0 for result in self.results)

    def summary_lines(self) -> List[str]:
        lines = [
            f"{result.status.upper():4} {result.name:<28} "
            f"{result.cases:>7} cases {result.failures:>4} failures {result.seconds:7.2f}s"
            for result in sorted(self.results, key=lambda r: r.name)
        ]
        verdict = "PASSED" if self.passed else "FAILED"
        lines.append(f"{verdict}: {sum(r.failures == 0 for r in self.results)}/{len(self.results)} suites")
        return lines
