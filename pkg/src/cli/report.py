"""Report models, rendering and saving for CLI runs."""

import json
from datetime import datetime
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field, model_validator
from rich.console import Console
from rich.table import Table

from src.core.cactus import CactusCensus

console = Console()
err_console = Console(stderr=True)


class PolarityReport(BaseModel):
    """Result bundle of ``compute``; absent values are omitted from JSON."""

    n: int = Field(description="Vertex count")
    m: int = Field(description="Edge count")
    is_cactus: bool = Field(description="Whether no edge lies on two cycles")
    wp_formula: int | None = Field(default=None, description="Index from the census formula")
    wp_oracle: int | None = Field(default=None, description="Index from breadth-first counting")
    wiener_index: int | None = Field(default=None, description="Sum of all pair distances")
    census: CactusCensus | None = Field(default=None, description="Census of a cactus input")
    method_agreement: bool | None = Field(
        default=None, description="Whether formula and oracle agree (both present only)"
    )
    boiling_point: float | None = Field(
        default=None, description="Linear boiling-point model a*W + b*Wp + c"
    )

    model_config = {"extra": "forbid"}

    @model_validator(mode="after")
    def _fill_agreement(self) -> "PolarityReport":
        if self.wp_formula is None or self.wp_oracle is None:
            if self.method_agreement is not None:
                raise ValueError("method_agreement needs both wp_formula and wp_oracle")
            return self
        agreement = self.wp_formula == self.wp_oracle
        if self.method_agreement is not None and self.method_agreement != agreement:
            raise ValueError("method_agreement contradicts the reported values")
        self.method_agreement = agreement
        return self

    def to_json(self) -> str:
        return self.model_dump_json(exclude_none=True)


class TrialFailure(BaseModel):
    """First counterexample found by ``verify``."""

    trial: int = Field(description="Zero-based trial index")
    reason: str = Field(description="Which comparison failed")
    edge_list: str = Field(description="Offending graph in edge-list format")

    model_config = {"extra": "forbid"}


class VerifySummary(BaseModel):
    """Aggregated outcome of a verification run."""

    trials: int = Field(description="Trials run")
    agreed: int = Field(description="Trials where every comparison held")
    census_checked: int = Field(description="Trials small enough for the exhaustive census check")
    seed: int = Field(description="Master seed")
    first_failure: TrialFailure | None = Field(default=None, description="First counterexample")

    model_config = {"extra": "forbid"}

    @property
    def passed(self) -> bool:
        return self.agreed == self.trials


def render_table(title: str, rows: dict[str, Any]) -> Table:
    table = Table(title=title, show_header=False, title_justify="left")
    table.add_column("key", style="bold cyan")
    table.add_column("value")
    for key, value in rows.items():
        table.add_row(key, str(value))
    return table


def render_report(report: PolarityReport) -> Table:
    rows: dict[str, Any] = report.model_dump(exclude_none=True, exclude={"census"})
    if report.census is not None:
        for key, value in report.census.model_dump().items():
            rows[f"census.{key}"] = value
    return render_table("Polarity report", rows)


def render_census(census: CactusCensus) -> Table:
    rows: dict[str, Any] = census.model_dump()
    rows["cycles_by_length"] = census.cycles_by_length or "none"
    return render_table("Cactus census", rows)


def save_report(
    report: BaseModel,
    command: str,
    output_dir: Path,
) -> Path:
    """
    Save a report to ``output_dir`` as timestamped JSON.

    Args:
        report: Report model to save
        command: CLI command that produced it (used in the file name)
        output_dir: Directory to create the file in

    Returns:
        Path of the written file
    """
    output_dir.mkdir(parents=True, exist_ok=True)

    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    filepath = output_dir / f"{command}_report_{timestamp}.json"
    data = {
        "command": command,
        "generated_at": datetime.now().isoformat(),
        "report": report.model_dump(mode="json", exclude_none=True),
    }
    with open(filepath, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=2, ensure_ascii=False)

    err_console.print(f"✓ Report saved to: {filepath}", style="bold green")
    return filepath
