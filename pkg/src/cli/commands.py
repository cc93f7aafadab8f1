"""Command implementations; each returns the process exit code."""

import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np
from pydantic import BaseModel, Field, ValidationError

from src.cli.consts import (
    EXIT_DISAGREEMENT,
    EXIT_OK,
    SUMMARY,
    TITLE,
)
from src.cli.report import (
    PolarityReport,
    TrialFailure,
    VerifySummary,
    console,
    render_census,
    render_report,
    render_table,
    save_report,
)
from src.core.cactus import (
    biconnected_blocks,
    census,
    count_induced_g1_bruteforce,
    count_induced_g2_bruteforce,
    is_cactus,
)
from src.core.consts import VERIFY_CENSUS_MAX_VERTICES
from src.core.distance import boiling_point, count_distance3_pairs, wiener_index
from src.core.errors import InvalidParamsError, NotCactusError
from src.core.generators import (
    RandomCactusParams,
    generate,
    generate_random_cactus,
    parse_random_params,
)
from src.core.graph import read_graph, to_edge_list, write_graph
from src.core.polarity import Method, closed_form, parse_family_spec, wp_cactus

logger = logging.getLogger(__name__)


def cmd_compute(
    path: Path,
    method: Method = Method.BOTH,
    json_flag: bool = False,
    wiener_flag: bool = False,
    boiling_coefficients: tuple[float, float, float] | None = None,
    report_dir: Path | None = None,
) -> int:
    """
    Compute the polarity index of a graph file.

    Returns:
        0 on success, 2 when both methods ran and disagree
    """
    g = read_graph(path)
    bd = biconnected_blocks(g)
    cactus = is_cactus(g, bd)
    if method is Method.FORMULA and not cactus:
        raise NotCactusError(f"Graph is not a cactus ({path}); use --method bfs")

    wp_formula = None
    graph_census = None
    if cactus and method in (Method.FORMULA, Method.BOTH):
        graph_census = census(g, bd)
        wp_formula = wp_cactus(g, bd)
    elif method is Method.BOTH:
        logger.warning("%s is not a cactus; reporting the oracle value only", path)

    wp_oracle = count_distance3_pairs(g) if method in (Method.BFS, Method.BOTH) else None

    w = None
    if wiener_flag or boiling_coefficients is not None:
        w = wiener_index(g)
    t_b = None
    if boiling_coefficients is not None:
        wp = wp_oracle if wp_oracle is not None else wp_formula
        t_b = boiling_point(w, wp, *boiling_coefficients)

    report = PolarityReport(
        n=g.vertex_count,
        m=g.edge_count,
        is_cactus=cactus,
        wp_formula=wp_formula,
        wp_oracle=wp_oracle,
        wiener_index=w if wiener_flag else None,
        census=graph_census,
        boiling_point=t_b,
    )
    if json_flag:
        print(report.to_json())
    else:
        console.print(render_report(report))
    if report_dir is not None:
        save_report(report, "compute", report_dir)

    if report.method_agreement is False:
        logger.error(
            "Formula (%d) and oracle (%d) disagree on %s", wp_formula, wp_oracle, path
        )
        return EXIT_DISAGREEMENT
    return EXIT_OK


def cmd_generate(
    family: str, k: int, h: int, offset: int | None, out: Path
) -> int:
    """Write a chain cactus and print its size and, for h >= 2, its closed form."""
    spec = parse_family_spec(family, k, h, offset)
    g = generate(spec)
    write_graph(g, out)

    rows: dict[str, object] = {"family": spec.label(), "n": g.vertex_count, "m": g.edge_count}
    if spec.h >= 2:
        rows["closed_form"] = closed_form(spec)
    rows["file"] = out
    console.print(render_table("Generated chain cactus", rows))
    return EXIT_OK


def cmd_generate_random(
    blocks: int, p_cycle: float, max_cycle: int, seed: int, out: Path
) -> int:
    params = parse_random_params(blocks, p_cycle, max_cycle, seed)
    g = generate_random_cactus(params)
    write_graph(g, out)
    console.print(
        render_table(
            "Generated random cactus",
            {"n": g.vertex_count, "m": g.edge_count, "seed": seed, "file": out},
        )
    )
    return EXIT_OK


def cmd_census(path: Path, json_flag: bool = False) -> int:
    g = read_graph(path)
    result = census(g)
    if json_flag:
        print(result.model_dump_json())
    else:
        console.print(render_census(result))
    return EXIT_OK


class VerifyParams(BaseModel):
    """Parameters of the randomized verification harness."""

    trials: int = Field(ge=1, description="Number of random cactuses")
    max_blocks: int = Field(ge=1, description="Largest block count drawn per trial")
    max_cycle: int = Field(ge=3, description="Longest cycle drawn")
    seed: int = Field(ge=0, lt=2**64, description="Master seed")
    workers: int = Field(default=1, ge=1, description="Worker processes")

    model_config = {"extra": "forbid", "frozen": True}


class TrialOutcome(BaseModel):
    trial: int
    census_checked: bool
    failure: str | None = None
    edge_list: str | None = None


def draw_trials(params: VerifyParams) -> list[RandomCactusParams]:
    """
    Derive per-trial generator parameters from the master seed.

    Block count, cycle probability and generator seed are all drawn, so one
    run mixes trees, cycle-heavy cactuses and everything in between.
    """
    rng = np.random.default_rng(params.seed)
    return [
        RandomCactusParams(
            block_count=int(rng.integers(1, params.max_blocks, endpoint=True)),
            cycle_probability=float(rng.random()),
            max_cycle_length=params.max_cycle,
            seed=int(rng.integers(0, 2**63)),
        )
        for _ in range(params.trials)
    ]


def run_trial(trial: int, trial_params: RandomCactusParams) -> TrialOutcome:
    g = generate_random_cactus(trial_params)
    bd = biconnected_blocks(g)
    failure = None

    by_formula = wp_cactus(g, bd)
    by_oracle = count_distance3_pairs(g)
    if by_formula != by_oracle:
        failure = f"formula {by_formula} != oracle {by_oracle}"

    census_checked = g.vertex_count <= VERIFY_CENSUS_MAX_VERTICES
    if failure is None and census_checked:
        c = census(g, bd)
        b1 = count_induced_g1_bruteforce(g)
        b2 = count_induced_g2_bruteforce(g)
        if (c.b1, c.b2) != (b1, b2):
            failure = f"census (b1, b2) = ({c.b1}, {c.b2}) != exhaustive ({b1}, {b2})"

    return TrialOutcome(
        trial=trial,
        census_checked=census_checked,
        failure=failure,
        edge_list=to_edge_list(g) if failure else None,
    )


def cmd_verify(
    trials: int,
    max_blocks: int,
    max_cycle: int,
    seed: int,
    workers: int = 1,
    json_flag: bool = False,
    report_dir: Path | None = None,
) -> int:
    """
    Compare formula and oracle on random cactuses.

    Returns:
        0 iff every trial agrees, 2 otherwise
    """
    try:
        params = VerifyParams(
            trials=trials,
            max_blocks=max_blocks,
            max_cycle=max_cycle,
            seed=seed,
            workers=workers,
        )
    except ValidationError as exc:
        error = exc.errors()[0]
        raise InvalidParamsError(f"{error['loc'][0]}: {error['msg']}") from exc

    trial_params = draw_trials(params)
    indices = range(params.trials)
    if params.workers > 1:
        with ProcessPoolExecutor(max_workers=params.workers) as executor:
            outcomes = list(executor.map(run_trial, indices, trial_params, chunksize=16))
    else:
        outcomes = [run_trial(i, p) for i, p in zip(indices, trial_params)]

    failures = [o for o in outcomes if o.failure is not None]
    first = failures[0] if failures else None
    if first is not None:
        logger.warning("First counterexample at trial %d: %s", first.trial, first.failure)
    summary = VerifySummary(
        trials=params.trials,
        agreed=params.trials - len(failures),
        census_checked=sum(o.census_checked for o in outcomes),
        seed=params.seed,
        first_failure=(
            TrialFailure(trial=first.trial, reason=first.failure, edge_list=first.edge_list)
            if first
            else None
        ),
    )
    logger.info("Verification finished: %d/%d agree", summary.agreed, summary.trials)

    if json_flag:
        print(summary.model_dump_json(exclude_none=True))
    else:
        _print_verify_summary(summary)
    if report_dir is not None:
        save_report(summary, "verify", report_dir)
    return EXIT_OK if summary.passed else EXIT_DISAGREEMENT


def _print_verify_summary(summary: VerifySummary) -> None:
    console.print("=" * 80)
    console.print(TITLE)
    console.print("=" * 80)
    console.print()
    style = "bold green" if summary.passed else "bold red"
    console.print(f"{summary.agreed}/{summary.trials} agree", style=style)
    console.print(
        f"{summary.census_checked} trials also checked against exhaustive pattern counts"
    )
    if summary.first_failure is not None:
        failure = summary.first_failure
        console.print(f"First counterexample (trial {failure.trial}): {failure.reason}")
        console.print(failure.edge_list, markup=False, highlight=False)
    console.print()
    for line in SUMMARY:
        console.print(line)
