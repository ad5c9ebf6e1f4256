#!/usr/bin/env python3
# SPDX-FileCopyrightText: 2025 spiderlab Contributors
# SPDX-License-Identifier: MIT
"""
Command line and MCP server for k-shifted antimagic labelings of spider forests.
"""

import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, Optional

import click
from fastmcp import FastMCP

from config import Loader as config
from config import Spiderlab

from .labeling import oracle, schemes, tools
from .labeling.errors import ConstructionError
from .labeling.forest import (
    SCHEMES,
    enumerate_forests,
    parse_forest,
    validate_for_scheme,
)
from .labeling.sums import (
    check_antimagic,
    labeling_to_json,
    parse_labeling,
    to_dot,
)

logger = logging.getLogger(__name__)
mcp = FastMCP("Spiderlab Server")

COUNTEREXAMPLE_FILE = "counterexample.json"

# Labeling Tools


@mcp.tool
async def label_forest(forest: str, k: int, scheme: str = "auto") -> dict:
    """Label a spider forest with scheme a, b, c or auto.

    Args:
        forest: Forest in line format (``spider 2 2 2`` per spider) or JSON
        k: Shift; labels are drawn from [k+1, k+m]
        scheme: ``auto`` tries a, then c, then b

    Returns:
        Dict with the resolved scheme and the labeling document
    """
    try:
        result = tools.label_forest(forest, k, scheme)
        return {"status": "success", **result}
    except Exception as e:
        return {"status": "error", "error": str(e)}


@mcp.tool
async def verify_labeling(forest: str, labeling: str) -> dict:
    """Check whether a labeling document is k-shifted antimagic for a forest."""
    try:
        result = tools.verify_labeling(forest, labeling)
        return {"status": "success", **result}
    except Exception as e:
        return {"status": "error", "error": str(e)}


@mcp.tool
async def scheme_params(forest: str, k: int, scheme: str) -> dict:
    """Dump the parameters and label intervals of a scheme at shift k."""
    try:
        result = tools.scheme_params(forest, k, scheme)
        return {"status": "success", "params": result}
    except Exception as e:
        return {"status": "error", "error": str(e)}


# Oracle Tools


@mcp.tool
async def oracle_check(forest: str, k: int, max_edges: Optional[int] = None) -> dict:
    """Decide by exhaustive search whether a small forest is k-shifted antimagic."""
    try:
        result = tools.oracle_check(forest, k, max_edges)
        return {"status": "success", **result}
    except Exception as e:
        return {"status": "error", "error": str(e)}


@mcp.tool
async def shift_table(forest: str, k_from: int, k_to: int) -> dict:
    """Oracle verdict for every shift in [k_from, k_to]."""
    try:
        result = tools.shift_table(forest, k_from, k_to)
        return {"status": "success", **result}
    except Exception as e:
        return {"status": "error", "error": str(e)}


@mcp.tool
async def cross_check(forest: str, k: int, scheme: str) -> dict:
    """Compare a scheme's labeling with the oracle's verdict."""
    try:
        result = tools.cross_check(forest, k, scheme)
        return {"status": "success", **result}
    except Exception as e:
        return {"status": "error", "error": str(e)}


@mcp.tool
async def generate_forest(
    seed: int,
    spiders: str = "1..4",
    legs: str = "3..5",
    lengths: str = "1,2,3,4,5",
    scheme_c_only: bool = False,
) -> dict:
    """Draw a reproducible random spider forest."""
    try:
        result = tools.generate_forest(seed, spiders, legs, lengths, scheme_c_only)
        return {"status": "success", **result}
    except Exception as e:
        return {"status": "error", "error": str(e)}


@mcp.custom_route("/api/health", methods=["GET"])
async def health_check(request):
    """Health check endpoint."""
    from starlette.responses import JSONResponse

    return JSONResponse(
        {
            "status": "ok",
            "message": "spiderlab MCP Server is running",
            "mcp_endpoint": "/mcp",
            "tools_count": 7,
            "tool_categories": {"labeling": 3, "oracle": 3, "generation": 1},
            "max_edges": tools.settings().max_edges,
        }
    )


def create_app():
    """Create MCP HTTP app with custom API endpoints."""
    return mcp.http_app()


# Command line


def common_options(command: Callable) -> Callable:
    """--config-file and --log-level, shared by every subcommand."""
    command = click.option(
        "--log-level",
        type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
        default=None,
        help="Logging level (default: WARNING, or the config file's)",
    )(command)
    return click.option("--config-file", help="YAML configuration file path")(command)


def _setup(config_file: Optional[str], log_level: Optional[str], **cli_args) -> Spiderlab:
    """Load configuration, configure logging to stderr and the tools."""
    try:
        settings = config.from_file_and_cli(
            config_file=config_file, log_level=log_level, **cli_args
        )
    except ValueError as e:
        logging.basicConfig(level=logging.WARNING, stream=sys.stderr)
        logger.error(f"Invalid configuration: {e}")
        sys.exit(2)

    logging.basicConfig(
        level=getattr(logging, settings.log_level), stream=sys.stderr, force=True
    )
    tools.configure(settings)
    return settings


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ValueError(f"Cannot read {path}: {e}")


def _emit(document: Dict[str, Any]):
    click.echo(json.dumps(document, indent=2))


def _fail_usage(e: Exception):
    logger.error(f"{e}")
    sys.exit(2)


def _write_counterexample(e: ConstructionError, out: Optional[str]) -> str:
    path = out or COUNTEREXAMPLE_FILE
    if e.labeling is not None:
        document = json.loads(labeling_to_json(e.labeling, e.repairs))
    else:
        document = {}
    document["error"] = str(e)
    Path(path).write_text(json.dumps(document, indent=2) + "\n", encoding="utf-8")
    return path


@click.group()
def cli():
    """spiderlab - k-shifted antimagic labelings of spider forests."""
    pass


@cli.command()
@click.option("--input", "input_file", required=True, help="Forest file")
@click.option("--k", type=int, required=True, help="Shift")
@click.option(
    "--scheme",
    type=click.Choice(["auto", *SCHEMES], case_sensitive=False),
    default=None,
    help="Scheme to use; auto prefers a, then c, then b (needs k >= k0)",
)
@click.option("--out", help="Write the labeling JSON here instead of stdout")
@click.option("--dot", help="Also write the labeled forest as DOT")
@common_options
def label(
    input_file: str,
    k: int,
    scheme: Optional[str],
    out: Optional[str],
    dot: Optional[str],
    config_file: Optional[str],
    log_level: Optional[str],
):
    """Label a forest with a k-shifted antimagic labeling.

    Examples:
        spiderlab label --input forest.txt --k 0

        spiderlab label --input forest.txt --k -20 --scheme b --out labeling.json
    """
    settings = _setup(config_file, log_level, scheme=scheme)

    try:
        forest = parse_forest(_read(input_file))
        outcome = schemes.run_scheme(forest, k, settings.scheme)
    except ConstructionError as e:
        path = _write_counterexample(e, out)
        logger.error(f"Construction failed, counterexample written to {path}: {e}")
        sys.exit(1)
    except ValueError as e:
        _fail_usage(e)

    labeling = outcome.labeling
    document = labeling_to_json(labeling, outcome.repairs())
    if out:
        Path(out).write_text(document + "\n", encoding="utf-8")
        logger.info(f"Labeling written to {out}")
    else:
        click.echo(document)
    if dot:
        Path(dot).write_text(to_dot(forest, labeling), encoding="utf-8")


@cli.command()
@click.option("--input", "input_file", required=True, help="Forest file")
@click.option("--labeling", "labeling_file", required=True, help="Labeling JSON file")
@common_options
def verify(
    input_file: str,
    labeling_file: str,
    config_file: Optional[str],
    log_level: Optional[str],
):
    """Check a labeling; exit 0 if it is k-shifted antimagic, 1 if not."""
    _setup(config_file, log_level)

    try:
        forest = parse_forest(_read(input_file))
        labeling = parse_labeling(_read(labeling_file))
    except ValueError as e:
        _fail_usage(e)

    verdict = check_antimagic(forest, labeling)
    click.echo(str(verdict))
    sys.exit(0 if verdict.ok else 1)


@cli.command(name="oracle")
@click.option("--input", "input_file", required=True, help="Forest file")
@click.option("--k", type=int, required=True, help="Shift")
@click.option("--max-edges", type=int, default=None, help="Edge budget (default 10, at most 12)")
@click.option("--prune/--no-prune", default=None, help="Prune on finished collisions")
@click.option("--parallel/--sequential", default=None, help="Split the search over processes")
@click.option("--workers", type=int, default=None, help="Worker processes for --parallel")
@common_options
def oracle_command(
    input_file: str,
    k: int,
    max_edges: Optional[int],
    prune: Optional[bool],
    parallel: Optional[bool],
    workers: Optional[int],
    config_file: Optional[str],
    log_level: Optional[str],
):
    """Decide exhaustively whether a small forest is k-shifted antimagic.

    Exits 0 when feasible and 1 when infeasible.
    """
    settings = _setup(
        config_file,
        log_level,
        max_edges=max_edges,
        prune=prune,
        parallel=parallel,
        workers=workers,
    )

    try:
        forest = parse_forest(_read(input_file))
        result = oracle.brute_force(
            forest,
            k,
            edge_budget=settings.max_edges,
            prune=settings.prune,
            parallel=settings.parallel,
            workers=settings.workers,
        )
    except ValueError as e:
        _fail_usage(e)

    click.echo("feasible" if result.feasible else "infeasible")
    click.echo(f"edges_searched={result.edges_searched}")
    if result.witness is not None:
        click.echo(labeling_to_json(result.witness))
    sys.exit(0 if result.feasible else 1)


@cli.command(name="min-k")
@click.option("--input", "input_file", required=True, help="Forest file")
@click.option("--from", "k_from", type=int, required=True, help="Smallest shift")
@click.option("--to", "k_to", type=int, required=True, help="Largest shift")
@click.option("--max-edges", type=int, default=None, help="Edge budget (default 10, at most 12)")
@common_options
def min_k_command(
    input_file: str,
    k_from: int,
    k_to: int,
    max_edges: Optional[int],
    config_file: Optional[str],
    log_level: Optional[str],
):
    """Print the oracle verdict for every shift in a range."""
    settings = _setup(config_file, log_level, max_edges=max_edges)

    try:
        forest = parse_forest(_read(input_file))
        result = oracle.min_k(
            forest,
            k_from,
            k_to,
            edge_budget=settings.max_edges,
            prune=settings.prune,
            parallel=settings.parallel,
            workers=settings.workers,
        )
    except ValueError as e:
        _fail_usage(e)

    for k, ok in result.feasibility.items():
        click.echo(f"{k} {'feasible' if ok else 'infeasible'}")
    click.echo(f"minimal={result.minimal if result.minimal is not None else 'none'}")


@cli.command()
@click.option("--input", "input_file", required=True, help="Forest file")
@click.option("--k", type=int, required=True, help="Shift")
@click.option(
    "--scheme",
    type=click.Choice(SCHEMES, case_sensitive=False),
    required=True,
    help="Scheme whose parameters to dump",
)
@click.option("--json", "as_json", is_flag=True, help="Emit a JSON object")
@common_options
def params(
    input_file: str,
    k: int,
    scheme: str,
    as_json: bool,
    config_file: Optional[str],
    log_level: Optional[str],
):
    """Dump a scheme's parameters and label intervals."""
    _setup(config_file, log_level)

    try:
        dump = schemes.scheme_params(parse_forest(_read(input_file)), k, scheme)
    except ConstructionError as e:
        logger.error(f"{e}")
        sys.exit(1)
    except ValueError as e:
        _fail_usage(e)

    if as_json:
        _emit(dump)
        return

    scalars = [
        f"{key}={value}"
        for key, value in dump.items()
        if isinstance(value, int) and key not in ("k", "m")
    ]
    click.echo(f"scheme={dump['scheme']} k={dump['k']} m={dump['m']}")
    click.echo(" ".join(scalars))
    for name, interval in dump["intervals"].items():
        click.echo(f"{name}={interval}")


@cli.command()
@click.option("--seed", type=int, required=True, help="Random seed")
@click.option("--spiders", default="1..4", help="Spider count range A..B")
@click.option("--legs", default="3..5", help="Legs per spider range C..D")
@click.option("--lengths", default="1,2,3,4,5", help="Comma separated leg lengths")
@click.option("--scheme-c-only", is_flag=True, help="Keep only lengths 1 and even")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON instead of lines")
@common_options
def gen(
    seed: int,
    spiders: str,
    legs: str,
    lengths: str,
    scheme_c_only: bool,
    as_json: bool,
    config_file: Optional[str],
    log_level: Optional[str],
):
    """Generate a reproducible random forest."""
    _setup(config_file, log_level)

    try:
        result = tools.generate_forest(seed, spiders, legs, lengths, scheme_c_only)
    except ValueError as e:
        _fail_usage(e)

    click.echo(result["json"] if as_json else result["forest"], nl=as_json)


@cli.command(name="cross-check")
@click.option("--input", "input_file", required=True, help="Forest file")
@click.option("--k", type=int, required=True, help="Shift")
@click.option(
    "--scheme",
    type=click.Choice(SCHEMES, case_sensitive=False),
    required=True,
    help="Scheme to compare with the oracle",
)
@click.option("--max-edges", type=int, default=None, help="Edge budget (default 10, at most 12)")
@common_options
def cross_check_command(
    input_file: str,
    k: int,
    scheme: str,
    max_edges: Optional[int],
    config_file: Optional[str],
    log_level: Optional[str],
):
    """Run a scheme and the oracle at the same shift; exit 1 on disagreement."""
    settings = _setup(config_file, log_level, max_edges=max_edges)

    try:
        check = oracle.cross_check(
            parse_forest(_read(input_file)),
            k,
            scheme,
            edge_budget=settings.max_edges,
            prune=settings.prune,
        )
    except ValueError as e:
        _fail_usage(e)

    click.echo("agree" if check.agree else "disagree")
    click.echo(check.message)
    sys.exit(0 if check.agree else 1)


@cli.command()
@click.option("--max-edges", type=int, default=8, help="Largest m to enumerate")
@click.option("--max-spiders", type=int, default=2, help="Largest spider count")
@click.option(
    "--scheme",
    type=click.Choice(SCHEMES, case_sensitive=False),
    required=True,
    help="Scheme to sweep (k=0 for a and c, k=k0 for b)",
)
@common_options
def sweep(
    max_edges: int,
    max_spiders: int,
    scheme: str,
    config_file: Optional[str],
    log_level: Optional[str],
):
    """Run a scheme on every small forest satisfying its hypothesis."""
    _setup(config_file, log_level)

    if max_edges < 1 or max_spiders < 1:
        _fail_usage(ValueError("--max-edges and --max-spiders must be >= 1"))

    allowed = (lambda n: n == 1 or n % 2 == 0) if scheme == "c" else None
    checked, failures = 0, []
    for forest in enumerate_forests(max_edges, max_spiders, allowed=allowed):
        if not validate_for_scheme(forest, scheme).valid:
            continue
        checked += 1
        try:
            k = schemes.sweep_shift(forest, scheme)
            labeling = schemes.run_scheme(forest, k, scheme).labeling
            if not check_antimagic(forest, labeling).ok:
                failures.append((forest, k, "labeling failed verification"))
        except (ConstructionError, ValueError) as e:
            failures.append((forest, None, str(e)))

    click.echo(f"scheme={scheme} checked={checked} failed={len(failures)}")
    for forest, k, reason in failures:
        legs = " | ".join(" ".join(map(str, s.legs)) for s in forest.spiders)
        click.echo(f"  {legs} k={k}: {reason}")
    sys.exit(1 if failures else 0)


@cli.command()
@click.option(
    "--mode",
    default=None,
    type=click.Choice(["stdio", "http"]),
    help="Transport mode for the MCP server (default: stdio)",
)
@click.option("--port", default=None, type=int, help="Port to run the server on (default: 63418)")
@click.option("--addr", default=None, type=str, help="Address to bind the server to (default: localhost)")
@common_options
def serve(
    mode: Optional[str],
    port: Optional[int],
    addr: Optional[str],
    config_file: Optional[str],
    log_level: Optional[str],
):
    """Start the MCP server exposing the labeling and oracle tools.

    Examples:
        spiderlab serve

        spiderlab serve --mode http --port 8080 --config-file hack/config.yaml
    """
    settings = _setup(config_file, log_level, mode=mode, port=port, addr=addr)
    logger.info(
        f"Starting MCP server on {settings.addr}:{settings.port} in {settings.mode} mode"
    )

    if settings.mode == "stdio":
        mcp.run()
    elif settings.mode == "http":
        import uvicorn

        app = create_app()
        uvicorn_config = uvicorn.Config(app, host=settings.addr, port=settings.port)
        uvicorn.Server(uvicorn_config).run()


def main():
    """Console script entry point."""
    cli()


if __name__ == "__main__":
    cli()
