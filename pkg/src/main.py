# braid_workbench/src/main.py

import json
import logging
import sys
from typing import Callable

import click
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

from src.commands import (  # noqa: E402
    Budgets,
    CommandResult,
    cmd_affine_close,
    cmd_bracket,
    cmd_close,
    cmd_decompose,
    cmd_diagram,
    cmd_dominating,
    cmd_dynkin,
    cmd_eq,
    cmd_kernel,
    cmd_map,
    cmd_member,
    cmd_moves,
    cmd_ne,
    cmd_parabolic,
    cmd_relations,
    cmd_replay,
    cmd_schreier,
    cmd_search,
)
from src.closure import CLOSURE_PROPOSITIONS  # noqa: E402
from src.config import RANDOM_SEED, SUITE_MAX_WORD_LEN, SUITE_RANDOM_CASES, SUITE_RANKS  # noqa: E402
from src.morphisms import DIAGRAM_NAMES, MORPHISM_NAMES  # noqa: E402
from src.utils import BraidError, BudgetExceededError, configure_logging  # noqa: E402

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _emit(ctx: click.Context, result: CommandResult):
    if ctx.obj["json"]:
        click.echo(json.dumps(result.to_json(), sort_keys=True))
    else:
        click.echo(result.text)
    ctx.exit(EXIT_OK if result.ok else EXIT_FALSE)


def _run(ctx: click.Context, fn: Callable[..., CommandResult], *args, **kwargs):
    """Runs one verb and maps library errors onto the exit-code contract."""
    try:
        result = fn(*args, budgets=ctx.obj["budgets"], **kwargs)
    except BudgetExceededError as e:
        click.echo(f"budget exceeded: {e}", err=True)
        ctx.exit(EXIT_BUDGET)
    except BraidError as e:
        click.echo(f"error: {e}", err=True)
        ctx.exit(EXIT_USAGE)
    _emit(ctx, result)


@click.group()
@click.option("--json", "as_json", is_flag=True, help="Emit a JSON object instead of text.")
@click.option("--max-endo-len", type=int, default=None, help="Free-group image length budget.")
@click.option("--max-strands", type=int, default=None, help="Temperley-Lieb strand budget.")
@click.option("--max-depth", type=int, default=None, help="Markov search depth budget.")
@click.option("--max-rank", type=int, default=None, help="Markov search rank budget.")
@click.option("--max-states", type=int, default=None, help="Markov search state budget.")
@click.option("--log-level", default=None, help="Overrides BRAIDS_LOG_LEVEL.")
@click.pass_context
def cli(ctx, as_json, max_endo_len, max_strands, max_depth, max_rank, max_states, log_level):
    """Braid workbench: words, equality, morphisms, decompositions and closures."""
    configure_logging(log_level)
    for name, value in (("--max-endo-len", max_endo_len), ("--max-strands", max_strands),
                        ("--max-depth", max_depth), ("--max-rank", max_rank), ("--max-states", max_states)):
        if value is not None and value <= 0:
            raise click.BadParameter(f"must be positive, got {value}", param_hint=name)
    ctx.ensure_object(dict)
    ctx.obj["json"] = as_json
    ctx.obj["budgets"] = Budgets(max_endo_len, max_strands, max_depth, max_rank, max_states)


@cli.command()
@click.argument("x")
@click.argument("y")
@click.pass_context
def eq(ctx, x, y):
    """Decide whether two words are equal in their braid group."""
    _run(ctx, cmd_eq, x, y)


@cli.command()
@click.argument("w")
@click.pass_context
def member(ctx, w):
    """Decide membership of a B-type word in the affine subgroup."""
    _run(ctx, cmd_member, w)


@cli.command()
@click.argument("w")
@click.pass_context
def decompose(ctx, w):
    """Split a B-type word as lambda * phi^k."""
    _run(ctx, cmd_decompose, w)


@cli.command()
@click.argument("w")
@click.option("--direction", type=click.Choice(["auto", "to", "from"]), default="auto", show_default=True)
@click.pass_context
def parabolic(ctx, w, direction):
    """Convert an affine word to or from the parabolic alphabet."""
    _run(ctx, cmd_parabolic, w, direction=direction)


@cli.command()
@click.argument("w")
@click.pass_context
def kernel(ctx, w):
    """Rewrite a kernel element of B(B_n) -> B(A_n) over F_0..F_n."""
    _run(ctx, cmd_kernel, w)


@cli.command()
@click.argument("f_word")
@click.option("--n", "n", type=int, required=True)
@click.pass_context
def schreier(ctx, f_word, n):
    """Rewrite a zero-sum F-word over the Schreier generators."""
    _run(ctx, cmd_schreier, f_word, n)


@cli.command()
@click.argument("x")
@click.pass_context
def ne(ctx, x):
    """Split an affine word into its kernel part and A-type part."""
    _run(ctx, cmd_ne, x)


@cli.command(name="map")
@click.argument("w")
@click.option("--m", "m", type=click.Choice(MORPHISM_NAMES), required=True)
@click.option("--n", "n", type=int, required=True)
@click.option("--e", "e", type=int, default=1, show_default=True, help="Shift for dynkin.")
@click.pass_context
def map_(ctx, w, m, n, e):
    """Apply a named morphism."""
    _run(ctx, cmd_map, w, m, n, e=e)


@cli.command()
@click.argument("w")
@click.option("--e", "e", type=int, default=1, show_default=True)
@click.pass_context
def dynkin(ctx, w, e):
    """Shift an affine word around the cycle diagram."""
    _run(ctx, cmd_dynkin, w, e=e)


@cli.command()
@click.option("--n", "n", type=int, required=True)
@click.pass_context
def dominating(ctx, n):
    """Print the dominating element s_n ... s_1 a_{n+1}."""
    _run(ctx, cmd_dominating, n)


@cli.command()
@click.argument("w")
@click.option("--name", type=click.Choice(DIAGRAM_NAMES), required=True)
@click.option("--n", "n", type=int, required=True)
@click.pass_context
def diagram(ctx, w, name, n):
    """Check one commuting identity of the morphism atlas on a word."""
    _run(ctx, cmd_diagram, name, n, w)


@cli.command()
@click.argument("w")
@click.pass_context
def close(ctx, w):
    """Closure invariants of an A-type braid."""
    _run(ctx, cmd_close, w)


@cli.command(name="affine-close")
@click.argument("x")
@click.pass_context
def affine_close(ctx, x):
    """Closure invariants of an affine braid through its A-type image."""
    _run(ctx, cmd_affine_close, x)


@cli.command()
@click.argument("w")
@click.pass_context
def bracket(ctx, w):
    """Kauffman bracket, normalized invariant and Jones polynomial."""
    _run(ctx, cmd_bracket, w)


@cli.command()
@click.argument("x")
@click.option("--which", type=click.Choice(CLOSURE_PROPOSITIONS), required=True)
@click.pass_context
def moves(ctx, x, which):
    """Print a checked Markov derivation for a closure invariance."""
    _run(ctx, cmd_moves, x, which)


@cli.command()
@click.argument("x")
@click.argument("y")
@click.pass_context
def search(ctx, x, y):
    """Bounded search for a Markov derivation from x to y."""
    _run(ctx, cmd_search, x, y)


@cli.command()
@click.argument("start")
@click.argument("moves_file", type=click.File("r"))
@click.pass_context
def replay(ctx, start, moves_file):
    """Replay a serialized move sequence (one step per line, '-' for stdin)."""
    _run(ctx, cmd_replay, start, moves_file.read())


@cli.command()
@click.option("--kind", type=click.Choice(["A", "B", "AT"]), required=True)
@click.option("--n", "n", type=int, required=True)
@click.option("--presentation", type=click.Choice(["formal", "parabolic", "phi"]), default="formal",
              show_default=True)
@click.pass_context
def relations(ctx, kind, n, presentation):
    """Dump a defining relation table."""
    _run(ctx, cmd_relations, kind, n, presentation=presentation)


@cli.command()
@click.option("--ranks", default=",".join(str(r) for r in SUITE_RANKS), show_default=True)
@click.option("--cases", type=int, default=SUITE_RANDOM_CASES, show_default=True)
@click.option("--seed", type=int, default=RANDOM_SEED, show_default=True)
@click.option("--max-len", type=int, default=SUITE_MAX_WORD_LEN, show_default=True, help="Longest random word.")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the CSV report here.")
@click.pass_context
def check(ctx, ranks, cases, seed, max_len, out):
    """Run the proposition suite and print a summary table."""
    from src.reporting import run_proposition_suite, suite_passed, summarize, write_report

    try:
        rank_list = tuple(int(r) for r in ranks.split(",") if r.strip())
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {ranks!r}", param_hint="--ranks")
    df = run_proposition_suite(rank_list, cases=cases, seed=seed, max_len=max_len)
    if out is not None:
        write_report(df, out)
    passed = suite_passed(df)
    if ctx.obj["json"]:
        payload = {"verb": "check", "inputs": {"ranks": list(rank_list), "cases": cases, "seed": seed},
                   "result": {"passed": passed, "rows": df.to_dict("records")}}
        click.echo(json.dumps(payload, sort_keys=True, default=str))
    else:
        click.echo(summarize(df).to_string(index=False))
    ctx.exit(EXIT_OK if passed else EXIT_FALSE)


def main(argv=None) -> int:
    """Runs the CLI and returns the exit code instead of exiting."""
    try:
        code = cli.main(args=argv, prog_name="braids", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except click.Abort:
        return EXIT_USAGE
    return code if isinstance(code, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
