import contextlib
import logging
import os
import sys
import tempfile
import typing
from pathlib import Path

import typer
from rich.console import Console
from rich.panel import Panel

from gkm_core.cohomology import (
    all_generators,
    check_class,
    euler_characteristic,
    expand,
    flow_up_generator,
    generic_section,
    hilbert,
    multiply,
    ordinary_table,
    poincare_polynomial,
)
from gkm_core.cohomology.sections import minimum_max_degree
from gkm_core.cohomology.reports import (
    BettiReport,
    ClassReport,
    GeneratorReport,
    GeneratorsReport,
    GenericSectionReport,
    HilbertReport,
    OrdinaryTableReport,
    ValidationSummary,
    class_values,
    dump,
    generator_reports,
)
from gkm_core.dslio import emit_dot, emit_json, parse_class, read_graph, serialize_graph
from gkm_core.exceptions import (
    GKMCLIError,
    GKMClassFileError,
    GKMConfigError,
    GKMDegreeError,
    GKMError,
    GKMParseError,
    GKMUnknownVertexError,
    GKMVariableCountError,
)
from gkm_core.initialisation import configure_logging
from gkm_core.moment_graph import (
    MomentGraph,
    builtin,
    is_connected,
    palais_smale_check,
    validate as validate_graph,
)
from gkm_core.registry import BuiltinRegistry

logger = logging.getLogger(__name__)

stderr = Console(stderr=True)

cli_app = typer.Typer(
    add_completion=False,
    help="Equivariant cohomology of GKM spaces from moment graphs",
    name="gkm",
    no_args_is_help=True,
)

USAGE_ERRORS = (
    GKMParseError,
    GKMClassFileError,
    GKMDegreeError,
    GKMConfigError,
    GKMUnknownVertexError,
    GKMVariableCountError,
)


@contextlib.contextmanager
def reported_errors(title: str):
    """Prints library errors as a panel on stderr and exits 2 for usage and
    parse errors, 1 for everything else."""
    try:
        yield
    except GKMError as e:
        code = 2 if isinstance(e, USAGE_ERRORS) else 1
        stderr.print(
            Panel(
                f"[bold red]{type(e).__name__}:[/bold red] {e.message}",
                title=title,
                subtitle=f"exit {code}",
                subtitle_align="right",
            )
        )
        raise typer.Exit(code)


GraphFile = typing.Annotated[
    typing.Optional[Path],
    typer.Argument(
        exists=True, dir_okay=False, show_default=False, help="Graph in the DSL or JSON format"
    ),
]
BuiltinName = typing.Annotated[
    typing.Optional[str],
    typer.Option("--builtin", help="Use a built-in graph instead of FILE"),
]
N = typing.Annotated[typing.Optional[int], typer.Option("--n", help="Parameter n of the built-in")]
K = typing.Annotated[typing.Optional[int], typer.Option("--k", help="Parameter k of the built-in")]
MaxDegree = typing.Annotated[
    typing.Optional[int],
    typer.Option("--max-degree", help="Top degree (default: max down-degree + 2)"),
]
Threads = typing.Annotated[
    typing.Optional[int],
    typer.Option("--threads", min=1, help="Degrees computed concurrently"),
]
Json = typing.Annotated[bool, typer.Option("--json", help="Write JSON")]
ClassFile = typing.Annotated[
    Path, typer.Option("--class", exists=True, dir_okay=False, help="Class file")
]


def load_graph(
    file: typing.Optional[Path],
    builtin_name: typing.Optional[str],
    n: typing.Optional[int] = None,
    k: typing.Optional[int] = None,
) -> MomentGraph:
    if (file is None) == (builtin_name is None):
        raise typer.BadParameter("give exactly one of FILE or --builtin NAME")
    if builtin_name is not None:
        return builtin(builtin_name, n=n, k=k)
    if n is not None or k is not None:
        raise typer.BadParameter("--n and --k only apply to --builtin")
    return read_graph(file.read_text())


def check_max_degree(g: MomentGraph, max_degree: typing.Optional[int]):
    if max_degree is not None:
        lowest = minimum_max_degree(g)
        if max_degree < lowest:
            raise GKMDegreeError(
                f"maximum degree {max_degree} hides generators; it must be at least {lowest}"
            )


def numbers(values: typing.Iterable[int]) -> str:
    return " ".join(str(v) for v in values)


@cli_app.callback()
def main(
    verbose: typing.Annotated[
        bool, typer.Option("--verbose", "-v", help="Debug logging on stderr")
    ] = False,
):
    configure_logging("DEBUG" if verbose else None)


@cli_app.command(help="Run the GKM validity checks and report Palais-Smale")
def validate(
    file: GraphFile = None,
    builtin_name: BuiltinName = None,
    n: N = None,
    k: K = None,
    json: Json = False,
):
    with reported_errors("Validating moment graph"):
        if file is not None and builtin_name is None:
            g = read_graph(file.read_text(), validate=False)
        else:
            g = load_graph(file, builtin_name, n, k)
        report = validate_graph(g)
        connected = is_connected(g)
        smale, violating = palais_smale_check(g)

    if not smale:
        logger.warning("not Palais-Smale: %s", ", ".join(str(e) for e in violating))

    if json:
        typer.echo(
            dump(
                ValidationSummary(
                    valid=report.valid,
                    checks=report,
                    connected=connected,
                    palais_smale=smale,
                    palais_smale_violations=[str(e) for e in violating],
                )
            ),
            nl=False,
        )
    else:
        for check in report.checks:
            line = f"{check.name}: {check.status}"
            if check.offending:
                line += f" ({'; '.join(check.offending)})"
            elif check.detail:
                line += f" ({check.detail})"
            typer.echo(line)
        typer.echo(f"connected: {'yes' if connected else 'no'}")
        if smale:
            typer.echo("palais-smale: pass")
        else:
            typer.echo(f"palais-smale: FAIL ({'; '.join(str(e) for e in violating)})")
        typer.echo("valid" if report.valid else "invalid")

    if not report.valid:
        raise typer.Exit(1)


@cli_app.command(name="hilbert", help="Section dimensions in each degree")
def hilbert_command(
    file: GraphFile = None,
    builtin_name: BuiltinName = None,
    n: N = None,
    k: K = None,
    max_degree: MaxDegree = None,
    threads: Threads = None,
    json: Json = False,
):
    with reported_errors("Hilbert function"):
        g = load_graph(file, builtin_name, n, k)
        data = hilbert(g, max_degree, threads)

    if json:
        typer.echo(dump(HilbertReport.from_data(data)), nl=False)
        return
    typer.echo(f"dims: {numbers(data.dims)}")
    if data.betti is not None:
        typer.echo(f"betti: {numbers(data.betti)}")
    typer.echo(f"free: {'yes' if data.free else 'no'}")
    if not data.free:
        typer.echo(f"diagnostic: {data.diagnostic}")


@cli_app.command(help="Betti numbers of ordinary cohomology")
def betti(
    file: GraphFile = None,
    builtin_name: BuiltinName = None,
    n: N = None,
    k: K = None,
    max_degree: MaxDegree = None,
    threads: Threads = None,
    json: Json = False,
):
    with reported_errors("Betti numbers"):
        g = load_graph(file, builtin_name, n, k)
        data = hilbert(g, max_degree, threads)

    if json:
        report = BettiReport(betti=data.betti, free=data.free, diagnostic=data.diagnostic)
        if data.free:
            report.poincare_polynomial = poincare_polynomial(data.betti)
            report.euler_characteristic = euler_characteristic(data.betti)
        typer.echo(dump(report), nl=False)
    elif data.free:
        typer.echo(numbers(data.betti))

    if not data.free:
        stderr.print(
            Panel(
                f"[bold red]Not a free module:[/bold red] {data.diagnostic}",
                title="Betti numbers",
                subtitle="exit 1",
                subtitle_align="right",
            )
        )
        raise typer.Exit(1)


@cli_app.command(help="Flow-up generators, one per vertex")
def generators(
    file: GraphFile = None,
    builtin_name: BuiltinName = None,
    n: N = None,
    k: K = None,
    vertex: typing.Annotated[
        typing.Optional[str], typer.Option("--vertex", help="Only the generator at VERTEX")
    ] = None,
    generic: typing.Annotated[
        bool, typer.Option("--generic", help="Write the general section sum p_i g_i")
    ] = False,
    max_degree: MaxDegree = None,
    threads: Threads = None,
    json: Json = False,
):
    with reported_errors("Flow-up generators"):
        g = load_graph(file, builtin_name, n, k)
        if vertex is not None:
            g.require(vertex)
            c, ambiguity = flow_up_generator(g, vertex)
            reports = [
                GeneratorReport(
                    base=vertex,
                    degree=c.degree,
                    ambiguity=ambiguity,
                    values=class_values(g, c),
                )
            ]
            rows = [(vertex, c, ambiguity)]
            gens = None
        else:
            check_max_degree(g, max_degree)
            gens = all_generators(g, max_degree, threads)
            reports = generator_reports(g, gens)
            rows = [(gen.base, gen.gkm_class, gen.ambiguity) for gen in gens]

    if generic and gens is not None:
        labels = generic_section(g, gens)
        if json:
            typer.echo(dump(GenericSectionReport(values=labels)), nl=False)
        else:
            for name in g.names:
                typer.echo(f"{name}: {labels[name]}")
    elif json:
        typer.echo(GeneratorsReport.dump_json(reports, by_alias=True, indent=2).decode() + "\n", nl=False)
    else:
        for base, c, ambiguity in rows:
            line = f"{base}  degree {c.degree}  {c.to_text(g)}"
            if ambiguity:
                line += f"  ambiguity {ambiguity}"
            typer.echo(line)

    if gens is not None and not gens.consistent:
        stderr.print(
            Panel(
                f"[bold yellow]Generators not confirmed:[/bold yellow] {gens.diagnostic}",
                title="Flow-up generators",
            )
        )


@cli_app.command(help="Test a class against the edge relations")
def check(
    class_file: ClassFile,
    file: GraphFile = None,
    builtin_name: BuiltinName = None,
    n: N = None,
    k: K = None,
    json: Json = False,
):
    with reported_errors("Checking class"):
        g = load_graph(file, builtin_name, n, k)
        c = parse_class(class_file.read_text(), g)
        ok, violated = check_class(g, c)

    if json:
        typer.echo(dump(ClassReport.build(g, c, ok, violated)), nl=False)
    else:
        typer.echo(c.to_text(g))
        if ok:
            typer.echo("valid")
        else:
            typer.echo(f"invalid: {'; '.join(str(e) for e in violated) or 'not homogeneous'}")
    if not ok:
        raise typer.Exit(1)


@cli_app.command(name="multiply", help="Coordinatewise product of two classes")
def multiply_command(
    class_files: typing.Annotated[
        list[Path],
        typer.Option("--class", exists=True, dir_okay=False, help="Class file (give two)"),
    ],
    file: GraphFile = None,
    builtin_name: BuiltinName = None,
    n: N = None,
    k: K = None,
    expand_product: typing.Annotated[
        bool, typer.Option("--expand", help="Also expand the product in the generators")
    ] = False,
    json: Json = False,
):
    if len(class_files) != 2:
        raise typer.BadParameter("multiply needs exactly two --class files")
    with reported_errors("Multiplying classes"):
        g = load_graph(file, builtin_name, n, k)
        a, b = (parse_class(path.read_text(), g) for path in class_files)
        product = multiply(g, a, b)
        expansion = expand(g, all_generators(g), product) if expand_product else None

    if json:
        typer.echo(dump(ClassReport.build(g, product, True, (), expansion)), nl=False)
        return
    typer.echo(product.to_text(g))
    if expansion is not None:
        typer.echo(f"expansion: {expansion.to_text()}")


def _combination(entry, names: typing.Sequence[str]) -> str:
    parts = []
    for l, q in entry:
        parts.append(names[l] if q == 1 else f"{q}*{names[l]}")
    return " + ".join(parts) or "0"


@cli_app.command(help="Structure constants of ordinary cohomology")
def ordinary(
    file: GraphFile = None,
    builtin_name: BuiltinName = None,
    n: N = None,
    k: K = None,
    json: Json = False,
):
    with reported_errors("Ordinary cohomology"):
        g = load_graph(file, builtin_name, n, k)
        gens = all_generators(g)
        table = ordinary_table(g, gens)

    if json:
        typer.echo(dump(OrdinaryTableReport.from_table(table)), nl=False)
        return
    names = [f"g{i}" for i in range(1, len(gens) + 1)]
    for i, gen in enumerate(gens):
        typer.echo(f"{names[i]} = [{gen.base}]  degree {gen.degree}")
    for i in range(len(gens)):
        for j in range(i, len(gens)):
            typer.echo(f"{names[i]}*{names[j]} = {_combination(table.table[i][j], names)}")


def write_atomically(target: Path, text: str):
    """Writes through a temporary file in the target directory, so a failure
    leaves no partial file behind."""
    directory = target.parent if str(target.parent) else Path(".")
    try:
        handle, temporary = tempfile.mkstemp(dir=directory, prefix=f".{target.name}.", suffix=".tmp")
    except OSError as e:
        raise GKMCLIError(f"cannot write to {directory}: {e.strerror}")
    try:
        with os.fdopen(handle, "w") as f:
            f.write(text)
        os.replace(temporary, target)
    except OSError as e:
        with contextlib.suppress(OSError):
            os.unlink(temporary)
        raise GKMCLIError(f"cannot write {target}: {e.strerror}")


@cli_app.command(help="Write the graph as DOT")
def render(
    output: typing.Annotated[Path, typer.Option("--output", "-o", help="DOT file to write")],
    file: GraphFile = None,
    builtin_name: BuiltinName = None,
    n: N = None,
    k: K = None,
):
    with reported_errors("Rendering"):
        g = load_graph(file, builtin_name, n, k)
        write_atomically(output, emit_dot(g))


@cli_app.command(name="builtin", help="List the built-in graphs, or print one")
def builtin_command(
    name: typing.Annotated[typing.Optional[str], typer.Argument(show_default=False)] = None,
    list_: typing.Annotated[bool, typer.Option("--list", help="List the built-ins")] = False,
    n: N = None,
    k: K = None,
    json: Json = False,
):
    if list_ or name is None:
        for item in BuiltinRegistry.values():
            parameters = " ".join(f"--{p} N" for p in item["parameters"])
            usage = f"{item['name']} {parameters}".strip()
            typer.echo(f"{usage:<28}{item['description']}")
        return
    with reported_errors("Built-in graph"):
        g = builtin(name, n=n, k=k)
    typer.echo(emit_json(g) if json else serialize_graph(g), nl=False)


def run(argv: typing.Optional[list[str]] = None) -> int:
    """Runs the CLI on `argv` and returns the exit code instead of exiting."""
    try:
        cli_app(args=argv, prog_name="gkm")
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 0 if e.code is None else 1
    return 0


def cli():
    sys.exit(run(sys.argv[1:]))
