"""
Command-line interface for perverse-disc.

Reports go to stdout as plain text, one line per violation, so they can be
diffed. Errors, banners and progress go to stderr through rich.

Exit codes: 0 valid/certified, 1 validation or certification failure,
2 usage or parse error.
"""

import sys
from pathlib import Path
from typing import Callable, Dict, List, NoReturn, Optional

import click
import structlog
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn

from . import __version__
from .config import ConfigurationLoader
from .domain import (
    A2Morphism,
    A2Object,
    CMorphism,
    CObject,
    Violation,
    validate_a1_object,
    validate_a2_morphism,
    validate_a2_object,
    validate_c_morphism,
    validate_c_object,
)
from .errors import ConfigurationError, DocumentError, InvalidObjectError, RetryLimitExceededError
from .functors import (
    NaturalityCertificate,
    certify_naturality,
    certify_st_isomorphism,
    certify_ts_identity,
    s_on_morphism,
    s_on_object,
    t_on_morphism,
    t_on_object,
)
from .generation import GenConfig, ObjectFactory
from .generation.rng import MASK64
from .io import Document, DocumentKind, parse, serialize, to_document
from .io.documents import Value
from .linalg import Subspace
from .logging_config import configure_logging
from .verification import CHECK_NAMES, CheckResult, SuiteRunner

console = Console(stderr=True)
logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

VALIDATORS: Dict[DocumentKind, Callable[..., List[Violation]]] = {
    DocumentKind.C_OBJECT: validate_c_object,
    DocumentKind.A2_OBJECT: validate_a2_object,
    DocumentKind.A1_OBJECT: validate_a1_object,
    DocumentKind.C_MORPHISM: validate_c_morphism,
    DocumentKind.A2_MORPHISM: validate_a2_morphism,
}


def q2_example_object() -> CObject:
    """V = ℚ² with A = (span(1,0), span(1,1)) and B = (span(0,1), span(1,-1))."""

    def line(*vector: int) -> Subspace:
        return Subspace.from_vectors([vector], 2)

    return CObject(
        ambient_dim=2,
        a1=line(1, 0),
        a2=line(1, 1),
        b1=line(0, 1),
        b2=line(1, -1),
    )


def fail(message: str, code: int = EXIT_USAGE) -> NoReturn:
    """Print an error to stderr and exit."""
    console.print(f"[red]Error: {escape(message)}[/red]")
    logger.debug("cli_failed", message=message, exit_code=code)
    sys.exit(code)


def load_document(file_path: str) -> Document:
    """Load a document, exiting with the usage code if it cannot be read."""
    try:
        return parse(Path(file_path))
    except DocumentError as e:
        fail(f"{file_path}: {e}")
    except OSError as e:
        fail(f"cannot read {file_path}: {e.strerror}")


def emit(lines: List[str]) -> None:
    for line in lines:
        click.echo(line)


def emit_certificates(certificates: List[NaturalityCertificate]) -> NoReturn:
    for cert in certificates:
        emit(cert.report_lines())
    sys.exit(EXIT_OK if all(c.certified for c in certificates) else EXIT_FAILED)


@click.group()
@click.version_option(version=__version__, prog_name="perverse-disc")
@click.option("--verbose", "-v", is_flag=True, help="Log progress to stderr")
@click.option("--debug", is_flag=True, help="Log debug detail to stderr")
def cli(verbose: bool, debug: bool) -> None:
    """Exact linear algebra for perverse sheaves on a disc."""
    configure_logging(verbose=verbose, debug=debug)


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
def validate(file: str) -> None:
    """Check a document against the defining conditions of its category."""
    document = load_document(file)
    violations = VALIDATORS[document.kind](document.value)
    if not violations:
        click.echo(f"valid {document.kind.value}")
        sys.exit(EXIT_OK)
    click.echo(f"invalid {document.kind.value}")
    emit([str(v) for v in violations])
    sys.exit(EXIT_FAILED)


@cli.command(name="map")
@click.option(
    "--functor",
    "functor",
    required=True,
    type=click.Choice(["s", "t"], case_sensitive=False),
    help="S: C → A2 or T: A2 → C",
)
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
def map_command(functor: str, file: str) -> None:
    """Apply S or T and print the resulting document."""
    document = load_document(file)
    value = document.value
    functor = functor.lower()
    try:
        if functor == "s" and isinstance(value, CObject):
            result = to_document(s_on_object(value))
        elif functor == "s" and isinstance(value, CMorphism):
            result = to_document(s_on_morphism(value))
        elif functor == "t" and isinstance(value, A2Object):
            result = to_document(t_on_object(value))
        elif functor == "t" and isinstance(value, A2Morphism):
            result = to_document(t_on_morphism(value))
        else:
            fail(f"functor {functor.upper()} does not apply to a {document.kind.value}")
    except InvalidObjectError as e:
        click.echo(f"invalid {document.kind.value}")
        emit([str(v) for v in e.violations])
        sys.exit(EXIT_FAILED)
    click.echo(serialize(result), nl=False)


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
def roundtrip(file: str) -> None:
    """Certify TS = Id on C data, or ST ≅ Id on A2 data."""
    document = load_document(file)
    value = document.value
    if isinstance(value, CObject):
        emit_certificates([certify_ts_identity(value)])
    if isinstance(value, CMorphism):
        emit_certificates(
            [certify_ts_identity(value.source, (value,)), certify_ts_identity(value.target)]
        )
    if isinstance(value, A2Object):
        emit_certificates([certify_st_isomorphism(value)])
    if isinstance(value, A2Morphism):
        emit_certificates([certify_naturality(value)])
    fail(f"no round trip for a {document.kind.value}: A1 has no functor here")


GENERATORS: Dict[str, Callable[[ObjectFactory], Value]] = {
    "c": ObjectFactory.random_c_object,
    "a2": ObjectFactory.random_a2_object,
    "a1": ObjectFactory.random_a1_object,
    "c-morphism": ObjectFactory.random_c_morphism,
    "a2-morphism": ObjectFactory.random_a2_morphism,
}


@cli.command()
@click.option("--kind", required=True, type=click.Choice(list(GENERATORS)), help="What to draw")
@click.option("--seed", required=True, type=click.IntRange(0, MASK64), help="64-bit seed")
@click.option("--max-dim", default=6, show_default=True, type=int, help="Largest ambient dim")
@click.option("--entry-bound", default=3, show_default=True, type=int, help="Entries in [-B, B]")
def gen(kind: str, seed: int, max_dim: int, entry_bound: int) -> None:
    """Print one random valid document."""
    try:
        config = GenConfig(seed=seed, max_ambient_dim=max_dim, entry_bound=entry_bound)
    except ValidationError as e:
        fail(f"invalid generator settings: {e.errors()[0]['loc'][0]}: {e.errors()[0]['msg']}")
    try:
        value = GENERATORS[kind](ObjectFactory(config))
    except RetryLimitExceededError as e:
        fail(f"{e}; try another seed", EXIT_FAILED)
    click.echo(serialize(to_document(value)), nl=False)


@cli.command()
@click.option("--samples", type=click.IntRange(min=0), help="Objects per check (overrides profile)")
@click.option("--seed", default=42, show_default=True, type=click.IntRange(0, MASK64))
@click.option("--profile", "profile_name", default="acceptance", show_default=True)
@click.option("--workers", default=1, show_default=True, type=click.IntRange(min=1))
def suite(samples: Optional[int], seed: int, profile_name: str, workers: int) -> None:
    """Run every certificate over seeded random samples."""
    try:
        profile = ConfigurationLoader().load_profile(profile_name)
    except ConfigurationError as e:
        fail(str(e))
    if samples is not None:
        profile = profile.with_samples(samples)

    console.print(
        Panel(
            f"[bold blue]perverse-disc verification suite[/bold blue]\n"
            f"Profile: {profile.name}\n"
            f"Seed: {seed}\n"
            f"Objects: {profile.objects}, morphisms: {profile.morphisms}, "
            f"pairs: {profile.pairs}, A1 pairs: {profile.a1_pairs}"
        )
    )

    runner = SuiteRunner(profile, seed=seed, workers=workers)
    try:
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            console=console,
            transient=True,
        ) as progress:
            task = progress.add_task("Generating samples...", total=len(CHECK_NAMES))

            def advance(result: CheckResult) -> None:
                progress.update(task, advance=1, description=f"Checked {result.name}")

            runner.add_progress_callback(advance)
            summary = runner.run()
    except RetryLimitExceededError as e:
        fail(f"{e}; try another seed", EXIT_FAILED)

    emit(summary.report_lines())
    sys.exit(EXIT_OK if summary.passed else EXIT_FAILED)


@cli.command()
@click.option(
    "--output",
    default="q2_example.json",
    show_default=True,
    type=click.Path(dir_okay=False),
    help="Where to write the document",
)
def example(output: str) -> None:
    """Write the worked ℚ² example as a c-object document."""
    Path(output).write_text(serialize(to_document(q2_example_object())), encoding="utf-8")

    console.print(f"[green]Example c-object written: {output}[/green]")
    console.print("\n[blue]Try:[/blue]")
    console.print(f"  perverse-disc validate {output}")
    console.print(f"  perverse-disc map --functor s {output} > s.json")
    console.print("  perverse-disc map --functor t s.json")
    console.print(f"  perverse-disc roundtrip {output}")


def main() -> None:
    """Main CLI entry point."""
    cli()


if __name__ == "__main__":
    main()
