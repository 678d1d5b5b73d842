"""
The `soltes` command line.

Exit status 0 means success (or every verdict as expected), 1 means a
verdict mismatch or a violated invariant, and 2 means bad input or usage.
"""

import functools
import json
import logging
import sys
from pathlib import Path

import click

from . import __version__, formats
from .constructions import CONVENTIONS, KNITS, ConstructionParams, construct as build
from .errors import InvariantViolation, SoltesError
from .hypergraph import distance_distribution, soltes_report
from .search import SearchSpec, lemma_suite, search_soltes
from .verification import CHECKS, VerifyOptions, all_passed, run_checks
from .weighted import WeightedGraph, distance_distribution_w, soltes_report_w


log = logging.getLogger(__name__)

VARIANT_NAMES = ['knits', 'general-r', 'irregular54', 'cycle', 'prism', 'alternating-cycle']


class InputFailure(click.ClickException):
    exit_code = 2


class Mismatch(click.ClickException):
    exit_code = 1


def reporting_errors(func):
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except InvariantViolation as exc:
            raise Mismatch(f'{exc.code}: {exc}')
        except SoltesError as exc:
            raise InputFailure(f'{exc.code}: {exc}')
        except (OSError, ValueError) as exc:
            raise InputFailure(str(exc))
    return wrapper


def _read(source, kind):
    text = source.read()
    return formats.parse(text, kind or formats.detect_kind(source.name, text))


def _emit_json(obj, output=None):
    click.echo(json.dumps(obj, indent=2), file=output)


format_option = click.option(
    '--format', 'output_format', type=click.Choice(['text', 'json']), default='text',
    show_default=True, help='Output format.',
)
kind_option = click.option(
    '--kind', type=click.Choice([formats.HG, formats.WG]), default=None,
    help='Input format. Taken from the file name or the first line when omitted.',
)
samples_option = click.option(
    '--samples', type=click.IntRange(min=0), default=100000, show_default=True,
    help='Number of random samples for the randomized checks.',
)
seed_option = click.option('--seed', type=int, default=0, show_default=True, help='Random seed.')


@click.group()
@click.version_option(__version__, prog_name='soltes')
@click.option('-v', '--verbose', count=True, help='Log progress (repeat for debug output).')
def main(verbose):
    """Tools for Šoltés hypergraphs: hypergraphs whose Wiener index survives
    the deletion of any single vertex."""
    level = logging.WARNING if not verbose else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level, format='%(levelname)s %(name)s: %(message)s')


@main.command()
@click.argument('source', type=click.File('r'))
@kind_option
@format_option
@reporting_errors
def wiener(source, kind, output_format):
    """Print the Wiener index and the distance distribution of SOURCE."""
    obj = _read(source, kind)
    if isinstance(obj, WeightedGraph):
        distribution = distance_distribution_w(obj)
    else:
        distribution = distance_distribution(obj)

    if output_format == 'json':
        _emit_json(formats.distribution_to_json(distribution))
        return

    encoded = formats.distribution_to_json(distribution)
    click.echo(f'W = {distribution.wiener()}')
    click.echo(f'diameter = {distribution.diameter}')
    for distance, count in encoded['counts'].items():
        click.echo(f'  d = {distance}: {count} pair(s)')
    if encoded['disconnected_pairs']:
        click.echo(f'  disconnected: {encoded["disconnected_pairs"]} pair(s)')


def _echo_report(report, output):
    click.echo(f'W = {report.wiener}', file=output)
    click.echo(f'{"vertex":>6} {"sigma":>10} {"detour":>10} {"W(H-v)":>10} {"delta":>10}', file=output)
    for v in report.vertices:
        columns = (v.transmission, v.detour_sum, v.wiener_after, v.delta)
        click.echo(f'{v.label:>6} ' + ' '.join(f'{str(x):>10}' for x in columns), file=output)
    click.echo(f'verdict: {"Šoltés" if report.verdict else "not Šoltés"}', file=output)


@main.command()
@click.argument('source', type=click.File('r'))
@kind_option
@format_option
@click.option(
    '--expect', type=click.Choice(['soltes', 'not-soltes']), default=None,
    help='Exit with status 1 unless the verdict is the expected one.',
)
@click.option('-o', '--output', type=click.File('w'), default='-', help='Where to write the report.')
@reporting_errors
def check(source, kind, output_format, expect, output):
    """Decide whether SOURCE is a Šoltés hypergraph (or weighted graph)."""
    obj = _read(source, kind)
    report = soltes_report_w(obj) if isinstance(obj, WeightedGraph) else soltes_report(obj)

    if output_format == 'json':
        _emit_json(formats.report_to_json(report), output)
    else:
        _echo_report(report, output)

    if expect is not None and report.verdict != (expect == 'soltes'):
        raise Mismatch(f'Expected {expect}, but the verdict is {report.verdict}.')


@main.command()
@click.option('--variant', type=click.Choice(VARIANT_NAMES, case_sensitive=False), required=True)
@click.option('--n', type=int, default=None, help='Order (knits, cycle).')
@click.option('--s', type=int, default=None, help='Block gap (general-r).')
@click.option('--t', type=int, default=None, help='Offset parameter (general-r).')
@click.option('--r', type=int, default=None, help='Number of outer blocks per side (general-r).')
@click.option('--k', type=int, default=None, help='Prism parameter (prism).')
@click.option('--convention', type=click.Choice(CONVENTIONS, case_sensitive=False), default=None)
@click.option('-o', '--output', type=click.File('w'), default='-', help='Where to write the object.')
@reporting_errors
def construct(variant, n, s, t, r, k, convention, output):
    """Generate one of the known constructions.

    The object goes to the output in .hg or .wg format; a JSON description
    of it goes to standard error. Generators check their own structure and
    fail with status 1 if a check does not hold.
    """
    params = ConstructionParams.create(variant, n=n, s=s, t=t, r=r, k=k, convention=convention)
    if params.variant == KNITS and params.n < 100:
        log.warning('n = %d is below 100, the smallest order the family is usually stated for', params.n)

    obj = build(params)
    output.write(formats.format(obj))

    description = params.to_json()
    description['m'] = len(obj.edges)
    click.echo(json.dumps(description), err=True)


@main.command()
@click.argument('spec_file', type=click.File('r'))
@click.option('--workers', type=click.IntRange(min=1), default=None,
              help='Worker processes. Defaults to $SOLTES_WORKERS or 1.')
@click.option('-o', '--output', type=click.File('w'), default='-', help='Where to write the NDJSON records.')
@click.option('--export', type=click.Path(file_okay=False), default=None,
              help='Directory in which to write every witness as a .hg file.')
@reporting_errors
def search(spec_file, workers, output, export):
    """Find every Šoltés hypergraph allowed by the JSON search spec in SPEC_FILE."""
    spec = SearchSpec.from_json(json.load(spec_file))
    result = search_soltes(spec, workers=workers)

    for record in result.records():
        output.write(json.dumps(record) + '\n')

    if export is not None:
        directory = Path(export)
        directory.mkdir(parents=True, exist_ok=True)
        for index, H in enumerate(result.witnesses):
            (directory / f'witness-{index:04d}.hg').write_text(formats.format(H))

    if not result.is_complete:
        log.warning('The search stopped early (%s); the list of witnesses may be partial', result.reason)


@main.command()
@samples_option
@seed_option
@format_option
@reporting_errors
def lemmas(samples, seed, output_format):
    """Check the structural bounds on small 4-uniform hypergraphs."""
    report = lemma_suite(sample_size=samples, seed=seed)
    if output_format == 'json':
        _emit_json(report.to_json())
    else:
        click.echo(
            f'{report.exhaustive} classes checked exhaustively, {report.sampled} order-8 samples,'
            f' {report.degree_two_samples} order-9 samples'
        )
        for violation in report.violations:
            click.echo(f'  violation: {violation}')
    if not report.ok:
        raise Mismatch(f'{len(report.violations)} violation(s).')


@main.command('verify-paper')
@click.option('--only', multiple=True, type=click.Choice(list(CHECKS)), help='Run only this check (repeatable).')
@samples_option
@seed_option
@click.option('--workers', type=click.IntRange(min=1), default=None)
@format_option
@reporting_errors
def verify_paper(only, samples, seed, workers, output_format):
    """Run the acceptance suite: every known construction and computer check."""
    options = VerifyOptions(samples=samples, seed=seed, workers=workers)
    results = run_checks(only or None, options)

    if output_format == 'json':
        _emit_json({'checks': [x.to_json() for x in results], 'ok': all_passed(results)})
    else:
        for result in results:
            status = 'ok' if result.ok else 'FAILED' if result.gating else 'failed (not gating)'
            click.echo(f'{status:<8} {result.name:<24} {result.seconds:8.2f}s  {result.detail}')

    if not all_passed(results):
        raise Mismatch('Some checks failed.')
