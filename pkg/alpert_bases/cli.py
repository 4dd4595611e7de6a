"""Command line front end.

Subcommands:
    dims       dimension table of P_{Q,F^n_k} for k = 1..kmax
    build      variable Alpert basis of a configured window
    verify     completeness, orthogonality and telescoping of that basis
    groebner   reduced Groebner basis of polynomials given as text
    vanishing  support and vanishing ideal of a measure on a cube

A RunReport is printed to stdout. With --out the command result alone is
written to a file; it does not contain timings, so identical inputs and
seed give identical files. Errors print {"error": {"type", "reason"}} to
stderr and exit with 2 (input) or 3 (verification).
"""

import argparse
import re
import sys
import time
from typing import Dict, List, Optional, Sequence

from .api import AlpertApi
from .errors import AlpertException, InputFileException, InvalidArgumentException, VerificationFailedException
from .helpers import io
from .logging_config import get_logger, set_debug_mode
from .models.polynomial import OrderKind
from .models.reports import RunReport

logger = get_logger("cli")

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VERIFICATION = 3

ORDERS = [OrderKind.GREVLEX, OrderKind.GRLEX, OrderKind.LEX]


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors raise InvalidArgumentException instead of exiting."""

    def error(self, message):
        raise InvalidArgumentException(f'{self.prog}: {message}')


def build_parser() -> argparse.ArgumentParser:
    parser = ArgumentParser(prog='alpert-bases', description='Alpert bases for L^2(mu).')
    parser.add_argument('--debug', action='store_true', help='log algorithm progress to stderr')
    commands = parser.add_subparsers(dest='command', required=True)

    dims = commands.add_parser('dims', help='dimension table for F^n_k families')
    dims.add_argument('--measure', required=True, help='measure JSON file')
    dims.add_argument('--cube', required=True, help='cube as LEVEL:C1,C2,... or {"level": m, "coords": [...]}')
    dims.add_argument('--kmax', type=int, default=3, help='largest k (default: 3)')
    dims.add_argument('--order', choices=ORDERS, default=OrderKind.GREVLEX)
    dims.add_argument('--out', help='write the table to this JSON file')

    for name, text in (('build', 'build the variable Alpert basis'),
                       ('verify', 'build and verify the variable Alpert basis')):
        command = commands.add_parser(name, help=text)
        command.add_argument('--config', required=True, help='run configuration JSON file')
        command.add_argument('--order', choices=ORDERS, help='override the configured order')
        command.add_argument('--seed', type=int, help='override the configured seed')
        command.add_argument('--workers', type=int, help='override the configured worker count')
        command.add_argument('--out', help='write the result to this JSON file')
        if name == 'verify':
            command.add_argument('--trials', type=int, help='override the configured trial count')

    groebner = commands.add_parser('groebner', help='reduced Groebner basis of polynomials')
    groebner.add_argument('polys', nargs='*', help='generators in x1..xn, e.g. "x1^2 - x2"')
    groebner.add_argument('--ideal', help='ideal JSON file {"nvars", "order", "generators"}')
    groebner.add_argument('--kmax', type=int, help='also classify F^n_k into gdep and gind for k = kmax')
    groebner.add_argument('--nvars', type=int, help='number of variables (default: largest index used)')
    groebner.add_argument('--order', choices=ORDERS, default=OrderKind.GREVLEX)
    groebner.add_argument('--reduce', action='append', default=[], metavar='POLY',
                          help='also print the normal form of POLY (repeatable)')
    groebner.add_argument('--max-pairs', type=int, help='S-pair budget')
    groebner.add_argument('--out', help='write the basis to this JSON file')

    vanishing = commands.add_parser('vanishing', help='support and vanishing ideal on a cube')
    vanishing.add_argument('--measure', required=True, help='measure JSON file')
    vanishing.add_argument('--cube', required=True, help='cube as LEVEL:C1,C2,... or {"level": m, "coords": [...]}')
    vanishing.add_argument('--order', choices=ORDERS, default=OrderKind.GREVLEX)
    vanishing.add_argument('--out', help='write the ideal to this JSON file')
    return parser


def _infer_nvars(texts: Sequence[str]) -> int:
    indices = [int(i) for text in texts for i in re.findall(r'x(\d+)', text)]
    return max(indices, default=1)


def cmd_dims(args, report: RunReport) -> Dict:
    mu = io.load_measure(args.measure)
    report.inputs[args.measure] = io.file_sha256(args.measure)
    cube = io.parse_cube(args.cube)
    if args.kmax < 1:
        raise InvalidArgumentException(f'--kmax must be at least 1, got {args.kmax}')
    api = AlpertApi(order=args.order)
    rows = api.spaces.dims_table(mu, cube, args.kmax)
    report.dimensions = rows
    return {'cube': cube.to_dict(), 'order': args.order, 'rows': [row.to_dict() for row in rows]}


def _configured(args, report: RunReport):
    config = io.load_config(args.config)
    report.inputs[args.config] = io.file_sha256(args.config)
    if args.order:
        config.order = args.order
    if args.seed is not None:
        config.seed = args.seed
    if args.workers is not None:
        config.workers = args.workers
    if getattr(args, 'trials', None) is not None:
        config.trials = args.trials
    mu = io.load_measure(config.measure)
    report.inputs[config.measure] = io.file_sha256(config.measure)
    api = AlpertApi(order=config.order, seed=config.seed, workers=config.workers)
    bundle = api.basis.build(mu, config.window, config.assignment(mu.nvars))
    report.seed = config.seed
    return config, api, bundle


def cmd_build(args, report: RunReport) -> Dict:
    _, _, bundle = _configured(args, report)
    return bundle.to_dict()


def cmd_verify(args, report: RunReport) -> Dict:
    config, api, bundle = _configured(args, report)
    result = api.basis.verify(bundle, config.trials)
    report.residuals = {
        'completeness': result.completeness.max_residual,
        'parseval': result.completeness.max_parseval_defect,
        'orthogonality': result.orthogonality.max_violation,
        'wavelet_orthogonality': result.orthogonality.max_wavelet_violation,
        'telescoping': result.max_telescoping,
    }
    return {'counts': bundle.counts().to_dict(), 'seed': config.seed, 'verification': result.to_dict()}


def cmd_groebner(args, report: RunReport) -> Dict:
    texts, order, nvars = list(args.polys), args.order, args.nvars
    if args.ideal:
        ideal = io.load_json(args.ideal)
        report.inputs[args.ideal] = io.file_sha256(args.ideal)
        if not isinstance(ideal, dict) or not isinstance(ideal.get('generators'), list):
            raise InputFileException(f'{args.ideal} does not hold an ideal object')
        texts += ideal['generators']
        order = ideal.get('order', order)
        nvars = nvars or ideal.get('nvars')
    if not texts and not args.ideal:
        raise InvalidArgumentException('No generators given; pass polynomials or --ideal')
    nvars = nvars or _infer_nvars(texts + list(args.reduce))

    api = AlpertApi(order=order)
    G = api.groebner.buchberger(texts, nvars, max_pairs=args.max_pairs)
    result = {
        'basis': G.to_dict(),
        'leading_monomials': [list(m) for m in G.leading_monomials],
        'hilbert_dimension': api.groebner.hilbert_dimension(G),
    }
    if args.kmax is not None:
        gdep, gind = api.groebner.gdep_gind(G, args.kmax)
        result['k'] = args.kmax
        result['gdep'] = [list(m) for m in gdep]
        result['gind'] = [list(m) for m in gind]
    if args.reduce:
        result['normal_forms'] = {text: api.groebner.reduce(text, G).to_text(G.order) for text in args.reduce}
    return result


def cmd_vanishing(args, report: RunReport) -> Dict:
    mu = io.load_measure(args.measure)
    report.inputs[args.measure] = io.file_sha256(args.measure)
    cube = io.parse_cube(args.cube)
    api = AlpertApi(order=args.order)
    desc = api.vanishing.support(mu, cube)
    G = api.vanishing.vanishing_ideal(desc)
    # same top-level shape as the groebner --ideal file
    result = {
        **G.to_dict(),
        'cube': cube.to_dict(),
        'support': desc.to_dict(),
        'hilbert_dimension': api.groebner.hilbert_dimension(G),
    }
    if G.order.is_graded and result['hilbert_dimension'] <= 0:
        result['standard_monomials'] = [list(m) for m in api.groebner.standard_monomials(G)]
    return result


COMMANDS = {
    'dims': cmd_dims,
    'build': cmd_build,
    'verify': cmd_verify,
    'groebner': cmd_groebner,
    'vanishing': cmd_vanishing,
}


def _error_record(error: AlpertException) -> str:
    return io.dumps({'error': {'type': type(error).__name__, 'reason': error.reason}})


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except InvalidArgumentException as error:
        sys.stderr.write(_error_record(error))
        return EXIT_INPUT
    if args.debug:
        set_debug_mode(True, stream=sys.stderr)

    logger.debug(f"Running {args.command}")
    report = RunReport(command=args.command)
    started = time.perf_counter()
    try:
        result = COMMANDS[args.command](args, report)
        if args.out:
            io.write_json(args.out, result)
            report.outputs.append(args.out)
        report.result = result
        if args.command == 'verify' and not result['verification']['passed']:
            raise VerificationFailedException(
                'Verification residuals exceed their tolerances: '
                + ', '.join(f'{k}={v:.3e}' for k, v in report.residuals.items())
            )
    except VerificationFailedException as error:
        sys.stderr.write(_error_record(error))
        return EXIT_VERIFICATION
    except AlpertException as error:
        sys.stderr.write(_error_record(error))
        return EXIT_INPUT
    finally:
        report.wall_time = time.perf_counter() - started

    sys.stdout.write(io.dumps(report.to_dict()))
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
