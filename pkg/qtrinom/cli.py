# Copyright (c) 2021, The qtrinom Team. All Rights Reserved.
"""
Command line driver.

    qtrinom eval trinom --L 2 --A 0 --n 0
    qtrinom eval fermi --p 4 --a 1 --b 1 --i 0 --L 3
    qtrinom verify --suite even-identities --p 4..6 --l-max 10 --jobs 4
"""
import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, fields

from tqdm import tqdm

from .algebra.gauss import BinomArgs, TrinomArgs, qbinom, qbinom_modified, qtrinom
from .algebra.identities import verify_binomial_recurrences, verify_trinomial_limits, verify_trinomial_properties
from .algebra.laurent import QUARTER, from_records, series_to_dict, to_records
from .models.bosonic import BosonKind, bose, replay_bosonic, verify_bosonic_recurrences, verify_bosonic_relations
from .models.characters import chi, verify_bosonic_limits, verify_character_identities, verify_finitized
from .models.fermionic import (
    fermi,
    replay_fermionic,
    verify_appendix,
    verify_even_recurrences,
    verify_odd_recurrences,
)
from .models.nmsystem import Mode, ModelParams, ParameterError, build_params, enumerate_solutions, verify_nm_oracle
from .utils.logger import coefficient_table, setup_logging, totals_table
from .utils.report import VerifyReport

from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

__all__ = ['SUITES', 'SweepConfig', 'parse_p_range', 'get_args_parser', 'cmd_eval', 'cmd_verify', 'main', 'cli_main']

logger = logging.getLogger(__name__)

OBJECTS = ('trinom', 'binom', 'fermi', 'bose', 'chi', 'nm')

# the box search grows like (2L + p)^(p-1)
_ORACLE_FULL_P = 5
_ORACLE_WIDE_L = 3

Task = Tuple[Callable[..., VerifyReport], Tuple[Any, ...]]


def parse_p_range(text: str) -> Tuple[int, ...]:
    """Parse ``4``, ``4,5,7`` or ``4..6``."""
    text = str(text).strip()
    try:
        if '..' in text:
            lo, hi = text.split('..')
            values = tuple(range(int(lo), int(hi) + 1))
        else:
            values = tuple(int(part) for part in text.split(','))
    except ValueError:
        raise ParameterError(f"--p expects 4, 4,5,7 or 4..6, got {text!r}")
    if not values:
        raise ParameterError(f"--p range {text!r} is empty")
    return values


def _trinomial_tasks(config: 'SweepConfig') -> List[Task]:
    return [(verify_trinomial_properties, (max(config.l_max, 0),)),
            (verify_trinomial_limits, (config.cutoff * QUARTER,))]


def _binomial_tasks(config: 'SweepConfig') -> List[Task]:
    return [(verify_binomial_recurrences, (-10, 15, 15))]


def _oracle_tasks(config: 'SweepConfig') -> List[Task]:
    return [(verify_nm_oracle, (p, config.l_max if p <= _ORACLE_FULL_P else min(config.l_max, _ORACLE_WIDE_L)))
            for p in config.p]


def _identity_tasks(i: int) -> Callable[['SweepConfig'], List[Task]]:
    def tasks(config: 'SweepConfig') -> List[Task]:
        return [(verify_finitized, (p, a, b, i, config.l_max))
                for p in config.p for a in range(1, p - 1) for b in range(1, p)]
    return tasks


def _fermionic_tasks(config: 'SweepConfig') -> List[Task]:
    tasks: List[Task] = []
    for p in config.p:
        for a in range(1, p - 1):
            tasks.append((verify_even_recurrences, (p, a, config.l_max)))
            tasks.append((replay_fermionic, (p, a, 0, config.l_max)))
            if a >= 2:
                tasks.append((verify_odd_recurrences, (p, a, config.l_max)))
                tasks.append((replay_fermionic, (p, a, 1, config.l_max)))
    return tasks


def _bosonic_tasks(config: 'SweepConfig') -> List[Task]:
    tasks: List[Task] = []
    for p in config.p:
        for a in range(1, p - 1):
            tasks.append((verify_bosonic_recurrences, (p, a, config.l_max)))
            tasks.append((replay_bosonic, (p, a, config.l_max)))
    return tasks


def _relation_tasks(config: 'SweepConfig') -> List[Task]:
    return [(verify_bosonic_relations, (p, config.l_max)) for p in config.p]


def _character_tasks(config: 'SweepConfig') -> List[Task]:
    cutoff = config.cutoff * QUARTER
    tasks: List[Task] = [(verify_character_identities, (p, cutoff)) for p in config.p]
    tasks.extend((verify_bosonic_limits, (p, cutoff)) for p in config.p)
    return tasks


def _appendix_tasks(config: 'SweepConfig') -> List[Task]:
    return [(verify_appendix, (tuple(config.p), config.l_max))]


SUITES: Dict[str, Callable[['SweepConfig'], List[Task]]] = {
    'trinomial-properties': _trinomial_tasks,
    'binomial-recurrences': _binomial_tasks,
    'nm-oracle': _oracle_tasks,
    'even-identities': _identity_tasks(0),
    'odd-identities': _identity_tasks(1),
    'fermionic-recurrences': _fermionic_tasks,
    'bosonic-recurrences': _bosonic_tasks,
    'bosonic-relations': _relation_tasks,
    'character-identities': _character_tasks,
    'appendix-a': _appendix_tasks,
}


@dataclass(frozen=True)
class SweepConfig:
    """
    Parameters of a verification sweep.

    Args:
        p (tuple of int): model indices, each ``>= 4``.
        l_max (int): largest degree L.
        cutoff (int): series cutoff in whole powers of q.
        suite (str): a key of ``SUITES`` or ``'all'``.
        format (str): ``'text'`` or ``'json'``.
        jobs (int): worker processes; 1 runs in-process.
    """
    p: Tuple[int, ...] = (4, 5, 6)
    l_max: int = 8
    cutoff: int = 20
    suite: str = 'all'
    format: str = 'text'
    jobs: int = 1

    def __post_init__(self):
        if any(p < 4 for p in self.p):
            raise ParameterError(f"p={min(self.p)} violates p >= 4")
        if self.l_max < 0:
            raise ParameterError(f"l_max={self.l_max} violates l_max >= 0")
        if self.cutoff < 0:
            raise ParameterError(f"cutoff={self.cutoff} violates cutoff >= 0")
        if self.suite != 'all' and self.suite not in SUITES:
            raise ParameterError(f"unknown suite {self.suite!r}, expected one of {', '.join(SUITES)} or all")
        if self.format not in ('text', 'json'):
            raise ParameterError(f"format={self.format!r} violates format in (text, json)")
        if self.jobs < 1:
            raise ParameterError(f"jobs={self.jobs} violates jobs >= 1")

    @property
    def suites(self) -> List[str]:
        return list(SUITES) if self.suite == 'all' else [self.suite]

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> 'SweepConfig':
        """Values from ``--config`` first, explicit flags on top."""
        values: Dict[str, Any] = {}
        if args.config:
            with open(args.config) as f:
                values.update(json.load(f))
        flags = {'p': args.p, 'l_max': args.l_max, 'cutoff': args.cutoff, 'suite': args.suite,
                 'format': args.format, 'jobs': args.jobs}
        values.update({k: v for k, v in flags.items() if v is not None})
        known = {f.name for f in fields(cls)}
        unknown = set(values) - known
        if unknown:
            raise ParameterError(f"unknown config keys: {', '.join(sorted(unknown))}")
        if isinstance(values.get('p'), (list, tuple)):
            values['p'] = tuple(int(p) for p in values['p'])
        elif 'p' in values:
            values['p'] = parse_p_range(values['p'])
        return cls(**values)


def _run_task(task: Task) -> VerifyReport:
    func, args = task
    return func(*args)


def _execute(tasks: Sequence[Task], jobs: int) -> List[VerifyReport]:
    progress = tqdm(total=len(tasks), file=sys.stderr, disable=not sys.stderr.isatty(), leave=False)
    results: List[Optional[VerifyReport]] = [None] * len(tasks)
    if jobs == 1:
        for k, task in enumerate(tasks):
            results[k] = _run_task(task)
            progress.update()
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = {pool.submit(_run_task, task): k for k, task in enumerate(tasks)}
            for future in as_completed(futures):
                results[futures[future]] = future.result()
                progress.update()
    progress.close()
    return [r for r in results if r is not None]


def cmd_verify(config: SweepConfig) -> List[VerifyReport]:
    """Run the selected suites and return one merged, ordered report per suite."""
    reports = []
    for suite in config.suites:
        tasks = SUITES[suite](config)
        logger.info("suite %s: %d tasks on %d worker(s)", suite, len(tasks), config.jobs)
        merged = VerifyReport(suite)
        for part in _execute(tasks, config.jobs):
            merged.extend(part)
        merged = merged.sorted()
        logger.info("suite %s finished\n%s", suite, totals_table([merged]))
        reports.append(merged)
    if len(reports) > 1:
        logger.info("all suites\n%s", totals_table(reports))
    return reports


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [name for name in names if getattr(args, name) is None]
    if missing:
        flags = ', '.join('--' + name.replace('_', '-') for name in missing)
        raise ParameterError(f"eval {args.object} needs {flags}")


def _single_p(args: argparse.Namespace) -> int:
    values = parse_p_range(args.p)
    if len(values) != 1:
        raise ParameterError(f"eval {args.object} takes a single --p, got {args.p!r}")
    return values[0]


def cmd_eval(args: argparse.Namespace) -> Dict[str, Any]:
    """Evaluate one object and return its serialization."""
    obj = args.object
    if obj is None:
        raise ParameterError(f"eval needs an object, one of {', '.join(OBJECTS)}")
    if obj == 'trinom':
        _require(args, 'L', 'A', 'n')
        if args.L < 0:
            raise ParameterError(f"L={args.L} violates L >= 0")
        targs = TrinomArgs(args.L, args.A, args.n)
        return {'object': obj, 'params': targs._asdict(), 'terms': to_records(qtrinom(*targs))}
    if obj == 'binom':
        _require(args, 'n', 'm')
        bargs = BinomArgs(args.n, args.m)
        value = (qbinom_modified if args.modified else qbinom)(*bargs)
        params = dict(bargs._asdict(), modified=args.modified)
        return {'object': obj, 'params': params, 'terms': to_records(value)}
    if obj == 'fermi':
        _require(args, 'p', 'a', 'b', 'i', 'L')
        params = ModelParams(_single_p(args), args.a, args.b, args.i, args.L)
        variant = Mode.MODIFIED if args.modified else Mode.STANDARD
        poly = fermi(params, variant)
        return {'object': obj, 'params': dict(params.as_dict(), variant=variant.value),
                'terms': to_records(poly.value)}
    if obj == 'bose':
        _require(args, 'p', 'a', 'b', 'L')
        kind = BosonKind(args.kind)
        if kind is not BosonKind.BPRIME:
            _require(args, 's')
        p = _single_p(args)
        poly = bose(kind, p, args.a, args.b, args.s, args.L)
        params = {'kind': kind.value, 'p': p, 'a': args.a, 'b': args.b, 's': args.s, 'L': args.L}
        return {'object': obj, 'params': params, 'terms': to_records(poly.value)}
    if obj == 'chi':
        _require(args, 'p', 'r', 's')
        p = _single_p(args)
        cutoff = SweepConfig.cutoff if args.cutoff is None else args.cutoff
        series = chi(p, args.r, args.s, cutoff * QUARTER).value
        return dict({'object': obj, 'params': {'p': p, 'r': args.r, 's': args.s}}, **series_to_dict(series))
    _require(args, 'p', 'a', 'b', 'i', 'L')
    system = build_params(_single_p(args), args.a, args.b, args.i, args.L)
    mode = Mode.MODIFIED if args.modified else Mode.STANDARD
    solutions = enumerate_solutions(system, mode)
    return {'object': obj, 'params': dict(system.params.as_dict(), mode=mode.value),
            'solutions': [sol.to_json() for sol in solutions]}


def get_args_parser():
    parser = argparse.ArgumentParser('Exact q-series identities', add_help=False)

    parser.add_argument('command', choices=('eval', 'verify'),
                        help='evaluate one object or run verification suites')
    parser.add_argument('object', nargs='?', choices=OBJECTS,
                        help='object to evaluate (eval only)')
    parser.add_argument('--p', default=None,
                        help='model index: 4, a list 4,5,7 or a range 4..6')
    parser.add_argument('--a', type=int, default=None, help='label a')
    parser.add_argument('--b', type=int, default=None, help='label b')
    parser.add_argument('--i', type=int, default=None, help='parity label i (0 or 1)')
    parser.add_argument('--L', type=int, default=None, help='degree L')
    parser.add_argument('--s', type=int, default=None, help='second label of bose and chi')
    parser.add_argument('--r', type=int, default=None, help='first label of chi')
    parser.add_argument('--A', type=int, default=None, help='lower argument of trinom')
    parser.add_argument('--n', type=int, default=None, help='superscript of trinom, first argument of binom')
    parser.add_argument('--m', type=int, default=None, help='second argument of binom')
    parser.add_argument('--kind', default='B', choices=[k.value for k in BosonKind],
                        help='which bosonic sum')
    parser.add_argument('--modified', action='store_true',
                        help='modified binomials and the extended (n, m) system')
    parser.add_argument('--cutoff', type=int, default=None,
                        help='series cutoff in whole powers of q (default: 20)')
    parser.add_argument('--l-max', dest='l_max', type=int, default=None,
                        help='largest L of a sweep (default: 8)')
    parser.add_argument('--suite', default=None,
                        help=f"one of {', '.join(SUITES)} or all (default: all)")
    parser.add_argument('--format', default=None, choices=('text', 'json'),
                        help='output format (default: text)')
    parser.add_argument('--jobs', type=int, default=None,
                        help='worker processes for verify (default: 1)')
    parser.add_argument('--config', default=None,
                        help='JSON file with sweep settings; explicit flags win')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='-v for progress messages, -vv for debug output')
    return parser


def main(args) -> int:
    setup_logging(args.verbose)
    try:
        if args.command == 'eval':
            result = cmd_eval(args)
            if args.format == 'text':
                value = result.get('terms', result.get('solutions'))
                if 'solutions' in result:
                    print(json.dumps(value))
                else:
                    print(coefficient_table(from_records(value)))
            else:
                print(json.dumps(result, sort_keys=True))
            return 0
        config = SweepConfig.from_args(args)
        reports = cmd_verify(config)
    except ParameterError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2

    for report in reports:
        print(report.to_json() if config.format == 'json' else report.to_text())
    return 0 if all(report.passed for report in reports) else 1


def cli_main():
    parser = argparse.ArgumentParser('qtrinom', parents=[get_args_parser()])
    args = parser.parse_args()
    sys.exit(main(args))


if __name__ == "__main__":
    cli_main()
