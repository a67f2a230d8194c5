# Copyright (c) 2021, The qtrinom Team. All Rights Reserved.
import logging
import sys

from tabulate import tabulate

from ..algebra.laurent import QLaurent, QSeries, _format_exponent
from .report import VerifyReport

from typing import Sequence, Union

__all__ = ['totals_table', 'coefficient_table', 'setup_logging']


def totals_table(reports: Sequence[VerifyReport]) -> str:
    """
    One row per report with its suite name and the counts of checked,
    passed and failed instances, rendered as a pipe table.

    Args:
        reports (sequence of VerifyReport): suites in display order.

    Returns:
        str: the table, headers only when ``reports`` is empty.
    """
    rows = []
    for report in reports:
        totals = report.totals()
        rows.append([report.suite, totals['total'], totals['passed'], totals['failed']])
    return tabulate(
        rows,
        headers=('suite', 'total', 'passed', 'failed'),
        tablefmt="pipe",
        stralign="center",
        numalign="center",
    )


def coefficient_table(value: Union[QLaurent, QSeries]) -> str:
    """Two-column table of the nonzero coefficients of a polynomial or series."""
    poly = value.poly if isinstance(value, QSeries) else value
    rows = [[_format_exponent(exp), c] for exp, c in poly.items()]
    return tabulate(rows, headers=("power of q", "coefficient"), tablefmt="pipe", stralign="right")


def setup_logging(verbosity: int = 0) -> None:
    """WARNING by default, INFO for one ``-v``, DEBUG for two. Handlers write to stderr."""
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        stream=sys.stderr,
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
