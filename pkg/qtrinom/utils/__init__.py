from .logger import coefficient_table, setup_logging, totals_table
from .report import VerifyReport
