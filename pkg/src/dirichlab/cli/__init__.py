from .commands import main
from .report import ConvergenceReport, emit_csv, parse_csv, run_sweep
