"""Exact scalar tower: Q(q) and Q(q)(u) with a single live auxiliary variable."""
from ._backend import BACKEND, kernels
from .qrat import QRat, ZERO, ONE, Q, T, qint, q_content, qsum, laurent_str
from .urat import URat, eval_at_q_power, eval_q_one
from .parse import parse_scalar

__all__ = [
    "BACKEND",
    "kernels",
    "QRat",
    "URat",
    "ZERO",
    "ONE",
    "Q",
    "T",
    "qint",
    "q_content",
    "qsum",
    "laurent_str",
    "eval_at_q_power",
    "eval_q_one",
    "parse_scalar",
]
