from typing import Literal

POWER: Literal["power"] = "power"
EXPONENTIAL: Literal["exponential"] = "exponential"
COSINE: Literal["cosine"] = "cosine"
SINE: Literal["sine"] = "sine"

TermKind = Literal["power", "exponential", "cosine", "sine"]

SERIES: Literal["series"] = "series"
KERNEL_RAW: Literal["kernel_raw"] = "kernel_raw"
KERNEL_SPLIT: Literal["kernel_split"] = "kernel_split"
PERIODIC: Literal["periodic"] = "periodic"

Method = Literal["series", "kernel_raw", "kernel_split", "periodic"]

LEFT: Literal["left"] = "left"
RIGHT: Literal["right"] = "right"

End = Literal["left", "right"]

INTERIOR: Literal["interior"] = "interior"
FULL_PI: Literal["full_pi"] = "full_pi"
MULTI_PI: Literal["multi_pi"] = "multi_pi"
UNIT_NODES: Literal["unit_nodes"] = "unit_nodes"

RangeKind = Literal["interior", "full_pi", "multi_pi", "unit_nodes"]

# Half-width (radians) of the neighbourhood of a removable point where ratios
# switch to their series expansion.
SINGULARITY_EPS = 1e-8

MAX_ORDER = 100000
MAX_EXPONENT = 12

DEFAULT_PANEL_BUDGET = 2**20
DEFAULT_WINDOW = 8
DEFAULT_DECAY_TOL = 1e-12

# Relative slack accepted when internally generated abscissae overshoot a
# domain edge by rounding.
DOMAIN_SLACK = 1e-12
