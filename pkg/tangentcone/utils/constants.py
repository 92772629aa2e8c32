DEFAULT_TRUNC = 8

EXIT_CODES = {
    "OK": 0,
    "INFEASIBLE": 1,
    "INPUT_ERROR": 2
}

SCHEME_KINDS = {"assoc", "nilp3"}

CURVE_VARIABLE = "t"
VARIABLE_PREFIX = "x"
