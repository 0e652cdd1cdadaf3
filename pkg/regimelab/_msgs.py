# Chain
NOT_SQUARE_MSG = "rate matrix must be square, got shape {}"
EMPTY_CHAIN_MSG = "rate matrix must have at least one state"
NEGATIVE_RATE_MSG = "rate matrix row {} has a negative off-diagonal entry"
ROW_SUM_MSG = "rate matrix row {} sums to {:.3g}, expected 0"
NONFINITE_RATE_MSG = "rate matrix has non-finite entries"
REDUCIBLE_CHAIN_MSG = "chain not irreducible"
NEGATIVE_DT_MSG = "time step must be nonnegative, got {}"
TIME_OUT_OF_RANGE_MSG = "time {} outside path horizon [0, {}]"
INVALID_INITIAL_STATE_MSG = "initial state {} outside 1..{}"
INVALID_HORIZON_MSG = "horizon must be positive, got {}"

# Models
DIMENSION_MISMATCH_MSG = "{} has {} entries, expected {} (one per state)"
NONPOSITIVE_SIGMA_MSG = "volatility entries must be positive, got {}"
MISSING_SIGMA_MSG = "model {} needs a volatility vector sigma"
MISSING_VOLATILITY_MSG = "either sigma or sigma0 must be given"
INVALID_STEPS_MSG = "number of steps must be at least 1, got {}"
UNSTABLE_GRID_MSG = "dt*max(-Q_ii) = {:.4g} >= 1, grid too coarse for the filter recursion"
UNKNOWN_MODEL_MSG = "unknown model kind {}, expected one of hmm, msm, fb"
INVALID_COARSEN_MSG = "coarsening factor {} does not divide {} steps"

# Filters
CONE_VIOLATION_MSG = "filter recursion left positive cone"
NONPOSITIVE_VOLATILITY_MSG = "effective volatility must be positive"
INDISTINGUISHABLE_STATES_MSG = "states indistinguishable by volatility"
INVALID_WINDOW_MSG = "window must be at least 1, got {}"
NOT_ON_SIMPLEX_MSG = "filter input is not a probability vector"

# Portfolio
NONPOSITIVE_WEALTH_MSG = "initial wealth must be positive, got {}"
INVALID_CLAMP_MSG = "clamp interval [{}, {}] is empty"
LENGTH_MISMATCH_MSG = "{} has length {}, expected {}"
TOO_FEW_REPLICATIONS_MSG = "{} needs at least {} replications, got {}"

# Stylized
SERIES_TOO_SHORT_MSG = "series of length {} too short, need more than {}"
CONSTANT_SERIES_MSG = "autocorrelation undefined for a constant series"
UNKNOWN_TRANSFORM_MSG = "unknown transform {}, expected one of identity, abs, square, sign"
AUTOCOV_ORDER_MSG = "need t + dt < s, got t={} dt={} s={}"
OFF_GRID_TIME_MSG = "time {} is not a multiple of dt={}"

# Convergence
GRID_DIVISIBILITY_MSG = "fine grid size {} is not a multiple of coarse size {}"

# Configuration
SYNTAX_ERROR_MSG = "syntax error"
UNKNOWN_KEY_MSG = "{}: unknown key {}"
WRONG_ARITY_MSG = "{}: {} expects {} value(s), got {}"
BAD_VALUE_MSG = "{}: {}: {}"
DUPLICATE_KEY_MSG = "{}: {} already set on {}"
INVALID_INT_MSG = "value is not an integer or out of range"
INVALID_FLOAT_MSG = "value is not a valid float"
INVALID_POSITIVE_MSG = "value must be positive"
INVALID_SEED_MSG = "seed must be an unsigned 64-bit integer"
INVALID_CHOICE_MSG = "value must be one of {}"
MISSING_KEY_MSG = "{} is required"
CONFIG_INVALID_MSG = "configuration has {} error(s)"
CONFIG_NOT_FOUND_MSG = "cannot read config file {}"
RAGGED_RATES_MSG = "rate_row lines have differing lengths {}"
INCOMPLETE_PAIR_MSG = "{} and {} must be given together"

# Commands
UNKNOWN_COMMAND_MSG = "unknown subcommand `{}`"
UNEXPECTED_OPTION_MSG = "unexpected option `{}`"
OUTPUT_FAILED_MSG = "cannot write output to {}: {}"

# Signature flags
FLAG_NEEDS_SIGMA = "s"
FLAG_DISTINCT_SIGMA = "d"
FLAG_REPLICATED = "r"
