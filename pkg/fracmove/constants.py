import math

# Boundary labels
GAMMA_U1 = 'GammaU1'
GAMMA_U2 = 'GammaU2'
GAMMA_F = 'GammaF'

LABELS = [GAMMA_U1, GAMMA_U2, GAMMA_F]
DIRICHLET_LABELS = [GAMMA_U1, GAMMA_U2]

# Integer codes stored in the partition array, 0 marks interior nodes
LABEL_CODES = {
    GAMMA_U1: 1,
    GAMMA_U2: 2,
    GAMMA_F: 3,
}

# Corner nodes take the label of highest priority among their two edges
LABEL_PRIORITY = [GAMMA_U1, GAMMA_U2, GAMMA_F]

EDGE_BOTTOM = 'bottom'
EDGE_TOP = 'top'
EDGE_LEFT = 'left'
EDGE_RIGHT = 'right'

EDGES = [EDGE_BOTTOM, EDGE_TOP, EDGE_LEFT, EDGE_RIGHT]

# Models
MODEL_FIRST = 'first'
MODEL_IMPROVED = 'improved'
MODEL_VISCOUS = 'viscous'

MODELS = [MODEL_FIRST, MODEL_IMPROVED, MODEL_VISCOUS]

# Solver defaults
DEFAULT_K_EPS = 1e-6
MAX_K_EPS = 1e-3
DEFAULT_CG_TOL = 1e-10
CG_ITERATION_FACTOR = 50
DEFAULT_REL_TOL = 1e-6
DEFAULT_MAX_ITERS = 200
ENERGY_FLOOR = 1e-30

GRID_TOLERANCE = 1e-12
MIN_NODES = 3

# Damage conventions
CRACK_THRESHOLD = 0.1
DEGRADED_THRESHOLD = 0.5
INTACT = 1.0

# Material defaults
DEFAULT_CAP_FACTOR = 100.0
DEFAULT_EPS_FACTOR = 2.0
DEFAULT_E_FACTOR = 3.0
DEFAULT_SIGMA_FACTOR = 0.5
DEFAULT_LAMBDA = 1.0

LEDGER_SLACK_FACTOR = 1e-6

NORMAL_TOLERANCE = 1e-12
CRITICAL_NORMAL_ANGLE = math.pi / 4

# Output
FLOAT_FORMAT = '{:.17g}'

TRACE_HEADER = ['k', 't', 'elastic', 'surface', 'total', 'work',
                'griffith_ok']
VISCOUS_TRACE_HEADER = TRACE_HEADER + ['penalty']
ITERATION_HEADER = ['k', 'iter', 'elastic', 'surface', 'total']
FIELD_HEADER = ['nx', 'ny', 'h']
K2_HEADER = ['r', 'value', 'extrapolated']
