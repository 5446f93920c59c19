from dotenv import load_dotenv
import os

load_dotenv()

# Homomorphism counting
HOM_CAP_NODES = float(os.getenv("LOGLIM_HOM_CAP_NODES", "1e10"))
W_CAP_NODES = float(os.getenv("LOGLIM_W_CAP_NODES", "1e9"))
MAX_VERTICES = int(os.getenv("LOGLIM_MAX_VERTICES", "200000"))

# Test-graph enumeration (tau / kappa)
DEFAULT_TEST_GRAPH_CAP = int(os.getenv("LOGLIM_TEST_GRAPH_CAP", "5"))
MAX_TEST_GRAPH_CAP = int(os.getenv("LOGLIM_MAX_TEST_GRAPH_CAP", "7"))

# Max-ent solver
CAP_CELLS = int(float(os.getenv("LOGLIM_CAP_CELLS", "2e7")))
MAXENT_TOL = float(os.getenv("LOGLIM_MAXENT_TOL", "1e-10"))
MAXENT_MAX_SWEEPS = int(os.getenv("LOGLIM_MAXENT_MAX_SWEEPS", "10000"))
ZERO_INFORMATION_TOL = 1e-12
PROBABILITY_SUM_TOL = 1e-12
SIDORENKO_MARGIN_TOL = 1e-8

# Groups
MAX_GROUP_ORDER = 256
MAX_SUBGROUP_ENUM_ORDER = 64
ASSOCIATIVITY_SAMPLES = 20000
AUTOMORPHISM_MAX_VERTICES = 64

# Limits
MAX_IMAGE_VERTICES = 10
TYPE_GRAPH_CAP = int(os.getenv("LOGLIM_TYPE_GRAPH_CAP", "5000"))
TYPE_GRAPH_EDGE_CAP = int(float(os.getenv("LOGLIM_TYPE_GRAPH_EDGE_CAP", "2e6")))

# Random graphs
RANDOM_CELL_CAP = int(float(os.getenv("LOGLIM_RANDOM_CELL_CAP", "5e7")))

# Logging
LOG_LEVEL = os.getenv("LOGLIM_LOG_LEVEL", "WARNING")
LOG_FILE = os.getenv("LOGLIM_LOG_FILE")
LOG_FORMAT = "[%(asctime)s] [%(levelname)s] %(name)s: %(message)s"
