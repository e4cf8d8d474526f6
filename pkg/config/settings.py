"""Application configuration and constants."""

### Random Seed ###
RANDOM_SEED = 22
SEED_ENV_VAR = "COORBIT_SEED"

### Group Construction ###
MIN_DIM = 2
GROUP_TOL = 1e-9
GRID_PITCH = 1e-6
CLOSURE_N_MAX = 10_000
# Neighbour probing enumerates 2**k buckets; beyond this a linear scan is used
MAX_PROBE_COORDS = 12

### Orbits & Metric ###
ORBIT_TOL = 1e-9
SAME_ORBIT_TOL = 1e-9

### Spectral Analysis ###
RANK_RTOL = 1e-8
SPECTRUM_TOL = 1e-8

### Separation & Bounds ###
SEPARATION_TOL = 1e-9
LIPSCHITZ_SLACK = 1e-9

### Collision Search ###
COLLISION_BUDGET = 10_000
COLLISION_STEPS = 200
COLLISION_FLOOR = 1e-2
COLLISION_MIN_STEP = 1e-10

### Output Formatting ###
FLOAT_DIGITS = 17
CSV_FLOAT_FORMAT = f"%.{FLOAT_DIGITS}g"

### CLI Exit Codes ###
EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_PARSE = 3
EXIT_IO = 4

### Built-in Group Families ###
GROUP_TYPES = ("cyclic", "sign_flip", "dihedral", "custom", "generated")

### Run Manifests ###
TOOL_VERSION = "1.0.0"
MANIFEST_SCHEMA = 1
