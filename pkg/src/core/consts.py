"""Library-wide constants."""

# Pairs at exactly this distance are counted by the polarity index
ORACLE_RADIUS = 3

# Cycle lengths that carry a correction term in the cactus formula
CENSUS_CYCLE_LENGTHS = (3, 4, 5, 6)

# Exhaustive induced-subgraph counting is refused above this size
BRUTEFORCE_MAX_VERTICES = 40

# The verification harness only runs the exhaustive census check up to here
VERIFY_CENSUS_MAX_VERTICES = 30

LOG_LEVEL_ENV = "WPOLARITY_LOG_LEVEL"
