"""Constants for the command-line interface."""

TITLE = "Wiener polarity index: cactus formula vs breadth-first oracle"

# Exit codes
EXIT_OK = 0
EXIT_INPUT_ERROR = 1
# Reserved for formula/oracle disagreement so CI can tell correctness alarms apart
EXIT_DISAGREEMENT = 2

# verify defaults
DEFAULT_TRIALS = 1000
DEFAULT_MAX_BLOCKS = 60
DEFAULT_MAX_CYCLE = 12
DEFAULT_SEED = 42
DEFAULT_WORKERS = 1

# generate-random defaults
DEFAULT_CYCLE_PROBABILITY = 0.5

SUMMARY = [
    "Every trial compares the census formula with a radius-3 breadth-first count.",
    "Small instances additionally compare the pendant-pattern counts with",
    "exhaustive induced-subgraph enumeration.",
]
