# braid_workbench/src/config.py

import os


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None or value.strip() == "":
        return default
    return int(value)


# --- Equality oracle ---
# Longest image (in letters) any Artin-action endomorphism may reach before
# the computation is abandoned with a BudgetExceededError.
MAX_ENDO_LEN = _env_int("BRAIDS_MAX_ENDO_LEN", 1_000_000)

# --- Bracket / Temperley-Lieb evaluation ---
MAX_STRANDS = _env_int("BRAIDS_MAX_STRANDS", 8)  # Catalan(8) = 1430 basis diagrams
STATE_SUM_MAX_CROSSINGS = _env_int("BRAIDS_STATE_SUM_MAX_CROSSINGS", 16)

# --- Markov search budgets ---
MAX_SEARCH_DEPTH = _env_int("BRAIDS_MAX_SEARCH_DEPTH", 6)
MAX_SEARCH_RANK = _env_int("BRAIDS_MAX_SEARCH_RANK", 4)
MAX_SEARCH_STATES = _env_int("BRAIDS_MAX_SEARCH_STATES", 50_000)

# --- Proposition suite ---
RANDOM_SEED = _env_int("BRAIDS_RANDOM_SEED", 20240601)
SUITE_RANKS = (2, 3, 4)
SUITE_RANDOM_CASES = 20
SUITE_MAX_WORD_LEN = 8

# --- Logging ---
# Same record format as the deployment manifest's logging block
LOG_LEVEL = os.getenv("BRAIDS_LOG_LEVEL", "WARNING")
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# --- File Paths ---
LOCAL_REPORTS_DIR = os.getenv(
    "BRAIDS_REPORTS_DIR",
    os.path.join(os.path.dirname(os.path.abspath(__file__)), '../output_reports'),
)
REPORT_FILENAME = "proposition_suite.csv"
