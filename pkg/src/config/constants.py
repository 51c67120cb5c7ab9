"""
Constants used throughout the application.
Centralizes magic numbers and strings for easier maintenance.
"""

# Exact arithmetic
MAX_RADICANDS = 3

# Families
DEFAULT_CLEAR_CAP = 256

# Exit codes
EXIT_INTERNAL_ERROR = 1
EXIT_PARSE_ERROR = 2
EXIT_PRECONDITION = 3
EXIT_INSUFFICIENT_BOUND = 4
EXIT_CERTIFICATION_FAILED = 5

# Output
OUTPUT_FORMATS = ("text", "csv", "json")
DEFAULT_OUTPUT_FORMAT = "text"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
DEFAULT_LOG_LEVEL = "WARNING"
LOGGER_ROOT = "taxicab_forge"

# Certification verdicts
VERDICT_CERTIFIED = "CERTIFIED"
VERDICT_FAILED = "FAILED"

# Error messages
ERROR_INVALID_WORKERS = "TAXICAB_FORGE_WORKERS must be at least 1, got {value}"
ERROR_INVALID_CLEAR_CAP = "TAXICAB_FORGE_CLEAR_CAP must be at least 1, got {value}"
ERROR_INVALID_FORMAT = "TAXICAB_FORGE_FORMAT must be one of {choices}, got {value!r}"
ERROR_INVALID_LOG_LEVEL = "TAXICAB_FORGE_LOG_LEVEL must be one of {choices}, got {value!r}"
ERROR_INVALID_ENV_INTEGER = "{name} must be an integer, got {value!r}"
ERROR_SEED_REQUIRED = "construction {name!r} needs --seed"
ERROR_SEED_NOT_ALLOWED = "identity {name!r} is fixed and takes no --seed"

# Progress messages
MSG_SEARCH_STARTED = "Searching pair sums up to {limit} with bound {bound} ({workers} worker(s), {chunks} chunk(s))"
MSG_CHUNK_DONE = "✓ chunk a={lo}..{hi}: {count} distinct sums"
MSG_FAMILY_GENERATED = "✓ {name}: generated {count} tuple(s)"
MSG_CERTIFIED = "✓ {name}: certified over {monomials} monomial(s)"
MSG_CERTIFICATION_FAILED = "✗ {name}: {nonzero} nonzero coefficient(s) in the expanded difference"
