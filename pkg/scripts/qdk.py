#!/usr/bin/env python3
"""
qdk - command-line front end for the qdesigns toolkit.

Prints one JSON document on standard output; logs go to standard error.

Examples:
    python scripts/qdk.py gaussian --n 4 --k 2 --q 2
    python scripts/qdk.py design verify --blocks all --n 3 --k 2 --q 2 --t 1
    python scripts/qdk.py cyclic --n 7 --q 2 --roots 1,2,4 --min-distance

Location: scripts/qdk.py
"""

import sys
from pathlib import Path

# Set up imports
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from config.settings import QDKConfig
from src.cli import dump_payload, run
from src.utils.exceptions import ConfigurationError
from src.utils.logging_config import setup_logging


def main(argv=None) -> int:
    """Run one command and return its exit code."""
    try:
        config = QDKConfig()
    except ConfigurationError as e:
        print(f"Configuration error: {e}", file=sys.stderr)
        return 2

    check = config.validate()
    if not check.is_valid:
        print("; ".join(check.errors), file=sys.stderr)
        return 2
    setup_logging(config.log_level)

    result = run(sys.argv[1:] if argv is None else argv, config)
    print(dump_payload(result.payload))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
