"""
Main entry point for the Ordered Ramsey Toolkit.

Loads the environment, configures logging on stderr and hands the arguments
to the command-line layer.
"""

import logging
import sys
from typing import Optional, Sequence

from dotenv import load_dotenv

# Load environment variables before the configuration module reads them
load_dotenv()

from ordered_ramsey.config import LOG_FORMAT, LOG_LEVEL  # noqa: E402
from ordered_ramsey.cli import run  # noqa: E402

# Configure logging; stdout is reserved for command output
logging.basicConfig(
    level=getattr(logging, LOG_LEVEL.upper(), logging.WARNING),
    format=LOG_FORMAT,
    handlers=[
        logging.StreamHandler(sys.stderr)
    ]
)

logger = logging.getLogger(__name__)


def main(argv: Optional[Sequence[str]] = None) -> None:
    """
    Main entry point for the `ordered-ramsey` console script.

    Exits with the command's exit code.
    """
    try:
        code = run(argv)
    except KeyboardInterrupt:
        print("\nInterrupted by user.", file=sys.stderr)
        sys.exit(1)
    except Exception as e:
        logger.error(f"Unexpected failure: {e}", exc_info=True)
        sys.exit(1)
    sys.exit(code)


if __name__ == "__main__":
    main()
