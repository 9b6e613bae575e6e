"""Module entry point so `python -m crystal_sieve` matches the console script."""

import sys

from crystal_sieve.cli import main

if __name__ == "__main__":
    sys.exit(main())
