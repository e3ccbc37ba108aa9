"""liequiver command-line entry point.

The package is organised as:

- config/: Computation caps, defaults and logging settings
- models/: Lie types, weights, roots, quivers, relation spaces and error types
- services/: Root data, quivers, families, adapted families, relations,
  the highest-weight oracle and path-algebra numerics
- cli/: Argument parsing and the subcommands
- tests/: Unit tests

Run ``liequiver --help`` for the subcommands.
"""

import sys

from cli import run


def main():
    """Run the liequiver command line."""
    sys.exit(run())


if __name__ == "__main__":
    main()
