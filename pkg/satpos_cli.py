#!/usr/bin/env python
"""
Command-line utility for the satpos toolkit.

Usage:
    python satpos_cli.py lr --alpha 2,1 --beta 2,1 --lambda 3,2,1
    python satpos_cli.py kron tworow --lambda 87,62 --mu 97,52 --pi 64,39,24,22
    python satpos_cli.py ehrhart index --file polytope.json
    python satpos_cli.py reproduce fgmodp --pretty
"""
import sys

from satpos.cli import run


def main():
    """Main entry point for the command-line utility."""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
