#!/usr/bin/env python3
"""
Main CLI entry point.

Usage:
    python -m src.cli complex --m 4 --p 2 --n 3 --output json
    python -m src.cli identity --m 3 --n 3
    python -m src.cli sweep --out sweep.csv
"""

from src.cli.app import app


def main():
    """Main entry point for the hookschur command."""
    app()


if __name__ == "__main__":
    main()
