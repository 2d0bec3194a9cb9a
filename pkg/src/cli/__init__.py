"""
Command-line interface for the hook Schur toolkit.

Commands: complex, cohomology, character, identity, adams, homotopy,
equivariance, sweep. See `python -m src.cli --help`.
"""
