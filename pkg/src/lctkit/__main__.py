"""Run the command line as ``python -m lctkit``."""

from .cli import main

main()
