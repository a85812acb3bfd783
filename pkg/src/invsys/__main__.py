"""Allow ``python -m invsys`` as an alias for the console script."""

from .cli import main

main()
