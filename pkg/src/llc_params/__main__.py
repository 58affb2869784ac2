"""Entry point for ``python -m llc_params``."""

from .cli import main

if __name__ == "__main__":
    main()
