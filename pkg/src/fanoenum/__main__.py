"""Allow ``python -m fanoenum``."""

from .cli import main

if __name__ == "__main__":
    main()
