import sys

from src.core.app_factory import main

if __name__ == "__main__":
    sys.exit(main())
