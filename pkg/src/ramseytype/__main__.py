#!/usr/bin/env python3
"""Entry point for running ramseytype as a module: python -m ramseytype"""

import sys
from ramseytype.main import main

if __name__ == "__main__":
    sys.exit(main())
