#!/usr/bin/env python3
"""
SA2GD toolkit entry point
Run `python sa2gd.py --help` for the available commands
"""

import os
import sys

sys.path.append(os.path.dirname(os.path.abspath(__file__)))
from src.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
