"""
Toric Codes - Main Launcher

Runs the command-line application.

Usage:
    python main.py params --polytope hexagon.json --q 5
    python main.py distance --polytope hexagon.json --q 5 --exact --bounds
    python main.py verify-paper --case all
"""

import sys

from dotenv import load_dotenv

load_dotenv()

from cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
