#!/usr/bin/env python3
"""Run the rank2lift CLI from a source checkout.

Usage:
    python run.py lift frame.json --out lifted.json     # Realify a complex family
    python run.py check pr frame.json --seed 7          # Certify phase retrieval
    python run.py generate mub -p 5                     # Write 6 MUBs of C^5
    python run.py angles frame.json --transfer          # k-angular spectra
    python run.py --help                                # Show help
"""

import sys
from pathlib import Path

from dotenv import load_dotenv

# Add src to path for development imports
SCRIPT_DIR = Path(__file__).resolve().parent
SRC_DIR = SCRIPT_DIR / "src"
sys.path.insert(0, str(SRC_DIR))

# Load environment variables from .env file if it exists
ENV_PATH = SCRIPT_DIR / ".env"
if ENV_PATH.exists():
    load_dotenv(ENV_PATH)

from rank2lift.cli import main

if __name__ == "__main__":
    main()
