#!/usr/bin/env python3
"""
ybx Command Line Entry Point
Runs the verification toolkit: `python app.py <command> ...` behaves as `ybx <command> ...`.
"""

import os
import sys
import logging
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Configure logging; stdout is reserved for the JSON report
logging.basicConfig(
    level=os.getenv("YBX_LOG_LEVEL", "INFO").upper(),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    stream=sys.stderr
)

logger = logging.getLogger(__name__)

from ybx.cli import run

if __name__ == '__main__':
    sys.exit(run(sys.argv[1:]))
