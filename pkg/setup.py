#!/usr/bin/env python3
"""
Setup script for the ybx toolkit
Creates the working directories and writes the sample input documents.
"""

import os
import sys
import logging
from pathlib import Path

# Add the ybx package to path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from ybx.input_generator import SampleInputGenerator

def setup_directories():
    """Create necessary directories."""
    print("📁 Setting up directories...")

    directories = [
        "ybx/inputs",
        "ybx/results"
    ]

    for directory in directories:
        Path(directory).mkdir(parents=True, exist_ok=True)
        print(f"✓ Created: {directory}")

def generate_sample_inputs():
    """Write the sample JSON inputs."""
    print("⚙️ Generating sample inputs...")

    generator = SampleInputGenerator("ybx/inputs")
    try:
        for filename in generator.generate_all_default_inputs():
            print(f"✓ Created: {filename}")
    except OSError as e:
        print(f"❌ Failed to write sample inputs: {e}")

def setup_logging():
    """Setup logging configuration."""
    logging.basicConfig(
        level=logging.INFO,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )

def main():
    """Main setup function."""
    print("🚀 ybx Toolkit Setup")
    print("=" * 40)

    setup_logging()
    setup_directories()
    generate_sample_inputs()

    print("=" * 40)
    print("✅ Setup completed successfully!")
    print()
    print("🎯 Next steps:")
    print("1. Optionally set YBX_THREADS, YBX_DIGITS or YBX_LOG_LEVEL in .env")
    print("2. Run 'python app.py check linear --matrix ybx/inputs/gate5.json --d 2'")
    print("3. Run 'python app.py audit' to check every claim against the manifest")

# Commands a PEP 517 build backend passes when it executes this file
_BUILD_COMMANDS = {"egg_info", "dist_info", "bdist_wheel", "sdist", "editable_wheel", "build", "build_py", "develop", "install"}

if __name__ == "__main__":
    if _BUILD_COMMANDS.intersection(sys.argv[1:]):
        # Packaging metadata lives in pyproject.toml
        from setuptools import setup
        setup()
    else:
        main()
