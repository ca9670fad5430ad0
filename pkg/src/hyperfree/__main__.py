#!/usr/bin/env python3
"""
Allows running the package as a module: python -m hyperfree
"""

from hyperfree.cli import main

if __name__ == "__main__":
    main()
