#!/usr/bin/env python3
"""
hyperfree - Main Entry Point
"""

from hyperfree.cli import main

if __name__ == "__main__":
    main()
