#!/usr/bin/env python3
# coding=utf-8
"""
Command line interpreter of the secant toolkit
Please note you can install it simply by performing:
ln -s $(pwd)/bin/cli.py /usr/local/bin/secant
And then use it freely:
$ secant analyze resources/polytopes/hexagon.json
$ secant catalog truncated --n 4 --k 1
$ secant selftest
"""
import sys

# Path handling, the repo root holds the libs, config, output and resources packages
import libpath

from libs.cli.cli import run

libpath.add_local_libs()


if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
