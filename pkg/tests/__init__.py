"""Test suite for taxicab-forge

pytest's rootdir insertion puts the project root on sys.path, so the
tests import the package as ``src.*``.
"""
