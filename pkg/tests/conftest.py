# Makes this directory importable (oracles.py) when pytest collects the tests.
