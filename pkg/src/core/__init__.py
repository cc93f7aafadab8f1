"""Core library shared by the command-line interface and the tests."""
