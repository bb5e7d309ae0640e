"""Test suite for the spread workbench."""
