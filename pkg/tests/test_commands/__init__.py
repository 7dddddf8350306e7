"""Tests for fracwalk commands and the command line."""
