"""Bundled example graphs."""

from pathlib import Path

KARATE_PATH = Path(__file__).with_name("karate.edges")
