"""Test module for the rational eigenvalue bound library."""
