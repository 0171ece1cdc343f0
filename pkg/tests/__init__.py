"""Test module."""
