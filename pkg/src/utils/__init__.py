"""Utility modules for the weakening kernel CLI."""
