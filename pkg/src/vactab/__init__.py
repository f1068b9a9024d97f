"""Exact enumeration of vacillating tableaux."""
