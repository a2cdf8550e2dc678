"""
Test package for the skew DGA tool.
"""
