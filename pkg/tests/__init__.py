"""
Test package for gan-gan.
"""
