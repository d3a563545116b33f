"""
Unit tests for gan-gan.
"""
