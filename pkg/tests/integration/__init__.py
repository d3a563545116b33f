"""
Integration tests for gan-gan (desk-scale training runs).
"""
