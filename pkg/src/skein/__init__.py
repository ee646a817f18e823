"""Exact skein-category computations for unoriented 2d cobordisms."""
