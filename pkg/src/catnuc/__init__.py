"""Nuclei and multiplicants of algebras and of module categories, computed exactly."""
