# src/ordo/__init__.py
