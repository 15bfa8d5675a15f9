"""Packing houses into Alcuin's three cities."""

__version__ = "0.1.0"
