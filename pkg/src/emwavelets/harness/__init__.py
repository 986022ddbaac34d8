"""Run configuration, grids, datasets, finite differences, validation, CLI."""
