"""Documents models tests."""
