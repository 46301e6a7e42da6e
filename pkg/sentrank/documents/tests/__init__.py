"""Documents app tests."""
