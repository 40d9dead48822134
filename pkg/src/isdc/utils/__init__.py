"""API for `isdc.utils`."""
