"""API for `isdc.core`."""
