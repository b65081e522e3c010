"""HTTP service exposing the library operations."""
