"""In-process tests of the indsub command line."""
