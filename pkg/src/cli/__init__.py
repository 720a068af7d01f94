"""CLI command handlers and result emitters for indsub_cli."""
