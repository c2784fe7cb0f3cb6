"""All the bookembed CLI commands."""
