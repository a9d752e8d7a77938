"""Make the sibling oracle module importable from every test file."""
