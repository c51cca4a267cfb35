"""Semicomplete compositions of digraphs."""
