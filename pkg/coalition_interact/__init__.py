"""Exact interaction indices for cooperative games with graph-restricted communication."""
