"""Exact finite-dimensional workbench for coideal subalgebras and quantum subgroups."""
