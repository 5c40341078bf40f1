"""Exact Iwahori-Hecke and Jones representations of braid groups and punctured-sphere
mapping class groups, with desk-scale verification tools."""

__version__ = "0.1.0"
