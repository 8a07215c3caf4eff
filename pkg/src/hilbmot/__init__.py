"""Exact motivic classes of punctual Hilbert and Quot schemes of points.

Classes live in Z[L, L^-1]; see :mod:`hilbmot.lpoly`.  The command-line
front end is :mod:`hilbmot.cli`.
"""
