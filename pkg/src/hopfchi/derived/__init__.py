"""Hopf monoids obtained from hypergraphs by restriction or morphisms.

Each module converts its objects to hypergraphs (or building sets) and reads the
invariant through the corresponding orientation-type objects.
"""
