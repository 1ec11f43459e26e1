"""
Blocks Package
Linkage classes, alcove signatures, decomposition numbers and subbundle ranks.
"""
