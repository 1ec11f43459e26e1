"""
K-Theory Package
Fixed-point K-classes of Frobenius pushforwards and Chern characters via Adams operations.
"""
