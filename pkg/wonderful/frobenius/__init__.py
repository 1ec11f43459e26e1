"""
Frobenius Pushforward Package
Summand criteria, subdivisor counts and the Steinberg block of Fr_* O_X(λ).
"""
