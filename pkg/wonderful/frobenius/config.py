"""
Configuration for Frobenius pushforward computations
"""

# ============================================================================
# PSL3 CANDIDATE BOUNDS
# ============================================================================

# Number of line bundles O_X(mu) that can split off Fr_* O_X(lambda) on X_PSL3
PSL3_CANDIDATE_MIN = 21
PSL3_CANDIDATE_MAX = 27

# Number of those guaranteed to split off by the lattice-point criterion
PSL3_GUARANTEED_MIN = 14
PSL3_GUARANTEED_MAX = 19

# The candidate region is the alpha-coordinate box [0, 3(p-1)]^2
PSL3_BOX_SCALE = 3

# ============================================================================
# PUBLISHED SUBDIVISOR COUNTS
# ============================================================================

# (type, class) -> published count of effective subdivisors of (p-1)K~_X
PUBLISHED_SUBDIVISOR_COUNTS = {
    ("A2", (6, 6)): 460,
    ("A2", (20, 22)): 37290,
    ("A3", (20, 21, 22)): 14828077,
}

# ============================================================================
# MULTIPLICITY CASES
# ============================================================================

class ExactCase:
    FROBENIUS_POWER = "frobenius_power"  # lambda = p mu
    SIMPLE_ROOT_SHIFT = "simple_root_shift"  # lambda = p mu + alpha_i
    CANONICAL_SHIFT = "canonical_shift"  # lambda = (1-p) K_X + p mu
