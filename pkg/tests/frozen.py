"""Frozen expected values for the regression and acceptance tests.

Provenance markers:

* [PAPER]   -- copied from the published tables / printed formulas.
* [DERIVED] -- computed once by an independent exact method (hand
               derivation or a separate oracle), then frozen.
* [TRIVIAL] -- forced by definitions alone.

Every value is an exact rational in ``p/q`` string form; the tests compare
with zero tolerance.
"""

# [PAPER] Global log canonical threshold of every bundled surface fixture,
# with the realizing divisor (the witness of the upper bound).  Conditional
# variants carry the condition in the fixture name.
EXPECTED_GLOBAL_LCT = {
    "2A3+2A1.deg1.cusp-A1": ("3/4", "Q"),
    "2A3+2A1.deg1.cusp-smooth": ("5/6", "Q"),
    "2A3+2A1.deg1.no-cusp": ("1", "Z.E2"),
    "2A3+A1.deg2": ("1/2", "2*L1"),
    "2A3.deg1": ("1", "Z.E2"),
    "2A4.deg1": ("4/5", "C/2"),
    "2D4.deg1": ("1/2", "L3"),
    "A2+A1.deg6": ("1/6", "6*L1"),
    "A3+2A1.deg1.cusp-A1": ("3/4", "Q"),
    "A3+2A1.deg1.cusp-smooth": ("5/6", "Q"),
    "A3+2A1.deg1.no-cusp": ("1", "Z.E2"),
    # [DERIVED] the catalog prints 1/3 here; the 4*L1 member realizes 1/4
    # and the lower-bound lemma certifies it (the single ledgered issue).
    "A3+2A1.deg4": ("1/4", "4*L1"),
    "A3+3A1.deg1.cusp-A1": ("3/4", "Q"),
    "A3+3A1.deg1.cusp-smooth": ("5/6", "Q"),
    "A3+3A1.deg1.no-cusp": ("1", "Z.E2"),
    "A3+4A1.deg1.cusp-A1": ("3/4", "Q"),
    "A3+4A1.deg1.cusp-smooth": ("5/6", "Q"),
    "A3+4A1.deg1.no-cusp": ("1", "Z.E2"),
    "A3+A1.deg1.cusp-A1": ("3/4", "Q"),
    "A3+A1.deg1.cusp-smooth": ("5/6", "Q"),
    "A3+A1.deg1.no-cusp": ("1", "Z.E2"),
    "A3.deg1": ("1", "Z"),
    "A4+2A1.deg1.cusp-A1": ("3/4", "Q"),
    "A4+2A1.deg1.no-cusp": ("4/5", "C/2"),
    "A4+A1.deg1.cusp-A1": ("3/4", "Q"),
    "A4+A1.deg1.no-cusp": ("4/5", "C/2"),
    "A4+A3.deg1": ("4/5", "C/2"),
    "A4.deg1": ("4/5", "C/2"),
    "A4.deg5": ("1/6", "5*L1"),
    "A5+A2+A1.deg1": ("2/3", "L3"),
    "A5+A2.deg2": ("1/3", "2*L3"),
    "A5.deg1": ("2/3", "(L3+L3p)/2"),
    "A6.deg1": ("2/3", "(L3+L4)/2"),
    "A7+A1.deg1": ("1/2", "L4"),
    "A7.deg1": ("1/2", "L4"),
    "A7.deg2": ("1/3", "2*L2"),
    "A7r.deg1": ("8/15", "L3"),
    "A8.deg1": ("1/2", "L3"),
    "D4+3A1.deg2": ("1/2", "2*L1"),
    "D4.deg1": ("1/2", "Z"),
    "D5+A3.deg1": ("1/2", "L4"),
    "D5.deg1": ("1/2", "Z"),
    "D5.deg4": ("1/6", "4*L1"),
    "D6+2A1.deg1": ("1/2", "L1"),
    "D6+A1.deg2": ("1/4", "2*L1"),
    "D6.deg1": ("1/2", "Z"),
    "D7.deg1": ("2/5", "(L1+L2)/2"),
    "D8.deg1": ("1/3", "L1"),
    "E6+A2.deg1": ("1/3", "L4"),
    "E6.deg1": ("1/3", "Z"),
    "E7+A1.deg1": ("1/4", "L1"),
    "E7.deg1": ("1/4", "Z"),
    "E7.deg2": ("1/6", "2*L"),
    "E8.deg1": ("1/6", "Z"),
}

# [PAPER] Per-variable maxima of the constraint system built from the
# anticanonical members alone (single-block degree-1 surfaces); these are
# the printed coefficient bounds.
BOUNDS_MEMBER_SYSTEM = {
    "A3.deg1": ("3/4", "1", "3/4"),
    "A4.deg1": ("4/5", "6/5", "6/5", "4/5"),
    "A5.deg1": ("5/6", "4/3", "3/2", "4/3", "5/6"),
    "A6.deg1": ("6/7", "10/7", "12/7", "12/7", "10/7", "6/7"),
    "A8.deg1": ("8/9", "14/9", "2", "20/9", "20/9", "2", "14/9", "8/9"),
    "D4.deg1": ("1", "1", "1", "1"),
    "D5.deg1": ("5/4", "5/4", "3/4", "1/2", "1"),
    "D6.deg1": ("3/2", "3/2", "1", "3/4", "1/2", "1"),
    "D7.deg1": ("7/4", "7/4", "5/2", "2", "3/2", "1", "1"),
    "D8.deg1": ("2", "2", "3", "5/2", "2", "3/2", "1", "1"),
    "E6.deg1": ("4/3", "5/6", "2/3", "1/2", "5/6", "4/3"),
    "E7.deg1": ("1/2", "2/3", "3/4", "7/8", "5/6", "1", "3/2"),
    "E8.deg1": ("1", "7/8", "5/6", "8/9", "4/5", "3/4", "2/3", "1/2"),
}

# [PAPER]/[DERIVED] Per-variable maxima of the full curated constraint
# system (mixed-block surfaces need the curve rows to be bounded at all).
# Two entries deliberately differ from the printed tables and are explained
# in the project decision ledger: A7+A1 end variables are 7/8 (printed: 1)
# and the 2D4 second-block center is 2 (printed: 3/2).
BOUNDS_FULL_SYSTEM = {
    "E7+A1.deg1": ("1", "2", "3", "7/4", "5/2", "2", "1", "1"),
    "E6+A2.deg1": ("4/3", "5/3", "2", "1", "5/3", "1", "1", "2"),
    "D6+2A1.deg1": ("1", "1", "2", "3/2", "1", "1", "1", "1"),
    "A5+A2+A1.deg1": ("5/6", "1", "1", "4/3", "5/6", "2/3", "2/3", "1/2"),
    "2D4.deg1": ("1", "1", "1", "1", "1", "1", "2", "1"),
    "A7+A1.deg1": ("7/8", "3/2", "5/4", "1", "5/4", "1", "7/8", "1"),
}

# [PAPER] The lower-bound lemmas every release must replay end to end.
CORE_LEMMAS = (
    "A3.deg1", "A4.deg1", "A5.deg1", "A6.deg1", "A8.deg1",
    "D4.deg1", "D5.deg1", "D6.deg1", "D7.deg1", "D8.deg1",
    "E6.deg1", "E7.deg1", "E8.deg1", "E7+A1.deg1",
)

# [PAPER] Degree-1 singularity lists asserted to carry a Kähler-Einstein
# metric (every certified conditional threshold exceeds 2/3).
KE_LISTS = (
    "A4", "2A4", "A4+A3", "A4+2A1", "A4+A1",
    "A3+4A1", "A3+3A1", "2A3+2A1", "A3+2A1", "A3+A1", "2A3", "A3",
)
