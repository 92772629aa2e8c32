"""
Sample multiplication tables and bilinear map files.
"""

# e1 e1 = e2: d = 1, r = 1
PAIRING_ALGEBRA = """\
dim 2
prod 1 1 : 0 1
"""

# e1 e1 = e2 e2 = e3: d = 2, r = 1
SQUARES_ALGEBRA = """\
dim 3
prod 1 1 : 0 0 1
prod 2 2 : 0 0 1
"""

# d = 4, r = 3 with generator pairs 1:2, 2:1, 3:4, 4:3
COROLLARY_ALGEBRA = """\
dim 7
prod 1 3 : 0 0 0 0 1 0 0
prod 1 4 : 0 0 0 0 0 1 0
prod 2 3 : 0 0 0 0 0 0 1
prod 2 4 : 0 0 0 0 1 1 1
"""

ZERO_ALGEBRA = """\
dim 2
"""

NONCOMMUTATIVE_ALGEBRA = """\
dim 2
prod 1 2 : 0 1
prod 2 1 : 1 0
"""

# first-order direction with nonzero associator: e1 o e1 = e2, e2 o e2 = e1
OBSTRUCTED_CIRC = """\
map 2
prod 1 1 : 0 1
prod 2 2 : 1 0
"""

F11_MINUS_ONE = """\
map 1
prod 1 1 : -1
"""
