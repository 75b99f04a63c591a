"""
Composing partition diagrams
============================

Stack one diagram on another, join the middle row, and count the closed loops.
"""

from diagcat import compose, make_diagram, render, sharp, star, tensor

# a 7 -> 5 diagram: bare integers are bottom vertices, primes are top vertices
D = make_diagram(7, 5, [[1, 3, "1'"], [2, 4], [5, "3'", "5'"], [7, "2'"], [6], ["4'"]])
print(D)
print(render(D, "ascii"))

# D' sits underneath D, so its top row must have 7 vertices
D_prime = make_diagram(4, 7, [[1, "1'"], [2], [3, "7'"], [4, "5'"], ["2'", "4'"],
                              ["3'"], ["6'"]])

# two middle components touch neither outer row, so the product picks up t^2
alpha, E = compose(D, D_prime)
print(f"D o D' = t^{alpha} * ({E})")

# star flips the picture upside down, sharp mirrors it left to right
print("D*  =", star(D))
print("D#  =", sharp(D))

# the tensor product places diagrams side by side, left operand first
print("D (x) D' =", tensor(D, D_prime))
