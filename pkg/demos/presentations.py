"""
Generators and relations
========================

Every diagram category here is generated by a handful of small diagrams.  A
word stacks slices of generators; evaluating it composes the slices upward.
"""

from diagcat import (evaluate_word, make_diagram, parse_word, synthesize_word,
                     verify_presentation)
from diagcat.presentations import CATEGORIES
from diagcat.textio import render_morphism

# "| eta ; mu": create a vertex next to the strand, then merge the two
w = parse_word("| eta ; mu")
print(w, "=", render_morphism(evaluate_word(w)))

# a cup followed by a cap closes one loop
print("c ; d =", render_morphism(evaluate_word(parse_word("c ; d"))))

# every listed relation, with its star and sharp images, holds exactly
for name in CATEGORIES:
    rep = verify_presentation(name)
    print(str(rep).splitlines()[0])

# going the other way: write a Motzkin diagram as a word in cap, cup, eta and eps
M = make_diagram(4, 2, [[1, 2], [3], [4, "2'"], ["1'"]])
word = synthesize_word(M, "motzkin")
print(M, "<-", word)
assert evaluate_word(word).terms == {M: 1}
