"""
Common descendants, built and searched
======================================

When two words share a signature we can write down derivations to a common
descendant. A breadth-first search over the descendant cones confirms it.
"""

# %%
from dupcodes import RC, Alphabet, cones_intersect, cones_meet_rc1, meet_rc1, to_str, word

A = Alphabet(4)
x, y = word("0110300203"), word("01020")
print("signatures agree:", cones_meet_rc1(x, y, A))

# %%
w = meet_rc1(x, y, A)
print("z =", to_str(w.z), "|dx| =", len(w.dx), "|dy| =", len(w.dy))
assert w.check(x, y, A)

# %%
# Brute force finds the shortest common descendant within a length budget.
m = cones_intersect(word("012"), word("0112"), 1, RC, A, max_length=8)
print("bfs meet:", to_str(m.z), m.dx.to_json(), m.dy.to_json())
print("different signatures:", cones_intersect(word("01"), word("02"), 1, RC, A, max_length=8).found)
