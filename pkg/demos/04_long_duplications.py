"""
Duplication length k >= 2
=========================

Equal short prefixes and equal k-summaries force a common descendant, so
only a bounded number of words can be in any code.
"""

# %%
from dupcodes import PAL, RC, Alphabet, bound_rck, meet_k, summary, to_str, word
from dupcodes.oracle import class_count

A = Alphabet(4)
print(to_str(summary(word("011011013030023003"), 2)))  # 011011300203

# %%
x, y = word("01230123"), word("0123")
for kind in (RC, PAL):
    w = meet_k(x, y, 2, kind, A)
    print(kind.value, "common descendant of length", len(w.z), "events", len(w.dx) + len(w.dy))

# %%
# Classes of (prefix, summary) stop growing long before the bound does.
print("bound q=2 k=2:", bound_rck(2, 2))
print([class_count(n, 2, 2) for n in range(2, 13, 2)])
