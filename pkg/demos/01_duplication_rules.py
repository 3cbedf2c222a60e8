"""
Duplication rules
=================

Three ways a k-factor can be copied back into a word, and a seeded channel
that applies many of them.
"""

# %%
from dupcodes import PAL, RC, TAN, Alphabet, DuplicationEvent, apply, random_derivation, replay, to_str, word

A = Alphabet(4)  # complement pairs 0<->3, 1<->2
x = word("01103203")

# %%
# Copy the 2-factor after the 4-prefix ("32") three different ways.
for kind in (RC, PAL, TAN):
    print(kind.value, to_str(apply(x, DuplicationEvent(kind, 4, 2), A)))

# %%
# A channel run is a derivation; replaying it reproduces the output exactly.
z, d = random_derivation(x, t=5, k=2, kind=RC, seed=7, A=A)
print(to_str(z), d.to_json())
assert replay(x, d, A) == z
