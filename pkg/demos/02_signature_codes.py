"""
Codes for k=1 reverse-complement duplication
============================================

The signature of a word survives every k=1 rc duplication, so a code needs
one word per signature. Decoding just reads the signature back.
"""

# %%
from dupcodes import RC, Alphabet, construct_rc1, random_derivation, signature, size_rc1, to_str, word

A = Alphabet(4)
print(to_str(signature(word("0110300203"), A)))  # 01020

# %%
book = construct_rc1(4, 6)
print("codewords:", book.size, "formula:", size_rc1(4, 6))
print([to_str(book.unrank(j)) for j in range(8)], "...")

# %%
# Send codewords through a noisy channel and decode them.
failures = 0
for seed in range(2000):
    c = book.unrank(seed % book.size)
    z, _ = random_derivation(c, t=10, k=1, kind=RC, seed=seed, A=A)
    failures += book.decode(z) != c
print("decoding failures:", failures)
