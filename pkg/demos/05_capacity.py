"""
Capacity
========

Coding capacities for every case, and how fast the k=1 code rates approach them.
"""

# %%
from dupcodes import PAL, RC, capacity, size_pal1, size_rc1
from dupcodes.codes import rate

for kind, q, k in [(RC, 2, 1), (RC, 4, 1), (RC, 8, 1), (RC, 4, 2), (PAL, 2, 1), (PAL, 4, 1), (PAL, 4, 3)]:
    print(f"{kind.value:3} q={q} k={k}: {capacity(q, k, kind)}")

# %%
# The rc rate sits 1/n above its limit; the binary pal code rate decays like log(n)/n.
for n in (8, 64, 256, 1024):
    print(n, round(rate(size_rc1(4, n), n, 4), 5), round(rate(size_pal1(2, n), n, 2), 5))
