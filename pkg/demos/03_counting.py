# %% [markdown]
# Counting Adm(mu) and Perm(mu)
#
# Adm is a union of Bruhat lower intervals, one per minimal coset
# representative z1; Perm is tabulated vertex by vertex.

# %%
import logging

from admperm.enumeration import EnumOptions, enumerate_both
from admperm.rootdata import get_root_datum

logging.basicConfig(level=logging.WARNING)

# %%
# classical types: the two sets agree
for label, i in [("A3", 2), ("C3", 3), ("B3", 1), ("D4", 1)]:
    d = get_root_datum(label)
    r = enumerate_both(d, d.rho(i))
    print(label, f"rho{i}", r.adm.cardinality, r.perm.cardinality)

# %%
# E6 has 144 extra permissible elements
d = get_root_datum("E6")
r = enumerate_both(d, d.rho(1), EnumOptions(workers=2), list_difference=True)
print(r.adm.cardinality, r.perm.cardinality, r.subset, len(r.extras))
print(r.extras[0])

# %%
# E7 (about half a minute and 1 GB; uncomment to run)
# d = get_root_datum("E7")
# r = enumerate_both(d, d.rho(7))
# print(r.adm.cardinality, r.perm.cardinality)
