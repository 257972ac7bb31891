# coding: utf-8

# # Rota-Baxter operators on finite groups
#
# On a group algebra every such operator comes from a map of the group.
# Small groups can be searched exhaustively.

# In[1]:

from rbhopf.groups import (cyclic, descendent_group, endomorphisms, enumerate_rb_group, inverse_map,
                           klein_four, s3_factorization, split_rb_group, symmetric3, tilde_group)

for G, name in [(cyclic(2), "C2"), (cyclic(3), "C3"), (klein_four(), "V4"), (symmetric3(), "S3")]:
    ops = enumerate_rb_group(G)
    print(f"{name}: {len(ops)} operators, {len(endomorphisms(G))} endomorphisms")


# For abelian groups the two lists coincide. S3 has more endomorphisms than
# operators. Print its operators by name:

# In[2]:

S3 = symmetric3()
for B in enumerate_rb_group(S3):
    print([S3.names[v] for v in B.image])


# The exact factorization S3 = A3 <(12)> gives a split operator.

# In[3]:

A3, C2 = s3_factorization(S3)
B = split_rb_group(S3, A3, C2)
print("split:", [S3.names[v] for v in B.image])
print("tilde:", [S3.names[v] for v in tilde_group(S3, B).image])


# The descendent group of the inverse map is the opposite group.

# In[4]:

D = descendent_group(S3, inverse_map(S3))
g, h = S3.index("(12)"), S3.index("(123)")
print(S3.names[D.mul(g, h)], "==", S3.names[S3.mul(h, g)])
