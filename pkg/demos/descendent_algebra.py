# coding: utf-8

# # The descendent Hopf algebra
#
# A Rota-Baxter operator twists the product of the carrier. The coproduct
# and counit stay the same and the result is again a Hopf algebra.

# In[1]:

from rbhopf import (EnvelopingAlgebra, GroupAlgebra, build_descendent, check_b_homomorphism, extend_group_rb,
                    extend_lie_rb, grouplike_group, sl2, star)
from rbhopf.groups import descendent_group, s3_factorization, split_rb_group, symmetric3
from rbhopf.lie import descendent_bracket, example1_operator

L, R = sl2(), example1_operator()
U = EnvelopingAlgebra(L, "sl2")
B = extend_lie_rb(L, R, U)
D = build_descendent(U, B, U.basis(2))
print(D.hopf_report.to_text())


# Star commutators of generators reproduce the descendent Lie bracket.

# In[2]:

Ld = descendent_bracket(L, R)
x, h, y = (U.gen(n) for n in "xhy")
for a, b, na, nb in [(h, y, "h", "y"), (x, y, "x", "y"), (h, x, "h", "x")]:
    comm = star(B, a, b) - star(B, b, a)
    print(f"{{{na},{nb}}} =", {U.label_str(k): str(c) for k, c in comm.items()})


# B becomes an algebra map from the twisted algebra back to U(sl2).

# In[3]:

print(check_b_homomorphism(B, U.basis(2)).ok)


# On F[S3] the group-likes of the twisted algebra form the descendent group.

# In[4]:

G = symmetric3()
FG = GroupAlgebra(G, "S3")
Bg = split_rb_group(G, *s3_factorization(G))
DG = build_descendent(FG, extend_group_rb(G, Bg, FG), FG.basis())
print(grouplike_group(DG).same_table(descendent_group(G, Bg)))
