# coding: utf-8

# # A Rota-Baxter operator on U(sl2)
#
# We start from a weight-1 operator on sl2, lift it to the enveloping algebra
# and look at what the lift does to PBW monomials.

# In[1]:

from rbhopf import EnvelopingAlgebra, LinComb, check_coalgebra_map, check_rb_hopf, extend_lie_rb, sl2
from rbhopf.lie import check_rb_weight, companion, example1_operator
from rbhopf.operators import restrict_to_primitives, sl2_closed_form, tilde_hopf

L = sl2()
print(L.basis_names, {k: L.fmt(v) for k, v in L.structure_constants.items()})


# The operator kills x, halves h with a sign and negates y.

# In[2]:

R = example1_operator()
print(R)
print("weight-1 identity holds:", check_rb_weight(L, R, 1).ok)


# Lift to U(sl2). Images are computed lazily and memoized.

# In[3]:

U = EnvelopingAlgebra(L, "sl2")
B = extend_lie_rb(L, R, U)

for m in U.basis(2):
    print(f"B({U.label_str(m)}) =", {U.label_str(k): str(c) for k, c in B.on_basis(m).items()})


# Monomials starting with x go to zero; the rest follow a short closed form.

# In[4]:

mismatch = [m for m in U.basis(5) if B.on_basis(m) != sl2_closed_form(*m, U)]
print(len(U.basis(5)), "monomials checked,", len(mismatch), "mismatches")


# The defining identity, and compatibility with the coproduct.

# In[5]:

print(check_rb_hopf(B, U.basis(2)).to_text())
print(check_coalgebra_map(B, U.basis(3)).to_text())


# The tilde operator restricts to the companion -R - id on sl2.

# In[6]:

T = tilde_hopf(B)
print(restrict_to_primitives(T) == companion(R), companion(R))
