"""Exact Rota-Baxter operators on cocommutative Hopf algebras.

Carriers are group algebras F[G] of finite groups and universal enveloping
algebras U(g) of finite-dimensional Lie algebras over the rationals.
"""

from .algebra import LinComb, TensorLabel, basis_vector, tensor
from .descendent import (DescendentHopf, PostLieExtension, build_descendent, check_b_homomorphism,
                         check_descendent_identities, grouplike_group, post_lie_dot, post_lie_dot_recursive)
from .errors import (AxiomViolation, BudgetExceeded, FactorizationError, NotGroupLikeError, NotPrimitiveError,
                     RBHopfError, SpecError)
from .groups import (BUILTIN_GROUPS, FiniteGroup, GroupMap, check_rb_group, descendent_group, endomorphisms,
                     enumerate_rb_group, factorization, inverse_map, split_rb_group, tilde_group)
from .hopf import (EnvelopingAlgebra, GroupAlgebra, HopfAlgebra, detect_grouplike, detect_primitive,
                   iterated_comul, pbw_normalize, verify_hopf_axioms)
from .lie import (BUILTIN_ALGEBRAS, LieAlgebraSpec, LieOperator, bracket, check_lie_axioms, check_rb_weight,
                  companion, descendent_bracket, post_lie_product, sl2)
from .operators import (HopfRBOperator, antipode_rb, check_closure, check_coalgebra_map, check_rb_hopf,
                        extend_group_rb, extend_lie_rb, restrict_to_grouplikes, restrict_to_primitives, s_b,
                        split_rb_hopf, star, tilde_hopf)
from .report import AxiomCheck, Report, Violation

__version__ = "0.1.0"
