"""Exact polynomial arithmetic and Gröbner machinery over the rationals."""

from cellideals.polyalg.budget import UNLIMITED, Budget, BudgetClock, BudgetExceededError
from cellideals.polyalg.groebner import (
    GroebnerBasis,
    buchberger,
    is_pure,
    leading_monomials_squarefree,
    normal_form,
)
from cellideals.polyalg.ideal import (
    Ideal,
    eliminate,
    ideal_equal,
    ideal_membership,
    intersect,
    intersect_all,
    monomial_intersection,
    radical_membership,
    saturate,
    saturate_variable,
)
from cellideals.polyalg.orders import (
    BlockOrder,
    MonomialOrder,
    VariableContext,
    block_order,
    convert,
    degrevlex_last,
    parse_order_spec,
)
