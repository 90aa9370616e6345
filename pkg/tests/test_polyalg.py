"""Tests the Gröbner machinery against sympy's own implementation."""

import random

import pytest
from sympy import Poly, QQ, groebner, symbols
from sympy.polys.rings import PolyElement

from cellideals.enumerate import EnumerationConfig, enumerate_collections
from cellideals.grid import rectangle
from cellideals.ideals import adjacent_minor_ideal, vertex_variables
from cellideals.polyalg import (
    Budget,
    BudgetExceededError,
    Ideal,
    MonomialOrder,
    VariableContext,
    buchberger,
    eliminate,
    intersect,
    intersect_all,
    is_pure,
    leading_monomials_squarefree,
    normal_form,
    parse_order_spec,
    radical_membership,
    saturate,
)
from cellideals.polyalg.dump import dump_ideal, format_polynomial

x, y, z, w = symbols("x y z w")
XYZW = VariableContext(("x", "y", "z", "w"))


def _polys(context: VariableContext, exprs: list) -> list[PolyElement]:
    return [context.ring.from_expr(e) for e in exprs]


def _normalized(exprs: list) -> set:
    return {Poly(e, x, y, z, w).monic().as_expr() for e in exprs}


@pytest.mark.parametrize(
    "exprs",
    [
        [x * z - y**2, y * w - z**2, x * w - y * z],
        [x**2 + y * z - 1, x * y - z, y**2 - x],
        [x * y - z * w, x**2 - w**2, y * z - x],
    ],
)
@pytest.mark.parametrize("kind, sympy_order", [("degrevlex", "grevlex"), ("lex", "lex")])
def test_matches_sympy(exprs: list, kind: str, sympy_order: str) -> None:
    order = MonomialOrder(kind, XYZW.names)  # type: ignore[arg-type]
    ours = buchberger(_polys(XYZW, exprs), order)
    expected = groebner(exprs, x, y, z, w, order=sympy_order, domain=QQ)
    assert _normalized([p.as_expr() for p in ours]) == _normalized(list(expected.exprs))


def test_generator_order_does_not_matter() -> None:
    ideals = [
        adjacent_minor_ideal(collection)
        for rank in range(1, 5)
        for collection in enumerate_collections(EnumerationConfig(rank))
    ]
    expected = {id(ideal): buchberger(ideal.gens, ideal.context.degrevlex()) for ideal in ideals}
    for _ in range(100):
        ideal = random.choice(ideals)
        gens = list(ideal.gens)
        random.shuffle(gens)
        assert buchberger(gens, ideal.context.degrevlex()) == expected[id(ideal)]


def _random_poly(context: VariableContext, terms: int, degree: int) -> PolyElement:
    n = len(context)
    out = context.ring.zero
    for _ in range(terms):
        monom = [0] * n
        for _ in range(random.randint(0, degree)):
            monom[random.randrange(n)] += 1
        out += context.ring.from_dict({tuple(monom): random.randint(-3, 3)})
    return out


def test_normal_form_ignores_ideal_multiples() -> None:
    ideal = adjacent_minor_ideal(rectangle(2, 2))
    for order in (ideal.context.degrevlex(), ideal.context.lex()):
        basis = ideal.groebner(order)
        for _ in range(20):
            g = random.choice(ideal.gens) * _random_poly(ideal.context, 2, 2)
            f = _random_poly(ideal.context, 3, 2)
            h = _random_poly(ideal.context, 4, 3)
            assert normal_form(f * g + h, basis) == normal_form(h, basis)
            assert not normal_form(f * g, basis)


def test_binomial_closure() -> None:
    collection = rectangle(3, 2)
    ideal = adjacent_minor_ideal(collection)
    for order in (ideal.context.degrevlex(), ideal.context.lex()):
        basis = ideal.groebner(order)
        assert basis.pure
        assert all(is_pure(p) for p in basis)
        assert all(p.LC == 1 for p in basis)


def test_squarefree_leads() -> None:
    context = VariableContext(("x", "y"))
    assert leading_monomials_squarefree(buchberger(_polys(context, [x * y - 1]), context.degrevlex()))
    assert not leading_monomials_squarefree(buchberger(_polys(context, [x**2 - y]), context.degrevlex()))


def test_membership() -> None:
    ideal = Ideal(XYZW, _polys(XYZW, [x * z - y**2, y * w - z**2, x * w - y * z]))
    assert ideal.contains(XYZW.ring.from_expr(w * (x * z - y**2) + y * (x * w - y * z)))
    assert not ideal.contains(XYZW.ring.from_expr(x * y - z * w))
    assert ideal.contains(XYZW.ring.zero)
    assert not Ideal(XYZW).contains(XYZW.ring.from_expr(x))


def test_radical_membership() -> None:
    ideal = Ideal(XYZW, _polys(XYZW, [x**2, y**3 * z]))
    assert radical_membership(XYZW.ring.from_expr(x), ideal)
    assert radical_membership(XYZW.ring.from_expr(x + y * z), ideal)
    assert not radical_membership(XYZW.ring.from_expr(y), ideal)


def test_eliminate() -> None:
    context = VariableContext(("t", "x", "y"))
    t = symbols("t")
    ideal = Ideal(context, [context.ring.from_expr(e) for e in (x - t, y - t**2)])
    projected = eliminate(ideal, ["t"])
    assert projected.context.names == ("x", "y")
    assert projected.equals(Ideal(projected.context, [projected.context.ring.from_expr(y - x**2)]))


def test_intersect() -> None:
    context = VariableContext(("x", "y"))

    def ideal(*exprs: object) -> Ideal:
        return Ideal(context, [context.ring.from_expr(e) for e in exprs])

    assert intersect(ideal(x), ideal(y)).equals(ideal(x * y))
    assert intersect(ideal(x + y), ideal(x)).equals(ideal(x**2 + x * y))
    assert intersect_all([ideal(x), ideal(y), ideal(x - y)]).equals(ideal(x**2 * y - x * y**2))
    assert intersect(ideal(x), Ideal(context)).is_zero
    with pytest.raises(ValueError):
        intersect_all([])


def test_saturate() -> None:
    context = VariableContext(("x", "y", "z"))

    def ideal(*exprs: object) -> Ideal:
        return Ideal(context, [context.ring.from_expr(e) for e in exprs])

    homogeneous = saturate(ideal(x * y - x * z), ["x"])
    assert homogeneous.equals(ideal(y - z))
    assert saturate(homogeneous, ["x"]).equals(homogeneous)
    affine = saturate(ideal(x * y - x, x**2 * z), ["x"])
    assert affine.equals(ideal(y - 1, z))
    assert saturate(ideal(x * y - x), ["x", "y"]).equals(ideal(y - 1))


def test_budget_errors() -> None:
    context = VariableContext(("x", "y"))
    with pytest.raises(BudgetExceededError) as error:
        buchberger(_polys(context, [x, y]), context.degrevlex(), Budget(max_basis_size=1))
    assert error.value.limit == "max_basis_size"
    with pytest.raises(BudgetExceededError) as error:
        buchberger(_polys(context, [x**3 - y**3]), context.degrevlex(), Budget(max_degree=2))
    assert error.value.limit == "max_degree"


def test_parse_order_spec() -> None:
    context = vertex_variables(rectangle(1, 1, origin=(1, 1)))
    order = parse_order_spec("lex:2,2>1,1", context)
    assert order.kind == "lex"
    assert order.variables == ("x_{2,2}", "x_{1,1}", "x_{2,1}", "x_{1,2}")
    labelled = parse_order_spec("degrevlex:top", context, labels={"top": "x_{1,2}"})
    assert labelled.variables[0] == "x_{1,2}"
    for bad in ("1,1>2,2", "grlex:1,1", "lex:5,5", "lex:1,1>1,1"):
        with pytest.raises(ValueError):
            parse_order_spec(bad, context)


def test_dump() -> None:
    context = VariableContext(("x", "y"))
    f = context.lex().ring.from_expr(2 * x**2 * y - y)
    assert format_polynomial(f) == "2*x^2*y - 1*y"
    assert format_polynomial(context.ring.zero) == "0"
    minor = adjacent_minor_ideal(rectangle(1, 1, origin=(1, 1)))
    assert dump_ideal(minor) == "-1*x_{2,1}*x_{1,2} + 1*x_{1,1}*x_{2,2}"
