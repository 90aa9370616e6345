"""Defines variable contexts and monomial orders over sympy's sparse rings.

A monomial order is a kind (``lex``, ``degrevlex`` or ``block``) plus a
permutation of the variables, most significant first. Each order owns a
sympy ``PolyRing`` whose generators follow that permutation, so the ring's
own tuple ordering realizes the order.
"""

import functools
import re
from dataclasses import dataclass
from typing import Iterable, Literal, Mapping, Sequence, get_args

from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.orderings import MonomialOrder as SympyMonomialOrder, grevlex, lex
from sympy.polys.rings import PolyElement, PolyRing

OrderKind = Literal["lex", "degrevlex", "block"]

Monom = tuple[int, ...]


class BlockOrder(SympyMonomialOrder):
    """Elimination order: degrevlex on the first ``size`` variables, ties by degrevlex on the rest."""

    alias = "block"
    is_global = True
    is_default = False

    def __init__(self, size: int) -> None:
        self.size = size

    def __call__(self, monomial: Monom) -> tuple:
        return (grevlex(monomial[: self.size]), grevlex(monomial[self.size :]))

    def __repr__(self) -> str:
        return f"BlockOrder({self.size})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BlockOrder) and other.size == self.size

    def __hash__(self) -> int:
        return hash((BlockOrder, self.size))


@functools.lru_cache(maxsize=None)
def _symbols(names: tuple[str, ...]) -> tuple[Symbol, ...]:
    return tuple(Symbol(name) for name in names)


@functools.lru_cache(maxsize=None)
def _ring(names: tuple[str, ...], kind: OrderKind, eliminate: int) -> PolyRing:
    match kind:
        case "lex":
            order: SympyMonomialOrder = lex
        case "degrevlex":
            order = grevlex
        case "block":
            order = BlockOrder(eliminate)
        case _:
            raise ValueError(f"Unknown order kind: {kind}")
    return PolyRing(_symbols(names), QQ, order)


@dataclass(frozen=True)
class VariableContext:
    """Ordered variable names with dense indices from 0."""

    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"Variable names must be unique, got {self.names}")

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self.names

    def index(self, name: str) -> int:
        return self.names.index(name)

    def extend(self, *names: str) -> "VariableContext":
        return VariableContext(self.names + tuple(names))

    def without(self, names: Iterable[str]) -> "VariableContext":
        drop = set(names)
        return VariableContext(tuple(n for n in self.names if n not in drop))

    @property
    def ring(self) -> PolyRing:
        """The base ring: degrevlex in context order."""
        return self.degrevlex().ring

    def variable(self, name: str) -> PolyElement:
        return self.ring.gens[self.index(name)]

    def lex(self) -> "MonomialOrder":
        return MonomialOrder("lex", self.names)

    def degrevlex(self) -> "MonomialOrder":
        return MonomialOrder("degrevlex", self.names)


@dataclass(frozen=True)
class MonomialOrder:
    """A term order given by a kind and a variable permutation.

    Parameters:
        kind: One of ``lex``, ``degrevlex`` or ``block``.
        variables: All variable names, most significant first.
        eliminate: For block orders, the number of leading variables that
            form the eliminated block.
    """

    kind: OrderKind
    variables: tuple[str, ...]
    eliminate: int = 0

    def __post_init__(self) -> None:
        if self.kind not in get_args(OrderKind):
            raise ValueError(f"Unknown order kind {self.kind!r}; expected one of {get_args(OrderKind)}")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("Order permutation repeats a variable")
        if self.kind == "block" and not 0 < self.eliminate <= len(self.variables):
            raise ValueError(f"Block size {self.eliminate} out of range for {len(self.variables)} variables")

    @property
    def ring(self) -> PolyRing:
        return _ring(self.variables, self.kind, self.eliminate)

    def key(self, monomial: Monom) -> tuple:
        return self.ring.order(monomial)

    def describe(self) -> str:
        body = ">".join(self.variables)
        if self.kind == "block":
            return f"block[{self.eliminate}]:{body}"
        return f"{self.kind}:{body}"


def block_order(context: VariableContext, eliminated: Sequence[str]) -> MonomialOrder:
    """Elimination order with ``eliminated`` as the leading block."""
    missing = [v for v in eliminated if v not in context]
    if missing:
        raise ValueError(f"Cannot eliminate unknown variables {missing}")
    rest = tuple(n for n in context.names if n not in set(eliminated))
    return MonomialOrder("block", tuple(eliminated) + rest, eliminate=len(eliminated))


def degrevlex_last(context: VariableContext, variable: str) -> MonomialOrder:
    """Degrevlex with ``variable`` as the least significant variable."""
    rest = tuple(n for n in context.names if n != variable)
    return MonomialOrder("degrevlex", rest + (variable,))


@functools.lru_cache(maxsize=None)
def _conversion(source: PolyRing, target: PolyRing) -> tuple[tuple[int | None, ...], tuple[int, ...]]:
    index = {s: i for i, s in enumerate(source.symbols)}
    picks = tuple(index.get(s) for s in target.symbols)
    kept = set(target.symbols)
    dropped = tuple(i for s, i in index.items() if s not in kept)
    return picks, dropped


def convert(f: PolyElement, ring: PolyRing) -> PolyElement:
    """Moves ``f`` into ``ring``, matching variables by name.

    Args:
        f: The polynomial to move
        ring: The target ring

    Returns:
        The same polynomial as an element of ``ring``

    Raises:
        ValueError: If ``f`` uses a variable that ``ring`` lacks
    """
    if f.ring == ring:
        return f
    picks, dropped = _conversion(f.ring, ring)
    terms: dict[Monom, object] = {}
    for monom, coeff in f.items():
        if any(monom[i] for i in dropped):
            missing = [str(f.ring.symbols[i]) for i in dropped if monom[i]]
            raise ValueError(f"Polynomial uses variables {missing} missing from the target ring")
        terms[tuple(0 if j is None else monom[j] for j in picks)] = coeff
    return ring.from_dict(terms)


def variable_name(vertex: tuple[int, int]) -> str:
    return f"x_{{{vertex[0]},{vertex[1]}}}"


def row_lex_order(vertices: Iterable[tuple[int, int]]) -> MonomialOrder:
    """Lex order with ``x_ij > x_kl`` if ``j > l``, or if ``j == l`` and ``i < k``.

    Under it the adjacent minors of a parallelogram path have pairwise
    coprime leading terms.
    """
    ranked = sorted(set(vertices), key=lambda v: (-v[1], v[0]))
    return MonomialOrder("lex", tuple(variable_name(v) for v in ranked))


def vertex_label(name: str) -> str:
    """``x_{i,j}`` -> ``i,j``; other names unchanged."""
    match = re.fullmatch(r"x_\{(-?\d+),(-?\d+)\}", name)
    return f"{match.group(1)},{match.group(2)}" if match else name


def parse_order_spec(
    spec: str,
    context: VariableContext,
    labels: Mapping[str, str] | None = None,
) -> MonomialOrder:
    """Parses ``lex:v1>v2>...`` or ``degrevlex:v1>...``.

    Labels are either vertex labels ``i,j`` (meaning ``x_{i,j}``), raw
    variable names, or keys of ``labels``. Variables the string does not
    mention follow, least significant, in context order.

    Args:
        spec: The order specification
        context: The variables the order ranges over
        labels: Optional symbolic labels mapping to variable names

    Returns:
        The parsed order

    Raises:
        ValueError: If the string is malformed or names unknown variables
    """
    kind, sep, body = spec.strip().partition(":")
    if not sep or kind not in ("lex", "degrevlex"):
        raise ValueError(f"Invalid order spec {spec!r}; expected 'lex:...' or 'degrevlex:...'")
    names: list[str] = []
    for token in (t.strip() for t in body.split(">")):
        if not token:
            continue
        if labels is not None and token in labels:
            name = labels[token]
        elif token in context:
            name = token
        else:
            name = f"x_{{{token.replace(' ', '')}}}"
        if name not in context:
            raise ValueError(f"Order spec names unknown variable {token!r}")
        if name in names:
            raise ValueError(f"Order spec repeats variable {token!r}")
        names.append(name)
    names += [n for n in context.names if n not in set(names)]
    return MonomialOrder(kind, tuple(names))  # type: ignore[arg-type]
