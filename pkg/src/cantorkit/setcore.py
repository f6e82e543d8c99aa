"""Explicit finite sets, maps and relations, plus Schroeder-Bernstein.

Atoms are plain ``int`` or ``str`` values.  Integers sort before symbols and
each kind sorts naturally, which gives every container a canonical order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Iterable, Union

from .errors import (
    FuelExhausted,
    MalformedMap,
    MalformedRelation,
    NoPreimage,
    NotBijective,
    NotInjective,
    NotLinear,
    NotSubset,
    TooLarge,
)

Atom = Union[int, str]

POWERSET_BOUND = 16
EXHAUSTIVE_WELL_ORDER_BOUND = 12


def atom_key(a: Atom):
    if isinstance(a, bool) or not isinstance(a, (int, str)):
        raise TypeError(f"not an atom: {a!r}")
    return (isinstance(a, str), a)


def render_atom(a: Atom) -> str:
    return str(a)


@dataclass(frozen=True)
class FiniteSet:
    elements: tuple

    def __init__(self, elements: Iterable[Atom] = ()):
        object.__setattr__(self, "elements", tuple(sorted(set(elements), key=atom_key)))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, a):
        return a in set(self.elements)

    def issubset(self, other: FiniteSet) -> bool:
        return set(self.elements) <= set(other.elements)

    def __str__(self):
        return "{" + ",".join(map(render_atom, self.elements)) + "}"


@dataclass(frozen=True)
class FiniteMap:
    domain: FiniteSet
    codomain: FiniteSet
    pairs: tuple

    def __init__(self, domain, codomain, pairs):
        domain = domain if isinstance(domain, FiniteSet) else FiniteSet(domain)
        codomain = codomain if isinstance(codomain, FiniteSet) else FiniteSet(codomain)
        pairs = dict(pairs.items()) if isinstance(pairs, dict) else list(pairs)
        if isinstance(pairs, list):
            seen = {}
            for x, y in pairs:
                if x in seen and seen[x] != y:
                    raise MalformedMap(f"{x} has two images: {seen[x]} and {y}")
                seen[x] = y
            pairs = seen
        if set(pairs) != set(domain.elements):
            missing = set(domain.elements) - set(pairs)
            extra = set(pairs) - set(domain.elements)
            raise MalformedMap(f"pairs do not cover the domain (missing {sorted(missing, key=atom_key)}, "
                               f"extra {sorted(extra, key=atom_key)})")
        cod = set(codomain.elements)
        for x, y in pairs.items():
            if y not in cod:
                raise MalformedMap(f"image {y} of {x} is outside the codomain")
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "codomain", codomain)
        object.__setattr__(self, "pairs", tuple((x, pairs[x]) for x in domain.elements))

    def __call__(self, x):
        return dict(self.pairs)[x]

    def as_dict(self) -> dict:
        return dict(self.pairs)

    def __str__(self):
        return "{" + ", ".join(f"{render_atom(x)}->{render_atom(y)}" for x, y in self.pairs) + "}"


@dataclass(frozen=True)
class FiniteRelation:
    carrier: FiniteSet
    pairs: frozenset

    def __init__(self, carrier, pairs):
        carrier = carrier if isinstance(carrier, FiniteSet) else FiniteSet(carrier)
        pairs = frozenset((a, b) for a, b in pairs)
        c = set(carrier.elements)
        for a, b in pairs:
            if a not in c or b not in c:
                raise MalformedRelation(f"pair ({a},{b}) leaves the carrier")
        object.__setattr__(self, "carrier", carrier)
        object.__setattr__(self, "pairs", pairs)

    def holds(self, a, b) -> bool:
        return (a, b) in self.pairs

    def __str__(self):
        ordered = sorted(self.pairs, key=lambda p: (atom_key(p[0]), atom_key(p[1])))
        return "[" + ",".join(f"({render_atom(a)},{render_atom(b)})" for a, b in ordered) + "]"


def identity_map(s: FiniteSet) -> FiniteMap:
    return FiniteMap(s, s, {x: x for x in s})


def compose(g: FiniteMap, f: FiniteMap) -> FiniteMap:
    """``g . f`` (apply f first)."""
    if not f.codomain.issubset(g.domain):
        raise MalformedMap("codomain of f is not inside the domain of g")
    gd = g.as_dict()
    return FiniteMap(f.domain, g.codomain, {x: gd[y] for x, y in f.pairs})


def _collision(f: FiniteMap):
    seen = {}
    for x, y in f.pairs:
        if y in seen:
            return (seen[y], x)
        seen[y] = x
    return None


def _unhit(f: FiniteMap):
    hit = {y for _, y in f.pairs}
    for y in f.codomain:
        if y not in hit:
            return y
    return None


def check_function_kind(f: FiniteMap) -> dict:
    injective = _collision(f) is None
    surjective = _unhit(f) is None
    return {"injective": injective, "surjective": surjective, "bijective": injective and surjective}


def invert_bijection(f: FiniteMap) -> FiniteMap:
    coll = _collision(f)
    if coll is not None:
        raise NotBijective(f"{coll[0]} and {coll[1]} share an image", collision=coll)
    unhit = _unhit(f)
    if unhit is not None:
        raise NotBijective(f"{unhit} is not hit", unhit=unhit)
    return FiniteMap(f.codomain, f.domain, {y: x for x, y in f.pairs})


def schroeder_bernstein_finite(A: FiniteSet, B: FiniteSet, f: FiniteMap, g: FiniteMap) -> FiniteMap:
    """Bijection A -> B from injections f: A -> B and g: B -> A.

    E_0 is A minus g(B), E_{n+1} = g(f(E_n)); h is f on the union E and
    g^{-1} off it.
    """
    if f.domain != A or not f.codomain.issubset(B):
        raise MalformedMap("f must map A into B")
    if g.domain != B or not g.codomain.issubset(A):
        raise MalformedMap("g must map B into A")
    for name, m in (("f", f), ("g", g)):
        coll = _collision(m)
        if coll is not None:
            raise NotInjective(f"{name} is not injective: {coll[0]} and {coll[1]} collide",
                               name=name, collision=coll)
    fd, gd = f.as_dict(), g.as_dict()
    g_inv = {a: b for b, a in gd.items()}
    layer = set(A.elements) - set(g_inv)
    E = set(layer)
    while layer:
        layer = {gd[fd[a]] for a in layer} - E
        E |= layer
    h = {a: (fd[a] if a in E else g_inv[a]) for a in A}
    return FiniteMap(A, B, h)


@dataclass(frozen=True)
class CountableInjectionPair:
    """Two injections N -> N with a search budget for preimage and chain tests."""

    f: Callable[[int], int]
    g: Callable[[int], int]
    fuel: int = 1024

    def __post_init__(self):
        if self.fuel < 1:
            raise ValueError("fuel must be at least 1")


def _preimage(fn, value, fuel):
    for n in range(fuel + 1):
        if fn(n) == value:
            return n
    return None


def sb_in_E(p: CountableInjectionPair, x: int) -> bool:
    """Backward-chase membership of ``x`` in E.

    The chain alternates g- and f-preimages.  Stopping on the A side (no
    g-preimage) puts x in E; stopping on the B side, or revisiting a state,
    puts it outside.  Preimages are searched among 0..fuel.
    """
    side, v = "A", x
    visited = set()
    for _ in range(p.fuel):
        if (side, v) in visited:
            return False
        visited.add((side, v))
        if side == "A":
            b = _preimage(p.g, v, p.fuel)
            if b is None:
                return True
            side, v = "B", b
        else:
            a = _preimage(p.f, v, p.fuel)
            if a is None:
                return False
            side, v = "A", a
    raise FuelExhausted(f"chain from {x} undecided after {p.fuel} steps")


def sb_point_countable(p: CountableInjectionPair, x: int) -> int:
    if sb_in_E(p, x):
        return p.f(x)
    b = _preimage(p.g, x, p.fuel)
    if b is None:
        raise NoPreimage(f"{x} has no g-preimage among 0..{p.fuel}")
    return b


def powerset(A: FiniteSet, bound: int = POWERSET_BOUND) -> list:
    if len(A) > bound:
        raise TooLarge(f"|A| = {len(A)} exceeds the powerset bound {bound}")
    out = []
    for k in range(len(A) + 1):
        out.extend(FiniteSet(c) for c in combinations(A.elements, k))
    return out


def characteristic_function(X: FiniteSet, A: FiniteSet) -> FiniteMap:
    if not A.issubset(X):
        raise NotSubset(f"{A} is not a subset of {X}")
    members = set(A.elements)
    return FiniteMap(X, FiniteSet([0, 1]), {x: int(x in members) for x in X})


def diagonal_witness(A: FiniteSet, f: dict) -> FiniteSet:
    """The subset {a : a not in f(a)}, missed by every f: A -> P(A)."""
    return FiniteSet(a for a in A if a not in f[a])


def has_bijection_to_powerset(A: FiniteSet) -> bool:
    """Exhaustive search over all maps A -> P(A)."""
    subsets = powerset(A)
    n = len(A)
    for images in product(range(len(subsets)), repeat=n):
        if len(set(images)) == len(subsets):
            return True
    return False


def _is_partial(r: FiniteRelation) -> bool:
    c = r.carrier.elements
    if any((a, a) not in r.pairs for a in c):
        return False
    for a, b in r.pairs:
        if a != b and (b, a) in r.pairs:
            return False
    succ = {}
    for a, b in r.pairs:
        succ.setdefault(a, set()).add(b)
    for a, b in r.pairs:
        if not succ.get(b, set()) <= succ[a]:
            return False
    return True


def _has_least(r: FiniteRelation, subset) -> bool:
    return any(all((m, s) in r.pairs for s in subset) for m in subset)


def check_order(r: FiniteRelation) -> dict:
    partial = _is_partial(r)
    c = r.carrier.elements
    linear = partial and all((a, b) in r.pairs or (b, a) in r.pairs for a, b in combinations(c, 2))
    if not linear:
        well = False
    elif len(c) <= EXHAUSTIVE_WELL_ORDER_BOUND:
        well = all(_has_least(r, s) for k in range(1, len(c) + 1) for s in combinations(c, k))
    else:
        well = True
    return {"partial": partial, "linear": linear, "well": well}


def ranked(r: FiniteRelation) -> list:
    """Carrier of a linear order listed from least to greatest."""
    return sorted(r.carrier.elements, key=lambda a: sum((b, a) in r.pairs for b in r.carrier))


def order_isomorphism(p: FiniteRelation, q: FiniteRelation):
    for name, r in (("p", p), ("q", q)):
        if not check_order(r)["linear"]:
            raise NotLinear(f"{name} is not a linear order")
    if len(p.carrier) != len(q.carrier):
        return None
    return FiniteMap(p.carrier, q.carrier, dict(zip(ranked(p), ranked(q))))


def linear_order(atoms) -> FiniteRelation:
    """The linear order listing ``atoms`` from least to greatest."""
    atoms = list(atoms)
    return FiniteRelation(atoms, [(a, b) for i, a in enumerate(atoms) for b in atoms[i:]])
