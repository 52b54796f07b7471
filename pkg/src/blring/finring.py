"""Finite commutative unitary rings given by their Cayley tables.

Elements are the dense indices ``0 .. order-1``.  ``Z_n`` uses the residue as
index; a polynomial quotient ``Z_n[X]/(f)`` of degree ``d`` indexes the class
``c_0 + c_1 X + ... + c_{d-1} X^{d-1}`` by ``sum(c_i * n**i)``, so a degree-one
quotient has exactly the indexing of ``Z_n``.
"""
from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

import numpy as np

from .bits import bool_from_mask, indices_from_mask, mask_from_bool
from .errors import CapExceeded, NonMonic, NotAnIdeal, NotCoprime, ParseError

DEFAULT_MAX_ORDER = 4096

# rows processed at once when building or scanning tables of large rings
_CHUNK = 64


def _check_cap(order, max_order):
    cap = DEFAULT_MAX_ORDER if max_order is None else max_order
    if order > cap:
        raise CapExceeded(f"ring order {order} exceeds the configured cap {cap}")


def _frozen(table):
    # int32 halves memory traffic on the large tables; orders stay far below 2**31
    arr = np.array(table, dtype=np.int32)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """A commutative unitary ring of order ``order`` with tabulated operations."""

    order: int
    add: np.ndarray
    mul: np.ndarray
    zero: int = 0
    one: int = 1
    labels: tuple | None = None
    description: dict | None = field(default=None, repr=False)
    # index -> label, used when no label tuple is stored (large rings)
    labeler: object = field(default=None, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "add", _frozen(self.add))
        object.__setattr__(self, "mul", _frozen(self.mul))
        if self.add.shape != (self.order, self.order) or self.mul.shape != (self.order, self.order):
            raise ValueError("add and mul must be order x order tables")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))
            if len(self.labels) != self.order:
                raise ValueError("one label per element is required")

    def __repr__(self):
        name = describe(self) if self.description else "table ring"
        return f"FiniteRing({name}, order={self.order})"

    @property
    def is_trivial(self):
        return self.order == 1

    def label(self, a):
        if self.labels is not None:
            return self.labels[a]
        return self.labeler(int(a)) if self.labeler is not None else str(a)

    @cached_property
    def neg(self):
        """Additive inverse of every element."""
        rows, cols = np.nonzero(self.add == self.zero)
        out = np.empty(self.order, dtype=np.int64)
        out[rows] = cols
        out.setflags(write=False)
        return out

    @cached_property
    def units(self):
        flags = (self.mul == self.one).any(axis=1)
        flags.setflags(write=False)
        return flags

    @cached_property
    def zero_divisors(self):
        """Nonzero elements ``a`` with ``a*b == 0`` for some nonzero ``b``."""
        hits = self.mul == self.zero
        hits[:, self.zero] = False
        flags = hits.any(axis=1)
        flags[self.zero] = False
        flags.setflags(write=False)
        return flags


# ---------------------------------------------------------------- validation


def ring_violation(R):
    """Return ``(law, witness)`` for the first failed ring axiom, or None."""
    m = R.order
    add, mul = R.add, R.mul
    elems = np.arange(m)
    if add.min() < 0 or add.max() >= m or mul.min() < 0 or mul.max() >= m:
        return "closure", ()
    if m > 1 and R.zero == R.one:
        return "zero equals one", (R.zero,)
    for name, table in (("add", add), ("mul", mul)):
        bad = np.argwhere(table != table.T)
        if len(bad):
            return f"{name} commutativity", tuple(int(v) for v in bad[0])
    if not np.array_equal(add[R.zero], elems):
        return "additive identity", (R.zero,)
    if not np.array_equal(mul[R.one], elems):
        return "multiplicative identity", (R.one,)
    inverses = (add == R.zero).any(axis=1)
    if not inverses.all():
        return "additive inverse", (int(np.flatnonzero(~inverses)[0]),)
    for start in range(0, m, _CHUNK):
        a = elems[start:start + _CHUNK]
        for name, table in (("add", add), ("mul", mul)):
            # (a.b).c == a.(b.c)
            lhs = table[table[a][:, :, None], elems[None, None, :]]
            rhs = table[a[:, None, None], table[None, :, :]]
            bad = np.argwhere(lhs != rhs)
            if len(bad):
                i, j, k = bad[0]
                return f"{name} associativity", (int(a[i]), int(j), int(k))
        # a.(b+c) == a.b + a.c
        lhs = mul[a[:, None, None], add[None, :, :]]
        rhs = add[mul[a][:, :, None], mul[a][:, None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            i, j, k = bad[0]
            return "distributivity", (int(a[i]), int(j), int(k))
    return None


def verify_ring(R):
    bad = ring_violation(R)
    if bad is not None:
        raise ValueError(f"not a commutative unitary ring: {bad[0]} fails at {bad[1]}")
    return R


# -------------------------------------------------------------- constructors


def mk_zn(n, max_order=None):
    """The ring of residues mod ``n``; ``n == 1`` gives the degenerate ring."""
    if n < 1:
        raise ValueError("n must be positive")
    _check_cap(n, max_order)
    r = np.arange(n)
    return FiniteRing(
        order=n,
        add=np.add.outer(r, r) % n,
        mul=np.multiply.outer(r, r) % n,
        zero=0,
        one=1 % n,
        labels=[str(i) for i in range(n)],
        description={"kind": "zn", "n": n},
    )


@dataclass(frozen=True)
class PolySpec:
    """Monic modulus ``f`` over ``Z_n``; ``coeffs`` are constant term first.

    Coefficients are reduced mod ``modulus`` on construction.
    """

    modulus: int
    coeffs: tuple

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")
        coeffs = tuple(int(c) % self.modulus for c in self.coeffs)
        if len(coeffs) < 2:
            raise ValueError("the modulus polynomial must have degree at least 1")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @classmethod
    def parse(cls, modulus, text):
        return cls(modulus, parse_poly(text, modulus))

    def __str__(self):
        return format_poly(self.coeffs)


_TERM = re.compile(r"([+-]?)(\d*)(?:(x)(?:\^(\d+))?)?$")


def parse_poly(text, modulus=None):
    """Parse ``"x^2+2x+1"`` into a coefficient tuple, constant term first."""
    src = text.replace(" ", "").replace("*", "").lower()
    if not src:
        raise ParseError("empty polynomial")
    terms = re.findall(r"[+-]?[^+-]+", src)
    if "".join(terms) != src:
        raise ParseError(f"cannot parse polynomial {text!r}")
    coeffs = {}
    for term in terms:
        m = _TERM.match(term)
        if not m or (not m.group(2) and not m.group(3)):
            raise ParseError(f"bad term {term!r} in {text!r}")
        sign, digits, var, power = m.groups()
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        deg = (int(power) if power else 1) if var else 0
        coeffs[deg] = coeffs.get(deg, 0) + c
    top = max(coeffs)
    out = [coeffs.get(i, 0) for i in range(top + 1)]
    if modulus is not None:
        out = [c % modulus for c in out]
    return tuple(out)


def format_poly(coeffs):
    parts = []
    for deg in range(len(coeffs) - 1, -1, -1):
        c = coeffs[deg]
        if c == 0:
            continue
        if deg == 0:
            parts.append(str(c))
        else:
            mono = "x" if deg == 1 else f"x^{deg}"
            parts.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(parts) if parts else "0"


def mk_poly_quotient(spec, max_order=None):
    """The ring ``Z_n[X]/(f)`` for a monic ``f`` given as a :class:`PolySpec`."""
    n, f = spec.modulus, spec.coeffs
    d = len(f) - 1
    if f[-1] != 1:
        raise NonMonic(f"leading coefficient of {format_poly(f)} is {f[-1]} mod {n}, not 1")
    m = n ** d
    _check_cap(m, max_order)
    weights = n ** np.arange(d, dtype=np.int32)
    elems = (np.arange(m, dtype=np.int32)[:, None] // weights[None, :]) % n
    low = np.array(f[:d], dtype=np.int32)

    # X * c: shift coefficients up, then reduce X^d = -(f_0 + ... + f_{d-1} X^{d-1})
    shifted = np.zeros_like(elems)
    shifted[:, 1:] = elems[:, :-1]
    times_x = ((shifted - elems[:, -1:] * low[None, :]) % n) @ weights
    scalar = ((np.arange(n)[:, None, None] * elems[None, :, :]) % n) @ weights

    # index a = a_0 + n * a' stands for a_0 + X * a'; build tables one digit at a time
    r = np.arange(n, dtype=np.int32)
    base = np.add.outer(r, r) % n
    add = base
    while len(add) < m:
        size = len(add)
        add = (n * add[:, None, :, None] + base[None, :, None, :]).reshape(size * n, size * n)
    flat = add.ravel()
    mul = scalar
    for power in range(1, d):
        high = np.arange(n ** power, n ** (power + 1), dtype=np.int32)
        rows = flat[scalar[high % n] * m + times_x[mul[high // n]]]
        mul = np.concatenate([mul, rows])
    return FiniteRing(
        order=m,
        add=add,
        mul=mul,
        zero=0,
        one=1 % m,
        labeler=lambda a: format_poly(tuple(int(c) for c in elems[a])),
        description={"kind": "polyquot", "n": n, "f": format_poly(f)},
    )


def mk_product(A, B, max_order=None):
    """Componentwise ring on pairs; ``(a, b)`` has index ``a * |B| + b``."""
    m = A.order * B.order
    _check_cap(m, max_order)
    nb = B.order
    ia = np.repeat(np.arange(A.order), nb)
    ib = np.tile(np.arange(nb), A.order)
    add = A.add[ia[:, None], ia[None, :]] * nb + B.add[ib[:, None], ib[None, :]]
    mul = A.mul[ia[:, None], ia[None, :]] * nb + B.mul[ib[:, None], ib[None, :]]
    desc = None
    if A.description and B.description:
        desc = {"kind": "product", "factors": [A.description, B.description]}
    return FiniteRing(
        order=m,
        add=add,
        mul=mul,
        zero=A.zero * nb + B.zero,
        one=A.one * nb + B.one,
        labeler=lambda x: f"({A.label(x // nb)},{B.label(x % nb)})",
        description=desc,
    )


def projections(A, B):
    """Index maps from ``mk_product(A, B)`` onto each factor."""
    nb = B.order
    idx = np.arange(A.order * nb)
    return idx // nb, idx % nb


def ideal_mask(R, I):
    """Bitset of an ideal given as an Ideal-like object or an iterable of indices."""
    mask = getattr(I, "mask", None)
    if mask is not None:
        return mask
    flags = np.zeros(R.order, dtype=bool)
    flags[np.asarray(sorted(set(I)), dtype=np.int64)] = True
    return mask_from_bool(flags)


def is_ideal_mask(R, mask):
    inside = bool_from_mask(mask, R.order)
    if not inside[R.zero]:
        return False
    members = np.flatnonzero(inside)
    if not inside[R.add[np.ix_(members, members)]].all():
        return False
    return bool(inside[R.mul[members]].all())


def quotient_ring(R, I):
    """The ring of cosets ``R/I``; coset index order follows least representatives."""
    mask = ideal_mask(R, I)
    if not is_ideal_mask(R, mask):
        raise NotAnIdeal("the given subset is not an ideal of the ring")
    members = indices_from_mask(mask, R.order)
    rep = R.add[:, members].min(axis=1)
    reps = np.unique(rep)
    index = np.full(R.order, -1, dtype=np.int64)
    index[reps] = np.arange(len(reps))
    coset = index[rep]
    add = coset[R.add[np.ix_(reps, reps)]]
    mul = coset[R.mul[np.ix_(reps, reps)]]
    desc = None
    if R.description:
        desc = {"kind": "quotient", "ring": R.description, "ideal": [int(v) for v in members]}
    return FiniteRing(
        order=len(reps),
        add=add,
        mul=mul,
        zero=int(coset[R.zero]),
        one=int(coset[R.one]),
        labels=[f"[{R.label(r)}]" for r in reps],
        description=desc,
    )


def coset_map(R, I):
    """Index of the coset ``x + I`` in ``quotient_ring(R, I)`` for every ``x``."""
    members = indices_from_mask(ideal_mask(R, I), R.order)
    rep = R.add[:, members].min(axis=1)
    reps = np.unique(rep)
    index = np.full(R.order, -1, dtype=np.int64)
    index[reps] = np.arange(len(reps))
    return index[rep]


def is_homomorphism(A, B, f):
    """True when the index map ``f: A -> B`` preserves +, * and 1."""
    f = np.asarray(f, dtype=np.int64)
    if f[A.one] != B.one:
        return False
    if not np.array_equal(f[A.add], B.add[f[:, None], f[None, :]]):
        return False
    return bool(np.array_equal(f[A.mul], B.mul[f[:, None], f[None, :]]))


def is_isomorphism(A, B, f):
    f = np.asarray(f, dtype=np.int64)
    return A.order == B.order and len(set(f.tolist())) == A.order and is_homomorphism(A, B, f)


# ------------------------------------------------------------ interrogation


class ElementClass(enum.Enum):
    ZERO = "zero"
    UNIT = "unit"
    ZERO_DIVISOR = "zero-divisor"


def element_class(R, a):
    if not 0 <= a < R.order:
        raise IndexError(f"element {a} outside ring of order {R.order}")
    if a == R.zero:
        return ElementClass.ZERO
    if R.units[a]:
        return ElementClass.UNIT
    if R.zero_divisors[a]:
        return ElementClass.ZERO_DIVISOR
    # unreachable for a finite ring: a non-unit a has a*x_i == a*x_j for some i != j
    raise AssertionError(f"element {a} is neither a unit nor a zero divisor")


class RingPredicates(NamedTuple):
    is_field: bool
    is_integral_domain: bool
    is_trivial: bool


def ring_predicates(R):
    if R.is_trivial:
        return RingPredicates(False, False, True)
    nonzero = np.arange(R.order) != R.zero
    is_field = bool(R.units[nonzero].all())
    is_domain = not bool(R.zero_divisors.any())
    return RingPredicates(is_field, is_domain, False)


@dataclass(frozen=True, eq=False)
class CRTWitness:
    """Certificate that ``R/(I∩J)`` is isomorphic to ``R/I x R/J`` for coprime ``I``, ``J``."""

    source: FiniteRing
    target: FiniteRing
    table: tuple
    intersection: int
    product: int


def crt_split(R, I, J):
    from .ideal_lattice import Ideal, ideal_intersection, ideal_product, ideal_sum

    I = I if isinstance(I, Ideal) else Ideal.from_members(R, I)
    J = J if isinstance(J, Ideal) else Ideal.from_members(R, J)
    full = (1 << R.order) - 1
    if ideal_sum(I, J).mask != full:
        raise NotCoprime("I + J is a proper ideal")
    meet = ideal_intersection(I, J)
    prod = ideal_product(I, J)
    if prod.mask != meet.mask:
        raise AssertionError("coprime ideals with I*J != I∩J")
    source = quotient_ring(R, meet)
    qi, qj = quotient_ring(R, I), quotient_ring(R, J)
    target = mk_product(qi, qj, max_order=max(DEFAULT_MAX_ORDER, qi.order * qj.order))
    to_src, to_i, to_j = coset_map(R, meet), coset_map(R, I), coset_map(R, J)
    table = np.full(source.order, -1, dtype=np.int64)
    table[to_src] = to_i * qj.order + to_j
    if not is_isomorphism(source, target, table):
        raise AssertionError("canonical map R/(I∩J) -> R/I x R/J is not a ring isomorphism")
    return CRTWitness(source, target, tuple(int(v) for v in table), meet.mask, prod.mask)


def idempotent_elements(R):
    diag = R.mul[np.arange(R.order), np.arange(R.order)]
    return np.flatnonzero(diag == np.arange(R.order))


def local_factors(R):
    """Split ``R`` along its primitive idempotents into local rings ``R e``.

    Returns ``(factors, idempotents)``; the product of the factors is
    isomorphic to ``R`` via ``x -> (x e_1, ..., x e_s)``.
    """
    if R.is_trivial:
        return [], []
    idem = [int(e) for e in idempotent_elements(R) if e != R.zero]
    primitive = [
        e for e in idem
        if not any(f != e and R.mul[e, f] == f for f in idem)
    ]
    factors = []
    for e in primitive:
        members = np.unique(R.mul[e])
        index = np.full(R.order, -1, dtype=np.int64)
        index[members] = np.arange(len(members))
        factors.append(FiniteRing(
            order=len(members),
            add=index[R.add[np.ix_(members, members)]],
            mul=index[R.mul[np.ix_(members, members)]],
            zero=int(index[R.zero]),
            one=int(index[e]),
            labeler=lambda x, members=members: R.label(members[x]),
        ))
    return factors, primitive


# ------------------------------------------------------ descriptions & specs


def from_description(desc, max_order=None):
    kind = desc.get("kind")
    if kind == "zn":
        return mk_zn(int(desc["n"]), max_order)
    if kind == "polyquot":
        return mk_poly_quotient(PolySpec.parse(int(desc["n"]), desc["f"]), max_order)
    if kind == "product":
        factors = [from_description(d, max_order) for d in desc["factors"]]
        ring = factors[0]
        for other in factors[1:]:
            ring = mk_product(ring, other, max_order)
        return ring
    if kind == "quotient":
        base = from_description(desc["ring"], max_order)
        return quotient_ring(base, desc["ideal"])
    raise ParseError(f"unknown ring kind {kind!r}")


def to_json(R):
    if R.description is None:
        raise ValueError("ring was not built from a description")
    return json.dumps(R.description, sort_keys=True)


def from_json(text, max_order=None):
    return from_description(json.loads(text), max_order)


def describe(R):
    """Render a ring description in the command-line mini-language."""
    return _render_spec(R.description)


def _render_spec(d):
    kind = d["kind"]
    if kind == "zn":
        return f"zn:{d['n']}"
    if kind == "polyquot":
        return f"polyquot:{d['n']}:{d['f']}"
    if kind == "product":
        return "prod:(" + ",".join(_render_spec(f) for f in d["factors"]) + ")"
    if kind == "quotient":
        members = ",".join(str(v) for v in d["ideal"])
        return f"quot:({_render_spec(d['ring'])},ideal:[{members}])"
    raise ParseError(f"unknown ring kind {kind!r}")


def parse_ring_spec(text):
    """Parse ``zn:6``, ``polyquot:2:x^2``, ``prod:(zn:2,zn:3)``,
    ``quot:(zn:8,ideal:[0,4])`` into a description dict."""
    desc, rest = _parse_spec(text.strip().replace(" ", ""))
    if rest:
        raise ParseError(f"trailing input {rest!r} in ring spec {text!r}")
    return desc


def _split_args(body):
    depth, start, out = 0, 0, []
    for i, ch in enumerate(body):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "," and depth == 0:
            out.append(body[start:i])
            start = i + 1
    out.append(body[start:])
    return out


def _closing(text, start):
    depth = 0
    for i in range(start, len(text)):
        if text[i] == "(":
            depth += 1
        elif text[i] == ")":
            depth -= 1
            if depth == 0:
                return i
    raise ParseError(f"unbalanced parentheses in {text!r}")


def _parse_spec(text):
    m = re.match(r"(zn|polyquot|prod|quot):", text)
    if not m:
        raise ParseError(f"cannot parse ring spec {text!r}")
    kind, rest = m.group(1), text[m.end():]
    if kind == "zn":
        num = re.match(r"\d+", rest)
        if not num:
            raise ParseError(f"zn needs a modulus: {text!r}")
        return {"kind": "zn", "n": int(num.group())}, rest[num.end():]
    if kind == "polyquot":
        mm = re.match(r"(\d+):([0-9xX^+\-*]+)", rest)
        if not mm:
            raise ParseError(f"polyquot needs n:f, got {text!r}")
        n = int(mm.group(1))
        f = format_poly(parse_poly(mm.group(2), n))
        return {"kind": "polyquot", "n": n, "f": f}, rest[mm.end():]
    if not rest.startswith("("):
        raise ParseError(f"{kind} needs a parenthesised argument list: {text!r}")
    end = _closing(rest, 0)
    args = _split_args(rest[1:end])
    tail = rest[end + 1:]
    if kind == "prod":
        factors = []
        for a in args:
            d, extra = _parse_spec(a)
            if extra:
                raise ParseError(f"trailing input {extra!r} in {text!r}")
            factors.append(d)
        if len(factors) < 2:
            raise ParseError("prod needs at least two factors")
        return {"kind": "product", "factors": factors}, tail
    if len(args) != 2 or not args[1].startswith("ideal:["):
        raise ParseError(f"quot needs (ring,ideal:[...]): {text!r}")
    base, extra = _parse_spec(args[0])
    if extra:
        raise ParseError(f"trailing input {extra!r} in {text!r}")
    body = args[1][len("ideal:["):]
    if not body.endswith("]"):
        raise ParseError(f"unterminated ideal list in {text!r}")
    try:
        members = sorted({int(v) for v in body[:-1].split(",") if v})
    except ValueError as exc:
        raise ParseError(f"bad ideal member list in {text!r}") from exc
    return {"kind": "quotient", "ring": base, "ideal": members}, tail


def build_ring(text, max_order=None):
    return from_description(parse_ring_spec(text), max_order)


def cayley_text(R, op="mul"):
    """Aligned Cayley table with row and column headers."""
    table = R.mul if op == "mul" else R.add
    sym = "*" if op == "mul" else "+"
    labels = [R.label(i) for i in range(R.order)]
    width = max(len(s) for s in labels + [sym])
    head = sym.ljust(width) + " | " + " ".join(s.ljust(width) for s in labels)
    lines = [head.rstrip(), "-" * len(head.rstrip())]
    for i, s in enumerate(labels):
        row = " ".join(labels[v].ljust(width) for v in table[i])
        lines.append((s.ljust(width) + " | " + row).rstrip())
    return "\n".join(lines) + "\n"
