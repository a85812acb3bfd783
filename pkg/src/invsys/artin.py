"""Artinianity, truncation spans, Hilbert functions, socle and type analysis.

An ideal I of R = k[[x1..xn]] is handled through its finite-dimensional
images in the truncations R/m^(D+1): the image is the span of the products
x^a * f_j, |a| <= D, cut off above degree D (higher multiplier terms cannot
reach degrees <= D).  The keystone making pure linear algebra sound in the
complete local ring is the Nakayama consequence

    m^d <= I + m^(d+1)   implies   m^d <= I,

so "every degree-d monomial lies in the degree-d truncation span" certifies
m^d <= I outright; see the README for the two-line proof sketch.  The quotient
A = R/I is Artinian exactly when such a d exists, and the least one is
s + 1 for the socle degree s.

Non-Artinianity is provable here only in the special case of a variable
missing from every generator (then A surjects onto a power-series ring in
that variable); otherwise the search stops at the ring's degree cap and the
verdict is the inconclusive "not Artinian within cap".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import DegreeCapError, NotArtinError
from .linalg import (
    Echelon,
    Frame,
    SubspaceBasis,
    kernel_of_vectors,
    poly_to_vector,
    quotient_dim,
    span_of,
)
from .poly import Poly, Ring, format_poly


@dataclass(frozen=True)
class ArtinStatus:
    """Outcome of the Artinianity search.

    For a non-Artinian verdict, ``proven`` distinguishes an actual proof (a
    variable absent from every generator) from cap exhaustion.
    """

    artin: bool
    socle_degree: Optional[int]
    proven: bool
    cap: int


class IdealHandle:
    """An ideal of R given by generators, with write-once analysis caches.

    Generators must be nonunits (zero constant term); zero generators are
    dropped.  Externally the handle behaves as an immutable value; the span
    and status caches only ever gain entries.
    """

    def __init__(self, ring: Ring, generators: list[Poly]):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
            if g.is_zero():
                continue
            if g.constant_term():
                raise ValueError("generators must be nonunits (zero constant term)")
            gens.append(g)
        self.ring = ring
        self.generators = gens
        self._spans: dict[int, Echelon] = {}
        self._status: Optional[ArtinStatus] = None

    def __repr__(self) -> str:
        return f"IdealHandle({len(self.generators)} generators, {self.ring!r})"

    def _span_echelon(self, bound: int) -> Echelon:
        """Echelon of the image of the ideal in R/m^(bound+1)."""
        ech = self._spans.get(bound)
        if ech is not None:
            return ech
        ring = self.ring
        ech = Echelon()
        for g in self.generators:
            o = g.order()
            if o > bound:
                continue
            for t in range(0, bound - o + 1):
                for mono in ring.monomials_of_degree(t):
                    prod = g.times_monomial(mono).truncated(bound)
                    if not prod.is_zero():
                        ech.insert(poly_to_vector(prod))
        self._spans[bound] = ech
        return ech


def truncation_span(ideal: IdealHandle, bound: int) -> SubspaceBasis:
    """Image of the ideal in R/m^(bound+1), as a subspace of the <=bound frame."""
    if bound > ideal.ring.max_degree_cap:
        raise DegreeCapError(
            f"bound {bound} exceeds degree cap {ideal.ring.max_degree_cap}"
        )
    return SubspaceBasis(Frame(ideal.ring, bound), ideal._span_echelon(bound))


def contains_power_of_maximal(ideal: IdealHandle, d: int) -> bool:
    """True iff m^d is contained in the ideal.

    Checks membership of every degree-d monomial in the degree-d truncation
    span; by the Nakayama consequence above this decides m^d <= I exactly.
    """
    if d > ideal.ring.max_degree_cap:
        raise DegreeCapError(f"degree {d} exceeds cap {ideal.ring.max_degree_cap}")
    if d < 1:
        return False
    ring = ideal.ring
    ech = ideal._span_echelon(d)
    for mono in ring.monomials_of_degree(d):
        if not ech.contains({ring.index_of(mono): ring.field.one}):
            return False
    return True


def analyze_artin(ideal: IdealHandle) -> ArtinStatus:
    """Search for the least d with m^d <= I; Artin with socle degree d - 1.

    A variable occurring in no generator proves non-Artinianity immediately;
    otherwise the search runs up to the ring's degree cap and failure is the
    inconclusive "not Artinian within cap" verdict.
    """
    if ideal._status is not None:
        return ideal._status
    ring = ideal.ring
    cap = ring.max_degree_cap
    used: set[int] = set()
    for g in ideal.generators:
        used |= g.support_variables()
    if len(used) < ring.nvars:
        status = ArtinStatus(artin=False, socle_degree=None, proven=True, cap=cap)
    else:
        status = None
        for d in range(1, cap + 1):
            if contains_power_of_maximal(ideal, d):
                status = ArtinStatus(artin=True, socle_degree=d - 1, proven=True, cap=cap)
                break
        if status is None:
            status = ArtinStatus(artin=False, socle_degree=None, proven=False, cap=cap)
    ideal._status = status
    return status


def require_artin(ideal: IdealHandle) -> int:
    """Socle degree of R/I, or NotArtinError."""
    status = analyze_artin(ideal)
    if not status.artin:
        kind = "proven" if status.proven else f"within cap {status.cap}"
        raise NotArtinError(f"quotient is not Artinian ({kind})", proven=status.proven)
    return status.socle_degree


def hilbert(ideal: IdealHandle) -> list[int]:
    """Hilbert function HF(0..s) of A = R/I; HF(i) = dim n^i / n^(i+1)."""
    s = require_artin(ideal)
    ring = ideal.ring
    dims = []
    prev = 0
    for i in range(s + 1):
        q = ring.frame_size(i) - ideal._span_echelon(i).dim
        dims.append(q - prev)
        prev = q
    return dims


def _colon_maximal_subspace(ideal: IdealHandle, s: int) -> list[Poly]:
    """Basis of {f in R_<=s : x_i * f in I for all i}, solved mod m^(s+2).

    Together with m^(s+1) this set is exactly the colon ideal (I : m): the
    part of f above degree s is automatically in (I : m), and for the rest
    membership of x_i * f in I only depends on its class mod m^(s+2).
    """
    ring = ideal.ring
    big = ideal._span_echelon(s + 1)
    m1 = ring.frame_size(s + 1)
    vectors = []
    for mono in ring.monomials_upto(s):
        combined = {}
        base = Poly.monomial(ring, mono)
        for i in range(ring.nvars):
            shifted = base.times_monomial(
                tuple(1 if k == i else 0 for k in range(ring.nvars))
            )
            residue = big.reduce(poly_to_vector(shifted))
            for idx, c in residue.items():
                combined[i * m1 + idx] = c
        vectors.append(combined)
    kernel = kernel_of_vectors(vectors, ring.nvars * m1, ring.field.one)
    monos = ring.monomials_upto(s)
    return [
        Poly(ring, {monos[k]: c for k, c in vec.items()}) for vec in kernel
    ]


def socle_ideal(ideal: IdealHandle) -> list[Poly]:
    """Minimal generators of the colon ideal (I : m).

    For I = m the colon ideal is the whole ring; that degenerate case is
    reported as the single unit generator [1].
    """
    s = require_artin(ideal)
    ring = ideal.ring
    if s == 0:
        return [Poly.one(ring)]
    gens = _colon_maximal_subspace(ideal, s)
    gens += [Poly.monomial(ring, m) for m in ring.monomials_of_degree(s + 1)]
    return ideal_min_gens(IdealHandle(ring, gens))


def cm_type(ideal: IdealHandle) -> int:
    """Cohen-Macaulay type dim soc(A) = dim (I : m)/I; -1 when not Artinian."""
    status = analyze_artin(ideal)
    if not status.artin:
        return -1
    s = status.socle_degree
    ring = ideal.ring
    frame = Frame(ring, s)
    colon = span_of(_colon_maximal_subspace(ideal, s), frame)
    image = SubspaceBasis(frame, ideal._span_echelon(s))
    return quotient_dim(colon, image)


def is_ag(ideal: IdealHandle) -> int:
    """-2 when not Artinian, -1 when Artinian but not Gorenstein, else the
    socle degree (Gorenstein means Cohen-Macaulay type 1)."""
    status = analyze_artin(ideal)
    if not status.artin:
        return -2
    return status.socle_degree if cm_type(ideal) == 1 else -1


def is_level(ideal: IdealHandle) -> int:
    """-2 when not Artinian, -1 when Artinian but not level, else the socle
    degree.  Level means soc(A) = n^s, i.e. (I : m) = I + m^s."""
    status = analyze_artin(ideal)
    if not status.artin:
        return -2
    s = status.socle_degree
    ring = ideal.ring
    # both sides contain m^(s+1), so images mod m^(s+2) decide equality
    colon = Echelon()
    if s == 0:
        colon.insert(poly_to_vector(Poly.one(ring)))
    else:
        colon.insert_all(
            poly_to_vector(p) for p in _colon_maximal_subspace(ideal, s)
        )
    for mono in ring.monomials_of_degree(s + 1):
        colon.insert({ring.index_of(mono): ring.field.one})
    other = ideal._span_echelon(s + 1).copy()
    for d in (s, s + 1):
        for mono in ring.monomials_of_degree(d):
            other.insert({ring.index_of(mono): ring.field.one})
    return s if colon == other else -1


def eq_ideal(a: IdealHandle, b: IdealHandle) -> bool:
    """Exact equality of two Artin ideals.

    Both contain m^(B+1) for B = max(socle degrees) + 1, so equality of the
    degree-<=B truncation spans is equivalent to equality of the ideals.
    """
    if a.ring != b.ring:
        raise ValueError("ideals from different rings")
    sa = require_artin(a)
    sb = require_artin(b)
    bound = max(sa, sb) + 1
    return a._span_echelon(bound) == b._span_echelon(bound)


def ideal_min_gens(ideal: IdealHandle) -> list[Poly]:
    """A minimal generating subset of the handle's generator list.

    Nakayama: generators are minimal iff their classes form a basis of
    I/(m*I), computed mod m^(s+2) where both spaces are fully visible.
    Candidates are tried lowest degree first (ties broken by the canonical
    order of their lowest homogeneous part, then full canonical text), so the
    selection is deterministic and independent of input order.
    """
    s = require_artin(ideal)
    ring = ideal.ring
    bound = s + 1
    ech = Echelon()
    for g in ideal.generators:
        o = g.order()
        for t in range(1, bound - o + 1):
            for mono in ring.monomials_of_degree(t):
                prod = g.times_monomial(mono).truncated(bound)
                if not prod.is_zero():
                    ech.insert(poly_to_vector(prod))

    def sort_key(g: Poly):
        lead = g.homogeneous_component(g.order())
        return (g.degree(), format_poly(lead), format_poly(g))

    selected = []
    for g in sorted(ideal.generators, key=sort_key):
        vec = poly_to_vector(g.truncated(bound))
        if ech.insert(vec) is not None:
            selected.append(g)
    return selected
