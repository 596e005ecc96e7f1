"""Simplicial-complex models of closed oriented manifolds.

A complex is stored as its list of top-dimensional facets (sorted vertex
tuples) with optional orientation signs. From the facet closure we compute
the Euler characteristic, integral / rational / mod-2 homology via Smith
normal form of boundary matrices, and the Kervaire semicharacteristic.

Only closedness and orientability are ever verified; inputs are trusted to
be manifold triangulations beyond that.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .exact_linalg import IntMatrix, rational_rank, smith_normal_form


class NotClosed(ValueError):
    """Complex is not closed (some codimension-1 face is not shared by exactly two facets)."""


class NotOrientable(ValueError):
    """No consistent orientation assignment exists."""


class OddEulerCharacteristic(ValueError):
    """Even-dimensional input with odd Euler characteristic; not a closed manifold."""


class DimensionMismatch(ValueError):
    """Operands have different dimensions."""


class ComplexFormatError(ValueError):
    """Malformed complex document."""


@dataclass(frozen=True)
class SimplicialComplex:
    """Facet list of a pure simplicial complex, with optional facet signs."""

    dim: int
    facets: tuple[tuple[int, ...], ...]
    orientations: tuple[int, ...] | None = None

    def __post_init__(self):
        seen = set()
        for f in self.facets:
            if len(f) != self.dim + 1 or len(set(f)) != self.dim + 1:
                raise ValueError(f"facet {f} does not have {self.dim + 1} distinct vertices")
            if tuple(sorted(f)) != f:
                raise ValueError(f"facet {f} is not sorted")
            if f in seen:
                raise ValueError(f"duplicate facet {f}")
            seen.add(f)
        if tuple(sorted(self.facets)) != self.facets:
            raise ValueError("facet list is not sorted; use from_facets")
        if self.orientations is not None:
            if len(self.orientations) != len(self.facets):
                raise ValueError("orientation count does not match facet count")
            if any(s not in (1, -1) for s in self.orientations):
                raise ValueError("orientation signs must be +1 or -1")

    @classmethod
    def from_facets(cls, dim, facets, orientations=None) -> "SimplicialComplex":
        """Normalize: sort vertices within facets and sort the facet list,
        carrying orientation signs along with their facets."""
        norm = [tuple(sorted(int(v) for v in f)) for f in facets]
        if orientations is None:
            return cls(dim, tuple(sorted(norm)), None)
        paired = sorted(zip(norm, (int(s) for s in orientations)))
        return cls(dim, tuple(f for f, _ in paired), tuple(s for _, s in paired))

    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    def simplices(self, k: int) -> tuple[tuple[int, ...], ...]:
        """All k-simplices of the facet closure, sorted."""
        if k < 0 or k > self.dim:
            return ()
        cells = set()
        for f in self.facets:
            cells.update(itertools.combinations(f, k + 1))
        return tuple(sorted(cells))

    def reversed_orientation(self) -> "SimplicialComplex":
        if self.orientations is None:
            raise ValueError("complex carries no orientation to reverse")
        return SimplicialComplex(self.dim, self.facets, tuple(-s for s in self.orientations))


@dataclass(frozen=True)
class HomologyProfile:
    """Betti numbers by degree plus elementary divisors > 1 per degree."""

    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]


def validate_closed(K: SimplicialComplex) -> bool:
    """True iff every (dim-1)-face lies in exactly two facets."""
    if not K.facets:
        return True
    count: dict[tuple[int, ...], int] = {}
    for f in K.facets:
        for face in itertools.combinations(f, K.dim):
            count[face] = count.get(face, 0) + 1
    return all(c == 2 for c in count.values())


def _facet_adjacency(K: SimplicialComplex):
    face2fac: dict[tuple[int, ...], list[int]] = {}
    for i, f in enumerate(K.facets):
        for face in itertools.combinations(f, K.dim):
            face2fac.setdefault(face, []).append(i)
    return face2fac


def orient(K: SimplicialComplex) -> SimplicialComplex:
    """Assign facet signs making the signed boundary vanish.

    Raises NotClosed when the input is not closed and NotOrientable when no
    sign assignment exists (checked by traversal of the facet adjacency
    graph; contradictions along a cycle witness non-orientability).
    """
    if not validate_closed(K):
        raise NotClosed("orientation requires a closed complex")
    face2fac = _facet_adjacency(K)
    signs = [0] * len(K.facets)
    for start in range(len(K.facets)):
        if signs[start]:
            continue
        signs[start] = 1
        stack = [start]
        while stack:
            i = stack.pop()
            fi = K.facets[i]
            for omit in range(K.dim + 1):
                face = fi[:omit] + fi[omit + 1:]
                a, b = face2fac[face]
                j = a if b == i else b
                omit_j = next(p for p, v in enumerate(K.facets[j]) if v not in face)
                # compatible orientations induce opposite signs on the shared face
                want = -signs[i] * (-1) ** omit * (-1) ** omit_j
                if signs[j] == 0:
                    signs[j] = want
                    stack.append(j)
                elif signs[j] != want:
                    raise NotOrientable("orientation traversal hit a contradiction")
    return SimplicialComplex(K.dim, K.facets, tuple(signs))


def is_orientable(K: SimplicialComplex) -> bool:
    try:
        orient(K)
        return True
    except NotOrientable:
        return False


def euler_characteristic(K: SimplicialComplex) -> int:
    """Alternating sum of simplex counts over the facet closure."""
    return sum((-1) ** k * len(K.simplices(k)) for k in range(K.dim + 1))


def boundary_matrix(K: SimplicialComplex, k: int) -> IntMatrix:
    """Matrix of the boundary map from k-chains to (k-1)-chains."""
    kcells = K.simplices(k)
    k1cells = K.simplices(k - 1)
    idx = {c: i for i, c in enumerate(k1cells)}
    rows = [[0] * len(kcells) for _ in range(len(k1cells))]
    for j, c in enumerate(kcells):
        for i in range(len(c)):
            face = c[:i] + c[i + 1:]
            rows[idx[face]][j] += (-1) ** i
    if not rows:
        return IntMatrix.zeros(0, len(kcells))
    return IntMatrix.from_rows(rows)


def _rank_mod2(A: IntMatrix) -> int:
    # rows as bitmasks; plain GF(2) elimination
    rows = [sum((abs(x) & 1) << j for j, x in enumerate(r)) for r in A.to_rows()]
    rank = 0
    for c in range(A.cols):
        bit = 1 << c
        piv = next((i for i in range(rank, len(rows)) if rows[i] & bit), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] & bit:
                rows[i] ^= rows[rank]
        rank += 1
    return rank


def homology(K: SimplicialComplex, coefficients: str = "integers") -> HomologyProfile:
    """Homology profile over 'integers', 'rationals', or 'mod2' coefficients.

    Betti numbers come from boundary ranks; over the integers the elementary
    divisors > 1 of the degree-(k+1) boundary map give the torsion of H_k.
    """
    if coefficients not in ("integers", "rationals", "mod2"):
        raise ValueError(f"unknown coefficient system {coefficients!r}")
    n = K.dim
    dims = [len(K.simplices(k)) for k in range(n + 1)]
    ranks = [0] * (n + 2)
    torsion: list[tuple[int, ...]] = [()] * (n + 1)
    for k in range(1, n + 1):
        B = boundary_matrix(K, k)
        if coefficients == "integers":
            snf = smith_normal_form(B)
            ranks[k] = snf.rank
            torsion[k - 1] = tuple(d for d in snf.diag if d > 1)
        elif coefficients == "rationals":
            ranks[k] = rational_rank(B)
        else:
            ranks[k] = _rank_mod2(B)
    if coefficients != "integers":
        torsion = [()] * (n + 1)
    betti = tuple(dims[k] - ranks[k] - ranks[k + 1] for k in range(n + 1))
    return HomologyProfile(betti, tuple(torsion))


def kervaire_semicharacteristic(K: SimplicialComplex):
    """Half the Euler characteristic in even dimensions; in odd dimensions the
    mod-2 sum of even-degree rational Betti numbers."""
    if not validate_closed(K):
        raise NotClosed("semicharacteristic requires a closed complex")
    if K.dim % 2 == 0:
        chi = euler_characteristic(K)
        if chi % 2 != 0:
            raise OddEulerCharacteristic(f"chi = {chi} is odd in even dimension {K.dim}")
        return chi // 2
    profile = homology(K, "rationals")
    return sum(profile.betti[2 * i] for i in range(K.dim // 2 + 1)) % 2


def disjoint_union(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    """Disjoint union with K2's vertices shifted past K1's."""
    if K1.dim != K2.dim:
        raise DimensionMismatch(f"dimensions {K1.dim} and {K2.dim} differ")
    shift = max(K1.vertices(), default=-1) + 1
    shifted = [tuple(v + shift for v in f) for f in K2.facets]
    facets = K1.facets + tuple(shifted)
    ori = None
    if K1.orientations is not None and K2.orientations is not None:
        ori = K1.orientations + K2.orientations
    return SimplicialComplex(K1.dim, facets, ori)


_COMPLEX_FIELDS = {"dim", "facets", "orientations"}


def complex_to_json(K: SimplicialComplex) -> str:
    doc = {"dim": K.dim, "facets": [list(f) for f in K.facets]}
    if K.orientations is not None:
        doc["orientations"] = list(K.orientations)
    return json.dumps(doc, indent=2)


def complex_from_json(text: str) -> SimplicialComplex:
    """Parse the complex document format; unknown fields are rejected."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ComplexFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ComplexFormatError("top-level document must be an object")
    unknown = set(doc) - _COMPLEX_FIELDS
    if unknown:
        raise ComplexFormatError(f"unknown fields: {sorted(unknown)}")
    if "dim" not in doc or "facets" not in doc:
        raise ComplexFormatError("document requires 'dim' and 'facets'")
    if not isinstance(doc["dim"], int):
        raise ComplexFormatError("'dim' must be an integer")
    facets = doc["facets"]
    if not isinstance(facets, list) or not all(
        isinstance(f, list) and all(isinstance(v, int) for v in f) for f in facets
    ):
        raise ComplexFormatError("'facets' must be an array of integer arrays")
    ori = doc.get("orientations")
    if ori is not None:
        if not isinstance(ori, list) or not all(s in (1, -1) for s in ori):
            raise ComplexFormatError("'orientations' must be an array of +1/-1")
    try:
        return SimplicialComplex.from_facets(doc["dim"], facets, ori)
    except ValueError as exc:
        raise ComplexFormatError(str(exc)) from exc
