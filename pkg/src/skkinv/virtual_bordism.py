"""Symbolic calculus of manifold pieces with labeled boundaries.

A piece carries only invariant-level data: dimension, Euler characteristic,
signature, a multiset of named boundary labels, and optional exact-rational
attributes for closed catalog entries (Pontryagin numbers in the
dimension-8 demo catalog). Gluing adds Euler characteristics (subtracting
matched label characteristics, which vanish for odd-dimensional labels) and
adds signatures; signature additivity under gluing and its negation under
orientation reversal are axioms of the calculus, not derived facts.

Catalogs declare named pieces, a boundary-capping assignment (for each
label, a piece whose boundary is l copies of the label), and construction
identities that let a glued piece resolve to a named closed manifold. No
recognition beyond declared identities is attempted; identity matching is
by name multiset, so orientation decorations are below its resolution.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction


class LabelMismatch(ValueError):
    """Matched boundary labels disagree."""


class DimensionMismatch(ValueError):
    """Pieces of different dimensions cannot interact."""


class MissingBSigma(ValueError):
    """Catalog lacks a capping piece for a boundary label."""


class CatalogFormatError(ValueError):
    """Malformed catalog document."""


@dataclass(frozen=True)
class BoundaryLabel:
    """Named closed (n-1)-manifold type with an orientation sign."""

    name: str
    chi: int = 0
    orientation: int = 1

    def __post_init__(self):
        if self.orientation not in (1, -1):
            raise ValueError("orientation must be +1 or -1")

    def reversed(self) -> "BoundaryLabel":
        return BoundaryLabel(self.name, self.chi, -self.orientation)


@dataclass(frozen=True)
class VirtualPiece:
    """Invariant-level record of a compact oriented manifold piece."""

    dim: int
    chi: int
    sigma: int = 0
    boundary: tuple[BoundaryLabel, ...] = ()
    attributes: tuple[tuple[str, Fraction], ...] = ()
    recipe: str = ""
    name: str = ""
    parts: tuple[str, ...] = ()

    def __post_init__(self):
        if self.sigma != 0 and self.dim % 4 != 0:
            raise ValueError("signature lives in dimensions divisible by 4")
        if self.dim % 2 == 0 and any(lbl.chi != 0 for lbl in self.boundary):
            raise ValueError("odd-dimensional boundary labels must have chi = 0")
        if not self.parts:
            # anonymous pieces carry an opaque part so declared identities can
            # only resolve constructions whose constituents are all named
            object.__setattr__(self, "parts", (self.name,) if self.name else ("?",))
        if not self.recipe and self.name:
            object.__setattr__(self, "recipe", self.name)

    @property
    def is_closed(self) -> bool:
        return not self.boundary

    def attribute(self, key: str) -> Fraction:
        for k, v in self.attributes:
            if k == key:
                return v
        raise KeyError(f"piece has no attribute {key!r}")

    def has_attribute(self, key: str) -> bool:
        return any(k == key for k, _ in self.attributes)


def piece(dim, chi, sigma=0, boundary=(), name="", attributes=(), recipe="") -> VirtualPiece:
    """Convenience constructor; boundary entries may be labels or names
    (a leading '-' on a name marks reversed orientation)."""
    labels = []
    for b in boundary:
        if isinstance(b, BoundaryLabel):
            labels.append(b)
        elif isinstance(b, str):
            if b.startswith("-"):
                labels.append(BoundaryLabel(b[1:], orientation=-1))
            else:
                labels.append(BoundaryLabel(b))
        else:
            nm, chi_b = b
            labels.append(BoundaryLabel(nm, chi_b))
    attrs = tuple(sorted((k, Fraction(v)) for k, v in dict(attributes).items()))
    return VirtualPiece(dim, chi, sigma, tuple(labels), attrs, recipe, name)


def reverse(P: VirtualPiece) -> VirtualPiece:
    """Orientation reversal: chi fixed, sigma negated, labels reversed."""
    return replace(
        P,
        sigma=-P.sigma,
        boundary=tuple(lbl.reversed() for lbl in P.boundary),
        recipe=f"reverse({P.recipe})" if P.recipe else "",
    )


def glue(P: VirtualPiece, Q: VirtualPiece, matching) -> VirtualPiece:
    """Glue along matched boundary label pairs (index into P, index into Q).

    chi adds with the matched labels' chi subtracted once per pair; sigma
    adds outright. An empty matching is the disjoint union.
    """
    if P.dim != Q.dim:
        raise DimensionMismatch(f"dimensions {P.dim} and {Q.dim} differ")
    used_p: set[int] = set()
    used_q: set[int] = set()
    chi_correction = 0
    for i, j in matching:
        if i in used_p or j in used_q:
            raise LabelMismatch("boundary label matched twice")
        if not (0 <= i < len(P.boundary) and 0 <= j < len(Q.boundary)):
            raise LabelMismatch("matching references a missing boundary label")
        lp, lq = P.boundary[i], Q.boundary[j]
        if lp.name != lq.name or lp.chi != lq.chi:
            raise LabelMismatch(f"cannot match label {lp.name!r} with {lq.name!r}")
        used_p.add(i)
        used_q.add(j)
        chi_correction += lp.chi
    boundary = tuple(l for k, l in enumerate(P.boundary) if k not in used_p)
    boundary += tuple(l for k, l in enumerate(Q.boundary) if k not in used_q)
    return VirtualPiece(
        dim=P.dim,
        chi=P.chi + Q.chi - chi_correction,
        sigma=P.sigma + Q.sigma,
        boundary=boundary,
        recipe=f"glue({P.recipe or '?'}, {Q.recipe or '?'})",
        parts=tuple(sorted(P.parts + Q.parts)),
    )


def match_all_by_name(P: VirtualPiece, Q: VirtualPiece):
    """Full matching of both boundaries, pairing labels with equal names."""
    by_name: dict[str, list[int]] = {}
    for j, lbl in enumerate(Q.boundary):
        by_name.setdefault(lbl.name, []).append(j)
    matching = []
    for i, lbl in enumerate(P.boundary):
        if not by_name.get(lbl.name):
            raise LabelMismatch(f"no partner for boundary label {lbl.name!r}")
        matching.append((i, by_name[lbl.name].pop()))
    if any(v for v in by_name.values()):
        raise LabelMismatch("boundaries do not match up")
    return tuple(matching)


def disjoint(P: VirtualPiece, Q: VirtualPiece) -> VirtualPiece:
    return glue(P, Q, ())


def double(P: VirtualPiece) -> VirtualPiece:
    """Glue P to its reversal along the identity of the whole boundary."""
    matching = tuple((i, i) for i in range(len(P.boundary)))
    # reversal flips label orientation but not the name, so name-matching applies
    D = glue(P, reverse(P), matching)
    return replace(D, recipe=f"double({P.recipe or '?'})")


@dataclass(frozen=True)
class Catalog:
    """Named pieces, boundary capping choices, and construction identities."""

    dim: int
    l: int
    pieces: tuple[VirtualPiece, ...]
    b_sigma: tuple[tuple[str, str], ...]       # label name -> piece name
    identities: tuple[tuple[tuple[str, ...], str], ...]  # part multiset -> piece name

    def __post_init__(self):
        if self.l < 1:
            raise ValueError("l must be a positive integer")
        names = {p.name for p in self.pieces}
        for label, pname in self.b_sigma:
            if pname not in names:
                raise CatalogFormatError(f"b_sigma for {label!r} names unknown piece {pname!r}")
            B = self.piece(pname)
            if sorted(lbl.name for lbl in B.boundary) != sorted([label] * self.l):
                raise CatalogFormatError(
                    f"boundary of {pname!r} is not {self.l} copies of {label!r}"
                )
        for parts, pname in self.identities:
            if pname not in names:
                raise CatalogFormatError(f"identity resolves to unknown piece {pname!r}")

    def piece(self, name: str) -> VirtualPiece:
        for p in self.pieces:
            if p.name == name:
                return p
        raise KeyError(f"no catalog piece {name!r}")

    def capping_piece(self, label_name: str) -> VirtualPiece:
        for label, pname in self.b_sigma:
            if label == label_name:
                return self.piece(pname)
        raise MissingBSigma(f"no capping piece for boundary label {label_name!r}")

    def with_b_sigma(self, label_name: str, piece_name: str) -> "Catalog":
        entries = tuple((lbl, piece_name if lbl == label_name else nm)
                        for lbl, nm in self.b_sigma)
        if label_name not in {lbl for lbl, _ in self.b_sigma}:
            entries += ((label_name, piece_name),)
        return replace(self, b_sigma=entries)

    def resolve(self, parts: tuple[str, ...]) -> VirtualPiece | None:
        """Match a glued piece's part multiset against declared identities."""
        key = tuple(sorted(parts))
        for declared, name in self.identities:
            if tuple(sorted(declared)) == key:
                return self.piece(name)
        return None


def close_up(M: VirtualPiece, in_labels, out_labels, catalog: Catalog) -> VirtualPiece:
    """Cap a cobordism-style piece into a closed manifold.

    Takes l parallel copies of M, caps each in-boundary component with its
    catalog piece and each out-boundary component with the reversed catalog
    piece. With no boundary this is just l disjoint copies of M. When the
    resulting part multiset matches a declared identity the catalog entry is
    returned (with its attributes); its chi is cross-checked against the
    computed value.
    """
    if M.dim != catalog.dim:
        raise DimensionMismatch(f"piece dimension {M.dim} vs catalog {catalog.dim}")
    in_names = [lbl.name if isinstance(lbl, BoundaryLabel) else str(lbl) for lbl in in_labels]
    out_names = [lbl.name if isinstance(lbl, BoundaryLabel) else str(lbl) for lbl in out_labels]
    declared = sorted(in_names + out_names)
    actual = sorted(lbl.name for lbl in M.boundary)
    if declared != actual:
        raise LabelMismatch(f"in/out split {declared} does not cover boundary {actual}")

    l = catalog.l
    chi = l * M.chi
    sigma = l * M.sigma
    parts = list(M.parts) * l
    label_chi = {lbl.name: lbl.chi for lbl in M.boundary}
    for name in in_names:
        B = catalog.capping_piece(name)
        chi += B.chi - l * label_chi[name]
        sigma += B.sigma
        parts.extend(B.parts)
    for name in out_names:
        B = catalog.capping_piece(name)
        chi += B.chi - l * label_chi[name]
        sigma -= B.sigma
        parts.extend(B.parts)

    recipe = (f"close_up({M.recipe or '?'}; in={in_names}; out={out_names}; l={l})")
    resolved = catalog.resolve(tuple(parts))
    if resolved is not None:
        if resolved.chi != chi:
            raise CatalogFormatError(
                f"identity for {resolved.name!r} has chi {resolved.chi}, computed {chi}"
            )
        return replace(resolved, recipe=recipe)
    return VirtualPiece(M.dim, chi, sigma, (), (), recipe, "", tuple(sorted(parts)))


def lemma_relation_check(X1: VirtualPiece, X2: VirtualPiece, X3: VirtualPiece,
                         invariant: str = "chi") -> bool:
    """Two-way gluing relation for three pieces with matching boundaries.

    Compares the invariant total of (X1 glued to reversed X2) plus (X2 glued
    to X3) against (X1 glued to X3) plus the double of X2; the boundaries of
    the three pieces must share one label multiset.
    """
    if invariant not in ("chi", "sigma"):
        raise ValueError(f"unknown invariant {invariant!r}")
    lhs1 = glue(X1, reverse(X2), match_all_by_name(X1, reverse(X2)))
    lhs2 = glue(X2, X3, match_all_by_name(X2, X3))
    rhs1 = glue(X1, X3, match_all_by_name(X1, X3))
    rhs2 = double(X2)
    pick = (lambda p: p.chi) if invariant == "chi" else (lambda p: p.sigma)
    return pick(lhs1) + pick(lhs2) == pick(rhs1) + pick(rhs2)


# -- shipped catalogs ------------------------------------------------------------

def dim2_catalog() -> Catalog:
    """Disk-capped dimension-2 catalog (the circle bounds, l = 1)."""
    disk = piece(2, 1, boundary=("S1",), name="D2")
    cyl = piece(2, 0, boundary=("S1", "S1"), name="cylinder")
    pants = piece(2, -1, boundary=("S1", "S1", "S1"), name="pants")
    sphere = piece(2, 2, name="S2")
    torus = piece(2, 0, name="T2")
    return Catalog(
        dim=2,
        l=1,
        pieces=(disk, cyl, pants, sphere, torus),
        b_sigma=(("S1", "D2"),),
        identities=(
            (("D2", "D2"), "S2"),
            (("D2", "D2", "cylinder"), "S2"),
        ),
    )


def dim4_catalog() -> Catalog:
    """Dimension-4 catalog: disks, spheres, and the projective plane of
    signature one; the 3-sphere bounds the 4-disk (l = 1)."""
    d4 = piece(4, 1, boundary=("S3",), name="D4")
    s4 = piece(4, 2, name="S4")
    cp2 = piece(4, 3, sigma=1, name="CP2")
    cp2_minus = piece(4, 2, sigma=1, boundary=("S3",), name="CP2_minus_D4")
    return Catalog(
        dim=4,
        l=1,
        pieces=(d4, s4, cp2, cp2_minus),
        b_sigma=(("S3", "D4"),),
        identities=(
            (("D4", "D4"), "S4"),
            (("CP2_minus_D4", "D4"), "CP2"),
        ),
    )


def dim8_catalog() -> Catalog:
    """Dimension-8 demo catalog with Pontryagin-number attributes.

    The 7-sphere bounds both the 8-disk and the complement of an open
    8-disk in the complex projective 4-space, which is what makes the
    capping choice visible to attribute-valued invariants.
    """
    d8 = piece(8, 1, boundary=("S7",), name="D8")
    s8 = piece(8, 2, name="S8", attributes={"p2": 0})
    cp4 = piece(8, 5, name="CP4", attributes={"p2": 10})
    cp4_minus = piece(8, 4, boundary=("S7",), name="CP4_minus_D8")
    return Catalog(
        dim=8,
        l=1,
        pieces=(d8, s8, cp4, cp4_minus),
        b_sigma=(("S7", "D8"),),
        identities=(
            (("D8", "D8"), "S8"),
            (("CP4_minus_D8", "D8"), "CP4"),
        ),
    )


DEFAULT_CATALOGS = {2: dim2_catalog, 4: dim4_catalog, 8: dim8_catalog}


# -- catalog file format ----------------------------------------------------------

_CATALOG_FIELDS = {"dim", "l", "pieces", "b_sigma", "identities"}
_PIECE_FIELDS = {"name", "chi", "sigma", "boundary", "attributes"}


def catalog_to_json(catalog: Catalog) -> str:
    doc = {
        "dim": catalog.dim,
        "l": catalog.l,
        "pieces": [
            {
                "name": p.name,
                "chi": p.chi,
                "sigma": p.sigma,
                "boundary": [
                    lbl.name if lbl.orientation == 1 else "-" + lbl.name
                    for lbl in p.boundary
                ],
                "attributes": {k: str(v) for k, v in p.attributes},
            }
            for p in catalog.pieces
        ],
        "b_sigma": dict(catalog.b_sigma),
        "identities": [
            {"pieces": list(parts), "equals": name} for parts, name in catalog.identities
        ],
    }
    return json.dumps(doc, indent=2)


def catalog_from_json(text: str) -> Catalog:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise CatalogFormatError("top-level document must be an object")
    unknown = set(doc) - _CATALOG_FIELDS
    if unknown:
        raise CatalogFormatError(f"unknown fields: {sorted(unknown)}")
    try:
        pieces = []
        for entry in doc["pieces"]:
            bad = set(entry) - _PIECE_FIELDS
            if bad:
                raise CatalogFormatError(f"unknown piece fields: {sorted(bad)}")
            pieces.append(piece(
                doc["dim"],
                entry["chi"],
                sigma=entry.get("sigma", 0),
                boundary=tuple(entry.get("boundary", ())),
                name=entry["name"],
                attributes={k: Fraction(v) for k, v in entry.get("attributes", {}).items()},
            ))
        identities = tuple(
            (tuple(item["pieces"]), item["equals"]) for item in doc.get("identities", ())
        )
        return Catalog(
            dim=doc["dim"],
            l=doc["l"],
            pieces=tuple(pieces),
            b_sigma=tuple(doc.get("b_sigma", {}).items()),
            identities=identities,
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, CatalogFormatError):
            raise
        raise CatalogFormatError(f"malformed catalog: {exc}") from exc
