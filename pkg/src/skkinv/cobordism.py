"""Cobordism categories of dimensions 1 and 2 as words in generators.

A word is an ordered list of layers, each a list of generators applied side
by side; the bottom layer is applied first. Dimension-2 generators are the
surface pieces id, swap, cap, cup, pants, copants; dimension-1 generators
are pid, acap, acup on finite point sets.

Equivalence of words is decided through a normal form: connected components
are traced with union-find through the layers, and each dimension-2
component is classified by (genus, attached in-circles, attached
out-circles), which is complete by the classification of compact oriented
surfaces. Boundary circles are tracked positionally; reorderings are
explicit swap layers.

Grammar (whitespace-insensitive):
    word  := layer (";" layer)*
    layer := gen ("|" gen)*
    gen   := id | swap | cap | cup | pants | copants   -- dimension 2
           | pid | acap | acup                          -- dimension 1
"""

from __future__ import annotations

from dataclasses import dataclass


class WordSyntaxError(ValueError):
    """Word text violates the grammar; carries a token position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"at character {position}: {message}")
        self.position = position


class ArityMismatch(ValueError):
    """Layer or composition arities do not line up."""


class WrongDimension(ValueError):
    """Word has the wrong dimension for the operation."""


class InternalInvariantViolation(RuntimeError):
    """Component classification produced an impossible genus."""


# generator -> (dimension, in-arity, out-arity)
GENERATORS = {
    "id": (2, 1, 1),
    "swap": (2, 2, 2),
    "cap": (2, 0, 1),
    "cup": (2, 1, 0),
    "pants": (2, 2, 1),
    "copants": (2, 1, 2),
    "pid": (1, 1, 1),
    "acap": (1, 0, 2),
    "acup": (1, 2, 0),
}

# contribution of each dimension-2 generator to the Euler characteristic
CHI_2 = {"id": 0, "swap": 0, "cap": 1, "cup": 1, "pants": -1, "copants": -1}


def _layer_arity(layer) -> tuple[int, int]:
    ins = sum(GENERATORS[g][1] for g in layer)
    outs = sum(GENERATORS[g][2] for g in layer)
    return ins, outs


@dataclass(frozen=True)
class CobordismWord:
    """Arity-checked word; the empty word is the identity on nothing."""

    dim: int
    layers: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        if self.dim not in (1, 2):
            raise ValueError(f"dimension {self.dim} not supported")
        prev_out = None
        for layer in self.layers:
            for g in layer:
                if g not in GENERATORS:
                    raise ValueError(f"unknown generator {g!r}")
                if GENERATORS[g][0] != self.dim:
                    raise WrongDimension(f"generator {g!r} lives in dimension {GENERATORS[g][0]}")
            ins, outs = _layer_arity(layer)
            if prev_out is not None and ins != prev_out:
                raise ArityMismatch(f"layer expects {ins} inputs but receives {prev_out}")
            prev_out = outs

    @property
    def in_arity(self) -> int:
        return _layer_arity(self.layers[0])[0] if self.layers else 0

    @property
    def out_arity(self) -> int:
        return _layer_arity(self.layers[-1])[1] if self.layers else 0

    def generator_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for layer in self.layers:
            for g in layer:
                counts[g] = counts.get(g, 0) + 1
        return counts

    def text(self) -> str:
        return " ; ".join(" | ".join(layer) for layer in self.layers)


def parse_word(text: str, dim: int = 2) -> CobordismWord:
    """Parse the layer DSL; raises WordSyntaxError with a character position."""
    layers = []
    offset = 0
    for chunk in text.split(";"):
        gens = []
        tok_off = offset
        for token in chunk.split("|"):
            name = token.strip()
            at = tok_off + (token.index(name) if name else 0)
            if not name:
                raise WordSyntaxError("empty generator", at)
            if name not in GENERATORS:
                raise WordSyntaxError(f"unknown generator {name!r}", at)
            if GENERATORS[name][0] != dim:
                raise WordSyntaxError(f"generator {name!r} is not dimension {dim}", at)
            gens.append(name)
            tok_off += len(token) + 1
        layers.append(tuple(gens))
        offset += len(chunk) + 1
    return CobordismWord(dim, tuple(layers))


def empty_word(dim: int = 2) -> CobordismWord:
    return CobordismWord(dim, ())


def identity_word(arity: int, dim: int = 2) -> CobordismWord:
    gen = "id" if dim == 2 else "pid"
    if arity == 0:
        return empty_word(dim)
    return CobordismWord(dim, ((gen,) * arity,))


def compose(M: CobordismWord, N: CobordismWord) -> CobordismWord:
    """Glue M's out-boundary to N's in-boundary (M applied first)."""
    if M.dim != N.dim:
        raise WrongDimension("cannot compose words of different dimensions")
    if M.out_arity != N.in_arity:
        raise ArityMismatch(f"out-arity {M.out_arity} does not match in-arity {N.in_arity}")
    return CobordismWord(M.dim, M.layers + N.layers)


def tensor(M: CobordismWord, N: CobordismWord) -> CobordismWord:
    """Side-by-side juxtaposition, padding the shorter word with identity layers."""
    if M.dim != N.dim:
        raise WrongDimension("cannot tensor words of different dimensions")
    gen = "id" if M.dim == 2 else "pid"
    mlays, nlays = list(M.layers), list(N.layers)
    while len(mlays) < len(nlays):
        mlays.append((gen,) * M.out_arity)
    while len(nlays) < len(mlays):
        nlays.append((gen,) * N.out_arity)
    layers = tuple(a + b for a, b in zip(mlays, nlays))
    return CobordismWord(M.dim, layers)


@dataclass(frozen=True)
class ComponentClass:
    """One connected piece: genus (None in dimension 1) and its boundary positions."""

    genus: int | None
    in_positions: tuple[int, ...]
    out_positions: tuple[int, ...]

    @property
    def is_closed(self) -> bool:
        return not self.in_positions and not self.out_positions


@dataclass(frozen=True)
class CobordismClass:
    """Normal form: classified components with positional boundary data."""

    dim: int
    in_arity: int
    out_arity: int
    components: tuple[ComponentClass, ...]

    def closed_genera(self) -> tuple[int, ...]:
        return tuple(sorted(c.genus for c in self.components if c.is_closed))

    @property
    def arc_count(self) -> int:
        if self.dim != 1:
            raise WrongDimension("arc counts only exist in dimension 1")
        return sum(1 for c in self.components if c.in_positions or c.out_positions)

    @property
    def circle_count(self) -> int:
        if self.dim != 1:
            raise WrongDimension("circle counts only exist in dimension 1")
        return sum(1 for c in self.components if c.is_closed)

    def total_chi(self) -> int:
        if self.dim == 1:
            return self.arc_count
        return sum(2 - 2 * c.genus - len(c.in_positions) - len(c.out_positions)
                   for c in self.components)


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def normal_form(M: CobordismWord) -> CobordismClass:
    """Classify the word's connected components.

    Wires (boundary positions between layers) and generator patches are
    merged with union-find; per component the Euler characteristic comes
    from generator counts and the genus from chi = 2 - 2g - (boundary
    circles). A swap is two disjoint strands, not a connected patch.
    """
    uf = _UnionFind()
    patch_gen: dict[tuple, str] = {}

    for li, layer in enumerate(M.layers):
        in_pos = 0
        out_pos = 0
        for gi, g in enumerate(layer):
            _, n_in, n_out = GENERATORS[g]
            ins = [("w", li, in_pos + k) for k in range(n_in)]
            outs = [("w", li + 1, out_pos + k) for k in range(n_out)]
            if g in ("id", "pid"):
                uf.union(ins[0], outs[0])
            elif g == "swap":
                uf.union(ins[0], outs[1])
                uf.union(ins[1], outs[0])
            else:
                patch = ("p", li, gi)
                patch_gen[patch] = g
                for node in ins + outs:
                    uf.union(patch, node)
            in_pos += n_in
            out_pos += n_out

    comp_counts: dict = {}
    comp_ins: dict = {}
    comp_outs: dict = {}

    def bucket(d, key):
        return d.setdefault(key, [])

    for patch, g in patch_gen.items():
        root = uf.find(patch)
        comp_counts.setdefault(root, {})
        comp_counts[root][g] = comp_counts[root].get(g, 0) + 1
    n_layers = len(M.layers)
    for p in range(M.in_arity):
        bucket(comp_ins, uf.find(("w", 0, p))).append(p)
    for p in range(M.out_arity):
        bucket(comp_outs, uf.find(("w", n_layers, p))).append(p)

    roots = set(comp_counts) | set(comp_ins) | set(comp_outs)
    components = []
    for root in roots:
        cnt = comp_counts.get(root, {})
        ins = tuple(sorted(comp_ins.get(root, [])))
        outs = tuple(sorted(comp_outs.get(root, [])))
        if M.dim == 2:
            chi = sum(CHI_2[g] * n for g, n in cnt.items())
            two_g = 2 - chi - len(ins) - len(outs)
            if two_g < 0 or two_g % 2 != 0:
                raise InternalInvariantViolation(
                    f"component chi {chi} with boundary {len(ins)}+{len(outs)}"
                )
            components.append(ComponentClass(two_g // 2, ins, outs))
        else:
            endpoints = len(ins) + len(outs)
            if endpoints not in (0, 2):
                raise InternalInvariantViolation(f"1d component with {endpoints} endpoints")
            components.append(ComponentClass(None, ins, outs))
    components.sort(key=lambda c: (c.in_positions, c.out_positions,
                                   -1 if c.genus is None else c.genus))
    return CobordismClass(M.dim, M.in_arity, M.out_arity, tuple(components))


def equivalent(M: CobordismWord, N: CobordismWord) -> bool:
    """Equality of normal forms, including positional boundary assignment."""
    if M.dim != N.dim:
        raise WrongDimension("cannot compare words of different dimensions")
    if M.in_arity != N.in_arity or M.out_arity != N.out_arity:
        raise ArityMismatch("boundary arities differ")
    return normal_form(M) == normal_form(N)


def chi_from_generators(M: CobordismWord) -> int:
    """Euler characteristic of a dimension-2 word from generator counts."""
    if M.dim != 2:
        raise WrongDimension("generator chi formula is for dimension 2")
    return sum(CHI_2[g] * n for g, n in M.generator_counts().items())


# -- seeded samplers -----------------------------------------------------------

_GENS_BY_IN = {
    2: {0: ("cap",), 1: ("id", "cup", "copants"), 2: ("swap", "pants")},
    1: {0: ("acap",), 1: ("pid",), 2: ("acup",)},
}


def random_word(rng, dim: int = 2, n_layers: int | None = None,
                start_arity: int | None = None) -> CobordismWord:
    """Seeded random word; arbitrary boundary arities."""
    table = _GENS_BY_IN[dim]
    cur = rng.randrange(0, 4) if start_arity is None else start_arity
    n_layers = rng.randrange(1, 6) if n_layers is None else n_layers
    layers = []
    for _ in range(n_layers):
        layer = []
        rem = cur
        while rem > 0:
            if rem >= 2 and rng.random() < 0.4:
                g = rng.choice(table[2])
            else:
                g = rng.choice(table[1])
            layer.append(g)
            rem -= GENERATORS[g][1]
        while rng.random() < 0.25:
            layer.append(rng.choice(table[0]))
        if not layer:
            layer.append(rng.choice(table[0]))
        cur = sum(GENERATORS[g][2] for g in layer)
        layers.append(tuple(layer))
    return CobordismWord(dim, tuple(layers))


def random_word_with_arities(rng, in_arity: int, out_arity: int) -> CobordismWord:
    """Seeded random dimension-2 word with prescribed boundary arities."""
    w = random_word(rng, dim=2, start_arity=in_arity)
    layers = list(w.layers)
    cur = w.out_arity
    while cur > out_arity:
        layers.append(("pants",) + ("id",) * (cur - 2) if cur >= 2 else ("cup",))
        cur -= 1
    while cur < out_arity:
        layers.append(("copants",) + ("id",) * (cur - 1) if cur >= 1 else ("cap",))
        cur += 1
    return CobordismWord(2, tuple(layers))


def random_closed_word(rng, dim: int = 2) -> CobordismWord:
    """Seeded random word from nothing to nothing."""
    w = random_word(rng, dim=dim, start_arity=0)
    merge = "pants" if dim == 2 else "acup"
    idg = "id" if dim == 2 else "pid"
    layers = list(w.layers)
    cur = w.out_arity
    while cur > 1:
        layers.append((merge,) + (idg,) * (cur - 2))
        cur -= 1 if dim == 2 else 2
    if cur == 1:
        if dim == 1:
            raise InternalInvariantViolation("odd point count cannot close in dimension 1")
        layers.append(("cup",))
    return CobordismWord(dim, tuple(layers))


def boundary_width(M: CobordismWord, i: int) -> int:
    """Wire count at boundary i (0 = in-boundary, len(layers) = out-boundary)."""
    if i == 0:
        return M.in_arity
    return _layer_arity(M.layers[i - 1])[1]


def equivalent_rewrite(rng, M: CobordismWord) -> CobordismWord:
    """Rewrite the word without changing its class.

    Either inserts an identity layer at a random boundary or splits a layer
    in two, sliding a suffix of its generators past identity wires.
    """
    idg = "id" if M.dim == 2 else "pid"
    layers = list(M.layers)
    if not layers or rng.random() < 0.5:
        i = rng.randrange(0, len(layers) + 1)
        width = boundary_width(M, i)
        layers.insert(i, (idg,) * width)
        return CobordismWord(M.dim, tuple(layers))
    li = rng.randrange(0, len(layers))
    layer = layers[li]
    if len(layer) < 2:
        layers.insert(li, (idg,) * boundary_width(M, li))
        return CobordismWord(M.dim, tuple(layers))
    j = rng.randrange(1, len(layer))
    head, tail = layer[:j], layer[j:]
    head_out = sum(GENERATORS[g][2] for g in head)
    tail_in = sum(GENERATORS[g][1] for g in tail)
    first = head + (idg,) * tail_in
    second = (idg,) * head_out + tail
    layers[li:li + 1] = [first, second]
    return CobordismWord(M.dim, tuple(layers))


# -- canonical words -----------------------------------------------------------

def sphere_word() -> CobordismWord:
    return parse_word("cap ; cup")


def torus_word() -> CobordismWord:
    return parse_word("cap ; copants ; pants ; cup")


def closed_genus_word(g: int) -> CobordismWord:
    """Closed connected word of genus g: cap ; (copants ; pants)^g ; cup."""
    layers = [("cap",)] + [("copants",), ("pants",)] * g + [("cup",)]
    return CobordismWord(2, tuple(layers))
