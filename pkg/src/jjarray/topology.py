"""Plaquette-array topologies: validation, document parsing, built-ins, symmetry.

A topology is a purely combinatorial object: a set of plaquettes (closed
superconducting loops, one Josephson junction per side) and a list of
shared-junction links between pairs of plaquettes.  Geometry and material
parameters live in :mod:`jjarray.physical`; the linear algebra derived from a
topology lives in :mod:`jjarray.coupling`.

Conventions
-----------
* Plaquette ids are arbitrary unique positive integers.  Internally they are
  canonicalised to indices ``0..N-1`` in increasing id order.
* ``boundary_count(p) = junction_count(p) - sum of shared counts of p`` is the
  number of junctions of ``p`` not shared with any neighbour.
* A plaquette with an odd number of pi-junctions is a pi-ring; only the parity
  enters the electrical model.
* In the built-in ``triangle-stack-4`` and ``spin-star-5`` families the
  central plaquette carries the highest id (coupled row last).

Topologies are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property

from .errors import LimitError, ParseError, SingularityError, ValidationError

#: Exhaustive automorphism search is restricted to arrays of at most this size.
MAX_SYMMETRY_PLAQUETTES = 12


def _require_int(value, what: str) -> int:
    # bool is an int subclass; reject it explicitly
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{what} must be an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class Plaquette:
    """One superconducting loop with ``junction_count`` junctions in its sides."""

    id: int
    junction_count: int
    pi_junction_count: int = 0

    def __post_init__(self) -> None:
        _require_int(self.id, "plaquette id")
        _require_int(self.junction_count, "junction count")
        _require_int(self.pi_junction_count, "pi-junction count")
        if self.id < 1:
            raise ValidationError(f"plaquette id must be positive, got {self.id}")
        if self.junction_count < 1:
            raise ValidationError(
                f"plaquette {self.id}: junction count must be >= 1, got {self.junction_count}"
            )
        if not 0 <= self.pi_junction_count <= self.junction_count:
            raise ValidationError(
                f"plaquette {self.id}: pi-junction count {self.pi_junction_count} "
                f"outside 0..{self.junction_count}"
            )

    @property
    def pi_parity(self) -> int:
        """1 for a pi-ring (odd pi-junction count), else 0."""
        return self.pi_junction_count % 2


@dataclass(frozen=True)
class SharedJunctionLink:
    """``count`` junctions shared between plaquettes ``a`` and ``b``."""

    a: int
    b: int
    count: int = 1

    def __post_init__(self) -> None:
        _require_int(self.a, "link endpoint a")
        _require_int(self.b, "link endpoint b")
        _require_int(self.count, "link count")
        if self.a == self.b:
            raise ValidationError(f"link endpoints must differ, got {self.a}--{self.b}")
        if self.a < 1 or self.b < 1:
            raise ValidationError(f"link endpoints must be positive ids: {self.a}--{self.b}")
        if self.count < 1:
            raise ValidationError(
                f"link {self.a}--{self.b}: shared count must be >= 1, got {self.count}"
            )

    def normalized(self) -> "SharedJunctionLink":
        if self.a <= self.b:
            return self
        return SharedJunctionLink(self.b, self.a, self.count)


@dataclass(frozen=True)
class ArrayTopology:
    """A validated, canonically ordered plaquette array.

    Construction sorts plaquettes by id and links by endpoint pair, then
    checks all invariants.  Raises :class:`ValidationError` for combinatorial
    violations and :class:`SingularityError` when some connected component has
    no boundary junction at all (the flux-quantisation system would be
    singular).
    """

    name: str
    plaquettes: tuple[Plaquette, ...]
    links: tuple[SharedJunctionLink, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        plaquettes = tuple(sorted(self.plaquettes, key=lambda p: p.id))
        links = tuple(sorted((l.normalized() for l in self.links), key=lambda l: (l.a, l.b)))
        object.__setattr__(self, "plaquettes", plaquettes)
        object.__setattr__(self, "links", links)
        self._validate()

    def _validate(self) -> None:
        if not self.plaquettes:
            raise ValidationError("topology needs at least one plaquette")
        ids = [p.id for p in self.plaquettes]
        if len(set(ids)) != len(ids):
            dupes = sorted({i for i in ids if ids.count(i) > 1})
            raise ValidationError(f"duplicate plaquette ids: {dupes}")
        id_set = set(ids)
        seen_pairs = set()
        for link in self.links:
            if link.a not in id_set or link.b not in id_set:
                raise ValidationError(f"link {link.a}--{link.b} references unknown plaquette")
            if (link.a, link.b) in seen_pairs:
                raise ValidationError(f"duplicate link {link.a}--{link.b}")
            seen_pairs.add((link.a, link.b))
        for p in self.plaquettes:
            if self.shared_total(p.id) > p.junction_count:
                raise ValidationError(
                    f"plaquette {p.id}: shared junctions ({self.shared_total(p.id)}) "
                    f"exceed junction count ({p.junction_count})"
                )
        self._check_components_have_boundary()

    def _check_components_have_boundary(self) -> None:
        # A connected component in which every plaquette has boundary_count 0
        # makes the coupling matrix a pure graph Laplacian block: singular.
        unvisited = {p.id for p in self.plaquettes}
        neighbours: dict[int, list[int]] = {p.id: [] for p in self.plaquettes}
        for link in self.links:
            neighbours[link.a].append(link.b)
            neighbours[link.b].append(link.a)
        while unvisited:
            start = unvisited.pop()
            stack, component = [start], {start}
            while stack:
                for nxt in neighbours[stack.pop()]:
                    if nxt in unvisited:
                        unvisited.remove(nxt)
                        component.add(nxt)
                        stack.append(nxt)
            if all(self.boundary_count(pid) == 0 for pid in component):
                raise SingularityError(
                    "component "
                    + "{" + ",".join(str(i) for i in sorted(component)) + "}"
                    + " has no boundary junctions; coupling matrix would be singular"
                )

    # -- canonical index space -------------------------------------------

    @property
    def n_plaquettes(self) -> int:
        return len(self.plaquettes)

    @cached_property
    def ids(self) -> tuple[int, ...]:
        return tuple(p.id for p in self.plaquettes)

    @cached_property
    def _index(self) -> dict[int, int]:
        return {p.id: k for k, p in enumerate(self.plaquettes)}

    def index_of(self, plaquette_id: int) -> int:
        try:
            return self._index[plaquette_id]
        except KeyError:
            raise ValidationError(f"unknown plaquette id {plaquette_id}") from None

    @cached_property
    def junction_counts(self) -> tuple[int, ...]:
        return tuple(p.junction_count for p in self.plaquettes)

    @cached_property
    def pi_parity(self) -> tuple[int, ...]:
        return tuple(p.pi_parity for p in self.plaquettes)

    @cached_property
    def shared_counts(self) -> dict[tuple[int, int], int]:
        """Shared-junction count per internal index pair (i < j)."""
        out: dict[tuple[int, int], int] = {}
        for link in self.links:
            i, j = sorted((self.index_of(link.a), self.index_of(link.b)))
            out[(i, j)] = link.count
        return out

    def shared_total(self, plaquette_id: int) -> int:
        return sum(l.count for l in self.links if plaquette_id in (l.a, l.b))

    def boundary_count(self, plaquette_id: int) -> int:
        p = self.plaquettes[self.index_of(plaquette_id)]
        return p.junction_count - self.shared_total(plaquette_id)

    @cached_property
    def boundary_counts(self) -> tuple[int, ...]:
        return tuple(self.boundary_count(p.id) for p in self.plaquettes)


# ---------------------------------------------------------------------------
# Topology documents (JSON)
# ---------------------------------------------------------------------------

_PLAQUETTE_KEYS = {"id", "junctions", "pi_junctions"}
_LINK_KEYS = {"a", "b", "count"}
_TOP_KEYS = {"name", "plaquettes", "shared"}


def topology_from_document(document) -> ArrayTopology:
    """Build a validated topology from a decoded document object.

    The document is a mapping with keys ``name`` (string), ``plaquettes``
    (list of ``{"id", "junctions", "pi_junctions"}``; ``pi_junctions``
    defaults to 0) and optional ``shared`` (list of ``{"a", "b", "count"}``;
    ``count`` defaults to 1).  Unknown keys are rejected.
    """
    if not isinstance(document, dict):
        raise ValidationError("topology document must be an object")
    unknown = set(document) - _TOP_KEYS
    if unknown:
        raise ValidationError(f"unknown top-level keys: {sorted(unknown)}")
    if "name" not in document or "plaquettes" not in document:
        raise ValidationError("topology document needs 'name' and 'plaquettes'")
    name = document["name"]
    if not isinstance(name, str) or not name:
        raise ValidationError("'name' must be a non-empty string")
    raw_plaquettes = document["plaquettes"]
    if not isinstance(raw_plaquettes, list):
        raise ValidationError("'plaquettes' must be a list")
    plaquettes = []
    for entry in raw_plaquettes:
        if not isinstance(entry, dict):
            raise ValidationError("each plaquette entry must be an object")
        unknown = set(entry) - _PLAQUETTE_KEYS
        if unknown:
            raise ValidationError(f"unknown plaquette keys: {sorted(unknown)}")
        if "id" not in entry or "junctions" not in entry:
            raise ValidationError("plaquette entries need 'id' and 'junctions'")
        plaquettes.append(
            Plaquette(entry["id"], entry["junctions"], entry.get("pi_junctions", 0))
        )
    links = []
    for entry in document.get("shared", []):
        if not isinstance(entry, dict):
            raise ValidationError("each shared entry must be an object")
        unknown = set(entry) - _LINK_KEYS
        if unknown:
            raise ValidationError(f"unknown shared-link keys: {sorted(unknown)}")
        if "a" not in entry or "b" not in entry:
            raise ValidationError("shared entries need 'a' and 'b'")
        links.append(SharedJunctionLink(entry["a"], entry["b"], entry.get("count", 1)))
    return ArrayTopology(name, tuple(plaquettes), tuple(links))


def parse_topology(text: str) -> ArrayTopology:
    """Parse a UTF-8 topology document; see :func:`topology_from_document`."""
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed topology document: {exc}") from exc
    return topology_from_document(document)


def topology_document(topology: ArrayTopology) -> dict:
    """Canonical document object for ``topology`` (inverse of parsing)."""
    return {
        "name": topology.name,
        "plaquettes": [
            {"id": p.id, "junctions": p.junction_count, "pi_junctions": p.pi_junction_count}
            for p in topology.plaquettes
        ],
        "shared": [{"a": l.a, "b": l.b, "count": l.count} for l in topology.links],
    }


def serialize_topology(topology: ArrayTopology) -> str:
    """Canonical text form; ``parse_topology(serialize_topology(t)) == t``."""
    return json.dumps(topology_document(topology), indent=2) + "\n"


# ---------------------------------------------------------------------------
# Built-in topologies
# ---------------------------------------------------------------------------


def _triangle_stack(name: str, pi: int) -> ArrayTopology:
    # Three outer triangles around one central triangle that shares one side
    # with each of them; the central plaquette is id 4 (coupled row last).
    plaquettes = tuple(Plaquette(i, 3, pi) for i in (1, 2, 3, 4))
    links = tuple(SharedJunctionLink(i, 4, 1) for i in (1, 2, 3))
    return ArrayTopology(name, plaquettes, links)


def _square_grid(name: str, pi_counts: tuple[int, int, int, int]) -> ArrayTopology:
    # 2x2 grid of 4-junction squares: 1 2 / 3 4, edge-sharing neighbours only.
    plaquettes = tuple(Plaquette(i + 1, 4, pi_counts[i]) for i in range(4))
    links = tuple(SharedJunctionLink(a, b, 1) for a, b in ((1, 2), (1, 3), (2, 4), (3, 4)))
    return ArrayTopology(name, plaquettes, links)


def _spin_star(name: str, pi: int) -> ArrayTopology:
    # Central 4-junction square (id 5) with four corner squares attached at
    # vertices only: vertex contact shares no junction, so the link list is
    # empty and the coupling matrix is diagonal.  Edge-shared variants can be
    # written as explicit topology documents.
    plaquettes = tuple(Plaquette(i, 4, pi) for i in (1, 2, 3, 4, 5))
    return ArrayTopology(name, plaquettes, ())


_BUILTIN_FACTORIES = {
    "triangle-stack-4": lambda: _triangle_stack("triangle-stack-4", 0),
    "triangle-stack-4-pi": lambda: _triangle_stack("triangle-stack-4-pi", 1),
    "square-2x2": lambda: _square_grid("square-2x2", (0, 0, 0, 0)),
    # pi-rings on the main diagonal, an even pi-junction count off-diagonal
    "square-2x2-checkerboard-pi": lambda: _square_grid(
        "square-2x2-checkerboard-pi", (1, 2, 2, 1)
    ),
    "spin-star-5": lambda: _spin_star("spin-star-5", 0),
    "spin-star-5-pi": lambda: _spin_star("spin-star-5-pi", 1),
}

BUILTIN_NAMES: tuple[str, ...] = tuple(_BUILTIN_FACTORIES)


def builtin_topology(name: str) -> ArrayTopology:
    """Return one of the built-in arrays; raises ValidationError for unknown names."""
    try:
        factory = _BUILTIN_FACTORIES[name]
    except KeyError:
        known = ", ".join(BUILTIN_NAMES)
        raise ValidationError(f"unknown topology {name!r} (built-ins: {known})") from None
    return factory()


# ---------------------------------------------------------------------------
# Automorphism orbits
# ---------------------------------------------------------------------------


def automorphism_orbits(topology: ArrayTopology) -> tuple[tuple[int, ...], ...]:
    """Partition plaquette ids into equivalence classes under array symmetries.

    A symmetry is a permutation of plaquettes preserving junction counts,
    pi-parities and all shared-junction multiplicities.  The search is
    exhaustive (with signature pruning) and limited to
    ``MAX_SYMMETRY_PLAQUETTES`` plaquettes.
    """
    n = topology.n_plaquettes
    if n > MAX_SYMMETRY_PLAQUETTES:
        raise LimitError(
            f"symmetry search limited to {MAX_SYMMETRY_PLAQUETTES} plaquettes, got {n}"
        )
    shared = [[0] * n for _ in range(n)]
    for (i, j), count in topology.shared_counts.items():
        shared[i][j] = shared[j][i] = count
    signatures = [
        (
            topology.junction_counts[i],
            topology.pi_parity[i],
            tuple(sorted(c for c in shared[i] if c)),
        )
        for i in range(n)
    ]
    # Assign high-degree plaquettes first: their link constraints prune most.
    order = sorted(range(n), key=lambda i: (-sum(shared[i]), i))

    def mapping_exists(p: int, q: int) -> bool:
        assigned: dict[int, int] = {p: q}
        used = {q}

        def backtrack(k: int) -> bool:
            if k == n:
                return True
            i = order[k]
            if i in assigned:
                return backtrack(k + 1)
            for j in range(n):
                if j in used or signatures[i] != signatures[j]:
                    continue
                if any(shared[i][i2] != shared[j][j2] for i2, j2 in assigned.items()):
                    continue
                assigned[i] = j
                used.add(j)
                if backtrack(k + 1):
                    return True
                del assigned[i]
                used.remove(j)
            return False

        return backtrack(0)

    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p, q in itertools.combinations(range(n), 2):
        if find(p) == find(q) or signatures[p] != signatures[q]:
            continue
        if mapping_exists(p, q):
            parent[find(q)] = find(p)

    orbits: dict[int, list[int]] = {}
    for i in range(n):
        orbits.setdefault(find(i), []).append(topology.ids[i])
    return tuple(sorted(tuple(sorted(members)) for members in orbits.values()))
