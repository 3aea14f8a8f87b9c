"""Colored triple-point datasets and pseudo-cycle search.

A subset of triple points is a pseudo-cycle when its signed color chain is
a nonzero cycle of the quandle complex that does not bound.  Enumeration
is exhaustive over subsets (bitmask order, capped), with null-homology
verdicts memoized by the sign-normalized chain; the maximum disjoint
family is found by depth-first search with a best-bound prune.
"""

from dataclasses import dataclass
from typing import NamedTuple

from .chains import Chain, boundary_quandle, project_quandle
from .errors import EnumerationCapError, QuandleAxiomError, SchemaError, UnknownIdError
from .homology import is_null_homologous
from .quandle import Quandle

DEFAULT_POINT_CAP = 20


@dataclass(frozen=True)
class TriplePoint:
    """One signed, colored triple point: sign is +1 or -1 and colors are
    the three sheet colors (p, q, r) as quandle elements."""

    id: str
    sign: int
    colors: tuple[int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if not isinstance(self.id, str) or not self.id:
            raise ValueError(f"triple point id must be a nonempty string, got {self.id!r}")
        if self.sign not in (1, -1) or isinstance(self.sign, bool):
            raise ValueError(f"sign must be 1 or -1, got {self.sign!r}")
        if len(self.colors) != 3:
            raise ValueError(f"colors must be a triple, got {self.colors!r}")
        for c in self.colors:
            if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                raise ValueError(f"color {c!r} is not a nonnegative int")


@dataclass(frozen=True)
class TriplePointDataset:
    """A fixed quandle plus a list of triple points with unique ids."""

    quandle: Quandle
    points: tuple[TriplePoint, ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        by_id = {}
        for pt in self.points:
            if pt.id in by_id:
                raise ValueError(f"duplicate triple point id {pt.id!r}")
            by_id[pt.id] = pt
            for c in pt.colors:
                if c >= self.quandle.order:
                    raise ValueError(
                        f"color {c} of {pt.id!r} out of range for quandle "
                        f"of order {self.quandle.order}"
                    )
        object.__setattr__(self, "_by_id", by_id)

    def point(self, point_id):
        try:
            return self._by_id[point_id]
        except KeyError:
            raise UnknownIdError(f"no triple point with id {point_id!r}") from None

    def sorted_ids(self):
        return tuple(sorted(pt.id for pt in self.points))

    def to_json_dict(self):
        return {
            "quandle": {"kind": "table", "table": [list(r) for r in self.quandle.table]},
            "triple_points": [
                {"id": pt.id, "sign": pt.sign, "colors": list(pt.colors)}
                for pt in self.points
            ],
        }


def _expect_keys(obj, allowed, required, path):
    for key in obj:
        if key not in allowed:
            raise SchemaError(f"{path}.{key}" if path else key, "unknown field")
    for key in required:
        if key not in obj:
            raise SchemaError(f"{path}.{key}" if path else key, "missing field")


def quandle_from_json(obj, path="quandle"):
    """Parse {"kind": "dihedral", "order": n} or {"kind": "table", ...}."""
    if not isinstance(obj, dict):
        raise SchemaError(path, "must be an object")
    if "kind" not in obj:
        raise SchemaError(f"{path}.kind", "missing field")
    kind = obj["kind"]
    if kind == "dihedral":
        _expect_keys(obj, {"kind", "order"}, {"order"}, path)
        order = obj["order"]
        if not isinstance(order, int) or isinstance(order, bool) or order < 1:
            raise SchemaError(f"{path}.order", "must be a positive integer")
        return Quandle.dihedral(order)
    if kind == "table":
        _expect_keys(obj, {"kind", "table"}, {"table"}, path)
        table = obj["table"]
        if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
            raise SchemaError(f"{path}.table", "must be a list of rows")
        try:
            return Quandle.from_table(table)
        except (ValueError, QuandleAxiomError) as exc:
            raise SchemaError(f"{path}.table", str(exc))
    raise SchemaError(f"{path}.kind", f"unknown quandle kind {kind!r}")


def dataset_from_json(obj):
    """Strictly validate and build a dataset from its canonical JSON form.

    Unknown fields are rejected; every error names the offending field
    path, e.g. "triple_points[0].sign".
    """
    if not isinstance(obj, dict):
        raise SchemaError("", "dataset document must be a JSON object")
    _expect_keys(obj, {"quandle", "triple_points"}, {"quandle", "triple_points"}, "")
    quandle = quandle_from_json(obj["quandle"])
    tps = obj["triple_points"]
    if not isinstance(tps, list):
        raise SchemaError("triple_points", "must be a list")
    points = []
    seen = set()
    for i, entry in enumerate(tps):
        path = f"triple_points[{i}]"
        if not isinstance(entry, dict):
            raise SchemaError(path, "must be an object")
        _expect_keys(entry, {"id", "sign", "colors"}, {"id", "sign", "colors"}, path)
        pid = entry["id"]
        if not isinstance(pid, str) or not pid:
            raise SchemaError(f"{path}.id", "must be a nonempty string")
        if pid in seen:
            raise SchemaError(f"{path}.id", f"duplicate id {pid!r}")
        seen.add(pid)
        sign = entry["sign"]
        if isinstance(sign, bool) or sign not in (1, -1):
            raise SchemaError(f"{path}.sign", "must be exactly 1 or -1")
        colors = entry["colors"]
        if not isinstance(colors, list) or len(colors) != 3:
            raise SchemaError(f"{path}.colors", "must be a list of 3 integers")
        for j, c in enumerate(colors):
            if not isinstance(c, int) or isinstance(c, bool) or not 0 <= c < quandle.order:
                raise SchemaError(
                    f"{path}.colors[{j}]",
                    f"must be an integer in 0..{quandle.order - 1}",
                )
        points.append(TriplePoint(id=pid, sign=sign, colors=tuple(colors)))
    return TriplePointDataset(quandle=quandle, points=tuple(points))


def chain_of(subset, dataset):
    """The signed chain of a subset of triple points: sum of sign * colors.

    Colliding tuples combine; the subset is treated as a set of ids.
    """
    terms = []
    for pid in set(subset):
        pt = dataset.point(pid)
        terms.append((pt.colors, pt.sign))
    return Chain(3, terms)


def is_pseudo_cycle(subset, dataset):
    """True iff the subset's chain, viewed in the quandle complex, is a
    cycle that is not homologous to zero.

    Degenerate color triples are legal in datasets; they represent zero in
    the quandle complex, so the chain is projected before testing.  The
    zero chain is a cycle but bounds, hence is never a pseudo-cycle.
    """
    chain = project_quandle(chain_of(subset, dataset))
    if chain.is_zero():
        return False
    if not boundary_quandle(chain, dataset.quandle).is_zero():
        return False
    return not is_null_homologous(chain, dataset.quandle)


def _normalized_key(chain):
    # sign-normalize so c and -c share one memo entry: negate when the
    # lexicographically first term has a negative coefficient
    items = chain.items()
    if items and items[0][1] < 0:
        items = [(t, -c) for t, c in items]
    return tuple(items)


def enumerate_pseudo_cycles(dataset, cap=DEFAULT_POINT_CAP):
    """All nonempty pseudo-cycle subsets, in ascending bitmask order over
    the id-sorted point list.  Subsets are returned as sorted id tuples.
    """
    ids = dataset.sorted_ids()
    k = len(ids)
    if k > cap:
        raise EnumerationCapError(
            f"dataset has {k} triple points, enumeration cap is {cap}"
        )
    null_verdicts = {}
    found = []
    for mask in range(1, 1 << k):
        subset = tuple(ids[i] for i in range(k) if mask >> i & 1)
        chain = project_quandle(chain_of(subset, dataset))
        if chain.is_zero():
            continue
        if not boundary_quandle(chain, dataset.quandle).is_zero():
            continue
        key = _normalized_key(chain)
        if key not in null_verdicts:
            null_verdicts[key] = is_null_homologous(chain, dataset.quandle)
        if not null_verdicts[key]:
            found.append(subset)
    return found


class PackingResult(NamedTuple):
    count: int
    witness: tuple


def _pack_disjoint(ids, subsets):
    # include-first DFS over lexicographically sorted candidates with a
    # best-bound prune; the first maximal family found is the least one
    index = {pid: i for i, pid in enumerate(ids)}
    candidates = sorted(subsets)
    masks = [sum(1 << index[pid] for pid in subset) for subset in candidates]

    best = []
    chosen = []

    def dfs(i, used):
        nonlocal best
        if len(chosen) > len(best):
            best = chosen.copy()
        # bound: even taking every remaining candidate cannot strictly win
        if i == len(candidates) or len(chosen) + len(candidates) - i <= len(best):
            return
        if not masks[i] & used:
            chosen.append(candidates[i])
            dfs(i + 1, used | masks[i])
            chosen.pop()
        dfs(i + 1, used)

    dfs(0, 0)
    return PackingResult(count=len(best), witness=tuple(best))


def max_disjoint_packing(dataset, cap=DEFAULT_POINT_CAP):
    """Maximum cardinality of a family of pairwise disjoint pseudo-cycles,
    with the lexicographically least maximal family as witness.

    Covering every triple point is not required; the empty family is the
    witness when no pseudo-cycle exists.
    """
    return _pack_disjoint(
        dataset.sorted_ids(), enumerate_pseudo_cycles(dataset, cap=cap)
    )


@dataclass(frozen=True)
class PseudoCycleReport:
    """Full search output: every pseudo-cycle subset plus the two counts
    (distinct subsets, and the maximum disjoint family with witness)."""

    pseudo_cycles: tuple
    distinct_count: int
    max_disjoint_count: int
    witness_packing: tuple

    def __post_init__(self):
        if self.distinct_count != len(self.pseudo_cycles):
            raise ValueError("distinct_count must equal the number of pseudo-cycles")
        if self.max_disjoint_count != len(self.witness_packing):
            raise ValueError("max_disjoint_count must equal the witness size")
        listed = set(self.pseudo_cycles)
        used = set()
        for subset in self.witness_packing:
            if subset not in listed:
                raise ValueError(f"witness subset {subset!r} is not a pseudo-cycle")
            if used & set(subset):
                raise ValueError("witness subsets are not pairwise disjoint")
            used |= set(subset)

    def to_json_dict(self):
        return {
            "pseudo_cycles": [list(s) for s in self.pseudo_cycles],
            "distinct_count": self.distinct_count,
            "max_disjoint_count": self.max_disjoint_count,
            "witness_packing": [list(s) for s in self.witness_packing],
        }


def pseudo_cycle_report(dataset, cap=DEFAULT_POINT_CAP):
    subsets = enumerate_pseudo_cycles(dataset, cap=cap)
    packing = _pack_disjoint(dataset.sorted_ids(), subsets)
    return PseudoCycleReport(
        pseudo_cycles=tuple(subsets),
        distinct_count=len(subsets),
        max_disjoint_count=packing.count,
        witness_packing=packing.witness,
    )
