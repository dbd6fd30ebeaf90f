"""Collision degenerations of simple branched covers and their census.

When the last two branch points of a cover collide, the local picture is
decided by the final pair of transpositions: an equal pair (their product
is the identity), a disjoint pair (product a double transposition), or an
overlapping pair (product a 3-cycle).  No other case exists.  Equal pairs
are refined further by the orbit structure left after dropping them: one
orbit keeps a connected cover of lower genus, two orbits split the cover
into a pair of components joined at a point.

The census tallies these types over every class of tuples for one (k, b),
walking the same pruned tree as the raw enumeration and dividing the raw
tallies by k! at the end (relabeling acts freely for k >= 3, so each
class is hit exactly k! times and every tally divides exactly).
"""

from dataclasses import dataclass, field
from enum import Enum
from math import factorial
from multiprocessing import Pool

from .covers import (
    MonodromyTuple,
    TupleCensus,
    _advance,
    cover_genus,
    validate_cover_shape,
)
from .errors import InvariantViolation, ParameterError
from .perm import Transposition, compose, orbits, transposition_perm
from .tables import CLASS_DOUBLE, CLASS_TRIPLE, GroupTables, group_tables

PARALLEL_PREFIX_LENGTH = 2


class NodeType(Enum):
    """Local type of a colliding pair of branch points."""

    ONE = "1"
    TWO_TWO = "2,2"
    THREE = "3"


def classify_node(t1: Transposition, t2: Transposition) -> NodeType:
    """Type of the node formed when the branch points carrying ``t1`` and
    ``t2`` collide.

    >>> classify_node((1, 2), (1, 2))
    <NodeType.ONE: '1'>
    >>> classify_node((1, 2), (3, 4))
    <NodeType.TWO_TWO: '2,2'>
    >>> classify_node((1, 2), (2, 3))
    <NodeType.THREE: '3'>
    """
    shared = len(set(t1) & set(t2))
    if shared == 2:
        return NodeType.ONE
    if shared == 0:
        return NodeType.TWO_TWO
    return NodeType.THREE


@dataclass(frozen=True)
class CentralProfile:
    """Dropping the doubled pair leaves a connected cover of genus g - 1."""


@dataclass(frozen=True)
class SplitProfile:
    """Dropping the doubled pair splits the cover into two components.

    ``j`` is the smaller of the two orbit sizes, ``i`` the genus of the
    degree-j component and ``beta1`` its branch point count.  When the
    orbits tie in size the labeling is fixed by i <= g - i.
    """

    j: int
    i: int
    beta1: int


TypeOneProfile = CentralProfile | SplitProfile


def refine_type_one(t: MonodromyTuple) -> TypeOneProfile:
    """Refine an equal-pair collision by the orbits of the shorter tuple."""
    k, b = t.degree, t.length
    last2 = t.entries[-2:]
    if classify_node(*last2) is not NodeType.ONE:
        raise ParameterError(f"last two entries {last2} are not an equal pair")
    g = cover_genus(k, b)
    rest = t.entries[:-2]
    blocks = orbits([transposition_perm(k, e) for e in rest], k)
    if len(blocks) == 1:
        return CentralProfile()
    if len(blocks) != 2:
        raise InvariantViolation(
            f"{len(blocks)} orbits after dropping the pair; transitivity is broken: {t.entries}"
        )
    small, large = sorted(blocks, key=len)
    j = len(small)
    members = set(small)
    beta1 = sum(1 for e in rest if e[0] in members)
    i = _component_genus(j, beta1, g, k, b, t.entries)
    if 2 * j == k and g - i < i:
        i, beta1 = g - i, len(rest) - beta1
    return SplitProfile(j, i, beta1)


def _component_genus(
    j: int, beta1: int, g: int, k: int, b: int, witness
) -> int:
    num = beta1 - 2 * j + 2
    if num < 0 or num % 2:
        raise InvariantViolation(
            f"orbit of size {j} carries {beta1} branch points, "
            f"not a valid cover of the line: {witness}"
        )
    i = num // 2
    beta2 = (b - 2) - beta1
    if i > g or beta2 != 2 * (g - i) + 2 * (k - j) - 2:
        raise InvariantViolation(
            f"component genera {i}, {g - i} do not balance the branch counts: {witness}"
        )
    return i


def full_twist(t: MonodromyTuple) -> MonodromyTuple:
    """Monodromy of a full turn of the two colliding branch points around
    each other: both final entries are conjugated by their product.

    Fixes equal and disjoint pairs pointwise; on overlapping pairs it has
    order three.
    """
    k = t.degree
    x, y = t.entries[-2:]
    sigma = compose(transposition_perm(k, x), transposition_perm(k, y))

    def twist(e: Transposition) -> Transposition:
        a, b = sigma[e[0] - 1], sigma[e[1] - 1]
        return (a, b) if a < b else (b, a)

    return MonodromyTuple(k, t.entries[:-2] + (twist(x), twist(y)))


@dataclass(frozen=True)
class DegenerationCensus:
    """Class-level tallies of collision types for one (k, b).

    ``split_table`` maps (j, i) to the number of classes splitting into a
    degree-j genus-i component plus its complement.  ``rational_splits``
    counts the split classes with a genus-0 component (each once, even
    when both components are rational); those fibers smooth out after
    semistable reduction while the remaining ``singular`` classes do not.
    """

    k: int
    b: int
    g: int
    classes: int
    type_one: int
    type_two_two: int
    type_three: int
    split_table: dict[tuple[int, int], int] = field(compare=False)
    rational_splits: int = 0
    singular: int = 0

    def __post_init__(self):
        validate_cover_shape(self.k, self.b)
        if self.g != cover_genus(self.k, self.b):
            raise InvariantViolation(f"genus {self.g} wrong for ({self.k}, {self.b})")
        counts = (self.classes, self.type_one, self.type_two_two, self.type_three)
        if any(v < 0 for v in counts):
            raise InvariantViolation("negative census count")
        if self.type_one + self.type_two_two + self.type_three != self.classes:
            raise InvariantViolation("type counts do not add up to the class count")
        if self.type_three % 3:
            raise InvariantViolation("overlapping-pair count not divisible by 3")
        split_total = 0
        smooth = 0
        for (j, i), n in self.split_table.items():
            if n < 0 or not (1 <= j <= self.k // 2) or not (0 <= i <= self.g):
                raise InvariantViolation(f"bad split cell ({j}, {i}) -> {n}")
            if 2 * j == self.k and i > self.g - i:
                raise InvariantViolation(f"split cell ({j}, {i}) not canonical")
            split_total += n
            if i == 0 or i == self.g:
                smooth += n
        if split_total > self.type_one:
            raise InvariantViolation("split classes exceed the equal-pair count")
        if smooth != self.rational_splits:
            raise InvariantViolation("rational-split tally does not match the table")
        if self.rational_splits + self.singular != self.type_one:
            raise InvariantViolation("equal-pair classes do not partition")

    @property
    def central(self) -> int:
        return self.type_one - sum(self.split_table.values())


def _tally_pairs(tab: GroupTables, g: int, stack: list[int], p: int, c: int, tally: dict) -> None:
    """Classify and count all two-entry completions below one tree node."""
    nt = len(tab.transpositions)
    if p == tab.identity:
        nb = tab.nblocks[c]
        if nb == 1:
            tally["central"] = tally.get("central", 0) + nt
        elif nb == 2:
            (l1, s1), (l2, s2) = tab.block_info[c]
            lead, j = (l1, s1) if s1 <= s2 else (l2, s2)
            labels = tab.partitions[c]
            beta1 = sum(1 for t in stack if labels[tab.transpositions[t][0] - 1] == lead)
            i = _component_genus(
                j, beta1, g, tab.k, len(stack) + 2,
                tuple(tab.transpositions[t] for t in stack),
            )
            if 2 * j == tab.k and g - i < i:
                i = g - i
            key = ("split", j, i)
            tally[key] = tally.get(key, 0) + s1 * s2
        return
    n = tab.pair_completions(p, c)
    if not n:
        return
    cls = tab.pair_class[p]
    if cls == CLASS_DOUBLE:
        tally["disjoint"] = tally.get("disjoint", 0) + n
    elif cls == CLASS_TRIPLE:
        tally["overlap"] = tally.get("overlap", 0) + n
    else:
        raise InvariantViolation(
            f"two-factorable product has unexpected class at node {stack}"
        )


def _census_dfs(tab: GroupTables, b: int, g: int, stack: list[int], p: int, c: int, tally: dict) -> None:
    rem = b - len(stack)
    if rem == 2:
        _tally_pairs(tab, g, stack, p, c, tally)
        return
    mul, merge = tab.mul_trans, tab.merge_trans
    minf, nbl = tab.min_factors, tab.nblocks
    nxt = rem - 1
    mrow, crow = mul[p], merge[c]
    for t in range(len(mrow)):
        p2 = mrow[t]
        if minf[p2] > nxt:
            continue
        c2 = crow[t]
        if nbl[c2] - 1 > nxt:
            continue
        stack.append(t)
        _census_dfs(tab, b, g, stack, p2, c2, tally)
        stack.pop()


def _census_task(args) -> dict:
    k, b, prefix = args
    tab = group_tables(k)
    state = _advance(tab, b, prefix)
    if state is None:
        return {}
    tally: dict = {}
    _census_dfs(tab, b, cover_genus(k, b), list(prefix), *state, tally)
    return tally


def full_census(k: int, b: int, workers: int = 1) -> tuple[TupleCensus, DegenerationCensus]:
    """Enumerate (k, b) once, returning raw counts and the type census."""
    validate_cover_shape(k, b)
    tab = group_tables(k)
    g = cover_genus(k, b)
    if workers <= 1 or b < PARALLEL_PREFIX_LENGTH + 2:
        tally: dict = {}
        _census_dfs(tab, b, g, [], tab.identity, tab.discrete, tally)
    else:
        nt = len(tab.transpositions)
        tasks = [(k, b, (t1, t2)) for t1 in range(nt) for t2 in range(nt)]
        tally = {}
        with Pool(workers) as pool:
            for part in pool.imap_unordered(
                _census_task, tasks, chunksize=max(1, len(tasks) // (workers * 4))
            ):
                for key, v in part.items():
                    tally[key] = tally.get(key, 0) + v

    div = factorial(k) if k >= 3 else 1

    def classes_of(raw: int, what) -> int:
        if raw % div:
            raise InvariantViolation(f"{what} tally {raw} not divisible by {div}")
        return raw // div

    central = classes_of(tally.get("central", 0), "central")
    n22 = classes_of(tally.get("disjoint", 0), "disjoint-pair")
    n3 = classes_of(tally.get("overlap", 0), "overlapping-pair")
    split_table = {
        key[1:]: classes_of(v, f"split {key[1:]}")
        for key, v in sorted(tally.items(), key=repr)
        if isinstance(key, tuple)
    }
    n1 = central + sum(split_table.values())
    smooth = sum(v for (j, i), v in split_table.items() if i == 0 or i == g)
    census = DegenerationCensus(
        k=k, b=b, g=g,
        classes=n1 + n22 + n3,
        type_one=n1, type_two_two=n22, type_three=n3,
        split_table=split_table,
        rational_splits=smooth,
        singular=n1 - smooth,
    )
    raw_total = sum(tally.values())
    counts = TupleCensus(k, b, raw_total, census.classes, "enumeration")
    return counts, census


def census(k: int, b: int, workers: int = 1) -> DegenerationCensus:
    """Class-level collision census for (k, b)."""
    return full_census(k, b, workers)[1]


@dataclass(frozen=True)
class TwistOrbitReport:
    """Outcome of the order-three check on every class of one (k, b)."""

    k: int
    b: int
    classes: int
    type_three_classes: int
    fixed_point_failures: int
    orbit_size_failures: int

    @property
    def clean(self) -> bool:
        return self.fixed_point_failures == 0 and self.orbit_size_failures == 0


def verify_twist_orbits(k: int, b: int) -> TwistOrbitReport:
    """Check the full twist fixes equal and disjoint pairs pointwise and
    moves every overlapping-pair class in an orbit of size exactly 3."""
    from .covers import are_conjugate, class_representatives

    reps = class_representatives(k, b)
    fixed_bad = 0
    orbit_bad = 0
    n3 = 0
    for rep in reps:
        node = classify_node(*rep.entries[-2:])
        twisted = full_twist(rep)
        if node is NodeType.THREE:
            n3 += 1
            # order divides 3 at class level, so size 1 is the only failure
            if are_conjugate(twisted, rep):
                orbit_bad += 1
        elif twisted.entries != rep.entries:
            fixed_bad += 1
    return TwistOrbitReport(k, b, len(reps), n3, fixed_bad, orbit_bad)
