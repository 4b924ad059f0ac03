import logging
from collections.abc import Sequence
from fractions import Fraction

from transdist.exceptions import CenterNotInCycle, NotBalanced, NotOnPath, NotUnbalanced
from transdist.perm.models import Cycle, Transposition
from transdist.solver.models import BalanceCounts, CycleClass, CycleKind, StepCounter, Transform
from transdist.tree.metric import TreeMetric

logger = logging.getLogger(__name__)

_NULL = StepCounter()


def _branches(t: TreeMetric, seq: Sequence[int]) -> set[int]:
    return {b for b in t.branch_indices(seq) if b}


def classify_cycle(t: TreeMetric, c: Cycle, counter: StepCounter | None = None) -> CycleClass:
    """
    Classifies a cycle against the tree in a single pass.

    Classes overlap; the first that applies wins: OnPath, ContainsCenter, Balanced, Unbalanced.
    On a path-shaped tree every cycle is OnPath.

    Parameters:
        t: The tree metric.
        c: The cycle.
        counter: Optional step counter.

    Returns:
        CycleClass: Kind, arc counts between branches and occupied branches.
    """

    elements = c.elements
    indices = t.branch_indices(elements)
    branches = set(indices)
    branches.discard(0)
    matrix = [[0, 0, 0], [0, 0, 0], [0, 0, 0]]
    previous = indices[-1]
    for b in indices:
        if previous and b and previous != b:
            matrix[previous - 1][b - 1] += 1
        previous = b
    counts = BalanceCounts(matrix)
    (counter or _NULL).tick(len(elements))

    contains_center = t.center is not None and t.center in c.elements
    if not t.is_y_tree or len(branches) <= 2:
        kind = CycleKind.ON_PATH
    elif contains_center:
        kind = CycleKind.CONTAINS_CENTER
    elif counts.is_balanced:
        kind = CycleKind.BALANCED
    else:
        kind = CycleKind.UNBALANCED

    return CycleClass(kind, counts, frozenset(branches), contains_center)


def _line_taus(t: TreeMetric, seq: Sequence[int], out: list[Transposition], counter: StepCounter) -> None:
    """
    Appends a minimum decomposition of the cycle `seq`, whose elements lie on one path of the tree.

    Elements are placed on a line by signed depth: on a path the root is leftmost, on a Y-tree the
    lower-numbered branch is negative. Reading the cycle (v1 ... vm) from its leftmost element v1,
    let vt be the next element from the left. If vt is not vm the cycle splits into (v1 ... vt)
    followed by (vt ... vm). Otherwise (v2 ... vm), read from vm, is decomposed first and (v1 vm)
    closes it. Both cases are driven by a worklist over the min-Cartesian tree of the positions
    after v1, so the m - 1 transpositions come out in linear time.
    """

    k = len(seq)
    if k < 2:
        return

    negative = min((b for b in t.branch_indices(seq) if b), default=0) if t.is_y_tree else 0
    coords = t.coordinates(seq, negative)

    m = coords.index(min(coords))
    order = list(seq[m:]) + list(seq[:m])
    cs = coords[m:] + coords[:m]

    left_child = [0] * k
    right_child = [0] * k
    stack: list[int] = []
    for i in range(1, k):
        last = 0
        while stack and cs[stack[-1]] > cs[i]:
            last = stack.pop()
        left_child[i] = last
        if stack:
            right_child[stack[-1]] = i
        stack.append(i)

    trusted = Transposition._trusted
    append = out.append
    work = [(order[0], 1, k - 1, stack[0])]
    pop, push = work.pop, work.append
    while work:
        head, lo, hi, top = pop()
        if lo >= hi:
            append(trusted(head, order[top]))
        elif top != hi:
            push((order[top], top + 1, hi, right_child[top]))
            push((head, lo, top, top))
        else:
            push((head, hi + 1, hi, hi))
            push((order[hi], lo, hi - 1, left_child[hi]))

    counter.tick(3 * k)


def _central_split(t: TreeMetric, seq: Sequence[int], counter: StepCounter) -> list[list[int]]:
    """
    Splits a cycle through the center into adjacent cycles on paths, in product order.

    The elements after the center are cut into maximal same-branch runs. Leading runs are peeled
    off, each closed through the center, until the rest lies on two branches.
    """

    cv = t.center
    i = list(seq).index(cv)
    rest = list(seq[i + 1 :]) + list(seq[:i])
    branch = t.branch_index

    runs: list[tuple[int, int]] = []
    masks: list[int] = []
    start = 0
    for j in range(1, len(rest) + 1):
        if j == len(rest) or branch(rest[j]) != branch(rest[start]):
            runs.append((start, j))
            masks.append(1 << branch(rest[start]))
            start = j
    counter.tick(len(rest))

    suffix = 0
    peel = len(runs)
    for r in range(len(runs) - 1, -1, -1):
        suffix |= masks[r]
        if suffix.bit_count() > 2:
            break
        peel = r

    pieces = [[cv, *rest[runs[peel][0] :]]] if peel < len(runs) else []
    for r in range(peel - 1, -1, -1):
        s, e = runs[r]
        pieces.append([cv, *rest[s:e]])
    return pieces


def _balanced_split(t: TreeMetric, seq: Sequence[int], counter: StepCounter) -> list[list[int]]:
    """
    Splits a balanced cycle avoiding the center into adjacent cycles on paths, in product order.

    Follows the closed walk from seq[0] and keeps the branch-changing arcs on a stack. An arc that
    returns to the source branch of the arc on top closes an excursion into a single branch, which
    is cut off together with whichever of its two anchors lies closer to the center.
    """

    k = len(seq)
    branch = t.branch_index
    depth = t.depth_units
    succ = {v: seq[(i + 1) % k] for i, v in enumerate(seq)}
    count = [0, 0, 0, 0]
    for v in seq:
        count[branch(v)] += 1
    counter.tick(k)

    stack: list[tuple[int, int]] = []
    left: list[list[int]] = []
    right: list[list[int]] = []
    a = seq[0]
    guard = 2 * k + 4

    while count[1] and count[2] and count[3]:
        guard -= 1
        if guard < 0:
            raise NotBalanced("The arc stack never emptied; the cycle is not balanced")

        home = branch(a)
        c1 = a
        while branch(succ[c1]) == home:
            c1 = succ[c1]
            counter.tick()
        c2 = succ[c1]
        a = c2
        counter.tick()

        if not stack or branch(c2) != branch(stack[-1][0]):
            stack.append((c1, c2))
            continue

        b1, b2 = stack.pop()
        segment = [b2]
        x = b2
        while x != c1:
            x = succ[x]
            segment.append(x)
        counter.tick(len(segment))

        if depth(b1) <= depth(c2):
            right.append([b1, *segment])
        else:
            left.append([*segment, c2])
        succ[b1] = c2
        count[branch(b2)] -= len(segment)

    remaining = [a]
    x = succ[a]
    while x != a:
        remaining.append(x)
        x = succ[x]
    counter.tick(len(remaining))

    return [*left, remaining, *reversed(right)]


def _unbalanced_taus(t: TreeMetric, seq: Sequence[int], out: list[Transposition], counter: StepCounter) -> None:
    cv = t.center
    branch = t.branch_index
    depth = t.depth_units

    vj = min(seq, key=lambda v: (depth(v), v))
    i = list(seq).index(vj)
    rotated = list(seq[i:]) + list(seq[:i])
    counter.tick(2 * len(seq))

    home = branch(vj)
    r = 0
    while r + 1 < len(rotated) and branch(rotated[r + 1]) == home:
        r += 1

    for piece in _central_split(t, [vj, cv, *rotated[r + 1 :]], counter):
        _line_taus(t, piece, out, counter)
    out.append(Transposition(vj, cv))
    if r:
        _line_taus(t, rotated[: r + 1], out, counter)


def _transform(t: TreeMetric, taus: list[Transposition]) -> Transform:
    return Transform.of(t, taus)


def path_td(t: TreeMetric, c: Cycle, counter: StepCounter | None = None) -> Transform:
    """
    Minimum decomposition of a cycle whose support lies on a path of the tree.

    The result has len(c) - 1 transpositions and weight D(c) / 2.

    Raises:
        NotOnPath: If the support meets all three branches of a Y-tree.
    """

    if t.is_y_tree and len(_branches(t, c.elements)) > 2:
        raise NotOnPath(f"Cycle {c!r} meets all three branches")
    taus: list[Transposition] = []
    _line_taus(t, c.elements, taus, counter or _NULL)
    return _transform(t, taus)


def central_pieces(t: TreeMetric, c: Cycle, counter: StepCounter | None = None) -> list[Cycle]:
    """
    Adjacent cycles on paths whose product, in the returned order, is c.

    Raises:
        CenterNotInCycle: If the central vertex is not moved by c.
    """

    if t.center is None or t.center not in c.elements:
        raise CenterNotInCycle(f"Cycle {c!r} does not contain the central vertex")
    return [Cycle(piece) for piece in _central_split(t, c.elements, counter or _NULL)]


def central_td(t: TreeMetric, c: Cycle, counter: StepCounter | None = None) -> Transform:
    """
    Minimum decomposition, of weight D(c) / 2, of a cycle that contains the central vertex.

    Raises:
        CenterNotInCycle: If the central vertex is not moved by c.
    """

    if t.center is None or t.center not in c.elements:
        raise CenterNotInCycle(f"Cycle {c!r} does not contain the central vertex")
    counter = counter or _NULL
    taus: list[Transposition] = []
    for piece in _central_split(t, c.elements, counter):
        _line_taus(t, piece, taus, counter)
    return _transform(t, taus)


def _require_balanced(t: TreeMetric, c: Cycle, counter: StepCounter) -> None:
    cls = classify_cycle(t, c, counter)
    if cls.contains_center or not cls.counts.is_balanced:
        raise NotBalanced(f"Cycle {c!r} is not a balanced cycle avoiding the center")


def balanced_pieces(t: TreeMetric, c: Cycle, counter: StepCounter | None = None) -> list[Cycle]:
    """
    Adjacent cycles on paths whose product, in the returned order, is the balanced cycle c.

    Raises:
        NotBalanced: If c contains the center or its arc counts are not balanced.
    """

    counter = counter or _NULL
    _require_balanced(t, c, counter)
    if len(_branches(t, c.elements)) <= 2:
        return [c]
    return [Cycle(piece) for piece in _balanced_split(t, c.elements, counter)]


def balanced_td(t: TreeMetric, c: Cycle, counter: StepCounter | None = None) -> Transform:
    """
    Minimum decomposition, of weight D(c) / 2, of a balanced cycle avoiding the center.

    Raises:
        NotBalanced: If c contains the center or its arc counts are not balanced.
    """

    counter = counter or _NULL
    _require_balanced(t, c, counter)
    taus: list[Transposition] = []
    if len(_branches(t, c.elements)) <= 2:
        _line_taus(t, c.elements, taus, counter)
    else:
        for piece in _balanced_split(t, c.elements, counter):
            _line_taus(t, piece, taus, counter)
    return _transform(t, taus)


def unbalanced_td(t: TreeMetric, c: Cycle, counter: StepCounter | None = None) -> Transform:
    """
    Minimum decomposition of an unbalanced cycle avoiding the center.

    The weight is D(c) / 2 plus the distance from the center to the nearest element of c.
    Ties for the nearest element go to the smallest label.

    Raises:
        NotUnbalanced: If c contains the center, lies on a path or is balanced.
    """

    counter = counter or _NULL
    cls = classify_cycle(t, c, counter)
    if cls.kind is not CycleKind.UNBALANCED:
        raise NotUnbalanced(f"Cycle {c!r} is {cls.kind}, not unbalanced")
    taus: list[Transposition] = []
    _unbalanced_taus(t, c.elements, taus, counter)
    return _transform(t, taus)


def decompose_cycle(t: TreeMetric, c: Cycle, counter: StepCounter | None = None) -> Transform:
    """
    Minimum decomposition of a single cycle, routed by its class.

    Parameters:
        t: The tree metric.
        c: The cycle to decompose.
        counter: Optional step counter, advanced by every elementary step.

    Returns:
        Transform: Transpositions multiplying to c, with total weight `delta_cycle(t, c)`.
    """

    counter = counter or _NULL
    cls = classify_cycle(t, c, counter)
    logger.debug("cycle of length %d routed as %s", len(c), cls.kind)

    taus: list[Transposition] = []
    elements = c.elements
    match cls.kind:
        case CycleKind.ON_PATH:
            _line_taus(t, elements, taus, counter)
        case CycleKind.CONTAINS_CENTER:
            for piece in _central_split(t, elements, counter):
                _line_taus(t, piece, taus, counter)
        case CycleKind.BALANCED:
            for piece in _balanced_split(t, elements, counter):
                _line_taus(t, piece, taus, counter)
        case CycleKind.UNBALANCED:
            _unbalanced_taus(t, elements, taus, counter)
    return _transform(t, taus)


def cycle_displacement_units(t: TreeMetric, c: Cycle) -> int:
    elements = c.elements
    phi = t.phi_units
    return sum(phi(elements[i - 1], v) for i, v in enumerate(elements)) if elements else 0


def center_gap_units(t: TreeMetric, elements: Sequence[int]) -> int:
    """
    Scaled distance from the center to the nearest of `elements`.
    """

    depth = t.depth_units
    return min(map(depth, elements))


def delta_cycle(t: TreeMetric, c: Cycle, cls: CycleClass | None = None) -> Fraction:
    """
    Exact minimum decomposition weight of a single cycle, without building the decomposition.

    D(c) / 2, plus the distance from the center to the nearest element when c is unbalanced.
    """

    cls = cls or classify_cycle(t, c)
    units = cycle_displacement_units(t, c)
    if cls.kind is CycleKind.UNBALANCED:
        units += 2 * center_gap_units(t, c.elements)
    return Fraction(units, 2 * t.scale)
