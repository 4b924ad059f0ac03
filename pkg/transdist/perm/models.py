from collections.abc import Iterable, Iterator, Sequence

from transdist.exceptions import (
    ElementOutOfRange,
    MalformedCycle,
    NotABijection,
    PermutationError,
    SizeMismatch,
)


class Transposition:
    """
    A 2-cycle (a b) over the ground set [n].

    Stored with a < b; the order given to the constructor does not matter.
    """

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int):
        if a == b:
            raise MalformedCycle(f"A transposition needs two distinct elements, got ({a} {b})")
        if a > b:
            a, b = b, a
        if a < 1:
            raise ElementOutOfRange(f"Transposition elements must be at least 1, got ({a} {b})")
        self.a = a
        self.b = b

    @classmethod
    def _trusted(cls, a: int, b: int) -> "Transposition":
        tau = cls.__new__(cls)
        if a > b:
            a, b = b, a
        tau.a = a
        tau.b = b
        return tau

    def __iter__(self) -> Iterator[int]:
        yield self.a
        yield self.b

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Transposition):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __repr__(self) -> str:
        return f"({self.a} {self.b})"

    def to_permutation(self, n: int) -> "Permutation":
        return Permutation.identity(n).swap(self.a, self.b)


class Cycle:
    """
    A cycle (v1 ... vk) with k >= 2 mapping v_i to v_{i+1} and v_k back to v1.

    The elements are rotated so that v1 is the minimum, which makes two equal cycles compare equal.
    """

    __slots__ = ("elements",)

    def __init__(self, elements: Iterable[int]):
        elements = tuple(elements)
        if len(elements) < 2:
            raise MalformedCycle(f"A cycle needs at least two elements, got {elements}")
        if len(set(elements)) != len(elements):
            raise MalformedCycle(f"Cycle elements must be distinct, got {elements}")
        head = elements.index(min(elements))
        self.elements = elements[head:] + elements[:head]

    @classmethod
    def _from_canonical(cls, elements: tuple[int, ...]) -> "Cycle":
        cycle = cls.__new__(cls)
        cycle.elements = elements
        return cycle

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __getitem__(self, index: int) -> int:
        return self.elements[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cycle):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"({' '.join(map(str, self.elements))})"

    @property
    def head(self) -> int:
        return self.elements[0]

    def support(self) -> frozenset[int]:
        return frozenset(self.elements)

    def successor(self) -> dict[int, int]:
        elements = self.elements
        return {v: elements[(i + 1) % len(elements)] for i, v in enumerate(elements)}

    def rotated(self, start: int) -> tuple[int, ...]:
        """
        The elements of the cycle read from `start` onwards.

        Raises:
            ValueError: If start is not on the cycle.
        """

        i = self.elements.index(start)
        return self.elements[i:] + self.elements[:i]

    def to_permutation(self, n: int) -> "Permutation":
        if max(self.elements) > n or min(self.elements) < 1:
            raise ElementOutOfRange(f"Cycle {self!r} does not fit in [1, {n}]")

        images = list(range(n))
        for i, v in enumerate(self.elements):
            images[v - 1] = self.elements[(i + 1) % len(self.elements)] - 1
        return Permutation._trusted(images)


class Permutation:
    """
    A bijection of [n] in one-line form.

    Elements are 1-based at the interface. Internally the images are kept 0-based in a tuple.
    Instances are immutable and hashable.
    """

    __slots__ = ("_images",)

    def __init__(self, images: Sequence[int]):
        n = len(images)
        if n < 1:
            raise PermutationError("A permutation needs n >= 1")

        seen = [False] * n
        zero_based = []
        for value in images:
            if not 1 <= value <= n or seen[value - 1]:
                raise NotABijection(f"{list(images)} is not a bijection of [1, {n}] (offending value {value})")
            seen[value - 1] = True
            zero_based.append(value - 1)

        self._images = tuple(zero_based)

    @classmethod
    def _trusted(cls, zero_based: Iterable[int]) -> "Permutation":
        perm = cls.__new__(cls)
        perm._images = tuple(zero_based)
        return perm

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        if n < 1:
            raise PermutationError("A permutation needs n >= 1")
        return cls._trusted(range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Cycle]) -> "Permutation":
        """
        Product c1 c2 ... ck of the given cycles, which may overlap.
        """

        result = cls.identity(n)
        for cycle in cycles:
            result = result * cycle.to_permutation(n)
        return result

    @classmethod
    def from_transpositions(cls, n: int, taus: Iterable[Transposition]) -> "Permutation":
        """
        Product tau1 tau2 ... tauk, multiplied left to right.
        """

        images = list(range(n))
        for tau in taus:
            a, b = tau.a - 1, tau.b - 1
            if a < 0 or b >= n:
                raise ElementOutOfRange(f"Transposition {tau!r} does not fit in [1, {n}]")
            images[a], images[b] = images[b], images[a]
        return cls._trusted(images)

    @property
    def n(self) -> int:
        return len(self._images)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(v + 1 for v in self._images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self._images):
            raise ElementOutOfRange(f"{i} is outside [1, {len(self._images)}]")
        return self._images[i - 1] + 1

    def __len__(self) -> int:
        return len(self._images)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __repr__(self) -> str:
        return f"Permutation({', '.join(str(v + 1) for v in self._images)})"

    def __mul__(self, other: "Permutation") -> "Permutation":
        """
        Composition (self * other)(i) = self(other(i)).

        Raises:
            SizeMismatch: If the permutations act on different ground sets.
        """

        if len(self) != len(other):
            raise SizeMismatch(f"Cannot compose permutations of size {len(self)} and {len(other)}")
        mine = self._images
        return Permutation._trusted(mine[j] for j in other._images)

    def swap(self, a: int, b: int) -> "Permutation":
        """
        Right multiplication by the transposition (a b), i.e. the entries at positions a and b are exchanged.

        Raises:
            ElementOutOfRange: If a or b lies outside [1, n].
        """

        n = len(self._images)
        if not (1 <= a <= n and 1 <= b <= n):
            raise ElementOutOfRange(f"Transposition ({a} {b}) does not fit in [1, {n}]")
        images = list(self._images)
        images[a - 1], images[b - 1] = images[b - 1], images[a - 1]
        return Permutation._trusted(images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self._images)
        for i, v in enumerate(self._images):
            inv[v] = i
        return Permutation._trusted(inv)

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self._images))

    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, v in enumerate(self._images) if i != v)

    def cycles(self) -> list[Cycle]:
        """
        Disjoint cycle decomposition, fixed points omitted, sorted by minimum element.
        """

        images = self._images
        visited = [False] * len(images)
        cycles = []
        for i in range(len(images)):
            if visited[i] or images[i] == i:
                continue
            cycle = []
            j = i
            while not visited[j]:
                visited[j] = True
                cycle.append(j + 1)
                j = images[j]
            cycles.append(Cycle._from_canonical(tuple(cycle)))
        return cycles

    def cycle_count(self) -> int:
        """
        Number of cycles, fixed points included.
        """

        visited = [False] * len(self._images)
        count = 0
        for i in range(len(self._images)):
            if visited[i]:
                continue
            count += 1
            j = i
            while not visited[j]:
                visited[j] = True
                j = self._images[j]
        return count


def compose(p: Permutation, q: Permutation) -> Permutation:
    return p * q


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def cycle_decomposition(p: Permutation) -> list[Cycle]:
    return p.cycles()


def support(p: Permutation) -> frozenset[int]:
    return p.support()
