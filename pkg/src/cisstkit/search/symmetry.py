"""Twin classes: vertex sets whose members any permutation maps onto each other.

Two vertices are twins when they share the same terminal status and either
the same open neighbourhood (non-adjacent twins) or the same closed
neighbourhood (adjacent twins). Swapping two twins is an automorphism of the
host that fixes S; in K_n and K_{m1,m2} the classes are exactly the
terminal/non-terminal parts of each side.
"""

from __future__ import annotations

import typing
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations

if typing.TYPE_CHECKING:
    from collections.abc import Iterator

    from cisstkit.graph.types import Graph


@dataclass(frozen=True)
class TwinClasses:
    """Partition of the vertices into twin classes, each sorted ascending."""

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    masks: tuple[int, ...]

    def count_vector(self, mask: int) -> tuple[int, ...]:
        return tuple(bin(mask & class_mask).count("1") for class_mask in self.masks)

    def takes_lowest(self, mask: int, free: int, restrict_to: int) -> bool:
        """True when, inside every class, ``mask`` holds the lowest members of ``free``.

        Only the vertices in ``restrict_to`` are constrained.
        """
        for members, class_mask in zip(self.classes, self.masks):
            chosen = mask & class_mask & restrict_to
            if not chosen:
                continue
            need = bin(chosen).count("1")
            for v in members:
                bit = 1 << v
                if not (free & restrict_to & bit):
                    continue
                if not chosen & bit:
                    return False
                need -= 1
                if need == 0:
                    break
        return True


def twin_classes(g: Graph, terminal_mask: int = 0) -> TwinClasses:
    open_groups: dict[tuple[bool, int], list[int]] = defaultdict(list)
    for v in g.vertices():
        open_groups[(bool(terminal_mask >> v & 1), g.adjacency_masks[v])].append(v)

    classes: list[tuple[int, ...]] = []
    singletons: dict[tuple[bool, int], list[int]] = defaultdict(list)
    for (is_terminal, _), members in open_groups.items():
        if len(members) > 1:
            classes.append(tuple(members))
        else:
            v = members[0]
            singletons[(is_terminal, g.adjacency_masks[v] | (1 << v))].append(v)
    classes.extend(tuple(members) for members in singletons.values())
    classes.sort()

    class_of = [0] * g.n
    masks = []
    for index, members in enumerate(classes):
        mask = 0
        for v in members:
            class_of[v] = index
            mask |= 1 << v
        masks.append(mask)
    return TwinClasses(classes=tuple(classes), class_of=tuple(class_of), masks=tuple(masks))


def canonical_subsets(g: Graph, k: int, use_symmetry: bool = True) -> Iterator[tuple[int, ...]]:
    """k-subsets of the vertices, one per twin-orbit when ``use_symmetry`` is set.

    The representative of an orbit takes the lowest members of each class.
    """
    if not use_symmetry:
        yield from combinations(range(g.n), k)
        return
    twins = twin_classes(g)
    sizes = [len(members) for members in twins.classes]

    def split(index: int, left: int) -> Iterator[tuple[int, ...]]:
        if index == len(sizes):
            if left == 0:
                yield ()
            return
        for take in range(min(left, sizes[index]), -1, -1):
            for rest in split(index + 1, left - take):
                yield (take, *rest)

    for counts in split(0, k):
        chosen: list[int] = []
        for members, take in zip(twins.classes, counts):
            chosen.extend(members[:take])
        yield tuple(sorted(chosen))
