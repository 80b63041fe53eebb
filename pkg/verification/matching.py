"""
Сопоставления по делимости степеней. Левая сторона: характеры блока B,
правая: характеры соответствующего блока b. Ребро (i, j) есть, если
степень справа делит степень слева.
"""

import itertools
from dataclasses import dataclass, field

import networkx as nx
from networkx.algorithms import bipartite


@dataclass(frozen=True)
class HallViolator:
    """Подмножество одной стороны, у которого меньше соседей, чем элементов."""
    side: str
    members: tuple
    neighbours: tuple
    reason: str = 'hall'

    def as_dict(self, left, right):
        own, other = (right, left) if self.side == 'right' else (left, right)
        return {
            'reason': self.reason,
            'side': self.side,
            'degrees': [own[i] for i in self.members],
            'neighbour_degrees': [other[i] for i in self.neighbours],
        }


@dataclass(frozen=True)
class DivisibilityMatching:
    left: tuple
    right: tuple
    pairs: tuple = ()
    violator: HallViolator = field(default=None)

    @property
    def perfect(self):
        return self.violator is None

    def degree_pairs(self):
        return [(self.left[i], self.right[j]) for i, j in self.pairs]

    def verify(self):
        """Повторная проверка сертификата: биекции с делимостью или нарушения условия Холла."""
        if self.perfect:
            lefts = sorted(i for i, _ in self.pairs)
            rights = sorted(j for _, j in self.pairs)
            if lefts != list(range(len(self.left))) or rights != list(range(len(self.right))):
                return False
            return all(self.left[i] % self.right[j] == 0 for i, j in self.pairs)
        if self.violator.reason == 'size':
            return len(self.left) != len(self.right)
        own, other = (
            (self.right, self.left) if self.violator.side == 'right' else (self.left, self.right)
        )
        neighbours = _neighbours(self.violator.side, self.violator.members, self.left, self.right)
        return (
            set(neighbours) == set(self.violator.neighbours)
            and len(neighbours) < len(self.violator.members)
            and all(0 <= i < len(own) for i in self.violator.members)
            and all(0 <= i < len(other) for i in neighbours)
        )


def divides(left_degree, right_degree):
    return left_degree % right_degree == 0


def _neighbours(side, members, left, right):
    if side == 'right':
        return sorted({i for i, a in enumerate(left) for j in members if divides(a, right[j])})
    return sorted({j for j, b in enumerate(right) for i in members if divides(left[i], b)})


def _violates(side, members, left, right):
    return len(_neighbours(side, members, left, right)) < len(members)


def _shrink(side, members, left, right):
    """Удаляет элементы, пока нарушение сохраняется: минимальный по включению нарушитель."""
    members = list(members)
    changed = True
    while changed:
        changed = False
        for x in list(members):
            rest = [y for y in members if y != x]
            if rest and _violates(side, rest, left, right):
                members = rest
                changed = True
                break
    return tuple(sorted(members))


def _order(degrees):
    return sorted(range(len(degrees)), key=lambda i: (degrees[i], i))


def divisibility_matching(left, right):
    """
    Максимальное паросочетание (Хопкрофт–Карп); вершины добавляются в граф
    по возрастанию степени, затем номера. При неравных размерах сразу
    возвращается нарушитель «size».
    """
    left, right = tuple(left), tuple(right)
    if len(left) != len(right):
        side = 'right' if len(right) > len(left) else 'left'
        members = tuple(range(len(right) if side == 'right' else len(left)))
        return DivisibilityMatching(
            left=left,
            right=right,
            violator=HallViolator(
                side=side,
                members=members,
                neighbours=tuple(range(len(left) if side == 'right' else len(right))),
                reason='size',
            ),
        )

    graph = nx.Graph()
    left_nodes = [('L', i) for i in _order(left)]
    graph.add_nodes_from(left_nodes, bipartite=0)
    graph.add_nodes_from((('R', j) for j in _order(right)), bipartite=1)
    for i in _order(left):
        for j in _order(right):
            if divides(left[i], right[j]):
                graph.add_edge(('L', i), ('R', j))
    matching = bipartite.hopcroft_karp_matching(graph, top_nodes=left_nodes)
    pairs = tuple(sorted((i, matching[('L', i)][1]) for i in range(len(left)) if ('L', i) in matching))
    if len(pairs) == len(left):
        return DivisibilityMatching(left=left, right=right, pairs=pairs)

    # свободная вершина справа и всё, что достижимо из неё чередующимися путями
    free = next(j for j in _order(right) if ('R', j) not in matching)
    reached = {free}
    frontier = [free]
    while frontier:
        j = frontier.pop()
        for _, i in graph.neighbors(('R', j)):
            partner = matching.get(('L', i))
            if partner is not None and partner[1] not in reached:
                reached.add(partner[1])
                frontier.append(partner[1])
    members = _shrink('right', sorted(reached), left, right)
    return DivisibilityMatching(
        left=left,
        right=right,
        pairs=pairs,
        violator=HallViolator(
            side='right',
            members=members,
            neighbours=tuple(_neighbours('right', members, left, right)),
        ),
    )


def brute_force_perfect(left, right):
    """Перебор всех биекций (для проверок на малых размерах)."""
    if len(left) != len(right):
        return False
    return any(
        all(divides(a, right[j]) for a, j in zip(left, perm))
        for perm in itertools.permutations(range(len(right)))
    )


def hall_violated(side, members, left, right):
    return _violates(side, members, left, right)
