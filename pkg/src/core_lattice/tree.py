"""The tree of numerical semigroups ordered by genus.

The root is N; the children of S are obtained by removing one effective
generator (a minimal generator larger than F(S)).  Every numerical semigroup
appears exactly once, at depth equal to its genus.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .antiatom import p_value
from .errors import BudgetExceededError, exhaustive_budget
from .numset import (
    NumericalSemigroup,
    effective_generators,
    format_generators,
    minimal_generators,
    missing_pairs,
)


@dataclass
class TreeNode:
    semigroup: NumericalSemigroup
    genus: int
    generators: list
    effective_generators: list
    parent: NumericalSemigroup | None = None
    m_size: int | None = None
    p_value: int | None = None

    def to_json(self):
        parent_gens = None if self.parent is None else minimal_generators(self.parent)
        return {
            "gens": self.generators,
            "genus": self.genus,
            "M": self.m_size,
            "P": self.p_value,
            "parent": parent_gens,
        }


def _node(S, parent, annotate):
    node = TreeNode(S, S.genus, minimal_generators(S), effective_generators(S), parent)
    if annotate:
        node.m_size = len(missing_pairs(S))
        node.p_value = p_value(S)
    return node


def children(S):
    """Semigroups S \\ {g} for effective generators g, by ascending g."""
    return [NumericalSemigroup(sorted(S.gaps + (g,))) for g in effective_generators(S)]


def build_tree(max_genus, annotate=True):
    """Levels 0..max_genus of the semigroup tree; each level sorted by generator list."""
    if max_genus < 0:
        raise ValueError(f"max_genus must be >= 0, got {max_genus}")
    if max_genus > exhaustive_budget():
        raise BudgetExceededError(f"genus {max_genus} exceeds exhaustive budget {exhaustive_budget()}")
    levels = [[_node(NumericalSemigroup(), None, annotate)]]
    for _ in range(max_genus):
        nxt = [_node(c, node.semigroup, annotate) for node in levels[-1] for c in children(node.semigroup)]
        nxt.sort(key=lambda n: n.generators)
        levels.append(nxt)
    return levels


def genus_census(max_genus):
    return [len(level) for level in build_tree(max_genus, annotate=False)]


# (minimal generators, |M(S)|, P(S)) for the first six levels of the tree
FIGURE2 = [
    ((1,), 0, 1),
    ((2, 3), 0, 1),
    ((2, 5), 0, 1),
    ((3, 4, 5), 1, 2),
    ((2, 7), 0, 1),
    ((3, 4), 0, 1),
    ((3, 5, 7), 1, 2),
    ((4, 5, 6, 7), 2, 3),
    ((2, 9), 0, 1),
    ((3, 5), 0, 1),
    ((3, 7, 8), 2, 2),
    ((4, 5, 6), 0, 1),
    ((4, 5, 7), 1, 2),
    ((4, 6, 7, 9), 2, 2),
    ((5, 6, 7, 8, 9), 4, 6),
    ((2, 11), 0, 1),
    ((3, 7, 11), 1, 2),
    ((3, 8, 10), 2, 2),
    ((4, 5, 11), 2, 2),
    ((4, 6, 7), 0, 1),
    ((4, 6, 9, 11), 2, 2),
    ((4, 7, 9, 10), 3, 4),
    ((5, 6, 7, 8), 0, 1),
    ((5, 6, 7, 9), 1, 2),
    ((5, 6, 8, 9), 2, 2),
    ((5, 7, 8, 9, 11), 3, 6),
    ((6, 7, 8, 9, 10, 11), 4, 10),
]


@dataclass(frozen=True)
class Figure2Row:
    generators: tuple
    genus: int
    m_size: int
    p_value: int
    expected_m: int
    expected_p: int

    @property
    def matches(self):
        return (self.m_size, self.p_value) == (self.expected_m, self.expected_p)


def annotate_figure2():
    """Recompute |M(S)| and P(S) for every labelled node of genus <= 5."""
    computed = {tuple(n.generators): n for level in build_tree(5) for n in level}
    rows = []
    for gens, m, p in FIGURE2:
        node = computed.get(gens)
        if node is None:
            # absent from the generated tree: reported as a mismatch
            rows.append(Figure2Row(gens, None, None, None, m, p))
        else:
            rows.append(Figure2Row(gens, node.genus, node.m_size, node.p_value, m, p))
    return rows


def tree_json_lines(levels):
    return "\n".join(json.dumps(n.to_json(), ensure_ascii=False) for level in levels for n in level)


def tree_dot(levels):
    """Graphviz text with one box per semigroup and an edge to its parent."""
    lines = ["digraph semigroup_tree {", "  rankdir=LR;", "  node [shape=box];"]
    for level in levels:
        for n in level:
            label = format_generators(n.generators)
            if n.m_size is not None:
                label += f"\\n|M|={n.m_size}\\nP={n.p_value}"
            lines.append(f'  "{format_generators(n.generators)}" [label="{label}"];')
            if n.parent is not None:
                lines.append(f'  "{format_generators(minimal_generators(n.parent))}" -> "{format_generators(n.generators)}";')
    lines.append("}")
    return "\n".join(lines)
