"""The leaf-collapse bijection between binary increasing trees and permutations."""

import itertools
import logging
from typing import Iterator, List, Optional, Sequence

import networkx as nx

from ..errors import InvalidInputError
from ..permutations import Permutation
from .models import LabeledTree, TreeNode, TreeRole

logger = logging.getLogger(__name__)


def _inorder_labels(node: Optional[TreeNode], out: List[int]) -> None:
    if node is None:
        return
    _inorder_labels(node.left, out)
    out.append(node.label)
    _inorder_labels(node.right, out)


def _require_increasing(t: LabeledTree) -> None:
    if t.role is not TreeRole.INCREASING:
        raise InvalidInputError(f"expected an increasing tree, got role {t.role.value}")


def phi(t: LabeledTree) -> Permutation:
    """Collapses leaves into their parents until one node is left.

    A left leaf is written before its parent and a right leaf after it, so the
    result is the in-order reading of the labels.
    """
    _require_increasing(t)
    labels: List[int] = []
    _inorder_labels(t.root, labels)
    return Permutation(tuple(labels))


def _split_at_minimum(word: Sequence[int]) -> Optional[TreeNode]:
    if not word:
        return None
    index = min(range(len(word)), key=word.__getitem__)
    return TreeNode(
        label=word[index],
        left=_split_at_minimum(word[:index]),
        right=_split_at_minimum(word[index + 1 :]),
    )


def phi_inverse(p: Permutation) -> LabeledTree:
    """Root = minimum entry; the prefix before it builds the left subtree, the suffix the right one."""
    if len(p) == 0:
        raise InvalidInputError("phi_inverse needs n >= 1")
    return LabeledTree(_split_at_minimum(p.entries), TreeRole.INCREASING)


def _find(node: Optional[TreeNode], label: int) -> Optional[TreeNode]:
    if node is None:
        return None
    for x in node.preorder():
        if x.label == label:
            return x
    return None


def _relabel(node: Optional[TreeNode], ranks) -> Optional[TreeNode]:
    if node is None:
        return None
    return TreeNode(
        label=ranks[node.label],
        left=_relabel(node.left, ranks),
        right=_relabel(node.right, ranks),
    )


def subtree_at(t: LabeledTree, label: int) -> LabeledTree:
    """Descendant subtree of ``label``, labels rescaled onto 1..size."""
    _require_increasing(t)
    node = _find(t.root, label)
    if node is None:
        raise InvalidInputError(f"label {label} is not in the tree")
    labels = sorted(x.label for x in node.preorder())
    ranks = {value: rank for rank, value in enumerate(labels, start=1)}
    return LabeledTree(_relabel(node, ranks), TreeRole.INCREASING)


def descendant_count(t: LabeledTree, label: int) -> int:
    """Nodes descending from ``label``, the node itself included."""
    _require_increasing(t)
    graph = t.to_networkx()
    if label not in graph:
        raise InvalidInputError(f"label {label} is not in the tree")
    return len(nx.descendants(graph, label)) + 1


def all_increasing_trees(n: int) -> Iterator[LabeledTree]:
    """All n! binary increasing trees of size n, in lexicographic order of their phi-images."""
    if n < 1:
        raise InvalidInputError(f"size must be positive, got {n}")
    for entries in itertools.permutations(range(1, n + 1)):
        yield LabeledTree(_split_at_minimum(entries), TreeRole.INCREASING)
