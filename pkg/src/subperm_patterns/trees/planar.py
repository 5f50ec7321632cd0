"""Planar binary trees, the pre-order bijection onto 312-avoiders, and shape predicates."""

import logging
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple

from ..errors import InvalidInputError
from ..permutations import Permutation, contains_pattern
from .models import LEAF, LabeledTree, TreeNode, TreeRole, internal_count

logger = logging.getLogger(__name__)

ShapeTest = Callable[[LabeledTree], bool]

PATTERN_312 = Permutation((3, 1, 2))


def _require_planar(t: LabeledTree) -> None:
    if t.role is not TreeRole.PLANAR_BINARY:
        raise InvalidInputError(f"expected a planar binary tree, got role {t.role.value}")


def psi(t: LabeledTree) -> Permutation:
    """Labels internal nodes 1..n in pre-order, then reads the labels in-order."""
    _require_planar(t)
    counter = [0]

    def visit(node: TreeNode) -> List[int]:
        if node.is_leaf:
            return []
        counter[0] += 1
        label = counter[0]
        left = visit(node.left)
        right = visit(node.right)
        return left + [label] + right

    return Permutation(tuple(visit(t.root)))


def _build(word: Sequence[int]) -> TreeNode:
    if not word:
        return LEAF
    index = min(range(len(word)), key=word.__getitem__)
    return TreeNode(left=_build(word[:index]), right=_build(word[index + 1 :]))


def psi_inverse(p: Permutation) -> LabeledTree:
    """Splits at the entry 1: everything before it is smaller than everything after
    it in a 312-avoider, so the prefix and suffix carry consecutive pre-order ranks."""
    if len(p) == 0:
        raise InvalidInputError("psi_inverse needs n >= 1")
    if contains_pattern(p, PATTERN_312):
        raise InvalidInputError(f"{p} contains 312")
    return LabeledTree(_build(p.entries), TreeRole.PLANAR_BINARY)


def _caterpillar_node(node: TreeNode) -> bool:
    for x in node.preorder():
        if not x.is_leaf and not (x.left.is_leaf or x.right.is_leaf):
            return False
    return True


def _strictly_binary_node(node: TreeNode) -> bool:
    for x in node.preorder():
        if not x.is_leaf and x.left.is_leaf != x.right.is_leaf:
            return False
    return True


def is_caterpillar(t: LabeledTree) -> bool:
    """Every internal node has at least one leaf child."""
    _require_planar(t)
    return _caterpillar_node(t.root)


def is_strictly_binary(t: LabeledTree) -> bool:
    """With the leaves removed, every remaining node has outdegree 0 or 2."""
    _require_planar(t)
    if t.size % 2 == 0:
        raise InvalidInputError(f"strictly binary trees have odd size, got {t.size}")
    return _strictly_binary_node(t.root)


def has_strictly_binary_shape(t: LabeledTree) -> bool:
    """is_strictly_binary that answers False on even sizes instead of raising."""
    return t.size % 2 == 1 and is_strictly_binary(t)


def max_subtree_size(t: LabeledTree, shape_test: ShapeTest) -> int:
    """Largest internal-node count over descendant subtrees passing ``shape_test``; 0 if none."""
    _require_planar(t)
    best = 0
    for node in t.root.preorder():
        if node.is_leaf:
            continue
        size = internal_count(node)
        if size > best and shape_test(LabeledTree(node, TreeRole.PLANAR_BINARY)):
            best = size
    return best


@lru_cache(maxsize=None)
def _shapes(n: int) -> Tuple[TreeNode, ...]:
    if n == 0:
        return (LEAF,)
    shapes = []
    for left_size in range(n):
        for left in _shapes(left_size):
            for right in _shapes(n - 1 - left_size):
                shapes.append(TreeNode(left=left, right=right))
    return tuple(shapes)


def all_planar_binary_trees(n: int) -> List[LabeledTree]:
    """All c_n planar binary trees with n internal nodes."""
    if n < 1:
        raise InvalidInputError(f"size must be positive, got {n}")
    return [LabeledTree(root, TreeRole.PLANAR_BINARY) for root in _shapes(n)]


def caterpillar_tree(directions: Optional[str] = None) -> LabeledTree:
    """A caterpillar whose spine turns as spelled by ``directions`` ("L"/"R" per step)."""
    node = TreeNode(left=LEAF, right=LEAF)
    for step in reversed(directions or ""):
        if step == "L":
            node = TreeNode(left=node, right=LEAF)
        elif step == "R":
            node = TreeNode(left=LEAF, right=node)
        else:
            raise InvalidInputError(f"unknown direction {step!r}")
    return LabeledTree(node, TreeRole.PLANAR_BINARY)
