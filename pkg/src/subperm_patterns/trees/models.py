"""Data models for binary increasing trees and planar binary trees."""

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Optional

import networkx as nx

from ..errors import InvalidInputError


class TreeRole(Enum):
    """Which family a tree belongs to."""

    INCREASING = "increasing"
    PLANAR_BINARY = "planar_binary"


@dataclass(frozen=True)
class TreeNode:
    """A node with optional label and oriented children.

    Planar binary trees leave every label empty and mark leaves as childless nodes.
    """

    label: Optional[int] = None
    left: Optional["TreeNode"] = None
    right: Optional["TreeNode"] = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None and self.right is None

    def children(self) -> List["TreeNode"]:
        return [child for child in (self.left, self.right) if child is not None]

    def preorder(self) -> Iterator["TreeNode"]:
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            if node.right is not None:
                stack.append(node.right)
            if node.left is not None:
                stack.append(node.left)


LEAF = TreeNode()


def internal_count(node: Optional[TreeNode]) -> int:
    """Internal nodes of a full binary (sub)tree."""
    if node is None:
        return 0
    return sum(1 for x in node.preorder() if not x.is_leaf)


@dataclass(frozen=True)
class LabeledTree:
    """A tree tagged with its family; invariants are checked on construction."""

    root: TreeNode
    role: TreeRole

    def __post_init__(self):
        if self.role is TreeRole.INCREASING:
            self._validate_increasing()
        else:
            self._validate_planar()

    def _validate_increasing(self) -> None:
        labels = []
        for node in self.root.preorder():
            if node.label is None:
                raise InvalidInputError("increasing trees need a label on every node")
            for child in node.children():
                if child.label is not None and child.label <= node.label:
                    raise InvalidInputError(
                        f"label {child.label} sits below the larger label {node.label}"
                    )
            labels.append(node.label)
        if sorted(labels) != list(range(1, len(labels) + 1)):
            raise InvalidInputError(f"labels must be exactly 1..{len(labels)}")

    def _validate_planar(self) -> None:
        if self.root.is_leaf:
            raise InvalidInputError("a planar binary tree needs at least one internal node")
        for node in self.root.preorder():
            if node.label is not None:
                raise InvalidInputError("planar binary trees are unlabeled")
            if (node.left is None) != (node.right is None):
                raise InvalidInputError("every internal node needs exactly two children")

    @property
    def size(self) -> int:
        """Node count for increasing trees, internal-node count for planar ones."""
        if self.role is TreeRole.INCREASING:
            return sum(1 for _ in self.root.preorder())
        return internal_count(self.root)

    def to_networkx(self) -> nx.DiGraph:
        """Parent -> child digraph.

        Increasing trees use their labels as node ids; planar trees number all
        nodes (leaves included) in pre-order and store the internal pre-order
        rank under ``rank``.
        """
        graph = nx.DiGraph(role=self.role.value)
        if self.role is TreeRole.INCREASING:
            for node in self.root.preorder():
                graph.add_node(node.label)
                for side, child in (("L", node.left), ("R", node.right)):
                    if child is not None:
                        graph.add_edge(node.label, child.label, side=side)
            return graph

        rank = 0
        next_id = 0
        stack = [(self.root, None, None)]
        while stack:
            node, parent, side = stack.pop()
            node_id = next_id
            next_id += 1
            attrs = {"leaf": node.is_leaf}
            if not node.is_leaf:
                rank += 1
                attrs["rank"] = rank
            graph.add_node(node_id, **attrs)
            if parent is not None:
                graph.add_edge(parent, node_id, side=side)
            if node.right is not None:
                stack.append((node.right, node_id, "R"))
            if node.left is not None:
                stack.append((node.left, node_id, "L"))
        return graph
