"""Text format for trees.

Increasing trees: ``(label L:<node> R:<node>)`` with absent children omitted,
e.g. ``(1 L:(3) R:(2))``. Planar binary trees: internal nodes ``(L:<node> R:<node>)``
and leaves ``*``, e.g. ``(L:* R:(L:* R:*))``.
"""

import logging
import re
from typing import List, Optional

from ..errors import InvalidInputError
from .models import LEAF, LabeledTree, TreeNode, TreeRole

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"\s*(\(|\)|L:|R:|\*|\d+)")


def _node_text(node: TreeNode, role: TreeRole) -> str:
    if role is TreeRole.PLANAR_BINARY:
        if node.is_leaf:
            return "*"
        return f"(L:{_node_text(node.left, role)} R:{_node_text(node.right, role)})"
    parts = [str(node.label)]
    if node.left is not None:
        parts.append(f"L:{_node_text(node.left, role)}")
    if node.right is not None:
        parts.append(f"R:{_node_text(node.right, role)}")
    return "(" + " ".join(parts) + ")"


def tree_to_text(t: LabeledTree) -> str:
    return _node_text(t.root, t.role)


def _tokenize(text: str) -> List[str]:
    tokens = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        match = _TOKEN.match(stripped, pos)
        if match is None:
            raise InvalidInputError(f"unexpected character at offset {pos} in {text!r}")
        tokens.append(match.group(1))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, tokens: List[str], source: str):
        self.tokens = tokens
        self.pos = 0
        self.source = source

    def peek(self) -> Optional[str]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected: Optional[str] = None) -> str:
        token = self.peek()
        if token is None or (expected is not None and token != expected):
            raise InvalidInputError(
                f"expected {expected or 'a token'} at token {self.pos} of {self.source!r}"
            )
        self.pos += 1
        return token

    def node(self) -> TreeNode:
        if self.peek() == "*":
            self.take()
            return LEAF
        self.take("(")
        label = None
        if self.peek() is not None and self.peek().isdigit():
            label = int(self.take())
        left = right = None
        if self.peek() == "L:":
            self.take()
            left = self.node()
        if self.peek() == "R:":
            self.take()
            right = self.node()
        self.take(")")
        return TreeNode(label=label, left=left, right=right)


def tree_from_text(text: str) -> LabeledTree:
    """Parses either tree format; the role follows from whether nodes carry labels."""
    parser = _Parser(_tokenize(text), text)
    root = parser.node()
    if parser.peek() is not None:
        raise InvalidInputError(f"trailing input after the tree in {text!r}")
    role = TreeRole.INCREASING if root.label is not None else TreeRole.PLANAR_BINARY
    return LabeledTree(root, role)
