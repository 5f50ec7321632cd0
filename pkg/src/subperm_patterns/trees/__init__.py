"""Binary increasing trees, planar binary trees and their bijections with permutations."""

from .models import LEAF, LabeledTree, TreeNode, TreeRole
from .increasing import (
    all_increasing_trees,
    descendant_count,
    phi,
    phi_inverse,
    subtree_at,
)
from .planar import (
    ShapeTest,
    all_planar_binary_trees,
    caterpillar_tree,
    has_strictly_binary_shape,
    is_caterpillar,
    is_strictly_binary,
    max_subtree_size,
    psi,
    psi_inverse,
)
from .serialization import tree_from_text, tree_to_text

__all__ = [
    # Models
    "LEAF",
    "LabeledTree",
    "TreeNode",
    "TreeRole",

    # Increasing trees
    "phi",
    "phi_inverse",
    "subtree_at",
    "descendant_count",
    "all_increasing_trees",

    # Planar binary trees
    "ShapeTest",
    "psi",
    "psi_inverse",
    "is_caterpillar",
    "is_strictly_binary",
    "has_strictly_binary_shape",
    "max_subtree_size",
    "all_planar_binary_trees",
    "caterpillar_tree",

    # Text format
    "tree_to_text",
    "tree_from_text",
]

__version__ = "0.1.0"
