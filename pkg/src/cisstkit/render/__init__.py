"""Text renderers for tree families."""

from cisstkit.render.dot import PALETTE, render_family_dot, render_tree_dot, tree_color

__all__ = ["PALETTE", "render_family_dot", "render_tree_dot", "tree_color"]
