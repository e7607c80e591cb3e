import json
from typing import Iterable, List, Optional

import numpy as np
from tabulate import tabulate

from walk_partitions.walk_partitions.dressing import PartitionReport
from walk_partitions.walk_partitions.reduction import NodeAnnotation
from walk_partitions.walk_partitions.syntax_tree import SyntaxTree
from walk_partitions.walk_partitions.walk import Walk
from walk_partitions.walk_partitions.walksum.walk_sum import WalkSumDiagnostics

HEDGE_CHILD_SEPARATOR = "; "


class FormatStr:
    """
    Class for formatting text output of the walk_partitions commands.
    """

    @staticmethod
    def walk(w: Walk) -> str:
        return str(w)

    @staticmethod
    def walks(ws: Iterable[Walk]) -> str:
        """
        Method formats walks one per line.
        :param ws: Walks in output order.
        :return: Formatted string, empty for no walks.
        """
        return "\n".join(str(w) for w in ws)

    @staticmethod
    def tree(tree: SyntaxTree) -> str:
        """
        Method formats a syntax tree in bracket form: the base walk followed by one
        '[vertex: child; child]' group per hedge, children formatted the same way.
        :param tree: Syntax tree.
        :return: Formatted string, e.g. '1,2[1: 1,2,1][2: 2,2]'.
        """
        s = str(tree.base)
        for hedge in tree.hedges:
            children = HEDGE_CHILD_SEPARATOR.join(FormatStr.tree(c) for c in hedge.children)
            s += f"[{hedge.vertex}: {children}]"
        return s

    @staticmethod
    def _tree_dict(tree: SyntaxTree) -> dict:
        return {
            "base": str(tree.base),
            "contents": str(tree.contents),
            "hedges": [{"vertex": hedge.vertex,
                        "children": [FormatStr._tree_dict(c) for c in hedge.children]}
                       for hedge in tree.hedges],
        }

    @staticmethod
    def tree_json(tree: SyntaxTree) -> str:
        return json.dumps(FormatStr._tree_dict(tree), indent=2)

    @staticmethod
    def tree_dot(tree: SyntaxTree) -> str:
        """
        Method formats a syntax tree as a Graphviz digraph. Edges from a node to its
        children are labelled with the hedge vertex.
        :param tree: Syntax tree.
        :return: DOT source.
        """
        lines = ["digraph syntax_tree {", '  node [shape=box];']
        names = {}
        for node_id, node, _, _ in tree.nodes():
            name = f"n{len(names)}"
            names[node_id] = name
            lines.append(f'  {name} [label="{node.base}"];')
            if node_id:
                hedge_idx = node_id[-1][0]
                parent = tree.subtree(node_id[:-1])
                lines.append(f'  {names[node_id[:-1]]} -> {name} '
                             f'[label="{parent.hedges[hedge_idx].vertex}"];')
        lines.append("}")
        return "\n".join(lines)

    @staticmethod
    def annotation_table(rows: List[NodeAnnotation]) -> str:
        """
        Method shows the local depth and resummability of every syntax tree node.
        :param rows: Node annotations in pre-order.
        :return: Formatted table.
        """
        table = [[row.node, row.base, row.contents, row.local_depth,
                  "-" if row.resummable is None else ("yes" if row.resummable else "no")]
                 for row in rows]
        return tabulate(
            table,
            headers=["Node", "Base", "Contents", "Local depth", "Resummable"],
            tablefmt="fancy_grid",
            colalign=("left", "left", "left", "center", "center"),
        )

    @staticmethod
    def report_table(report: PartitionReport) -> str:
        table = [["Walks", report.walk_count], ["Classes", report.class_count],
                 ["Violations", len(report.violations)]]
        s = tabulate(table, tablefmt="fancy_grid", colalign=("left", "right"))
        if report.violations:
            s += "\n" + "\n".join(report.violations)
        return s

    @staticmethod
    def scalar(value: complex) -> str:
        value = complex(value)
        if value.imag == 0:
            return repr(float(value.real))
        return str(value)

    @staticmethod
    def matrix_json(matrix: np.ndarray, diagnostics: Optional[WalkSumDiagnostics] = None) -> str:
        """
        Method formats a weight block as JSON: its shape and its row-major entries as
        [real, imaginary] pairs, plus diagnostics when given.
        :param matrix: Complex matrix.
        :param diagnostics: Optional diagnostics of the computation.
        :return: JSON string.
        """
        data = {
            "shape": list(matrix.shape),
            "entries": [[[float(x.real), float(x.imag)] for x in row]
                        for row in np.asarray(matrix, dtype=complex)],
        }
        if diagnostics is not None:
            data["diagnostics"] = diagnostics.model_dump()
        return json.dumps(data, indent=2)
