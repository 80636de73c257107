from .sbtree import (DEFAULT_MAX_HEIGHT, ROOT, ConstituencyReport, EdgeLabel, TreeNode, children, index_of, level,
                     level_size, level_values, mediant_parent_check, node_at, parent, path,
                     prefix_constituency_report, route, route_word, to_dot, tree_edges, tree_node)
from .symmetry import (ANCHORS, GROUP, D3Report, SymmetryReport, check_symmetry, composition_table, d3_check, f,
                       g, negate, sigma_zero, symmetry_map)
