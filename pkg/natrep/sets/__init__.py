from .hfset import (HFSet, diamond, empty, from_elements, integer_set, is_constituent,
                    kuratowski, node_count, set_node_budget, singleton, structure_edges,
                    substitute, to_dot, transitive_closure, two_v, zermelo)
