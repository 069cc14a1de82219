"""Nice-form tree decompositions: leaf / introduce / forget / join nodes.

Every solver DP runs over the same skeleton.  Nodes are emitted in
postorder; each node's bag is a sorted tuple.  The final node always has an
empty bag, so a DP's answer is read off a single root state.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .decompose import TreeDecomposition


@dataclass
class NiceNode:
    kind: str  # "leaf" | "intro" | "forget" | "join"
    bag: Tuple[int, ...]
    v: Optional[int] = None
    left: Optional[int] = None
    right: Optional[int] = None


def _chain(nodes: List[NiceNode], top: int, from_bag: Tuple[int, ...],
           to_bag: Tuple[int, ...]) -> int:
    """Forget/introduce steps taking the state at ``top`` to ``to_bag``."""
    cur = set(from_bag)
    for v in sorted(set(from_bag) - set(to_bag), reverse=True):
        cur.discard(v)
        nodes.append(NiceNode("forget", tuple(sorted(cur)), v=v, left=top))
        top = len(nodes) - 1
    for v in sorted(set(to_bag) - set(from_bag)):
        cur.add(v)
        nodes.append(NiceNode("intro", tuple(sorted(cur)), v=v, left=top))
        top = len(nodes) - 1
    return top


def nice_nodes(td: TreeDecomposition) -> List[NiceNode]:
    """Postorder nice-form node list for a valid decomposition."""
    nbags = len(td.bags)
    nodes: List[NiceNode] = []
    if nbags == 0:
        nodes.append(NiceNode("leaf", ()))
        return nodes

    adj = [[] for _ in range(nbags)]
    for i, j in td.tree_edges:
        adj[i].append(j)
        adj[j].append(i)

    # Iterative postorder over the rooted bag tree.
    parent = [-1] * nbags
    order = []
    stack = [0]
    seen = [False] * nbags
    seen[0] = True
    while stack:
        x = stack.pop()
        order.append(x)
        for y in sorted(adj[x]):
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                stack.append(y)

    top_of = [-1] * nbags
    for x in reversed(order):
        bag = tuple(sorted(td.bags[x]))
        kids = [y for y in sorted(adj[x]) if parent[y] == x]
        if not kids:
            nodes.append(NiceNode("leaf", ()))
            top = _chain(nodes, len(nodes) - 1, (), bag)
        else:
            tops = []
            for y in kids:
                ybag = tuple(sorted(td.bags[y]))
                tops.append(_chain(nodes, top_of[y], ybag, bag))
            top = tops[0]
            for other in tops[1:]:
                nodes.append(NiceNode("join", bag, left=top, right=other))
                top = len(nodes) - 1
        top_of[x] = top

    root_bag = tuple(sorted(td.bags[0]))
    _chain(nodes, top_of[0], root_bag, ())
    return nodes
