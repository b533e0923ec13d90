"""
Strongly connected components of a reachability graph.

Tarjan's algorithm with an explicit stack, so deep graphs do not hit the
recursion limit.
"""


def strongly_connected_components(graph):
    """
    Args:
        graph: (ReachGraph) the graph.

    Returns:
        list: components as sets of vertex indices, in the order Tarjan's
            algorithm closes them (sinks first).
    """
    size = len(graph.vertices)
    index = [None] * size
    lowlink = [0] * size
    on_stack = [False] * size
    stack = []
    components = []
    counter = 0

    for start in range(size):
        if index[start] is not None:
            continue

        work = [(start, 0)]
        while work:
            v, pos = work.pop()
            if pos == 0:
                index[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True

            successors = graph.out_edges[v]
            descended = False
            while pos < len(successors):
                u = successors[pos][1]
                pos += 1
                if index[u] is None:
                    work.append((v, pos))
                    work.append((u, 0))
                    descended = True
                    break
                elif on_stack[u]:
                    lowlink[v] = min(lowlink[v], index[u])
            if descended:
                continue

            if lowlink[v] == index[v]:
                component = set()
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    component.add(w)
                    if w == v:
                        break
                components.append(component)

            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])

    return components
