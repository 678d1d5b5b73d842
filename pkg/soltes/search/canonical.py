"""
Canonical labeling of uniform hypergraphs.

Vertices that lie in exactly the same edges (twins) are merged into blocks,
since any permutation of twins is an automorphism. The blocks are then
labeled by partition refinement followed by a backtracking search for the
lexicographically least encoding, pruned with the automorphisms found along
the way.
"""


class _Structure:
    def __init__(self, n, masks, marked):
        blocks = {}
        for v in range(n):
            incidence = 0
            for j, x in enumerate(masks):
                if x >> v & 1:
                    incidence |= 1 << j
            blocks.setdefault(incidence, []).append(v)

        self.blocks = list(blocks.values())
        self.sizes = [len(b) for b in self.blocks]
        self.edges = [
            [b for b, members in enumerate(self.blocks) if x >> members[0] & 1] for x in masks
        ]
        self.incidence = [[] for _ in self.blocks]
        for j, edge in enumerate(self.edges):
            for b in edge:
                self.incidence[b].append(j)
        self.marked = marked


def _initial_cells(structure):
    marked = set(structure.edges[structure.marked]) if structure.marked is not None else set()
    groups = {}
    for b in range(len(structure.blocks)):
        key = (structure.sizes[b], len(structure.incidence[b]), b in marked)
        groups.setdefault(key, []).append(b)
    return [groups[key] for key in sorted(groups)]


def _refine(structure, cells):
    color = [0] * len(structure.blocks)
    while True:
        for index, cell in enumerate(cells):
            for b in cell:
                color[b] = index

        edge_keys = [
            (j == structure.marked, tuple(sorted(color[b] for b in edge)))
            for j, edge in enumerate(structure.edges)
        ]

        refined = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups = {}
            for b in cell:
                key = tuple(sorted(edge_keys[j] for j in structure.incidence[b]))
                groups.setdefault(key, []).append(b)
            refined.extend(groups[key] for key in sorted(groups))

        if len(refined) == len(cells):
            return cells
        cells = refined


class _Labeler:
    def __init__(self, structure):
        self.structure = structure
        self.best = None
        self.best_order = None
        self.automorphisms = []

    def search(self, cells, path):
        cells = _refine(self.structure, cells)
        target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            self._leaf([cell[0] for cell in cells])
            return

        cell = cells[target]
        tried = []
        for b in cell:
            if tried and self._in_tried_orbit(b, tried, path):
                continue
            tried.append(b)
            rest = [x for x in cell if x != b]
            self.search(cells[:target] + [[b], rest] + cells[target + 1:], path + [b])

    def _in_tried_orbit(self, b, tried, path):
        generators = [g for g in self.automorphisms if all(g[p] == p for p in path)]
        if not generators:
            return False

        parent = list(range(len(self.structure.blocks)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in generators:
            for x, y in enumerate(g):
                parent[find(x)] = find(y)

        return find(b) in {find(a) for a in tried}

    def _leaf(self, order):
        key = _encode(self.structure, order)
        if self.best is None or key < self.best:
            self.best = key
            self.best_order = order
        elif key == self.best:
            automorphism = [0] * len(order)
            for a, b in zip(order, self.best_order):
                automorphism[a] = b
            self.automorphisms.append(automorphism)


def _encode(structure, order):
    position = {b: p for p, b in enumerate(order)}
    sizes = tuple(structure.sizes[b] for b in order)
    edges = [sum(1 << position[b] for b in edge) for edge in structure.edges]
    marked = edges[structure.marked] if structure.marked is not None else -1
    return sizes, tuple(sorted(edges)), marked


class CanonicalForm:
    """The outcome of canonical labeling.

    `code` identifies the isomorphism class (of the hypergraph together with
    its marked edge, if any). `order` lists the original vertices in
    canonical order. `edge_ranks[j]` is edge j's bit mask over canonical
    block positions, so comparing ranks compares edges canonically.
    """

    def __init__(self, code, order, edge_ranks):
        self.code = code
        self.order = order
        self.edge_ranks = edge_ranks

    def relabeling(self):
        """Maps each original vertex to its canonical label."""
        result = [0] * len(self.order)
        for label, v in enumerate(self.order):
            result[v] = label
        return result


def canonize(n, k, masks, marked=None):
    """Canonically labels the hypergraph with edge bit masks `masks`.

    `marked` is an optional edge index that isomorphisms must preserve.
    """
    structure = _Structure(n, masks, marked)
    labeler = _Labeler(structure)
    labeler.search(_initial_cells(structure), [])

    order = [v for b in labeler.best_order for v in structure.blocks[b]]
    position = {b: p for p, b in enumerate(labeler.best_order)}
    edge_ranks = [sum(1 << position[b] for b in edge) for edge in structure.edges]
    return CanonicalForm(_to_bytes(n, k, labeler.best), order, edge_ranks)


def _to_bytes(n, k, key):
    sizes, edges, marked = key
    width = max(1, (len(sizes) + 7) // 8)
    out = bytearray()
    out += n.to_bytes(2, 'big')
    out += k.to_bytes(2, 'big')
    out += len(sizes).to_bytes(2, 'big')
    out += len(edges).to_bytes(4, 'big')
    for size in sizes:
        out += size.to_bytes(2, 'big')
    for edge in edges:
        out += edge.to_bytes(width, 'big')
    out += (marked + 1).to_bytes(width + 1, 'big')
    return bytes(out)


def canonical_code(H):
    """Bytes that are equal for two hypergraphs exactly when they are isomorphic."""
    return canonize(H.n, H.k, H.masks).code


def canonical_hypergraph(H):
    """The member of H's isomorphism class in canonical labeling."""
    return H.relabel(canonize(H.n, H.k, H.masks).relabeling())
