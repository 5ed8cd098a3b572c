"""Pure-Python automata kernels.

Fallback backend for kadec._kernels; mirrors the compiled module
function-for-function, with state sets represented as int bitmasks.
Outputs are bit-identical to the compiled backend (same traversal
orders), which the test suite exploits for cross-checking.
"""
from __future__ import annotations


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def eps_closures(n: int, eps: list[int]) -> list[int]:
    """Reflexive-transitive closure of each state's ε-successor mask.

    ``eps[s]`` is the bitmask of direct ε-successors of s.  The ε-graph
    must be acyclic; a cycle raises ValueError.
    """
    WHITE, GRAY, DONE = 0, 1, 2
    color = [WHITE] * n
    out = [0] * n
    for root in range(n):
        if color[root] != WHITE:
            continue
        stack = [(root, iter(_bits(eps[root])))]
        color[root] = GRAY
        while stack:
            state, targets = stack[-1]
            advanced = False
            for t in targets:
                if color[t] == GRAY:
                    raise ValueError("cycle in epsilon graph")
                if color[t] == WHITE:
                    color[t] = GRAY
                    stack.append((t, iter(_bits(eps[t]))))
                    advanced = True
                    break
            if advanced:
                continue
            closure = 1 << state
            for t in _bits(eps[state]):
                closure |= out[t]
            out[state] = closure
            color[state] = DONE
            stack.pop()
    return out


def determinize(
    n: int,
    nlabels: int,
    masks: list[list[int]],
    init_mask: int,
    final_mask: int,
) -> tuple[list[list[int]], int, list[int]]:
    """Depth-first subset construction.

    ``masks[a][s]`` is the successor bitmask of state s on label a.
    Returns (delta, finals, subsets): ``delta[a][d]`` is the successor
    index of subset-state d on label a, ``finals`` a bitmask over
    subset-state indices, and ``subsets`` the represented masks in
    discovery order (the initial subset has index 0).
    """
    index: dict[int, int] = {init_mask: 0}
    subsets = [init_mask]
    rows: list[list[int]] = [[]]
    finals = 1 if (init_mask & final_mask) else 0
    stack = [0]
    while stack:
        d = stack.pop()
        cur = subsets[d]
        row = rows[d]
        for a in range(nlabels):
            table = masks[a]
            nxt = 0
            for s in _bits(cur):
                nxt |= table[s]
            idx = index.get(nxt)
            if idx is None:
                idx = len(subsets)
                index[nxt] = idx
                subsets.append(nxt)
                rows.append([])
                if nxt & final_mask:
                    finals |= 1 << idx
                stack.append(idx)
            row.append(idx)
    delta = [[rows[d][a] for d in range(len(subsets))] for a in range(nlabels)]
    return delta, finals, subsets


def hk_equiv(
    n: int,
    nlabels: int,
    delta: list[list[int]],
    finals_mask: int,
    init1: int,
    init2: int,
) -> tuple[list[int] | None, list[tuple[int, int]]]:
    """Hopcroft-Karp equivalence of two states of one DFA.

    ``delta[a][s]`` is the (total) transition table; ``finals_mask`` the
    accepting set.  Returns (None, merges) when init1 and init2 accept
    the same language, else (word, merges) where ``word`` is accepted
    from exactly one of them.  ``merges`` lists the state pairs unioned,
    in order.
    """
    parent = list(range(n))
    rank = [0] * n

    def find(s: int) -> int:
        root = s
        while parent[root] != root:
            root = parent[root]
        while parent[s] != root:
            parent[s], s = root, parent[s]
        return root

    # Work stack of (i, j, trace index); the trace tree records, per
    # pushed pair, the extending label and the parent pair's trace node,
    # so counter-example words are rebuilt without quadratic copying.
    trace_label: list[int] = []
    trace_prev: list[int] = []
    stack = [(init1, init2, -1)]
    merges: list[tuple[int, int]] = []
    while stack:
        i, j, t = stack.pop()
        ri, rj = find(i), find(j)
        if ri == rj:
            continue
        if ((finals_mask >> i) & 1) != ((finals_mask >> j) & 1):
            word: list[int] = []
            while t != -1:
                word.append(trace_label[t])
                t = trace_prev[t]
            word.reverse()
            return word, merges
        if rank[ri] < rank[rj]:
            ri, rj = rj, ri
        parent[rj] = ri
        if rank[ri] == rank[rj]:
            rank[ri] += 1
        merges.append((i, j))
        for a in range(nlabels):
            trace_label.append(a)
            trace_prev.append(t)
            stack.append((delta[a][i], delta[a][j], len(trace_label) - 1))
    return None, merges
