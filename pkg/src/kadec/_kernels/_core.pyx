# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled automata kernels: bitset-based twins of _core_py.

State sets cross the boundary as Python int bitmasks and are unpacked
into flat uint64 words; traversal orders match the pure backend exactly,
so both produce bit-identical results.
"""
from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.stdlib cimport free, malloc, realloc
from libc.string cimport memcpy, memset

ctypedef unsigned long long u64

cdef extern from *:
    """
    #define KADEC_CTZLL(x) __builtin_ctzll(x)
    """
    int KADEC_CTZLL(unsigned long long) nogil


cdef inline Py_ssize_t _words_for(Py_ssize_t nbits) nogil:
    return ((nbits + 63) >> 6) if nbits > 0 else 1


cdef int _mask_into(object mask, u64 *row, Py_ssize_t words) except -1:
    cdef bytes raw = mask.to_bytes(words * 8, "little")
    memcpy(row, <const unsigned char *> raw, words * 8)
    return 0


cdef object _mask_from(u64 *row, Py_ssize_t words):
    return int.from_bytes(PyBytes_FromStringAndSize(<char *> row, words * 8), "little")


def eps_closures(Py_ssize_t n, eps):
    """See _core_py.eps_closures."""
    if n == 0:
        return []
    cdef Py_ssize_t words = _words_for(n)
    cdef u64 *mat = <u64 *> malloc(n * words * sizeof(u64))
    cdef u64 *out = <u64 *> malloc(n * words * sizeof(u64))
    cdef char *color = <char *> malloc(n)
    cdef Py_ssize_t *fs = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
    cdef Py_ssize_t *fw = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
    cdef u64 *fb = <u64 *> malloc(n * sizeof(u64))
    if mat == NULL or out == NULL or color == NULL or fs == NULL or fw == NULL or fb == NULL:
        free(mat); free(out); free(color); free(fs); free(fw); free(fb)
        raise MemoryError()
    cdef Py_ssize_t root, s, t, w, sp
    cdef u64 bits
    cdef u64 *row
    cdef u64 *acc
    try:
        memset(out, 0, n * words * sizeof(u64))
        memset(color, 0, n)
        for s in range(n):
            _mask_into(eps[s], mat + s * words, words)
        for root in range(n):
            if color[root] != 0:
                continue
            color[root] = 1
            fs[0] = root
            fw[0] = 0
            fb[0] = mat[root * words]
            sp = 1
            while sp > 0:
                s = fs[sp - 1]
                w = fw[sp - 1]
                bits = fb[sp - 1]
                while bits == 0 and w + 1 < words:
                    w += 1
                    bits = mat[s * words + w]
                if bits != 0:
                    t = w * 64 + KADEC_CTZLL(bits)
                    fb[sp - 1] = bits & (bits - 1)
                    fw[sp - 1] = w
                    if color[t] == 1:
                        raise ValueError("cycle in epsilon graph")
                    if color[t] == 0:
                        color[t] = 1
                        fs[sp] = t
                        fw[sp] = 0
                        fb[sp] = mat[t * words]
                        sp += 1
                else:
                    acc = out + s * words
                    acc[s >> 6] |= (<u64> 1) << (s & 63)
                    row = mat + s * words
                    for w in range(words):
                        bits = row[w]
                        while bits:
                            t = w * 64 + KADEC_CTZLL(bits)
                            bits &= bits - 1
                            for_idx_or(acc, out + t * words, words)
                    color[s] = 2
                    sp -= 1
        return [_mask_from(out + s * words, words) for s in range(n)]
    finally:
        free(mat); free(out); free(color); free(fs); free(fw); free(fb)


cdef inline void for_idx_or(u64 *dst, u64 *src, Py_ssize_t words) nogil:
    cdef Py_ssize_t w
    for w in range(words):
        dst[w] |= src[w]


def determinize(Py_ssize_t n, Py_ssize_t nlabels, masks, object init_mask, object final_mask):
    """See _core_py.determinize."""
    cdef Py_ssize_t words = _words_for(n)
    cdef Py_ssize_t cap = 16
    cdef u64 *tab = <u64 *> malloc((nlabels * n if nlabels * n > 0 else 1) * words * sizeof(u64))
    cdef u64 *subsets = <u64 *> malloc(cap * words * sizeof(u64))
    cdef Py_ssize_t *trans = <Py_ssize_t *> malloc((cap * nlabels if nlabels > 0 else 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *stack = <Py_ssize_t *> malloc(cap * sizeof(Py_ssize_t))
    cdef u64 *fin = <u64 *> malloc(words * sizeof(u64))
    cdef u64 *cur = <u64 *> malloc(words * sizeof(u64))
    cdef u64 *tmp = <u64 *> malloc(words * sizeof(u64))
    if tab == NULL or subsets == NULL or trans == NULL or stack == NULL or fin == NULL or cur == NULL or tmp == NULL:
        free(tab); free(subsets); free(trans); free(stack); free(fin); free(cur); free(tmp)
        raise MemoryError()
    index = {}
    finals = 0
    cdef Py_ssize_t a, s, t, w, d, idx, count, sp, newcap
    cdef u64 bits
    cdef bint hit
    cdef u64 *newbuf
    cdef Py_ssize_t *newtrans
    cdef Py_ssize_t *newstack
    try:
        for a in range(nlabels):
            label_row = masks[a]
            for s in range(n):
                _mask_into(label_row[s], tab + (a * n + s) * words, words)
        _mask_into(final_mask, fin, words)
        _mask_into(init_mask, subsets, words)
        index[PyBytes_FromStringAndSize(<char *> subsets, words * 8)] = 0
        count = 1
        hit = False
        for w in range(words):
            if subsets[w] & fin[w]:
                hit = True
                break
        if hit:
            finals = 1
        stack[0] = 0
        sp = 1
        while sp > 0:
            sp -= 1
            d = stack[sp]
            memcpy(cur, subsets + d * words, words * sizeof(u64))
            for a in range(nlabels):
                memset(tmp, 0, words * sizeof(u64))
                for w in range(words):
                    bits = cur[w]
                    while bits:
                        t = w * 64 + KADEC_CTZLL(bits)
                        bits &= bits - 1
                        for_idx_or(tmp, tab + (a * n + t) * words, words)
                key = PyBytes_FromStringAndSize(<char *> tmp, words * 8)
                obj = index.get(key)
                if obj is None:
                    idx = count
                    count += 1
                    if count > cap:
                        newcap = cap * 2
                        newbuf = <u64 *> realloc(subsets, newcap * words * sizeof(u64))
                        if newbuf == NULL:
                            raise MemoryError()
                        subsets = newbuf
                        newtrans = <Py_ssize_t *> realloc(trans, (newcap * nlabels if nlabels > 0 else 1) * sizeof(Py_ssize_t))
                        if newtrans == NULL:
                            raise MemoryError()
                        trans = newtrans
                        newstack = <Py_ssize_t *> realloc(stack, newcap * sizeof(Py_ssize_t))
                        if newstack == NULL:
                            raise MemoryError()
                        stack = newstack
                        cap = newcap
                    index[key] = idx
                    memcpy(subsets + idx * words, tmp, words * sizeof(u64))
                    hit = False
                    for w in range(words):
                        if tmp[w] & fin[w]:
                            hit = True
                            break
                    if hit:
                        finals |= 1 << idx
                    stack[sp] = idx
                    sp += 1
                else:
                    idx = obj
                trans[d * nlabels + a] = idx
        delta = [[trans[d * nlabels + a] for d in range(count)] for a in range(nlabels)]
        subs = [_mask_from(subsets + d * words, words) for d in range(count)]
        return delta, finals, subs
    finally:
        free(tab); free(subsets); free(trans); free(stack); free(fin); free(cur); free(tmp)


def hk_equiv(Py_ssize_t n, Py_ssize_t nlabels, delta, object finals_mask,
             Py_ssize_t init1, Py_ssize_t init2):
    """See _core_py.hk_equiv."""
    cdef Py_ssize_t cap = (n + 1) * nlabels + 2
    cdef Py_ssize_t *dtab = <Py_ssize_t *> malloc((nlabels * n if nlabels * n > 0 else 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *parent = <Py_ssize_t *> malloc((n if n > 0 else 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *rank = <Py_ssize_t *> malloc((n if n > 0 else 1) * sizeof(Py_ssize_t))
    cdef char *fin = <char *> malloc(n if n > 0 else 1)
    cdef Py_ssize_t *si = <Py_ssize_t *> malloc(cap * sizeof(Py_ssize_t))
    cdef Py_ssize_t *sj = <Py_ssize_t *> malloc(cap * sizeof(Py_ssize_t))
    cdef Py_ssize_t *st = <Py_ssize_t *> malloc(cap * sizeof(Py_ssize_t))
    cdef Py_ssize_t *tl = <Py_ssize_t *> malloc(cap * sizeof(Py_ssize_t))
    cdef Py_ssize_t *tp = <Py_ssize_t *> malloc(cap * sizeof(Py_ssize_t))
    if (dtab == NULL or parent == NULL or rank == NULL or fin == NULL or
            si == NULL or sj == NULL or st == NULL or tl == NULL or tp == NULL):
        free(dtab); free(parent); free(rank); free(fin)
        free(si); free(sj); free(st); free(tl); free(tp)
        raise MemoryError()
    merges = []
    cdef Py_ssize_t a, s, i, j, t, ri, rj, sp, ntrace
    try:
        for a in range(nlabels):
            label_row = delta[a]
            for s in range(n):
                dtab[a * n + s] = label_row[s]
        for s in range(n):
            fin[s] = 1 if ((finals_mask >> s) & 1) else 0
            parent[s] = s
            rank[s] = 0
        si[0] = init1
        sj[0] = init2
        st[0] = -1
        sp = 1
        ntrace = 0
        while sp > 0:
            sp -= 1
            i = si[sp]
            j = sj[sp]
            t = st[sp]
            ri = i
            while parent[ri] != ri:
                ri = parent[ri]
            while parent[i] != ri:
                parent[i], i = ri, parent[i]
            rj = j
            while parent[rj] != rj:
                rj = parent[rj]
            while parent[j] != rj:
                parent[j], j = rj, parent[j]
            if ri == rj:
                continue
            i = si[sp]
            j = sj[sp]
            if fin[i] != fin[j]:
                word = []
                while t != -1:
                    word.append(tl[t])
                    t = tp[t]
                word.reverse()
                return word, merges
            if rank[ri] < rank[rj]:
                ri, rj = rj, ri
            parent[rj] = ri
            if rank[ri] == rank[rj]:
                rank[ri] += 1
            merges.append((i, j))
            for a in range(nlabels):
                tl[ntrace] = a
                tp[ntrace] = t
                si[sp] = dtab[a * n + i]
                sj[sp] = dtab[a * n + j]
                st[sp] = ntrace
                sp += 1
                ntrace += 1
        return None, merges
    finally:
        free(dtab); free(parent); free(rank); free(fin)
        free(si); free(sj); free(st); free(tl); free(tp)
