# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same API and semantics as ``_kernels_py``."""

from heapq import heapify, heappop, heappush

BACKEND = "cython"


cdef inline long long _mod(long long v, long long p):
    v %= p
    if v < 0:
        v += p
    return v


cdef inline tuple _mul(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = <long>a[i] + <long>b[i]
    return tuple(out)


cdef inline tuple _div(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = <long>a[i] - <long>b[i]
    return tuple(out)


cdef inline bint _divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if <long>a[i] > <long>b[i]:
            return False
    return True


cpdef tuple mono_mul(tuple a, tuple b):
    return _mul(a, b)


cpdef tuple mono_div(tuple a, tuple b):
    return _div(a, b)


cpdef tuple mono_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef long x, y
    cdef list out = [0] * n
    for i in range(n):
        x = a[i]
        y = b[i]
        out[i] = x if x > y else y
    return tuple(out)


cpdef bint mono_divides(tuple a, tuple b):
    return _divides(a, b)


cpdef bint mono_coprime(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if <long>a[i] and <long>b[i]:
            return False
    return True


cpdef long mono_degree(tuple a):
    cdef long s = 0
    cdef Py_ssize_t i
    for i in range(len(a)):
        s += <long>a[i]
    return s


cpdef dict poly_add(dict a, dict b, long long p):
    cdef dict out = dict(a)
    cdef long long v
    if p:
        for m, c in b.items():
            v = _mod(<long long>out.get(m, 0) + <long long>c, p)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    else:
        for m, c in b.items():
            if m in out:
                w = out[m] + c
                if w:
                    out[m] = w
                else:
                    del out[m]
            else:
                out[m] = c
    return out


cpdef dict poly_neg(dict a, long long p):
    if p:
        return {m: _mod(-<long long>c, p) for m, c in a.items()}
    return {m: -c for m, c in a.items()}


cpdef dict poly_sub(dict a, dict b, long long p):
    return poly_add(a, poly_neg(b, p), p)


cpdef dict poly_scale(dict a, c, long long p):
    cdef long long cc
    if p:
        cc = _mod(<long long>c, p)
        if not cc:
            return {}
        return {m: _mod(<long long>v * cc, p) for m, v in a.items()}
    if not c:
        return {}
    return {m: v * c for m, v in a.items()}


cpdef dict poly_mul_term(dict a, tuple mono, c, long long p):
    cdef long long cc
    if p:
        cc = _mod(<long long>c, p)
        if not cc:
            return {}
        return {_mul(<tuple>m, mono): _mod(<long long>v * cc, p) for m, v in a.items()}
    if not c:
        return {}
    return {_mul(<tuple>m, mono): v * c for m, v in a.items()}


cpdef dict poly_shift(dict a, tuple mono):
    return {_mul(<tuple>m, mono): v for m, v in a.items()}


cpdef dict poly_mul(dict a, dict b, long long p):
    cdef dict out = {}
    cdef long long v
    cdef tuple m
    if len(a) < len(b):
        a, b = b, a
    if p:
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = _mul(<tuple>ma, <tuple>mb)
                v = _mod(<long long>out.get(m, 0) + <long long>ca * <long long>cb, p)
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return out
    for mb, cb in b.items():
        for ma, ca in a.items():
            m = _mul(<tuple>ma, <tuple>mb)
            if m in out:
                w = out[m] + ca * cb
                if w:
                    out[m] = w
                else:
                    del out[m]
            else:
                w = ca * cb
                if w:
                    out[m] = w
    return out


cpdef dict s_poly(tuple lm_f, dict tail_f, tuple lm_g, dict tail_g, long long p):
    cdef tuple lcm = mono_lcm(lm_f, lm_g)
    cdef dict a = poly_shift(tail_f, _div(lcm, lm_f))
    cdef dict b = poly_shift(tail_g, _div(lcm, lm_g))
    return poly_sub(a, b, p)


def normal_form(dict terms, list basis, negkey, long long p, bint track):
    cdef dict work = dict(terms)
    cdef list heap = [(negkey(m), m) for m in work]
    cdef dict rem = {}
    cdef list quots = [{} for _ in basis] if track else None
    cdef Py_ssize_t i, nb = len(basis)
    cdef tuple m, q, mm, lm
    cdef dict tail, qd
    cdef long long cv, v
    heapify(heap)
    lms = [b[0] for b in basis]
    while heap:
        m = heappop(heap)[1]
        c = work.pop(m, None)
        if c is None:
            continue
        i = 0
        while i < nb:
            if _divides(<tuple>lms[i], m):
                break
            i += 1
        if i == nb:
            rem[m] = c
            continue
        lm = <tuple>lms[i]
        tail = <dict>basis[i][1]
        q = _div(m, lm)
        if track:
            qd = <dict>quots[i]
            if q in qd:
                w = qd[q] + c
                if p:
                    w = _mod(<long long>w, p)
                if w:
                    qd[q] = w
                else:
                    del qd[q]
            else:
                qd[q] = c
        if p:
            cv = <long long>c
            for mt, ct in tail.items():
                mm = _mul(<tuple>mt, q)
                if mm in work:
                    v = _mod(<long long>work[mm] - cv * <long long>ct, p)
                    if v:
                        work[mm] = v
                    else:
                        del work[mm]
                else:
                    v = _mod(-cv * <long long>ct, p)
                    if v:
                        work[mm] = v
                        heappush(heap, (negkey(mm), mm))
        else:
            for mt, ct in tail.items():
                mm = _mul(<tuple>mt, q)
                d = c * ct
                if mm in work:
                    w = work[mm] - d
                    if w:
                        work[mm] = w
                    else:
                        del work[mm]
                else:
                    w = -d
                    if w:
                        work[mm] = w
                        heappush(heap, (negkey(mm), mm))
    return rem, quots
