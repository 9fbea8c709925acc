"""Hot enumeration kernels: ternary PSM candidate scan and subset scan.

Every inner helper is written with bitwise integer operations only, so the
same source runs unchanged on a Python/NumPy ``int64`` array of candidates
(vectorised fallback) and, compiled by numba, on one scalar candidate at a
time inside an explicit loop.  Element/atom sets are bitmasks, which caps
universes at 62 members; the enumeration limits keep far below that.

Backend selection: ``ARGLP_NUMBA=0`` forces the NumPy path; otherwise numba
is used when importable.
"""

from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np

# kind codes understood by the subset scan
K_AF, K_RAF, K_AFRA, K_RAFN, K_ASAF, K_RAFD, K_AFRAD = range(7)

NUMPY_CHUNK = 1 << 16


def _identity(fn):
    return fn


def _build(jit):
    """Create the kernel set; ``jit`` is ``numba.njit`` or the identity."""

    @jit
    def eval_rule(i, Xt, Xn, P, N, cp, lp, la, ln):
        # Kleene value of the body of atom i as (is_true, is_not_false) bits;
        # positive literals read (Xt, Xn), negative literals read candidate (P, N)
        t = 1
        nf = 1
        for c in range(cp[i], cp[i + 1]):
            ct = 0
            cn = 0
            for l in range(lp[c], lp[c + 1]):
                a = la[l]
                if ln[l]:
                    ct = ct | ((N >> a) & 1)
                    cn = cn | (1 - ((P >> a) & 1))
                else:
                    ct = ct | ((Xt >> a) & 1)
                    cn = cn | ((Xn >> a) & 1)
            t = t & ct
            nf = nf & cn
        return t, nf

    @jit
    def defacc_af(S, full, a_id, a_src, a_tgt, s_id, s_src, s_tgt, args, amask):
        D = S & 0
        for k in range(a_src.shape[0]):
            D = D | (((S >> a_src[k]) & 1) << a_tgt[k])
        A = (S & 0) | full
        for k in range(a_src.shape[0]):
            A = A & ~((1 - ((D >> a_src[k]) & 1)) << a_tgt[k])
        return D, A

    @jit
    def defacc_raf(S, full, a_id, a_src, a_tgt, s_id, s_src, s_tgt, args, amask):
        D = S & 0
        for k in range(a_src.shape[0]):
            D = D | ((((S >> a_id[k]) & (S >> a_src[k])) & 1) << a_tgt[k])
        A = (S & 0) | full
        for k in range(a_src.shape[0]):
            ok = ((D >> a_id[k]) | (D >> a_src[k])) & 1
            A = A & ~((1 - ok) << a_tgt[k])
        return D, A

    @jit
    def defacc_afra(S, full, a_id, a_src, a_tgt, s_id, s_src, s_tgt, args, amask):
        # amask[k]: elements attacked by attack k directly or through their source
        D = S & 0
        for k in range(a_src.shape[0]):
            D = D | (amask[k] * ((S >> a_id[k]) & 1))
        A = (S & 0) | full
        for k in range(a_src.shape[0]):
            A = A & ~(amask[k] * (1 - ((D >> a_id[k]) & 1)))
        return D, A

    @jit
    def support_reach(R, S, s_id, s_src, s_tgt):
        # close R under supports that belong to S
        for _ in range(s_src.shape[0]):
            for q in range(s_src.shape[0]):
                R = R | ((((S >> s_id[q]) & (R >> s_src[q])) & 1) << s_tgt[q])
        return R

    @jit
    def rafn_reach(a, S, a_id, a_src, a_tgt, s_id, s_src, s_tgt):
        # everything argument a recursively attacks given S
        R = S & 0
        for k in range(a_src.shape[0]):
            if a_src[k] == a:
                R = R | (((S >> a_id[k]) & 1) << a_tgt[k])
        return support_reach(R, S, s_id, s_src, s_tgt)

    @jit
    def defacc_rafn(S, full, a_id, a_src, a_tgt, s_id, s_src, s_tgt, args, amask):
        D = S & 0
        for j in range(args.shape[0]):
            a = args[j]
            D = D | (rafn_reach(a, S, a_id, a_src, a_tgt, s_id, s_src, s_tgt) * ((S >> a) & 1))
        # acceptance follows paths through everything S does not defeat
        T = full & ~D
        A = (S & 0) | full
        for j in range(args.shape[0]):
            a = args[j]
            R = rafn_reach(a, T, a_id, a_src, a_tgt, s_id, s_src, s_tgt)
            A = A & ~(R * (1 - ((D >> a) & 1)))
        return D, A

    @jit
    def asaf_reach(k, S, a_id, a_src, a_tgt, s_id, s_src, s_tgt):
        # everything attack k extendedly defeats given S
        R = ((S & 0) | 1) << a_tgt[k]
        R = support_reach(R, S, s_id, s_src, s_tgt)
        E = R
        for j in range(a_src.shape[0]):
            E = E | (((R >> a_src[j]) & 1) << a_id[j])
        return E

    @jit
    def defacc_asaf(S, full, a_id, a_src, a_tgt, s_id, s_src, s_tgt, args, amask):
        D = S & 0
        for k in range(a_src.shape[0]):
            E = asaf_reach(k, S, a_id, a_src, a_tgt, s_id, s_src, s_tgt)
            D = D | (E * ((S >> a_id[k]) & 1))
        T = full & ~D
        A = (S & 0) | full
        for k in range(a_src.shape[0]):
            E = asaf_reach(k, T, a_id, a_src, a_tgt, s_id, s_src, s_tgt)
            A = A & ~(E * (1 - ((D >> a_id[k]) & 1)))
        return D, A

    @jit
    def defacc_rafd(S, full, a_id, a_src, a_tgt, s_id, s_src, s_tgt, args, amask):
        rounds = a_src.shape[0] + s_src.shape[0] + args.shape[0] + 1
        base = S & 0
        for k in range(a_src.shape[0]):
            base = base | ((((S >> a_id[k]) & (S >> a_src[k])) & 1) << a_tgt[k])
        D = S & 0
        for _ in range(rounds):
            nd = base
            for q in range(s_src.shape[0]):
                nd = nd | ((((S >> s_id[q]) & (D >> s_tgt[q])) & 1) << s_src[q])
            D = nd
        A = S & 0
        for _ in range(rounds):
            na = (S & 0) | full
            for k in range(a_src.shape[0]):
                ok = ((D >> a_id[k]) | (D >> a_src[k])) & 1
                na = na & ~((1 - ok) << a_tgt[k])
            for q in range(s_src.shape[0]):
                ok = ((D >> s_id[q]) | (A >> s_tgt[q])) & 1
                na = na & ~((1 - ok) << s_src[q])
            A = na
        return D, A

    @jit
    def defacc_afrad(S, full, a_id, a_src, a_tgt, s_id, s_src, s_tgt, args, amask):
        rounds = a_src.shape[0] + s_src.shape[0] + args.shape[0] + 1
        base = S & 0
        for k in range(a_src.shape[0]):
            base = base | (((S >> a_id[k]) & 1) << a_tgt[k])
        # greatest fixpoint: an attack and its source may keep each other defeated
        D = (S & 0) | full
        for _ in range(rounds):
            nd = base
            for k in range(a_src.shape[0]):
                nd = nd | (((D >> a_src[k]) & 1) << a_id[k])
            for q in range(s_src.shape[0]):
                nd = nd | ((((S >> s_id[q]) & (D >> s_tgt[q])) & 1) << s_src[q])
            D = nd
        A = S & 0
        for _ in range(rounds):
            na = (S & 0) | full
            for k in range(a_src.shape[0]):
                na = na & ~((1 - ((A >> a_src[k]) & 1)) << a_id[k])
                na = na & ~((1 - ((D >> a_id[k]) & 1)) << a_tgt[k])
            for q in range(s_src.shape[0]):
                ok = ((D >> s_id[q]) | (A >> s_tgt[q])) & 1
                na = na & ~((1 - ok) << s_src[q])
            A = na
        return D, A

    @jit
    def defacc(code, S, full, a_id, a_src, a_tgt, s_id, s_src, s_tgt, args, amask):
        if code == K_AF:
            return defacc_af(S, full, a_id, a_src, a_tgt, s_id, s_src, s_tgt, args, amask)
        if code == K_RAF:
            return defacc_raf(S, full, a_id, a_src, a_tgt, s_id, s_src, s_tgt, args, amask)
        if code == K_AFRA:
            return defacc_afra(S, full, a_id, a_src, a_tgt, s_id, s_src, s_tgt, args, amask)
        if code == K_RAFN:
            return defacc_rafn(S, full, a_id, a_src, a_tgt, s_id, s_src, s_tgt, args, amask)
        if code == K_ASAF:
            return defacc_asaf(S, full, a_id, a_src, a_tgt, s_id, s_src, s_tgt, args, amask)
        if code == K_RAFD:
            return defacc_rafd(S, full, a_id, a_src, a_tgt, s_id, s_src, s_tgt, args, amask)
        return defacc_afrad(S, full, a_id, a_src, a_tgt, s_id, s_src, s_tgt, args, amask)

    return SimpleNamespace(eval_rule=eval_rule, defacc=defacc)


# ---------------------------------------------------------------------------
# NumPy drivers

def _decode(c, free, fixP, fixN):
    P = np.full(c.shape, fixP, dtype=np.int64)
    N = np.full(c.shape, fixN, dtype=np.int64)
    rest = c.copy()
    for a in free:
        d = rest % 3
        rest //= 3
        P |= (d == 2).astype(np.int64) << a
        N |= (d == 0).astype(np.int64) << a
    return P, N


def _numpy_psm_scan(K, m, cp, lp, la, ln, fixP, fixN, free, derived):
    full = (1 << m) - 1
    total = 3 ** len(free)
    outP, outN = [], []
    for start in range(0, total, NUMPY_CHUNK):
        c = np.arange(start, min(total, start + NUMPY_CHUNK), dtype=np.int64)
        P, N = _decode(c, free, fixP, fixN)
        for f in derived:
            t, nf = K.eval_rule(f, P, full & ~N, P, N, cp, lp, la, ln)
            t = np.broadcast_to(np.asarray(t, dtype=np.int64), P.shape)
            nf = np.broadcast_to(np.asarray(nf, dtype=np.int64), P.shape)
            P = P | (t << f)
            N = N | ((1 - nf) << f)
        # every PSM is a fixpoint of the three-valued immediate consequence operator
        ok = np.ones(P.shape, dtype=bool)
        for i in range(m):
            t, nf = K.eval_rule(i, P, full & ~N, P, N, cp, lp, la, ln)
            ok &= (t == ((P >> i) & 1)) & (nf == 1 - ((N >> i) & 1))
        P, N = P[ok], N[ok]
        if P.size == 0:
            continue
        Wt = np.zeros_like(P)
        Wn = np.zeros_like(P)
        for _ in range(2 * m + 2):
            nt = np.zeros_like(P)
            nn = np.zeros_like(P)
            for i in range(m):
                t, nf = K.eval_rule(i, Wt, Wn, P, N, cp, lp, la, ln)
                nt |= t << i
                nn |= nf << i
            if np.array_equal(nt, Wt) and np.array_equal(nn, Wn):
                break
            Wt, Wn = nt, nn
        keep = (Wt == P) & (Wn == (full & ~N))
        outP.append(P[keep])
        outN.append(N[keep])
    if not outP:
        return np.zeros(0, np.int64), np.zeros(0, np.int64)
    return np.concatenate(outP), np.concatenate(outN)


def _numpy_subset_scan(K, code, n, a_id, a_src, a_tgt, s_id, s_src, s_tgt, args, amask):
    full = (1 << n) - 1
    found = []
    for start in range(0, 1 << n, NUMPY_CHUNK):
        S = np.arange(start, min(1 << n, start + NUMPY_CHUNK), dtype=np.int64)
        D, A = K.defacc(code, S, full, a_id, a_src, a_tgt, s_id, s_src, s_tgt, args, amask)
        D = np.broadcast_to(np.asarray(D, dtype=np.int64), S.shape)
        A = np.broadcast_to(np.asarray(A, dtype=np.int64), S.shape)
        found.append(S[((S & D) == 0) & (A == S)])
    return np.concatenate(found) if found else np.zeros(0, np.int64)


# ---------------------------------------------------------------------------
# numba drivers

def _build_numba():
    import numba

    K = _build(numba.njit(cache=False))
    eval_rule, defacc = K.eval_rule, K.defacc

    @numba.njit
    def psm_scan(m, cp, lp, la, ln, fixP, fixN, free, derived):
        full = (np.int64(1) << m) - 1
        k = free.shape[0]
        total = np.int64(1)
        for _ in range(k):
            total *= 3
        cap = 16
        outP = np.empty(cap, np.int64)
        outN = np.empty(cap, np.int64)
        count = 0
        for c in range(total):
            P = fixP
            N = fixN
            rest = c
            for j in range(k):
                d = rest % 3
                rest //= 3
                if d == 2:
                    P |= np.int64(1) << free[j]
                elif d == 0:
                    N |= np.int64(1) << free[j]
            for j in range(derived.shape[0]):
                f = derived[j]
                t, nf = eval_rule(f, P, full & ~N, P, N, cp, lp, la, ln)
                P |= t << f
                N |= (1 - nf) << f
            ok = True
            for i in range(m):
                t, nf = eval_rule(i, P, full & ~N, P, N, cp, lp, la, ln)
                if t != ((P >> i) & 1) or nf != 1 - ((N >> i) & 1):
                    ok = False
                    break
            if not ok:
                continue
            Wt = np.int64(0)
            Wn = np.int64(0)
            for _ in range(2 * m + 2):
                nt = np.int64(0)
                nn = np.int64(0)
                for i in range(m):
                    t, nf = eval_rule(i, Wt, Wn, P, N, cp, lp, la, ln)
                    nt |= t << i
                    nn |= nf << i
                if nt == Wt and nn == Wn:
                    break
                Wt = nt
                Wn = nn
            if Wt == P and Wn == (full & ~N):
                if count == cap:
                    cap *= 2
                    grownP = np.empty(cap, np.int64)
                    grownN = np.empty(cap, np.int64)
                    grownP[:count] = outP[:count]
                    grownN[:count] = outN[:count]
                    outP = grownP
                    outN = grownN
                outP[count] = P
                outN[count] = N
                count += 1
        return outP[:count].copy(), outN[:count].copy()

    @numba.njit
    def subset_scan(code, n, a_id, a_src, a_tgt, s_id, s_src, s_tgt, args, amask):
        full = (np.int64(1) << n) - 1
        cap = 16
        out = np.empty(cap, np.int64)
        count = 0
        for S in range(np.int64(1) << n):
            D, A = defacc(code, np.int64(S), full, a_id, a_src, a_tgt, s_id, s_src, s_tgt,
                          args, amask)
            if (S & D) == 0 and A == S:
                if count == cap:
                    cap *= 2
                    grown = np.empty(cap, np.int64)
                    grown[:count] = out[:count]
                    out = grown
                out[count] = S
                count += 1
        return out[:count].copy()

    return SimpleNamespace(psm_scan=psm_scan, subset_scan=subset_scan, defacc=defacc,
                           eval_rule=eval_rule, name="numba")


def _build_numpy():
    K = _build(_identity)
    return SimpleNamespace(
        psm_scan=lambda *a: _numpy_psm_scan(K, *a),
        subset_scan=lambda *a: _numpy_subset_scan(K, *a),
        defacc=K.defacc, eval_rule=K.eval_rule, name="numpy")


_BACKENDS = {}


def numba_available() -> bool:
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def default_backend_name() -> str:
    flag = os.environ.get("ARGLP_NUMBA", "1").strip().lower()
    if flag in ("0", "false", "no", "off") or not numba_available():
        return "numpy"
    return "numba"


def backend(name=None):
    """Return the kernel set ``name`` ('numba' or 'numpy'; default from the environment)."""
    name = name or default_backend_name()
    if name not in _BACKENDS:
        if name == "numba":
            _BACKENDS[name] = _build_numba()
        elif name == "numpy":
            _BACKENDS[name] = _build_numpy()
        else:
            raise ValueError(f"unknown kernel backend {name!r}")
    return _BACKENDS[name]
