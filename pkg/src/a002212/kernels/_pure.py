"""Pure-Python kernels for truncated-series arithmetic.

Coefficient vectors are plain lists of exact Python numbers (int or
fractions.Fraction); everything here is O(n^2) in the truncation length.
A compiled twin of this module lives in _speedups.pyx and is preferred at
import time when available.
"""

from fractions import Fraction

BACKEND = "python"


def _exact_div(num, den):
    # den is nonzero; keep ints when the division is trivial
    if den == 1:
        return num
    if den == -1:
        return -num
    if isinstance(num, int) and isinstance(den, int):
        return Fraction(num, den)
    return num / Fraction(den) if isinstance(den, int) else num / den


def mul_trunc(a, b, n):
    """First n coefficients of the product of coefficient vectors a and b."""
    if n <= 0:
        return []
    out = [0] * n
    la = min(len(a), n)
    lb = len(b)
    for i in range(la):
        ai = a[i]
        if ai == 0:
            continue
        jmax = min(lb, n - i)
        for j in range(jmax):
            bj = b[j]
            if bj != 0:
                out[i + j] += ai * bj
    return out


def div_trunc(a, b, n):
    """First n coefficients of a/b; b must have a nonzero constant term."""
    if n <= 0:
        return []
    if not b or b[0] == 0:
        raise ZeroDivisionError("division by a series with zero constant term")
    b0 = b[0]
    out = [0] * n
    lb = len(b)
    la = len(a)
    for k in range(n):
        acc = a[k] if k < la else 0
        jmax = min(lb, k + 1)
        for j in range(1, jmax):
            bj = b[j]
            if bj != 0:
                acc = acc - bj * out[k - j]
        out[k] = _exact_div(acc, b0)
    return out


def inv_trunc(b, n):
    """First n coefficients of 1/b."""
    return div_trunc([1], b, n)


def subst_series_many(ws, mid, n):
    """Coefficients 0..n-1 of each W(u(z)), where u(z) reverts z = u/(1+mid*u+u^2).

    Uses the coefficient extraction [z^m] W(u(z)) = [u^m] W(u)(1-u^2)Q(u)^{m-1}
    with Q(u) = 1 + mid*u + u^2, sweeping the powers of Q incrementally.
    Each entry of ws is a u-coefficient vector (treated as 0 beyond its length).
    """
    if n <= 0:
        return [[] for _ in ws]
    outs = []
    supports = []
    for w in ws:
        out = [0] * n
        out[0] = w[0] if w else 0
        outs.append(out)
        # sparse support of V = W*(1-u^2): v_j = w_j - w_{j-2}
        pairs = []
        lw = len(w)
        for j in range(min(lw + 2, n)):
            wj = w[j] if j < lw else 0
            wj2 = w[j - 2] if 0 <= j - 2 < lw else 0
            vj = wj - wj2
            if vj != 0:
                pairs.append((j, vj))
        supports.append(pairs)
    p = [1]  # Q^(m-1), truncated to degree n-1
    for m in range(1, n):
        lp = len(p)
        for out, pairs in zip(outs, supports):
            acc = 0
            for j, vj in pairs:
                if j > m:
                    break
                k = m - j
                if k < lp:
                    pk = p[k]
                    if pk != 0:
                        acc += vj * pk
            out[m] = acc
        # p <- p*Q, capped at degree n-1
        lnew = min(lp + 2, n)
        q = [0] * lnew
        for i in range(lp):
            pi = p[i]
            if pi == 0:
                continue
            q[i] += pi
            if i + 1 < lnew:
                q[i + 1] += mid * pi
            if i + 2 < lnew:
                q[i + 2] += pi
        p = q
    return outs


def subst_series(w, mid, n):
    """Coefficients 0..n-1 of W(u(z)); see subst_series_many."""
    return subst_series_many([w], mid, n)[0]
