"""Sparse integer chains over a quandle, and the two face maps.

An m-term is a signed generator (n, u; a_1, ..., a_m): degree n, index u,
and a color tuple with adjacent entries distinct.  Chains are sparse integer
combinations of such generators.  Two coefficient sets are supported: the
trivial one (a single point; degree and index are a fixed 0 sentinel) and the
graded one Z x X on which a generator acts by (n, u)^a = (n + 1, u^a).

The color-deletion map f and the action-twisted deletion map g both drop any
output term whose colors have two equal adjacent entries.  Their sum is the
boundary; boundary o boundary = 0.
"""

from __future__ import annotations

from .quandles import FiniteQuandle, QuandleError


class ChainError(ValueError):
    pass


def term(degree, index, colors):
    colors = tuple(colors)
    for i in range(len(colors) - 1):
        if colors[i] == colors[i + 1]:
            raise ChainError("adjacent equal colors in %r" % (colors,))
    return (degree, index, colors)


def _is_degenerate(colors):
    return any(colors[i] == colors[i + 1] for i in range(len(colors) - 1))


class Chain:
    """A sparse integer combination of same-arity terms.

    ``terms`` maps (degree, index, colors) -> nonzero int.  For a trivial
    coefficient set every stored degree and index is 0.
    """

    __slots__ = ("arity", "graded", "terms")

    def __init__(self, arity, graded, terms=None):
        self.arity = arity
        self.graded = graded
        store = {}
        if terms:
            for t, coeff in terms.items() if isinstance(terms, dict) else terms:
                if coeff == 0:
                    continue
                degree, index, colors = t
                if len(colors) != arity:
                    raise ChainError("term %r has wrong arity, expected %d" % (t, arity))
                if _is_degenerate(colors):
                    raise ChainError("degenerate colors in %r" % (t,))
                if not graded and (degree != 0 or index != 0):
                    raise ChainError("trivial coefficients require degree=index=0")
                store[t] = store.get(t, 0) + coeff
                if store[t] == 0:
                    del store[t]
        self.terms = store

    @classmethod
    def zero(cls, arity, graded=True):
        return cls(arity, graded)

    @classmethod
    def single(cls, coeff, degree, index, colors, graded=True):
        return cls(len(tuple(colors)), graded, {term(degree, index, colors): coeff})

    @classmethod
    def from_signed_terms(cls, signed_terms, arity, graded=True):
        """Build from an iterable of (sign, term) pairs."""
        c = cls(arity, graded)
        for sign, t in signed_terms:
            c.terms[t] = c.terms.get(t, 0) + sign
            if c.terms[t] == 0:
                del c.terms[t]
        return c

    def _check_compatible(self, other):
        if self.arity != other.arity or self.graded != other.graded:
            raise ChainError("incompatible chains")

    def __add__(self, other):
        self._check_compatible(other)
        out = dict(self.terms)
        for t, c in other.terms.items():
            out[t] = out.get(t, 0) + c
            if out[t] == 0:
                del out[t]
        result = Chain(self.arity, self.graded)
        result.terms = out
        return result

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        result = Chain(self.arity, self.graded)
        result.terms = {t: -c for t, c in self.terms.items()}
        return result

    def __rmul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        result = Chain(self.arity, self.graded)
        if k != 0:
            result.terms = {t: k * c for t, c in self.terms.items()}
        return result

    def __eq__(self, other):
        return (
            isinstance(other, Chain)
            and self.arity == other.arity
            and self.graded == other.graded
            and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items_sorted(self):
        """Deterministic (term, coeff) listing: by degree, index, colors."""
        return sorted(self.terms.items())

    def key(self):
        """Hashable canonical form."""
        return (self.arity, self.graded, tuple(self.items_sorted()))

    def __repr__(self):
        if not self.terms:
            return "<zero %d-chain>" % self.arity
        bits = []
        for (n, u, colors), c in self.items_sorted():
            head = "%+d" % c
            if self.graded:
                bits.append("%s(%d,%d;%s)" % (head, n, u, ",".join(map(str, colors))))
            else:
                bits.append("%s(%s)" % (head, ",".join(map(str, colors))))
        return " ".join(bits)


def length(chain):
    """Sum of absolute coefficients of the reduced form."""
    return sum(abs(c) for c in chain.terms.values())


def degrees(chain):
    return sorted({t[0] for t in chain.terms})


def degree_bucket(chain, k):
    """The sub-chain of terms at degree k (graded chains only)."""
    if not chain.graded:
        raise ChainError("degree buckets need a graded chain")
    result = Chain(chain.arity, True)
    result.terms = {t: c for t, c in chain.terms.items() if t[0] == k}
    return result


def f_map(chain):
    """Color deletion: alternating sum over dropped positions, first sign
    negative; output terms with adjacent equal colors are discarded.
    Preserves degree and index, and never consults the quandle operation."""
    if chain.arity < 1:
        raise ChainError("f needs arity >= 1")
    out = {}
    for (n, u, colors), coeff in chain.terms.items():
        sign = -1
        for i in range(len(colors)):
            reduced = colors[:i] + colors[i + 1 :]
            if not _is_degenerate(reduced):
                t = (n, u, reduced)
                out[t] = out.get(t, 0) + sign * coeff
                if out[t] == 0:
                    del out[t]
            sign = -sign
    result = Chain(chain.arity - 1, chain.graded)
    result.terms = out
    return result


def g_map(chain, q):
    """Action-twisted deletion: dropping position i acts by a_i on the index
    and on the colors left of i, with alternating sign starting positive.
    Raises the degree by one on graded chains."""
    if chain.arity < 1:
        raise ChainError("g needs arity >= 1")
    if not isinstance(q, FiniteQuandle):
        raise QuandleError("g needs a quandle")
    table = q.table
    out = {}
    graded = chain.graded
    for (n, u, colors), coeff in chain.terms.items():
        sign = 1
        for i in range(len(colors)):
            ai = colors[i]
            reduced = tuple(table[colors[j]][ai] for j in range(i)) + colors[i + 1 :]
            if not _is_degenerate(reduced):
                if graded:
                    t = (n + 1, table[u][ai], reduced)
                else:
                    t = (0, 0, reduced)
                out[t] = out.get(t, 0) + sign * coeff
                if out[t] == 0:
                    del out[t]
            sign = -sign
    result = Chain(chain.arity - 1, graded)
    result.terms = out
    return result


def boundary(chain, q):
    return f_map(chain) + g_map(chain, q)


def project_pi(chain):
    """Forget degree and index, accumulating coefficients."""
    out = {}
    for (n, u, colors), coeff in chain.terms.items():
        t = (0, 0, colors)
        out[t] = out.get(t, 0) + coeff
        if out[t] == 0:
            del out[t]
    result = Chain(chain.arity, False)
    result.terms = out
    return result


def sigma_shift(chain, delta=1):
    """Shift every degree by delta (graded chains only)."""
    if not chain.graded:
        raise ChainError("sigma shift needs a graded chain")
    result = Chain(chain.arity, True)
    result.terms = {(n + delta, u, colors): c for (n, u, colors), c in chain.terms.items()}
    return result


def is_cycle(chain, q):
    return not boundary(chain, q)


def layered_check(chain, q):
    """Per-degree cycle test for graded chains.

    Returns a dict with one entry per relevant degree k recording whether
    g(T_{k-1}) + f(T_k) vanishes, plus the two end conditions: f kills the
    minimal-degree layer and g kills the maximal-degree layer.
    """
    if not chain.graded:
        raise ChainError("layered check needs a graded chain")
    ks = degrees(chain)
    report = {"layers": {}, "is_cycle": True, "min_degree_f_null": None, "max_degree_g_null": None}
    if not ks:
        return report
    lo, hi = ks[0], ks[-1]
    for k in range(lo, hi + 2):
        part = g_map(degree_bucket(chain, k - 1), q) + f_map(degree_bucket(chain, k))
        ok = not part
        report["layers"][k] = ok
        if not ok:
            report["is_cycle"] = False
    report["min_degree_f_null"] = not f_map(degree_bucket(chain, lo))
    report["max_degree_g_null"] = not g_map(degree_bucket(chain, hi), q)
    return report


def chain_to_text(chain):
    """Serialize: header `arity m graded|trivial`, then sorted term lines."""
    lines = ["arity %d %s" % (chain.arity, "graded" if chain.graded else "trivial")]
    for (n, u, colors), coeff in chain.items_sorted():
        lines.append("%d %d %d %s" % (coeff, n, u, " ".join(map(str, colors))))
    return "\n".join(lines) + "\n"


def chain_from_text(text):
    rows = [ln for ln in (ln.strip() for ln in text.splitlines()) if ln and not ln.startswith("#")]
    if not rows:
        raise ChainError("empty chain text")
    head = rows[0].split()
    if (
        len(head) != 3
        or head[0] != "arity"
        or not head[1].isdigit()
        or head[2] not in ("graded", "trivial")
    ):
        raise ChainError("bad chain header %r" % rows[0])
    arity = int(head[1])
    graded = head[2] == "graded"
    chain = Chain(arity, graded)
    for ln in rows[1:]:
        parts = [int(x) for x in ln.split()]
        if len(parts) != 3 + arity:
            raise ChainError("bad chain line %r" % ln)
        coeff, n, u = parts[0], parts[1], parts[2]
        colors = tuple(parts[3:])
        if not graded:
            n, u = 0, 0
        t = term(n, u, colors)
        chain.terms[t] = chain.terms.get(t, 0) + coeff
        if chain.terms[t] == 0:
            del chain.terms[t]
    return chain


def chain_from_file(path):
    with open(path) as fh:
        return chain_from_text(fh.read())


def chain_to_file(chain, path):
    with open(path, "w") as fh:
        fh.write(chain_to_text(chain))
