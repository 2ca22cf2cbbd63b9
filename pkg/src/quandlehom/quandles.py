"""Finite quandles given by operation tables.

A quandle is a set X with a binary operation (a, b) -> a^b such that every
element is idempotent (a^a = a), every right translation x -> x^b is a
bijection, and the operation is right self-distributive:
(a^b)^c = (a^c)^(b^c).

Two concrete families matter here: the dihedral quandle R_n on Z/nZ with
a^b = 2b - a, and the octahedral quandle O_6 whose elements are the six
vertices of a regular octahedron, with a^b the image of a under the
quarter-turn about the axis through b (counterclockwise as seen from b
looking at the centre).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field


class QuandleError(ValueError):
    """Raised for malformed tables, bad parameters or failed axioms."""


@dataclass
class AxiomReport:
    """Outcome of an exhaustive axiom check.

    ``idempotence`` lists elements a with a^a != a, ``bijectivity`` lists
    columns b whose right translation is not a permutation, and
    ``distributivity`` lists triples (a, b, c) with (a^b)^c != (a^c)^(b^c).
    """

    idempotence: list = field(default_factory=list)
    bijectivity: list = field(default_factory=list)
    distributivity: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.idempotence or self.bijectivity or self.distributivity)

    def summary(self) -> str:
        if self.ok:
            return "pass"
        parts = []
        if self.idempotence:
            parts.append("idempotence fails at %s" % self.idempotence)
        if self.bijectivity:
            parts.append("columns not bijective: %s" % self.bijectivity)
        if self.distributivity:
            head = self.distributivity[:10]
            parts.append(
                "self-distributivity fails at %d triples, first %s"
                % (len(self.distributivity), head)
            )
        return "; ".join(parts)


class FiniteQuandle:
    """A finite quandle with elements 0..size-1 and table[a][b] = a^b."""

    __slots__ = ("size", "table", "name", "_columns", "_inv_columns")

    def __init__(self, table, name=None):
        rows = tuple(tuple(row) for row in table)
        n = len(rows)
        if n == 0:
            raise QuandleError("empty table")
        for row in rows:
            if len(row) != n:
                raise QuandleError("table is not square")
            for x in row:
                if not isinstance(x, int) or not 0 <= x < n:
                    raise QuandleError("table entry %r out of range 0..%d" % (x, n - 1))
        self.size = n
        self.table = rows
        self.name = name
        self._columns = tuple(
            tuple(rows[a][b] for a in range(n)) for b in range(n)
        )
        self._inv_columns = tuple(
            _invert_or_none(col) for col in self._columns
        )

    def apply(self, a, b):
        """Return a^b."""
        return self.table[a][b]

    def act_word(self, x, word):
        """Apply x -> x^{w_1 w_2 ... w_k} for a word of elements."""
        for w in word:
            x = self.table[x][w]
        return x

    def column(self, b):
        """The permutation a -> a^b as a tuple."""
        return self._columns[b]

    def column_inv(self, b):
        """The inverse translation a -> a^{b-bar}; requires axiom Q2."""
        inv = self._inv_columns[b]
        if inv is None:
            raise QuandleError("column %d is not a permutation" % b)
        return inv

    def elements(self):
        return range(self.size)

    def __eq__(self, other):
        return isinstance(other, FiniteQuandle) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        label = self.name or "quandle"
        return "<%s of size %d>" % (label, self.size)


def _invert_or_none(col):
    n = len(col)
    inv = [None] * n
    for a, image in enumerate(col):
        if inv[image] is not None:
            return None
        inv[image] = a
    return tuple(inv)


def make_dihedral(n, name=None):
    """The dihedral quandle R_n on Z/nZ with a^b = 2b - a."""
    if n < 3:
        raise QuandleError("dihedral quandle needs n >= 3, got %r" % n)
    table = [[(2 * b - a) % n for b in range(n)] for a in range(n)]
    return FiniteQuandle(table, name=name or ("R%d" % n))


# Octahedron vertices: 0 = +z, 1 = +x, 2 = +y, 3 = -z, 4 = -x, 5 = -y.
# Antipodes differ by 3, and the quarter turn about vertex 0 sends 1 to 2.
_OCT_COORDS = (
    (0, 0, 1),
    (1, 0, 0),
    (0, 1, 0),
    (0, 0, -1),
    (-1, 0, 0),
    (0, -1, 0),
)


@dataclass(frozen=True)
class OctahedronModel:
    """Unit-vector model of the octahedron used to build O_6."""

    coords: tuple = _OCT_COORDS

    def rotate_quarter(self, axis_vertex, v):
        # Right-handed quarter turn about the unit vector through axis_vertex:
        # R v = n (n.v) + n x v, exact over Z for coordinate axes.
        n = self.coords[axis_vertex]
        dot = n[0] * v[0] + n[1] * v[1] + n[2] * v[2]
        cross = (
            n[1] * v[2] - n[2] * v[1],
            n[2] * v[0] - n[0] * v[2],
            n[0] * v[1] - n[1] * v[0],
        )
        return (
            n[0] * dot + cross[0],
            n[1] * dot + cross[1],
            n[2] * dot + cross[2],
        )

    def label(self, v):
        return self.coords.index(v)


def make_octahedral(name="O6"):
    """The octahedral quandle O_6 built from quarter turns of the octahedron.

    a^b is the image of vertex a under the counterclockwise quarter turn
    about the axis through vertex b, viewed from b toward the centre; with
    the vertex labelling above this is the right-hand-rule turn, and 1^0 = 2.
    """
    model = OctahedronModel()
    table = [
        [model.label(model.rotate_quarter(b, model.coords[a])) for b in range(6)]
        for a in range(6)
    ]
    return FiniteQuandle(table, name=name)


def check_axioms(q):
    """Exhaustively check idempotence, column bijectivity and
    right self-distributivity; the report lists every violation."""
    report = AxiomReport()
    n = q.size
    t = q.table
    for a in range(n):
        if t[a][a] != a:
            report.idempotence.append(a)
    for b in range(n):
        if len(set(q.column(b))) != n:
            report.bijectivity.append(b)
    for a in range(n):
        for b in range(n):
            ab = t[a][b]
            for c in range(n):
                if t[ab][c] != t[t[a][c]][t[b][c]]:
                    report.distributivity.append((a, b, c))
    return report


def dual(q):
    """The dual quandle, with every right translation inverted."""
    n = q.size
    inv = [q.column_inv(b) for b in range(n)]
    table = [[inv[b][a] for b in range(n)] for a in range(n)]
    name = None
    if q.name:
        name = q.name + "-dual"
    return FiniteQuandle(table, name=name)


def check_isomorphism(mapping, q1, q2):
    """True iff mapping is a quandle isomorphism q1 -> q2."""
    if q1.size != q2.size:
        raise QuandleError("size mismatch: %d vs %d" % (q1.size, q2.size))
    m = tuple(mapping)
    if len(m) != q1.size or sorted(m) != list(range(q1.size)):
        raise QuandleError("mapping is not a bijection on 0..%d" % (q1.size - 1))
    for a in range(q1.size):
        for b in range(q1.size):
            if m[q1.apply(a, b)] != q2.apply(m[a], m[b]):
                return False
    return True


# The relabelling 2 <-> 5 identifies O_6 with its dual.
TAU_O6 = (0, 1, 5, 3, 4, 2)


def compose_perms(p, s):
    """(p o s)(x) = p[s[x]]."""
    return tuple(p[s[x]] for x in range(len(p)))


def invert_perm(p):
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def inner_subgroup(q, generator):
    """The cyclic group generated by the translation x -> x^generator,
    as a list of distinct permutations starting with the identity."""
    if not 0 <= generator < q.size:
        raise QuandleError("generator %r out of range" % (generator,))
    gen = q.column(generator)
    identity = tuple(range(q.size))
    perms = [identity]
    p = gen
    while p != identity:
        perms.append(p)
        p = compose_perms(gen, p)
    return perms


def inner_group(q):
    """All permutations generated by the right translations (closure)."""
    identity = tuple(range(q.size))
    gens = [q.column(b) for b in range(q.size)]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                pg = compose_perms(g, p)
                if pg not in seen:
                    seen.add(pg)
                    nxt.append(pg)
        frontier = nxt
    return sorted(seen)


def triple_action_table(q, base=0):
    """Map (a, b, c) -> base^{a b c} over all triples with b != a and b != c."""
    out = {}
    for a in range(q.size):
        for b in range(q.size):
            if b == a:
                continue
            for c in range(q.size):
                if b == c:
                    continue
                out[(a, b, c)] = q.act_word(base, (a, b, c))
    return out


def quandle_from_file(path):
    """Load a quandle table; axioms are re-checked and must pass.

    Format: first line n, then n lines of n integers (row a lists a^0..a^{n-1}).
    """
    with open(path) as fh:
        tokens = fh.read().split()
    if not tokens:
        raise QuandleError("empty quandle file %s" % path)
    n = int(tokens[0])
    body = tokens[1:]
    if len(body) != n * n:
        raise QuandleError(
            "expected %d entries after the size line, found %d" % (n * n, len(body))
        )
    table = [[int(body[a * n + b]) for b in range(n)] for a in range(n)]
    q = FiniteQuandle(table, name=path)
    report = check_axioms(q)
    if not report.ok:
        raise QuandleError("table in %s is not a quandle: %s" % (path, report.summary()))
    return q


def quandle_to_text(q):
    lines = [str(q.size)]
    for row in q.table:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def resolve_quandle(spec_str):
    """Parse a quandle spec such as 'r7', 'dihedral:9', 'o6' or a file path."""
    s = spec_str.lower()
    if s in ("o6", "octahedral"):
        return make_octahedral()
    if s.startswith("r") and s[1:].isdigit():
        return make_dihedral(int(s[1:]))
    if s.startswith("dihedral:"):
        return make_dihedral(int(s.split(":", 1)[1]))
    return quandle_from_file(spec_str)
