"""Exact kernels of the face-map pair on finite slices, and named checks.

A slice collects the arity-3 generators at one degree, optionally filtered
by index and by the value of u^{a b c} (the index every g-image of the
generator's full word reaches; g-null families are constrained to a single
such class).  The kernel of (f, g) on a slice is computed exactly: a
rational basis by Fraction elimination and an integer lattice basis by
unimodular reduction, then cross-checked through the chain maps themselves.

Also houses the two named length-8 cycles, the explicit boundary identities
used as regression anchors, and the push-forward of trivial-coefficient
chains along inner translations.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import intlinalg
from .chains import Chain, ChainError, boundary, f_map, g_map, is_cycle, length
from .cocycles import evaluate
from .quandles import FiniteQuandle, QuandleError


@dataclass
class SliceBasis:
    """Generators of one degree slice plus exact matrices of f and g.

    Matrix rows are indexed by the (sorted) arity-2 terms appearing in the
    images; columns follow ``generators``.
    """

    quandle: FiniteQuandle
    degree: int
    index: int | None
    cell: int | None
    generators: list
    f_rows: list
    g_rows: list


def build_slice(q, degree=0, index=None, cell=None):
    """Collect arity-3 generators at one degree.

    ``index`` restricts to one index; ``cell`` restricts to generators whose
    full color word sends their index to the given element (the class every
    same-cell g-connected family must share).
    """
    gens = []
    indices = range(q.size) if index is None else (index,)
    for u in indices:
        for a in range(q.size):
            for b in range(q.size):
                if b == a:
                    continue
                for c in range(q.size):
                    if c == b:
                        continue
                    if cell is not None and q.act_word(u, (a, b, c)) != cell:
                        continue
                    gens.append((degree, u, (a, b, c)))
    gens.sort()
    f_rows = _map_matrix(gens, lambda chain: f_map(chain))
    g_rows = _map_matrix(gens, lambda chain: g_map(chain, q))
    return SliceBasis(q, degree, index, cell, gens, f_rows, g_rows)


def _map_matrix(generators, image):
    columns = []
    row_keys = set()
    for gen in generators:
        img = image(Chain(3, True, {gen: 1}))
        columns.append(img.terms)
        row_keys.update(img.terms)
    row_keys = sorted(row_keys)
    return [[col.get(key, 0) for col in columns] for key in row_keys]


@dataclass
class KernelResult:
    slice: SliceBasis
    rational_basis: list
    lattice_basis: list

    @property
    def rank(self):
        return len(self.lattice_basis)

    def chains(self):
        return [vector_to_chain(self.slice, v) for v in self.lattice_basis]


def vector_to_chain(slice_basis, vector):
    chain = Chain(3, True)
    for gen, coeff in zip(slice_basis.generators, vector):
        if coeff:
            chain.terms[gen] = int(coeff)
    return chain


def chain_to_vector(slice_basis, chain):
    pos = {gen: i for i, gen in enumerate(slice_basis.generators)}
    vec = [0] * len(slice_basis.generators)
    for t, coeff in chain.terms.items():
        if t not in pos:
            raise ChainError("term %r is outside the slice" % (t,))
        vec[pos[t]] = coeff
    return vec


def kernel_fg(slice_basis):
    """Exact kernel of f and g together on the slice.

    Every lattice basis vector is re-verified through the chain maps, not
    the matrices.
    """
    rows = slice_basis.f_rows + slice_basis.g_rows
    ncols = len(slice_basis.generators)
    rational = intlinalg.rational_kernel_basis(rows, ncols)
    lattice = intlinalg.integer_kernel_basis(rows, ncols)
    if len(rational) != len(lattice):
        raise AssertionError("rational and integer kernel ranks disagree")
    result = KernelResult(slice_basis, rational, lattice)
    q = slice_basis.quandle
    for chain in result.chains():
        if f_map(chain) or g_map(chain, q):
            raise AssertionError("kernel vector fails the chain-map re-check")
    return result


def kernel_to_text(result):
    lines = [
        "slice quandle=%s degree=%d index=%s cell=%s generators=%d rank=%d"
        % (
            result.slice.quandle.name or "?",
            result.slice.degree,
            result.slice.index,
            result.slice.cell,
            len(result.slice.generators),
            result.rank,
        )
    ]
    for chain in result.chains():
        lines.append("vector " + " ".join(
            "%+d*(%d,%d;%s)" % (c, t[0], t[1], ",".join(map(str, t[2])))
            for t, c in chain.items_sorted()
        ))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# named cycles


_NAMED_CYCLES = {
    "zeta8": (
        "r7",
        (
            (+1, (0, 0, (0, 6, 1))),
            (-1, (1, 5, (5, 1, 4))),
            (-1, (0, 0, (1, 6, 0))),
            (+1, (1, 2, (6, 3, 0))),
            (+1, (0, 0, (0, 1, 6))),
            (-1, (1, 2, (2, 6, 3))),
            (-1, (0, 0, (6, 1, 0))),
            (+1, (1, 5, (1, 4, 0))),
        ),
        ("zeta", 7, 6, 8),
    ),
    "eta8": (
        "o6",
        (
            (-1, (0, 0, (0, 2, 1))),
            (+1, (0, 0, (1, 5, 0))),
            (-1, (0, 0, (0, 1, 5))),
            (+1, (0, 0, (5, 4, 0))),
            (-1, (0, 0, (0, 5, 4))),
            (+1, (0, 0, (4, 2, 0))),
            (-1, (0, 0, (0, 4, 2))),
            (+1, (0, 0, (2, 1, 0))),
        ),
        ("eta", None, 1, 8),
    ),
    # Shorter than the length-8 witnesses above: a single-degree 7-term cycle
    # with nonzero pairing, found by the exhaustive search.  Its five-term
    # family at index 5 sends every color word to the same element, the
    # configuration the published case analysis ruled out.
    "eta7": (
        "o6",
        (
            (-1, (0, 0, (0, 1, 0))),
            (+1, (0, 0, (1, 0, 1))),
            (+1, (0, 5, (0, 1, 4))),
            (+1, (0, 5, (1, 5, 4))),
            (-1, (0, 5, (5, 0, 1))),
            (+1, (0, 5, (5, 0, 4))),
            (-1, (0, 5, (5, 1, 5))),
        ),
        ("eta", None, 2, 7),
    ),
}


def named_cycle(name):
    """The embedded length-8 witness cycles, as (chain, quandle, cocycle)."""
    from .cocycles import resolve_cocycle
    from .quandles import resolve_quandle

    if name not in _NAMED_CYCLES:
        raise ChainError("unknown cycle %r (have: %s)" % (name, ", ".join(sorted(_NAMED_CYCLES))))
    qname, terms, (cname, cn, expected, expected_length) = _NAMED_CYCLES[name]
    chain = Chain.from_signed_terms(terms, arity=3, graded=True)
    return chain, resolve_quandle(qname), resolve_cocycle(cname, cn), expected, expected_length


@dataclass
class CycleReport:
    name: str
    is_cycle: bool
    length: int
    value: int
    expected_value: int
    expected_length: int
    residual: Chain | None

    @property
    def ok(self):
        return (
            self.is_cycle
            and self.length == self.expected_length
            and self.value == self.expected_value
        )

    def summary(self):
        if self.ok:
            return "%s: cycle ok, length %d, pairing %d" % (self.name, self.length, self.value)
        bits = []
        if not self.is_cycle:
            bits.append("boundary residual %r" % self.residual)
        if self.length != self.expected_length:
            bits.append("length %d != %d" % (self.length, self.expected_length))
        if self.value != self.expected_value:
            bits.append("pairing %d != %d" % (self.value, self.expected_value))
        return "%s: FAIL (%s)" % (self.name, "; ".join(bits))


def verify_named_cycle(name):
    chain, q, theta, expected, expected_length = named_cycle(name)
    res = boundary(chain, q)
    return CycleReport(
        name=name,
        is_cycle=not res,
        length=length(chain),
        value=evaluate(theta, chain),
        expected_value=expected,
        expected_length=expected_length,
        residual=res if res else None,
    )


# ---------------------------------------------------------------------------
# boundary identities


def verify_boundary_identity(four_term, expected, sign, q):
    """Check sign * boundary(four_term) == expected after reduction."""
    if len(four_term[2]) != 4:
        raise ChainError("need an arity-4 term")
    chain = Chain(4, True, {four_term: 1})
    return sign * boundary(chain, q) == expected


def _chain3(pairs):
    return Chain.from_signed_terms([(s, t) for s, t in pairs], arity=3, graded=True)


def boundary_identity_catalog():
    """The explicit six- and seven-term chains that are boundaries of a
    single arity-4 generator, instantiated at degree 0, index 0, with the
    standard generators (dihedral: a_i = i; octahedral: vertex labels)."""
    catalog = {}
    # R_7, length 6, layer sizes 2+4: chain = +boundary(0,0; 0,1,0,1).
    catalog["r7-2plus4"] = (
        "r7",
        (0, 0, (0, 1, 0, 1)),
        +1,
        _chain3(
            (
                (+1, (0, 0, (0, 1, 0))),
                (-1, (0, 0, (1, 0, 1))),
                (+1, (1, 0, (1, 0, 1))),
                (+1, (1, 0, (0, 6, 1))),
                (-1, (1, 2, (2, 1, 2))),
                (-1, (1, 2, (2, 0, 1))),
            )
        ),
    )
    # R_7, length 6, layer sizes 3+3: chain = -boundary(0,0; 6,0,1,0).
    catalog["r7-3plus3"] = (
        "r7",
        (0, 0, (6, 0, 1, 0)),
        -1,
        _chain3(
            (
                (+1, (0, 0, (0, 1, 0))),
                (-1, (0, 0, (6, 0, 1))),
                (-1, (0, 0, (6, 1, 0))),
                (+1, (1, 0, (1, 0, 6))),
                (-1, (1, 2, (3, 2, 0))),
                (-1, (1, 5, (0, 1, 0))),
            )
        ),
    )
    # R_7, length 7, layer sizes 3+4: chain = -boundary(0,0; 2,0,1,0).
    catalog["r7-3plus4"] = (
        "r7",
        (0, 0, (2, 0, 1, 0)),
        -1,
        _chain3(
            (
                (+1, (0, 0, (0, 1, 0))),
                (-1, (0, 0, (2, 0, 1))),
                (-1, (0, 0, (2, 1, 0))),
                (+1, (1, 0, (5, 1, 0))),
                (+1, (1, 0, (5, 0, 6))),
                (-1, (1, 2, (0, 2, 0))),
                (-1, (1, 4, (0, 1, 0))),
            )
        ),
    )
    # O_6, length 6, layer sizes 2+4: chain = +boundary(0,0; 0,1,0,1).
    catalog["o6-2plus4"] = (
        "o6",
        (0, 0, (0, 1, 0, 1)),
        +1,
        _chain3(
            (
                (+1, (0, 0, (0, 1, 0))),
                (-1, (0, 0, (1, 0, 1))),
                (+1, (1, 0, (0, 2, 1))),
                (+1, (1, 0, (1, 0, 1))),
                (-1, (1, 5, (5, 0, 1))),
                (-1, (1, 5, (5, 1, 5))),
            )
        ),
    )
    # O_6, length 6, layer sizes 3+3: chain = -boundary(0,0; 5,0,1,0).
    catalog["o6-3plus3"] = (
        "o6",
        (0, 0, (5, 0, 1, 0)),
        -1,
        _chain3(
            (
                (+1, (0, 0, (0, 1, 0))),
                (-1, (0, 0, (5, 0, 1))),
                (-1, (0, 0, (5, 1, 0))),
                (+1, (1, 0, (1, 0, 2))),
                (-1, (1, 5, (3, 5, 0))),
                (-1, (1, 4, (0, 1, 0))),
            )
        ),
    )
    return catalog


def verify_catalog_identity(name):
    from .quandles import resolve_quandle

    catalog = boundary_identity_catalog()
    if name not in catalog:
        raise ChainError("unknown identity %r (have: %s)" % (name, ", ".join(sorted(catalog))))
    qname, four_term, sign, expected = catalog[name]
    q = resolve_quandle(qname)
    return verify_boundary_identity(four_term, expected, sign, q)


# ---------------------------------------------------------------------------
# push-forward along inner translations


def push_forward(chain, word, q):
    """Apply the inner permutation word (a sequence of quandle elements, each
    acting as x -> x^w) entry-wise to a trivial-coefficient arity-3 chain."""
    if chain.graded:
        raise ChainError("push-forward acts on trivial-coefficient chains")
    result = Chain(chain.arity, False)
    for (_, _, colors), coeff in chain.terms.items():
        new_colors = tuple(q.act_word(x, word) for x in colors)
        t = (0, 0, new_colors)
        result.terms[t] = result.terms.get(t, 0) + coeff
        if result.terms[t] == 0:
            del result.terms[t]
    return result
