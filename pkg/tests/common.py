"""Shared transcription fixtures used as independent oracles across tests."""

from quandlehom.chains import Chain

# Length-8 cycle over (R_7, Z x R_7) pairing to 6 with the mod-7 cocycle.
ZETA8_TERMS = (
    (+1, (0, 0, (0, 6, 1))),
    (-1, (1, 5, (5, 1, 4))),
    (-1, (0, 0, (1, 6, 0))),
    (+1, (1, 2, (6, 3, 0))),
    (+1, (0, 0, (0, 1, 6))),
    (-1, (1, 2, (2, 6, 3))),
    (-1, (0, 0, (6, 1, 0))),
    (+1, (1, 5, (1, 4, 0))),
)

# Length-8 cycle over (O_6, Z x O_6) pairing to 1 with the mod-3 cocycle.
ETA8_TERMS = (
    (-1, (0, 0, (0, 2, 1))),
    (+1, (0, 0, (1, 5, 0))),
    (-1, (0, 0, (0, 1, 5))),
    (+1, (0, 0, (5, 4, 0))),
    (-1, (0, 0, (0, 5, 4))),
    (+1, (0, 0, (4, 2, 0))),
    (-1, (0, 0, (0, 4, 2))),
    (+1, (0, 0, (2, 1, 0))),
)

# Signed triple points of the two surface-knot colorings.
WEIGHT_TRIPLES_DIHEDRAL = (
    (+1, (0, 6, 1)),
    (-1, (5, 1, 4)),
    (-1, (1, 6, 0)),
    (+1, (6, 3, 0)),
    (+1, (0, 1, 6)),
    (-1, (2, 6, 3)),
    (-1, (6, 1, 0)),
    (+1, (1, 4, 0)),
)

WEIGHT_TRIPLES_OCTAHEDRAL = (
    (-1, (0, 2, 1)),
    (+1, (1, 5, 0)),
    (-1, (0, 1, 5)),
    (+1, (5, 4, 0)),
    (-1, (0, 5, 4)),
    (+1, (4, 2, 0)),
    (-1, (0, 4, 2)),
    (+1, (2, 1, 0)),
)


def zeta8_chain():
    return Chain.from_signed_terms(ZETA8_TERMS, arity=3, graded=True)


def eta8_chain():
    return Chain.from_signed_terms(ETA8_TERMS, arity=3, graded=True)


def random_chain(rng, q, arity, graded=True, nterms=6, degree_span=3, coeff_span=3):
    """A random reduced chain with in-range colors and nonzero coefficients."""
    chain = Chain(arity, graded)
    for _ in range(nterms):
        colors = [rng.randrange(q.size)]
        while len(colors) < arity:
            nxt = rng.randrange(q.size)
            if nxt != colors[-1]:
                colors.append(nxt)
        if graded:
            t = (rng.randrange(-degree_span, degree_span + 1), rng.randrange(q.size), tuple(colors))
        else:
            t = (0, 0, tuple(colors))
        coeff = rng.choice([k for k in range(-coeff_span, coeff_span + 1) if k])
        chain.terms[t] = chain.terms.get(t, 0) + coeff
        if chain.terms[t] == 0:
            del chain.terms[t]
    return chain
