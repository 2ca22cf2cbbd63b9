import pytest

from quandlehom import intlinalg
from quandlehom.chains import Chain, ChainError, boundary, f_map, g_map, length
from quandlehom.cocycles import eta_octahedral, evaluate, mochizuki
from quandlehom.kernels import (
    boundary_identity_catalog,
    build_slice,
    chain_to_vector,
    kernel_fg,
    kernel_to_text,
    named_cycle,
    push_forward,
    vector_to_chain,
    verify_boundary_identity,
    verify_catalog_identity,
    verify_named_cycle,
)
from quandlehom.quandles import make_dihedral, make_octahedral

from common import eta8_chain, zeta8_chain

R7 = make_dihedral(7)
O6 = make_octahedral()

P2 = {1: 2, 2: 4, 4: 5, 5: 1}
P4 = {1: 4, 2: 5, 4: 1, 5: 2}


def chain3(pairs, index=0):
    return Chain.from_signed_terms([(s, (0, index, c)) for s, c in pairs], 3, graded=True)


BLOCK_A = chain3(
    [
        (+1, (1, 3, 2)),
        (+1, (1, 6, 5)),
        (-1, (2, 1, 6)),
        (-1, (2, 3, 1)),
        (-1, (5, 4, 6)),
        (-1, (5, 6, 1)),
        (+1, (6, 1, 2)),
        (+1, (6, 4, 5)),
    ]
)
BLOCK_B = chain3(
    [
        (+1, (2, 5, 3)),
        (+1, (2, 6, 4)),
        (-1, (3, 1, 5)),
        (-1, (3, 5, 2)),
        (-1, (4, 2, 5)),
        (-1, (4, 6, 2)),
        (+1, (5, 1, 3)),
        (+1, (5, 2, 4)),
    ]
)
BLOCK_AB = chain3(
    [
        (+1, (1, 4, 3)),
        (+1, (1, 5, 4)),
        (-1, (3, 2, 6)),
        (-1, (3, 4, 1)),
        (-1, (4, 3, 6)),
        (-1, (4, 5, 1)),
        (+1, (6, 2, 3)),
        (+1, (6, 3, 4)),
    ]
)


def r7_member(alpha, beta):
    return alpha * BLOCK_A + beta * BLOCK_B + (alpha + beta) * BLOCK_AB


def test_r7_cell_kernel_rank_two_with_block_basis():
    sl = build_slice(R7, index=0, cell=0)
    assert len(sl.generators) == 36
    ker = kernel_fg(sl)
    assert ker.rank == 2
    for alpha, beta in ((1, 0), (0, 1)):
        vec = chain_to_vector(sl, r7_member(alpha, beta))
        assert intlinalg.in_lattice_span(ker.lattice_basis, vec)
    # conversely both lattice basis vectors lie in the block span
    block_vecs = [chain_to_vector(sl, r7_member(1, 0)), chain_to_vector(sl, r7_member(0, 1))]
    for v in ker.lattice_basis:
        assert intlinalg.rational_rank(block_vecs + [list(v)]) == 2


def test_r7_kernel_members_are_exact_cycles():
    for alpha, beta in ((1, 0), (0, 1), (2, -3), (1, 1)):
        c = r7_member(alpha, beta)
        assert not f_map(c)
        assert not g_map(c, R7)


def test_r7_support_census_sixteen_or_twentyfour():
    supports = set()
    for alpha in range(-3, 4):
        for beta in range(-3, 4):
            if alpha == 0 and beta == 0:
                continue
            supports.add(len(r7_member(alpha, beta)))
            # no two of alpha, beta, alpha+beta vanish together
            assert [alpha, beta, alpha + beta].count(0) <= 1
    assert supports == {16, 24}


def test_r7_minimal_support_is_sixteen():
    sl = build_slice(R7, index=0, cell=0)
    ker = kernel_fg(sl)
    best = None
    for a in range(-3, 4):
        for b in range(-3, 4):
            if a == 0 and b == 0:
                continue
            vec = [a * x + b * y for x, y in zip(*ker.lattice_basis)]
            support = sum(1 for v in vec if v)
            best = support if best is None else min(best, support)
    assert best == 16


O6_CELL_RANKS = {0: 6, 1: 3, 2: 3, 3: 0, 4: 3, 5: 3}


@pytest.mark.parametrize("cell", sorted(O6_CELL_RANKS))
def test_o6_cell_kernels_and_eta_vanishing(cell):
    sl = build_slice(O6, index=0, cell=cell)
    ker = kernel_fg(sl)
    assert ker.rank == O6_CELL_RANKS[cell]
    eta = eta_octahedral()
    for c in ker.chains():
        assert evaluate(eta, c) == 0
        assert not f_map(c) and not g_map(c, O6)


def o6_listed_cell0():
    return [
        chain3([(+1, (0, 3, 0)), (-1, (3, 0, 3))]),
        chain3([(+1, (0, 1, 4)), (+1, (0, 4, 1)), (-1, (3, 1, 4)), (-1, (3, 4, 1))]),
        chain3([(+1, (0, 2, 5)), (+1, (0, 5, 2)), (-1, (3, 2, 5)), (-1, (3, 5, 2))]),
        chain3([(+1, (1, 4, 0)), (+1, (4, 1, 0)), (-1, (1, 4, 3)), (-1, (4, 1, 3))]),
        chain3(
            [
                (+1, (1, 4, 0)),
                (+1, (4, 1, 0)),
                (+1, (2, 5, 3)),
                (+1, (5, 2, 3)),
                (-1, (3, 1, 4)),
                (-1, (3, 4, 1)),
                (-1, (3, 2, 5)),
                (-1, (3, 5, 2)),
            ]
        ),
        chain3(
            [
                (+1, (1, 4, 0)),
                (+1, (4, 1, 0)),
                (+1, (2, 5, 0)),
                (+1, (5, 2, 0)),
                (-1, (3, 1, 4)),
                (-1, (3, 4, 1)),
                (-1, (3, 2, 5)),
                (-1, (3, 5, 2)),
            ]
        ),
    ]


def o6_listed_cellp(p):
    p1, p2, p4 = p, P2[p], P4[p]
    return [
        chain3(
            [
                (+1, (0, 3, p2)),
                (+1, (0, p2, p4)),
                (+1, (0, p4, 3)),
                (-1, (3, p2, p4)),
                (-1, (3, p4, 3)),
            ]
        ),
        chain3(
            [
                (+1, (3, 0, p2)),
                (+1, (3, p1, 0)),
                (+1, (3, p2, p1)),
                (-1, (0, p1, 0)),
                (-1, (0, p2, p1)),
            ]
        ),
        chain3(
            [
                (+1, (p2, 0, 3)),
                (+1, (p2, 3, 0)),
                (+1, (p2, p1, p4)),
                (+1, (p2, p4, p1)),
                (+1, (0, p2, p4)),
                (+1, (0, p4, 3)),
                (+1, (3, p1, 0)),
                (+1, (3, p2, p1)),
                (-1, (0, p1, 0)),
                (-1, (0, p2, p1)),
                (-1, (p1, p4, p2)),
                (-1, (p4, p1, p2)),
                (-1, (3, p2, p4)),
                (-1, (3, p4, 3)),
            ]
        ),
    ]


def test_o6_listed_chains_span_their_cells():
    sl0 = build_slice(O6, index=0, cell=0)
    ker0 = kernel_fg(sl0)
    vecs = [chain_to_vector(sl0, c) for c in o6_listed_cell0()]
    assert intlinalg.rational_rank(vecs) == 6 == ker0.rank
    for v in vecs:
        assert intlinalg.in_lattice_span(ker0.lattice_basis, v)
    for p in (1, 2, 4, 5):
        sl = build_slice(O6, index=0, cell=p)
        ker = kernel_fg(sl)
        vecs = [chain_to_vector(sl, c) for c in o6_listed_cellp(p)]
        assert intlinalg.rational_rank(vecs) == 3 == ker.rank
        for v in vecs:
            assert intlinalg.in_lattice_span(ker.lattice_basis, v)


def test_kernel_serialization_is_deterministic():
    sl = build_slice(O6, index=0, cell=3)
    txt1 = kernel_to_text(kernel_fg(sl))
    txt2 = kernel_to_text(kernel_fg(build_slice(O6, index=0, cell=3)))
    assert txt1 == txt2
    assert "rank=0" in txt1


def test_vector_chain_roundtrip():
    sl = build_slice(O6, index=0, cell=0)
    ker = kernel_fg(sl)
    for vec in ker.lattice_basis:
        assert chain_to_vector(sl, vector_to_chain(sl, vec)) == list(vec)
    with pytest.raises(ChainError):
        chain_to_vector(sl, Chain.single(1, 0, 1, (0, 1, 2)))


# -- named cycles -----------------------------------------------------------


def test_named_cycles_match_transcription():
    chain, q, theta, expected, exp_len = named_cycle("zeta8")
    assert chain == zeta8_chain()
    assert (q.name, theta.name, expected) == ("R7", "zeta7", 6)
    chain, q, theta, expected, exp_len = named_cycle("eta8")
    assert chain == eta8_chain()
    assert (q.name, theta.name, expected) == ("O6", "eta", 1)


def test_verify_named_cycles():
    rep = verify_named_cycle("zeta8")
    assert rep.ok and rep.length == 8 and rep.value == 6
    rep = verify_named_cycle("eta8")
    assert rep.ok and rep.length == 8 and rep.value == 1


def test_named_cycle_unknown():
    with pytest.raises(ChainError):
        named_cycle("nope")


def test_perturbed_eta8_is_not_a_cycle():
    chain, q, theta, _, _ = named_cycle("eta8")
    flipped = chain + 2 * Chain.single(1, 0, 0, (0, 2, 1))  # flip the first sign
    assert boundary(flipped, q)


# -- boundary identities ----------------------------------------------------


def test_catalog_identities_all_verify():
    for name in sorted(boundary_identity_catalog()):
        assert verify_catalog_identity(name), name


def test_boundary_identity_direct_use():
    c = Chain.single(1, 0, 0, (0, 1, 0, 1))
    expected = boundary(c, O6)
    assert verify_boundary_identity((0, 0, (0, 1, 0, 1)), expected, +1, O6)
    assert not verify_boundary_identity((0, 0, (0, 1, 0, 1)), expected, -1, O6)
    with pytest.raises(ChainError):
        verify_boundary_identity((0, 0, (0, 1, 0)), expected, 1, O6)


# -- push-forward -----------------------------------------------------------


def test_push_forward_identity_and_cycles():
    from quandlehom.chains import project_pi

    base = project_pi(eta8_chain())
    assert push_forward(base, (), O6) == base
    eta = eta_octahedral()
    for gen in range(6):
        moved = push_forward(base, (gen,), O6)
        assert not boundary(moved, O6)
        assert evaluate(eta, moved) == evaluate(eta, base) == 1
    for word in ((0, 1), (2, 4, 5), (3, 3, 3)):
        moved = push_forward(base, word, O6)
        assert not boundary(moved, O6)
        assert evaluate(eta, moved) == 1


def test_push_forward_rejects_graded():
    with pytest.raises(ChainError):
        push_forward(eta8_chain(), (0,), O6)
