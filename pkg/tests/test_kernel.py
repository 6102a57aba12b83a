"""Kernel equivalence: compiled vs pure twin, and agreement with the LP."""

import random

from lssrings import _purekernel, kernel
from lssrings.posmatch import is_positive_matching


def _verdict(impl, n, host, part):
    """Run one obstruction check on 1-based edges; True = no obstruction."""
    mate = [-1] * n
    for (u, v) in part:
        mate[u - 1], mate[v - 1] = v - 1, u - 1
    rest = [e for e in host if e not in set(part)]
    return impl(mate, [u - 1 for u, _ in rest], [v - 1 for _, v in rest])


def _all_matchings(edges):
    edges = sorted(edges)
    out = [frozenset()]

    def rec(cur, used, start):
        for idx in range(start, len(edges)):
            i, j = edges[idx]
            if i in used or j in used:
                continue
            out.append(frozenset(cur | {(i, j)}))
            rec(cur | {(i, j)}, used | {i, j}, idx + 1)

    rec(set(), set(), 0)
    return out


def test_backends_agree_exhaustively(all_n5):
    for g in all_n5:
        host = list(g.edge_labels())
        for m in _all_matchings(host):
            a = _verdict(kernel.obstruction_free, g.n, host, sorted(m))
            b = _verdict(_purekernel.obstruction_free, g.n, host, sorted(m))
            assert a == b


def test_filter_matches_lp_exactly(all_n5):
    """Acyclic iff the strict system is feasible, on the full small corpus."""
    rng = random.Random(3)
    for g in all_n5:
        host = list(g.edge_labels())
        matchings = _all_matchings(host)
        if len(matchings) > 24:
            matchings = rng.sample(matchings, 24)
        for m in matchings:
            screened = _verdict(kernel.obstruction_free, g.n, host, sorted(m))
            lp = is_positive_matching(host, m).is_positive
            assert screened == lp, (g.edge_labels(), sorted(m))


def test_rejection_is_sound_on_c4():
    host = [(1, 2), (2, 3), (3, 4), (1, 4)]
    assert not _verdict(kernel.obstruction_free, 4, host, [(1, 2), (3, 4)])
    assert not is_positive_matching(host, [(1, 2), (3, 4)]).is_positive
