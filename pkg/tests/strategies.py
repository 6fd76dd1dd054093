"""Hypothesis strategies for relations and posets."""

from hypothesis import strategies as st

from intposets.relation import IntRelation, full_mask, transitive_closure


@st.composite
def relations(draw, n_min=1, n_max=6):
    n = draw(st.integers(n_min, n_max))
    full = full_mask(n)
    return IntRelation(n, draw(st.integers(0, full)), draw(st.integers(0, full)))


@st.composite
def relation_pairs(draw, n_min=1, n_max=6):
    r = draw(relations(n_min, n_max))
    full = full_mask(r.n)
    return r, IntRelation(r.n, draw(st.integers(0, full)), draw(st.integers(0, full)))


@st.composite
def posets(draw, n_min=1, n_max=6, n=None):
    """Close a random subset of the pairs of a random linear order."""
    if n is None:
        n = draw(st.integers(n_min, n_max))
    order = draw(st.permutations(range(1, n + 1)))
    pairs = [(order[i], order[j]) for i in range(n) for j in range(i + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return transitive_closure(IntRelation.from_pairs(n, [p for p, k in zip(pairs, keep) if k]))


@st.composite
def poset_tuples(draw, k=2, n_min=1, n_max=6):
    n = draw(st.integers(n_min, n_max))
    return tuple(draw(posets(n=n)) for _ in range(k))
