import random

import pytest

from nakayama.algebra import enumerate_algebras
from nakayama.complexes import stalk
from nakayama.derived import tau


def orbit_corpus(count, seed=7, max_n=9, max_depth=4):
    """Deterministic sample of (algebra, start, complex) with complexes from short tau orbits."""
    rng = random.Random(seed)
    pools = {n: list(enumerate_algebras(n)) for n in range(3, max_n + 1)}
    out = []
    while len(out) < count:
        n = rng.randint(3, max_n)
        a = rng.choice(pools[n])
        i = rng.randint(1, n)
        x = stalk(a, i)
        for _ in range(rng.randint(0, max_depth)):
            x = tau(x)
        out.append((a, i, x))
    return out


@pytest.fixture(scope="session")
def corpus():
    return orbit_corpus(120)
