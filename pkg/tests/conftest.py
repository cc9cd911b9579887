import random
from fractions import Fraction

import pytest

from diffres import CoeffSymbol, SymPoly


SYMBOL_POOL = [
    CoeffSymbol("a", 0, 0), CoeffSymbol("a", 1, 0), CoeffSymbol("a", 0, 1),
    CoeffSymbol("b", 0, 0), CoeffSymbol("b", 1, 0), CoeffSymbol("b", 0, 1),
    CoeffSymbol("a", 0, 0, 1), CoeffSymbol("b", 0, 0, 1),
]


def random_sympoly(rng: random.Random, max_terms: int = 4,
                   max_exp: int = 3) -> SymPoly:
    total = SymPoly.zero()
    for _ in range(rng.randint(0, max_terms)):
        coeff = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        term = SymPoly.const(coeff)
        for _ in range(rng.randint(0, 2)):
            sym = rng.choice(SYMBOL_POOL)
            term = term * SymPoly.symbol(sym) ** rng.randint(1, max_exp)
        total = total + term
    return total


@pytest.fixture
def rng():
    return random.Random(20240811)
