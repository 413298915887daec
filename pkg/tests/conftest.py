import pytest

from cacti.algebra import BialgebraPresentation
from cacti.catalog import sweedler4
from cacti.scalar import QQ


def rebuild(H, comult_edit=None, name="mutated"):
    """Copy a bialgebra by labels, optionally editing Delta (``{label: {(l, r): c}}``)."""
    lab = H.basis
    mult = {(lab[a], lab[b]): {lab[k]: c for k, c in v.items()} for (a, b), v in H.mult.items()}
    comult = {lab[i]: {(lab[a], lab[b]): c for (a, b), c in H.delta_basis(i).items()} for i in range(H.dim)}
    for key, terms in (comult_edit or {}).items():
        comult[key] = dict(terms)
    counit = {lab[i]: H.counit[i] for i in range(H.dim)}
    return BialgebraPresentation(name, H.field, lab, H.degrees, lab[H.unit], mult, comult, counit)


@pytest.fixture
def H4():
    return sweedler4(QQ)


@pytest.fixture
def broken_h4():
    """Sweedler's algebra with Delta(x) = x(x)1 + g(x)x + x(x)x: counital, not coassociative."""
    return rebuild(sweedler4(QQ), {"x": {("x", "1"): 1, ("g", "x"): 1, ("x", "x"): 1}}, "broken_h4")
