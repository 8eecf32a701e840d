import pytest
from hypothesis import settings

import toricgeom as tg

settings.register_profile("suite", max_examples=25, deadline=None)
settings.load_profile("suite")


def build_fan_corpus():
    """A mixed corpus of >= 20 varieties used by the property tests."""
    P1 = tg.projective_space(1)
    P2 = tg.projective_space(2)
    dP1 = tg.del_pezzo_surface(1)
    corpus = {
        "P1": P1,
        "P2": P2,
        "P3": tg.projective_space(3),
        "H0": tg.hirzebruch_surface(0),
        "H1": tg.hirzebruch_surface(1),
        "H2": tg.hirzebruch_surface(2),
        "H3": tg.hirzebruch_surface(3),
        "dP1": dP1,
        "dP2": tg.del_pezzo_surface(2),
        "dP3": tg.del_pezzo_surface(3),
        "P1xP1": tg.product(P1, P1),
        "P1xP2": tg.product(P1, P2),
        "P1xdP1": tg.product(P1, dP1),
        "affine_quadrant": tg.affine_normal_toric_variety(
            tg.positive_hull([(1, 0), (0, 1)])),
        "U2": tg.affine_normal_toric_variety(
            tg.positive_hull([(-1, 1), (0, 1), (1, 1)])),
        "cqs_2_1": tg.cyclic_quotient_singularity(2, 1),
        "cqs_3_1": tg.cyclic_quotient_singularity(3, 1),
        "cqs_5_2": tg.cyclic_quotient_singularity(5, 2),
        "rays_only": tg.normal_toric_variety(
            [[1, 0], [0, 1], [-1, -1]], [[0], [1], [2]]),
        "torus_1": tg.torus(1),
        "cone_over_square": tg.affine_normal_toric_variety(
            tg.positive_hull([(1, 1, 1), (1, -1, 1), (-1, 1, 1), (-1, -1, 1)])),
        "A1xT": tg.normal_toric_variety([[1, 0]], [[0]], ambient_rank=2),
    }
    return corpus


@pytest.fixture(scope="session")
def fan_corpus():
    return build_fan_corpus()
