import math

import numpy as np
from hypothesis import strategies as st

from cyclicarea.geometry import CyclicPolygon


def rel(x, y):
    d = abs(x - y)
    return 0.0 if d == 0 else d / max(abs(x), abs(y))


@st.composite
def cyclic_polygons(draw, min_vertices=3, max_vertices=12):
    """Polygons from positive weights; every gap stays well above the floor."""
    m = draw(st.integers(min_vertices, max_vertices))
    w = draw(st.lists(st.floats(0.05, 1.0), min_size=m, max_size=m))
    radius = draw(st.floats(0.1, 100.0))
    start = draw(st.floats(0.0, 6.28))
    total = sum(w)
    return CyclicPolygon.from_gaps([2 * math.pi * x / total for x in w], radius, start=start)


def regular_gaps(m):
    return [2 * math.pi / m] * m


def diameter_triangle_gaps(seed):
    """Gaps (pi, a, pi - a): the first side is a diameter."""
    rng = np.random.default_rng(seed)
    a = float(rng.uniform(0.01, math.pi - 0.01))
    return [math.pi, a, math.pi - a]
