import random

import pytest

from cdring.errors import InvalidRing, ParseError
from cdring.quadratic import (
    ONE,
    THETA,
    ZERO,
    Element,
    elem_conj,
    elem_mul,
    elem_norm,
    format_linear,
    make_ring,
    parse_ring_spec,
)


@pytest.mark.parametrize("d, f, T, Nc", [
    (-1, 1, 0, 1),
    (5, 1, 1, -1),
    (-3, 2, 2, 4),
    (-5, 1, 0, 5),
    (-1, 2, 0, 4),
    (5, 2, 2, -4),
])
def test_make_ring(d, f, T, Nc):
    R = make_ring(d, f)
    assert (R.T, R.Nc) == (T, Nc)
    assert R.disc == R.T ** 2 - 4 * R.Nc
    assert R.is_maximal == (f == 1)


@pytest.mark.parametrize("d, f", [(0, 1), (1, 1), (4, 1), (-12, 1), (-5, 0), (-5, -2)])
def test_make_ring_rejects(d, f):
    with pytest.raises(InvalidRing):
        make_ring(d, f)


def test_mul_examples():
    R = make_ring(-1, 1)
    assert elem_mul(R, (1, 1), (1, -1)) == Element(2, 0)
    R = make_ring(-3, 2)
    assert elem_mul(R, THETA, THETA) == Element(-4, 2)
    assert elem_mul(R, (7, -3), ONE) == Element(7, -3)


def test_norm_examples():
    assert elem_norm(make_ring(-1, 1), (1, 1)) == 2
    assert elem_norm(make_ring(-5, 1), (1, 1)) == 6
    assert elem_norm(make_ring(13, 1), ONE) == 1


def test_theta_satisfies_min_poly(ring):
    t2 = elem_mul(ring, THETA, THETA)
    assert t2 - THETA.scale(ring.T) + ONE.scale(ring.Nc) == ZERO


def _rand_elem(rng, k=10**6):
    return Element(rng.randint(-k, k), rng.randint(-k, k))


def test_ring_axioms_random(ring):
    rng = random.Random(ring.d * 1000 + ring.f)
    mul = lambda u, v: elem_mul(ring, u, v)  # noqa: E731
    for _ in range(10_000):
        u, v, w = _rand_elem(rng), _rand_elem(rng), _rand_elem(rng)
        assert mul(mul(u, v), w) == mul(u, mul(v, w))
        assert mul(u, v) == mul(v, u)
        assert mul(u, v + w) == mul(u, v) + mul(u, w)


def test_norm_multiplicative_random(ring):
    rng = random.Random(ring.d * 77 + ring.f)
    for _ in range(10_000):
        u, v = _rand_elem(rng), _rand_elem(rng)
        assert elem_norm(ring, elem_mul(ring, u, v)) == elem_norm(ring, u) * elem_norm(ring, v)


def test_norm_is_product_with_conjugate(ring):
    rng = random.Random(5)
    for _ in range(200):
        u = _rand_elem(rng)
        assert elem_mul(ring, u, elem_conj(ring, u)) == Element(elem_norm(ring, u), 0)


def test_norm_positive_definite_imaginary():
    for d, f in [(-1, 1), (-5, 1), (-3, 2), (-7, 1)]:
        R = make_ring(d, f)
        for x in range(-15, 16):
            for y in range(-15, 16):
                n = elem_norm(R, (x, y))
                assert n >= 0
                assert (n == 0) == (x == 0 and y == 0)


def test_parse_ring_spec():
    R = parse_ring_spec("d=-5,f=1")
    assert (R.d, R.f) == (-5, 1)
    assert parse_ring_spec(" d = 13 , f = 3 ").f == 3
    with pytest.raises(ParseError):
        parse_ring_spec("d=-5")
    with pytest.raises(InvalidRing):
        parse_ring_spec("d=8,f=1")


@pytest.mark.parametrize("x, y, s", [
    (2, 0, "2"), (0, 1, "w"), (1, 1, "1+w"), (3, -2, "3-2*w"), (0, -1, "-w"), (-4, 5, "-4+5*w"),
])
def test_format_linear(x, y, s):
    assert format_linear(x, y) == s
