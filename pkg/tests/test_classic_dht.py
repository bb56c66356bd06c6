import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nthilbert.classic_dht import (
    SCALE,
    DhtWindowSpec,
    Signal,
    dht_forward,
    dht_inverse,
    dht_matrix,
    render,
    roundtrip_error,
)
from nthilbert.exactlin import mat_vec
from nthilbert.modmath import DomainError


def test_signal_basics():
    s = Signal([1, 2, 3], origin=-1)
    assert list(s.indices) == [-1, 0, 1]
    assert s[0] == 2 and s[5] == 0
    with pytest.raises(DomainError):
        Signal([])


def test_window_validation():
    with pytest.raises(DomainError):
        DhtWindowSpec(0)


def test_forward_delta():
    g = dht_forward(Signal.delta(0), (-9, 9))
    for k, v in g.items():
        assert v == (Fraction(1, k) if k % 2 else 0)


def test_forward_even_support_vanishes_at_even_k():
    f = Signal([3, 0, -2, 0, 5], origin=-2)
    g = dht_forward(f, (-10, 10))
    assert all(v == 0 for k, v in g.items() if k % 2 == 0)


def test_forward_four_ones_at_zero():
    g = dht_forward(Signal([1, 1, 1, 1]), (0, 0), DhtWindowSpec(3))
    assert g.samples == (Fraction(-4, 3),)


def test_window_clips_absolute_indices():
    f = Signal([1, 1, 1, 1])
    assert dht_forward(f, (0, 0), DhtWindowSpec(1)).samples == (Fraction(-1),)


def test_inverse_zero_and_delta():
    assert all(v == 0 for v in dht_inverse(Signal([0, 0, 0]), (-4, 4)).samples)
    f = dht_inverse(Signal.delta(1), (-6, 6))
    for n, v in f.items():
        assert v == (Fraction(-1, n - 1) if n % 2 == 0 else 0)


def test_render_applies_scale():
    g = dht_forward(Signal.delta(0), (1, 3))
    assert render(g) == pytest.approx([SCALE, 0.0, SCALE / 3])


def brute_roundtrip_at_zero(w):
    """Reconstruction of delta(0) at n=0: (2/pi)^2 * sum over odd |k|<=w of 1/k^2."""
    total = Fraction(0)
    for k in range(-w, w + 1):
        if k % 2:
            g_k = Fraction(1, k)
            total += -g_k / (0 - k)
    return (2 / math.pi) ** 2 * float(total)


@pytest.mark.parametrize("w", [1, 5, 21, 101])
def test_roundtrip_delta_matches_brute_force(w):
    err = roundtrip_error(Signal.delta(0), w)
    assert err.recovered[0] == pytest.approx(brute_roundtrip_at_zero(w), abs=1e-15)


def test_roundtrip_error_shrinks_with_window():
    errs = [roundtrip_error(Signal.delta(0), w).max_abs for w in (3, 11, 41, 161)]
    assert all(a > b for a, b in zip(errs, errs[1:]))
    assert errs[-1] < 0.01


def test_matrix_entries():
    D = dht_matrix(8)
    assert D[1, 0] == 1
    assert D[0, 1] == -1
    assert all(D[k, k] == 0 for k in range(8))
    assert D[5, 0] == Fraction(1, 5)


@pytest.mark.parametrize("bad", [0, 1, 3])
def test_matrix_rejects_bad_size(bad):
    with pytest.raises(DomainError):
        dht_matrix(bad)


@pytest.mark.parametrize("n", [2, 4, 8, 16, 64])
def test_matrix_structure(n):
    D = dht_matrix(n)
    for k in range(n):
        for j in range(n):
            assert D[k, j] == -D[j, k]
            assert (D[k, j] == 0) == ((k - j) % 2 == 0)
            if k and j:
                assert D[k, j] == D[k - 1, j - 1]


samples = st.lists(st.integers(-20, 20), min_size=1, max_size=12)


@given(samples)
def test_forward_equals_matrix_form(xs):
    n = len(xs) + len(xs) % 2
    xs = xs + [0] * (n - len(xs))
    g = dht_forward(Signal(xs), (0, n - 1))
    assert list(g.samples) == mat_vec(dht_matrix(n), xs)


@given(samples, st.integers(-10, 10))
def test_parity_separation(xs, origin):
    even = Signal([v if (origin + i) % 2 == 0 else 0 for i, v in enumerate(xs)], origin)
    odd = Signal([v if (origin + i) % 2 else 0 for i, v in enumerate(xs)], origin)
    ge = dht_forward(even, (-15, 15))
    go = dht_forward(odd, (-15, 15))
    assert all(v == 0 for k, v in ge.items() if k % 2 == 0)
    assert all(v == 0 for k, v in go.items() if k % 2)
