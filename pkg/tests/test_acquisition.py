import numpy as np
import pytest

from xcbo.acquisition import (Incumbent, efi, expected_improvement,
                              prob_feasible)

from _complementary_oracles import mc_expected_improvement


def test_expected_improvement_examples():
    assert np.isclose(expected_improvement(1.3, 1, 1.3), 0.3989423,
                      atol=1e-7, rtol=0)
    assert expected_improvement(-1, 0, 1) == 2
    assert expected_improvement(3, 0, 1) == 0

    ei = expected_improvement(np.array([0., 1.]), np.array([1., 0.]), 0.5)
    assert ei.shape == (2,)
    assert ei[1] == 0


def test_expected_improvement_monte_carlo():
    rng = np.random.default_rng(2024)
    n_ok = 0
    for _ in range(100):
        mu = rng.uniform(-2, 2)
        sigma = rng.uniform(0.05, 3)
        f_min = rng.uniform(-2, 2)
        mean, se = mc_expected_improvement(mu, sigma, f_min, 10**6, rng)
        if abs(expected_improvement(mu, sigma, f_min) - mean) <= 3 * se:
            n_ok += 1
    assert n_ok >= 97


def test_expected_improvement_properties():
    rng = np.random.default_rng(7)
    mu = rng.uniform(-5, 5, size=1000)
    f_min = rng.uniform(-5, 5, size=1000)
    sigmas = np.linspace(0, 5, 11)

    previous = None
    for sigma in sigmas:
        ei = expected_improvement(mu, sigma, f_min)
        assert np.all(ei >= 0)
        assert np.all(ei >= np.maximum(f_min - mu, 0) - 1e-12)
        if previous is not None:
            assert np.all(ei >= previous - 1e-12)
        previous = ei

    sigma = rng.uniform(0.01, 3, size=1000)
    assert np.all(expected_improvement(mu, sigma, f_min + 0.1)
                  >= expected_improvement(mu, sigma, f_min) - 1e-12)

    # continuity at sigma -> 0+
    assert np.all(np.abs(expected_improvement(mu, 1e-12, f_min)
                         - np.maximum(f_min - mu, 0)) <= 1e-9)


def test_prob_feasible():
    assert prob_feasible([0], [1]) == 0.5
    assert prob_feasible([-1, -1], [0, 0]) == 1
    assert prob_feasible([1], [0]) == 0
    assert prob_feasible([], []) == 1

    rng = np.random.default_rng(1)
    mu_c = rng.normal(size=(200, 3))
    sigma_c = rng.uniform(0, 2, size=(200, 3))
    pf = prob_feasible(mu_c, sigma_c)
    assert pf.shape == (200,)
    assert np.all((pf >= 0) & (pf <= 1))

    # an extra certainly feasible constraint changes nothing
    pf_extra = prob_feasible(np.hstack([mu_c, -np.ones((200, 1))]),
                             np.hstack([sigma_c, np.zeros((200, 1))]))
    assert np.allclose(pf, pf_extra, atol=1e-15, rtol=0)

    with pytest.raises(ValueError):
        prob_feasible([0, 1], [1])


def test_efi():
    incumbent = Incumbent(f_min=0.5, feasible_exists=True)

    assert efi(0, 1, incumbent, [1], [0]) == 0

    ei = expected_improvement(0, 1, 0.5)
    assert np.isclose(efi(0, 1, incumbent, [-50, -80], [0.1, 1]), ei,
                      atol=1e-12, rtol=0)
    assert efi(0.2, 0.7, incumbent, [], []) == expected_improvement(0.2, 0.7, 0.5)

    no_incumbent = Incumbent(f_min=np.inf, feasible_exists=False)
    assert efi(0, 1, no_incumbent, [0], [1]) == 0.5


def test_incumbent_from_data():
    obj = [3., 1., 2., 0.5]
    con = [[-1, -1], [0.1, -1], [0, -2], [1, 1]]
    incumbent = Incumbent.from_data(obj, con)
    assert incumbent.feasible_exists
    assert incumbent.f_min == 2.

    incumbent = Incumbent.from_data([1., 2.], [[1.], [0.5]])
    assert not incumbent.feasible_exists

    incumbent = Incumbent.from_data([1., -2.], np.zeros((2, 0)))
    assert incumbent.f_min == -2.
