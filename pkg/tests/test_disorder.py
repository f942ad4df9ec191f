import math

import numpy as np
import pytest
from scipy import integrate

from src.disorder import CauchyLaw, ConstantLaw, GaussianLaw, UniformLaw, law_from_spec
from src.ensemble import realization_rng
from src.errors import DivergentMomentError, ParameterError, UnsupportedLawError


@pytest.mark.parametrize("law", [CauchyLaw(0.3, 2.0), UniformLaw(-1.0, 2.0), GaussianLaw(0.5, 0.7)])
def test_density_is_normalized(law):
    lo, hi = law.support()
    total, _ = integrate.quad(law.density, lo, hi, limit=200)
    assert total == pytest.approx(1.0, abs=1e-7)


@pytest.mark.parametrize("law, expected", [
    (CauchyLaw(0.0, 2.0), 1.0 / (2.0 * math.pi)),
    (UniformLaw(-1.0, 3.0), 0.25),
    (GaussianLaw(0.0, 1.0), 1.0 / math.sqrt(2.0 * math.pi)),
])
def test_density_sup(law, expected):
    assert law.density_sup() == pytest.approx(expected)


def test_closed_form_moments():
    assert CauchyLaw().abs_moment(0.5) == pytest.approx(math.sqrt(2.0))
    assert UniformLaw(0.0, 1.0).abs_moment(2.0) == pytest.approx(1.0 / 3.0)
    assert UniformLaw(-1.0, 1.0).abs_moment(1.0) == pytest.approx(0.5)
    assert GaussianLaw(0.0, 2.0).abs_moment(2.0) == pytest.approx(2.0)
    assert ConstantLaw(-3.0).abs_moment(0.5) == pytest.approx(math.sqrt(3.0))


def test_quadrature_moment_matches_sampling():
    law = GaussianLaw(1.0, 0.5)
    samples = law.sample(realization_rng(0, 0), 200_000)
    assert law.abs_moment(1.5) == pytest.approx(np.mean(np.abs(samples) ** 1.5), rel=1e-2)


def test_cauchy_moment_of_order_one_diverges():
    with pytest.raises(DivergentMomentError):
        CauchyLaw().abs_moment(1.0)


@pytest.mark.parametrize("law", [CauchyLaw(0.5, 1.5), UniformLaw(-2.0, 1.0), GaussianLaw(0.0, 3.0)])
def test_quantile_inverts_cdf(law):
    p = np.array([0.1, 0.3, 0.5, 0.9])
    assert np.allclose(law.cdf(law.quantile(p)), p)


def test_characteristic_function_modulus():
    assert CauchyLaw(0.0, 1.0).char_modulus(1.0) == pytest.approx(math.exp(-1.0))
    assert CauchyLaw(0.0, 1.0).char_sup_beyond(0.5) == pytest.approx(math.exp(-0.5))
    assert GaussianLaw(0.0, 1.0).char_modulus(0.0) == pytest.approx(1.0)
    assert UniformLaw(-1.0, 1.0).char_modulus(math.pi) == pytest.approx(0.0, abs=1e-12)


def test_constant_law_has_no_density():
    with pytest.raises(UnsupportedLawError):
        ConstantLaw(1.0).density_sup()
    with pytest.raises(UnsupportedLawError):
        ConstantLaw(1.0).density(0.0)


def test_sampling_is_reproducible():
    law = UniformLaw(0.0, 1.0)
    a = law.sample(realization_rng(3, 5), 100)
    b = law.sample(realization_rng(3, 5), 100)
    c = law.sample(realization_rng(3, 6), 100)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)
    assert a.min() >= 0.0 and a.max() <= 1.0


@pytest.mark.parametrize("law", [CauchyLaw(0.3, 2.0), UniformLaw(-1.0, 2.0), GaussianLaw(0.5, 0.7)])
def test_samples_stay_inside_dkw_band(law):
    n = 20000
    samples = np.sort(law.sample(realization_rng(8, 0), n))
    F = law.cdf(samples)
    gap = max(np.max(np.arange(1, n + 1) / n - F), np.max(F - np.arange(n) / n))
    assert gap <= math.sqrt(math.log(2.0 / 1e-6) / (2.0 * n))


def test_law_from_spec():
    assert law_from_spec("uniform", -1.0, 1.0) == UniformLaw(-1.0, 1.0)
    assert law_from_spec("cauchy", 0.0, 2.0, tau=0.25).tau == 0.25
    assert law_from_spec("constant", 0.4).value == 0.4
    assert law_from_spec("cauchy").describe() == {"type": "cauchy", "p1": 0.0, "p2": 1.0}
    with pytest.raises(ParameterError):
        law_from_spec("levy")


@pytest.mark.parametrize("build", [
    lambda: CauchyLaw(0.0, 0.0),
    lambda: CauchyLaw(0.0, 1.0, tau=1.0),
    lambda: UniformLaw(1.0, 1.0),
    lambda: GaussianLaw(0.0, -1.0),
])
def test_invalid_parameters(build):
    with pytest.raises(ParameterError):
        build()
