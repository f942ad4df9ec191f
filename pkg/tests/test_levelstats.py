import math

import numpy as np
import pytest
from scipy import integrate

from src.disorder import ConstantLaw, UniformLaw
from src.ensemble import realization_rng
from src.errors import InsufficientDataError, MissingEigenvectorsError, ParameterError
from src.graphs import build_regular_tree
from src.levelstats import (
    count_distribution, divisibility_gap, eigenfunction_mass_statistic, exponential_cdf, ks_distance,
    minami_bound, negligibility_curve, spacing_statistics, stieltjes_functional, wegner_bound,
    wegner_minami_check, wigner_surmise_cdf, wigner_surmise_pdf
)
from src.spectral import EigenSystem, RescaledPointProcess, diagonalize_ensemble


def _process(points, window=5.0, realization=0):
    return RescaledPointProcess(center_energy=0.0, volume=10, points=np.asarray(points, dtype=float),
                                window=window, realization=realization)


def test_reference_spacing_laws():
    assert exponential_cdf(1.0) == pytest.approx(1.0 - math.exp(-1.0))
    assert wigner_surmise_cdf(0.0) == 0.0
    total, _ = integrate.quad(wigner_surmise_pdf, 0.0, np.inf)
    mean, _ = integrate.quad(lambda s: s * wigner_surmise_pdf(s), 0.0, np.inf)
    assert total == pytest.approx(1.0)
    assert mean == pytest.approx(1.0)


def test_ks_distance_separates_poisson_from_wigner():
    sample = realization_rng(0, 0).exponential(1.0, 5000)
    assert ks_distance(sample, "exponential_unit_mean") < 0.03
    assert ks_distance(sample, "wigner_goe_surmise") > 0.1
    with pytest.raises(ParameterError):
        ks_distance(sample, "gue")
    with pytest.raises(InsufficientDataError):
        ks_distance(np.array([]), "exponential_unit_mean")


def test_spacing_statistics_normalizes_pooled_gaps():
    sample = spacing_statistics([_process([0.0, 1.0, 3.0]), _process([0.0, 2.0], realization=1)],
                                metadata={"E": 0.0})
    assert sample.raw_mean == pytest.approx(5.0 / 3.0)
    assert sample.spacings.mean() == pytest.approx(1.0)
    assert sample.realizations.tolist() == [0, 0, 1]
    assert sample.intensity == pytest.approx(2.5 / 10.0)
    assert sample.metadata == {"E": 0.0}


def test_spacing_statistics_needs_two_points():
    with pytest.raises(InsufficientDataError):
        spacing_statistics([_process([0.0]), _process([])])


def test_count_distribution():
    processes = [_process([0.5]), _process([]), _process([-0.2, 0.3]), _process([4.0])]
    counts = count_distribution(processes, (-1.0, 1.0), intensity=0.5)
    assert counts.counts.tolist() == [1, 0, 2, 0]
    assert counts.pmf.tolist() == [0.5, 0.25, 0.25]
    assert counts.poisson_mean == pytest.approx(1.0)
    assert 0.0 <= counts.tv_distance <= 1.0


def test_count_distribution_on_empty_interval():
    counts = count_distribution([_process([0.0]), _process([0.0, 1.0])], (0.0, 0.0), intensity=1.0)
    assert counts.counts.tolist() == [0, 0]
    assert counts.tv_distance == pytest.approx(0.0)


def test_bound_values():
    assert wegner_bound((0.0, 0.1), 15, 1.0) == pytest.approx(1.5)
    assert minami_bound((0.0, 0.1), 15, 1.0) == pytest.approx(math.pi ** 2 * 2.25)


def test_wegner_minami_check_on_uniform_disorder():
    tree = build_regular_tree(2, 4)
    law = UniformLaw(0.0, 1.0)
    systems = diagonalize_ensemble(tree, law, 0.0, seed=1, realizations=100)
    report = wegner_minami_check(systems, (0.4, 0.6), law, tree.vertex_count)
    assert report.applicable
    assert report.wegner_bound == pytest.approx(0.2 * 31)
    assert report.passed


def test_wegner_minami_check_without_density():
    tree = build_regular_tree(2, 2)
    systems = diagonalize_ensemble(tree, ConstantLaw(0.0), 0.0, seed=0, realizations=3)
    report = wegner_minami_check(systems, (-1.0, 1.0), ConstantLaw(0.0), tree.vertex_count)
    assert not report.applicable
    assert report.wegner_pass is None
    assert report.passed


def test_negligibility_curve():
    law = UniformLaw(-1.0, 1.0)
    zero = negligibility_curve(law, 2, 0.0, 0.0, 0.0, 0.1, [2, 3], realizations=5)
    assert zero["probability"].tolist() == [0.0, 0.0]

    curve = negligibility_curve(law, 2, 0.0, 0.0, 1.0, 0.1, [2, 3], realizations=20, seed=2)
    assert list(curve.columns) == ["L", "probability", "stderr"]
    assert curve["L"].tolist() == [2, 3]
    assert curve["probability"].between(0.0, 1.0).all()


def test_stieltjes_functional():
    assert stieltjes_functional(np.array([0.0]), 1j) == pytest.approx(1.0)
    assert stieltjes_functional(np.array([]), 1j) == 0.0


def test_divisibility_gap(uniform_ops):
    assert divisibility_gap(uniform_ops, 0, 0.5, 1j) == 0.0
    gap = divisibility_gap(uniform_ops, 1, 0.5, 1j)
    assert 0.0 <= gap <= 1.0
    with pytest.raises(ParameterError):
        divisibility_gap(uniform_ops, 1, 0.5, 1.0)


def test_eigenfunction_mass_statistic():
    eig = EigenSystem(values=np.array([0.1, 0.5]), vectors=np.eye(2))
    mean, stderr = eigenfunction_mass_statistic([eig], 0, (0.0, 1.0), 0.5, volume=2)
    assert mean == 1.0
    assert stderr == 0.0
    with pytest.raises(MissingEigenvectorsError):
        eigenfunction_mass_statistic([EigenSystem(values=eig.values)], 0, (0.0, 1.0), 0.5)
