import math

import numpy as np
import pytest

import fracmove
from fracmove import constants as const
from fracmove import evolution
from fracmove.entities import (
    ATEnergyBreakdown,
    DamageField,
    IncrementTrace,
    LoadProgram,
    Material,
    ScalarField,
    Scenario,
    StepRecord,
)
from fracmove.grid import build_grid, partition_boundary

from fixtures import STRIP_SPEC


ROWS = 257


# Utils

def strip_material(L, rows=ROWS, G=1.0, **kwargs):
    h = float(L) / (rows - 1)
    return Material(mu=1.0, G=G, eps=2 * h, **kwargs)


def long_strip(L=1.0, rows=ROWS, s=50, T=1.5, G=1.0, **kwargs):
    # Four cells across: the solution does not depend on the width
    h = float(L) / (rows - 1)
    return evolution.strip_scenario(4 * h, L, strip_material(L, rows, G),
                                    rows, s, T, **kwargs)


def softened_elastic_fraction(time, L, mat):
    # Elastic energy of the uniformly softened strip over the intact one
    x = mat.mu * (time / L) ** 2
    return 1.0 / (1.0 + 4.0 * mat.eps * x / mat.G) ** 2


def synthetic_trace(steps, s=10):
    grid = build_grid(5, 5, 1, 1)
    part = partition_boundary(grid, STRIP_SPEC)
    scenario = Scenario(grid, part, LoadProgram.strip(1.0),
                        Material(mu=1, G=1, eps=0.5), s=s)
    u = ScalarField.zeros(grid)
    v = DamageField.intact(grid)

    records = [StepRecord(0, 0.0, u, v, ATEnergyBreakdown(0, 0, 0))]
    for k, (elastic_star, elastic, surface, surface_prev, work) in \
            enumerate(steps, 1):
        records.append(StepRecord(
            k, float(k) / s, u, v, ATEnergyBreakdown(elastic, surface, 0),
            elastic_star=elastic_star, surface_prev=surface_prev, work=work))
    return IncrementTrace(scenario, records)


@pytest.fixture(scope='module')
def unit_strip_trace():
    return evolution.run_incremental(long_strip(stop_at_separation=True))


@pytest.fixture(scope='module', params=[1.0, 0.25])
def square_strip_trace(request):
    # Unit square on 65 x 65 nodes with eps = 2h
    mat = Material(mu=1.0, G=request.param, eps=2.0 / 64)
    t_c = evolution.critical_time_prediction(1.0, 1.0, mat)
    scenario = evolution.strip_scenario(1.0, 1.0, mat, 65, 50, 1.5 * t_c,
                                        stop_at_separation=True)
    return evolution.run_incremental(scenario)


@pytest.fixture(scope='module')
def improved_onset_gradients():
    rows = 65
    gradients = {}
    for L in (1.0, 4.0):
        # Threshold gradient sqrt(2 Sigma / mu) = 1.5, above the Griffith onset
        mat = strip_material(L, rows=rows, Sigma=1.125)
        scenario = evolution.strip_scenario(
            4.0 * L / (rows - 1), L, mat, rows, s=int(20 / L), T=1.8 * L,
            model=const.MODEL_IMPROVED, stop_at_separation=True)
        onset = evolution.onset_step(evolution.run_incremental(scenario))
        gradients[L] = None if onset is None else onset.time / L
    return gradients


# Tests

@pytest.mark.parametrize('a, L, G, mu, expected', [
    (1.0, 1.0, 1.0, 1.0, 1.0),
    (1.0, 4.0, 1.0, 1.0, 2.0),
    (0.5, 1.0, 2.0, 8.0, 0.5),
    (0.1, 1.0, 0.25, 1.0, 0.5),
])
def test_critical_time_prediction(a, L, G, mu, expected):
    mat = Material(mu=mu, G=G, eps=0.1)
    assert evolution.critical_time_prediction(a, L, mat) == \
        pytest.approx(expected)


@pytest.mark.parametrize('G, expected', [
    (1.0, 1.144155),
    (0.25, 0.572078),
])
def test_regularized_time_prediction(G, expected):
    mat = Material(mu=1.0, G=G, eps=2.0 / 64)
    h = 1.0 / 64

    assert evolution.crack_band_factor(h, mat) == pytest.approx(1.125)
    assert evolution.regularized_time_prediction(1.0, mat, h) == \
        pytest.approx(expected, rel=1e-5)


def test_regularized_time_prediction_without_crack():
    # The band costs more than the softened strip can ever store
    mat = Material(mu=1.0, G=1.0, eps=0.5)
    assert evolution.regularized_time_prediction(1.0, mat, 0.25) == math.inf


def test_create_model():
    assert isinstance(fracmove.create_model(), evolution.FirstModel)
    assert isinstance(fracmove.create_model(const.MODEL_IMPROVED),
                      evolution.ImprovedModel)
    with pytest.raises(ValueError):
        fracmove.create_model('unknown')


def test_zero_load_stays_at_rest():
    grid = build_grid(5, 9, 0.5, 1)
    part = partition_boundary(grid, STRIP_SPEC)
    load = LoadProgram({const.GAMMA_U2: [(0, 0)]})
    scenario = Scenario(grid, part, load, Material(mu=1, G=1, eps=0.25),
                        T=0.3, s=10)

    trace = evolution.run_incremental(scenario)

    assert len(trace) == 4
    for step in trace:
        assert np.all(step.u.values == 0.0)
        assert np.allclose(step.v.values, 1.0)
        assert not step.separated

    power, ok = evolution.power_bound_check(trace)
    assert power == 0.0
    assert ok
    assert evolution.onset_step(trace) is None


def test_unit_strip_onset(unit_strip_trace):
    onset = evolution.onset_step(unit_strip_trace)
    predicted = evolution.critical_time_prediction(
        1.0, 1.0, unit_strip_trace.scenario.material)

    assert onset is not None
    assert onset is unit_strip_trace[-1]
    assert onset.time == pytest.approx(predicted, rel=0.15)


def test_unit_strip_transition_is_brutal(unit_strip_trace):
    assert len(evolution.transition_steps(unit_strip_trace)) <= 1

    onset = evolution.onset_step(unit_strip_trace)
    assert onset.elastic < 0.01 * onset.intact_elastic


def test_square_strip_onset(square_strip_trace):
    scenario = square_strip_trace.scenario
    mat = scenario.material
    t_c = evolution.critical_time_prediction(1.0, 1.0, mat)
    predicted = evolution.regularized_time_prediction(1.0, mat,
                                                      scenario.grid.h)
    onset = evolution.onset_step(square_strip_trace)

    assert onset is square_strip_trace[-1]
    # Softening and the cost of the crack band delay the sharp onset
    assert t_c < onset.time <= 1.25 * t_c
    assert onset.time == pytest.approx(predicted, rel=0.08)


def test_square_strip_transition(square_strip_trace):
    scenario = square_strip_trace.scenario
    mat = scenario.material
    t_c = evolution.critical_time_prediction(1.0, 1.0, mat)
    onset = evolution.onset_step(square_strip_trace)
    softening = evolution.transition_steps(square_strip_trace)

    assert onset.elastic < 0.2 * onset.intact_elastic
    assert softening
    assert all(k < onset.k for k in softening)
    assert float(max(softening) - min(softening)) / scenario.s <= 0.2 * t_c

    # Just before the cut the strip is softened almost uniformly
    before = square_strip_trace[onset.k - 1]
    assert before.elastic / before.intact_elastic == pytest.approx(
        softened_elastic_fraction(before.time, 1.0, mat), rel=0.1)


def test_unit_strip_ledgers(unit_strip_trace):
    verdicts = evolution.griffith_ledger_check(unit_strip_trace)
    assert len(verdicts) == len(unit_strip_trace)
    assert all(verdict.ok for verdict in verdicts)

    power, ok = evolution.power_bound_check(unit_strip_trace)
    assert power > 0.0
    assert ok


def test_unit_strip_ledger_catches_inflated_surface(unit_strip_trace):
    mat = unit_strip_trace.scenario.material
    length = unit_strip_trace.scenario.reference_length
    onset = evolution.onset_step(unit_strip_trace)
    assert onset.surface_increment > 0.0

    # Push the surface energy past the no-growth competitor
    gap = onset.elastic_star - onset.elastic - onset.surface_increment
    extra = max(gap, 0.0) + 0.01 * (onset.total + mat.G * length)
    energy = ATEnergyBreakdown(onset.elastic, onset.surface + extra,
                               onset.energy.surface_length_estimate)
    inflated = StepRecord(
        onset.k, onset.time, onset.u, onset.v, energy,
        elastic_star=onset.elastic_star, surface_prev=onset.surface_prev,
        work=onset.work, intact_elastic=onset.intact_elastic,
        separated=onset.separated)
    trace = IncrementTrace(unit_strip_trace.scenario,
                           unit_strip_trace.steps[:-1] + [inflated])

    verdicts = evolution.griffith_ledger_check(trace)
    assert not verdicts[-1].ok
    assert verdicts[-1].rhs > verdicts[-1].lhs
    assert all(verdict.ok for verdict in verdicts[:-1])


def test_unit_strip_damage_is_nested(unit_strip_trace):
    for before, after in zip(unit_strip_trace, unit_strip_trace[1:]):
        assert np.all(after.v.values <= before.v.values)


def test_unit_strip_pre_critical_field_is_linear(unit_strip_trace):
    step = unit_strip_trace[25]
    assert step.time == pytest.approx(0.5)
    assert not step.separated

    _, y = step.u.grid.coordinates()
    expected = step.time * y
    assert np.allclose(step.u.values, expected,
                       atol=1e-2 * expected.max())


def test_onset_scales_with_square_root_of_length(unit_strip_trace):
    long_trace = evolution.run_incremental(
        long_strip(L=4.0, T=3.0, stop_at_separation=True))

    short = evolution.onset_step(unit_strip_trace)
    tall = evolution.onset_step(long_trace)
    assert tall is not None

    ratio = tall.time / short.time
    assert 1.7 <= ratio <= 2.3

    # Onset stress mu * t / L falls like 1/sqrt(L)
    stress_ratio = (short.time / 1.0) / (tall.time / 4.0)
    assert 1.7 <= stress_ratio <= 2.3


def test_power_estimate_scales_with_load_squared():
    powers = []
    for delta in (1.0, 2.0):
        scenario = evolution.strip_scenario(
            0.25, 1.0, Material(mu=1, G=1000, eps=0.125), rows=17, s=10,
            T=0.5, delta=delta, multistart=False)
        powers.append(evolution.power_bound_check(
            evolution.run_incremental(scenario))[0])

    assert powers[1] == pytest.approx(4 * powers[0], rel=0.02)


def test_improved_model_waits_for_admissible_stress(improved_onset_gradients):
    gradient = improved_onset_gradients[1.0]

    assert gradient is not None
    assert gradient >= 1.5 - 1e-9
    assert gradient == pytest.approx(1.5, rel=0.15)


def test_improved_onset_gradient_does_not_depend_on_length(
        improved_onset_gradients):
    short = improved_onset_gradients[1.0]
    long = improved_onset_gradients[4.0]

    assert long is not None
    assert long == pytest.approx(short, rel=0.15)
    assert long == pytest.approx(1.5, rel=0.15)


def test_improved_density_without_stress():
    grid = build_grid(5, 5, 1, 1)
    part = partition_boundary(grid, STRIP_SPEC)
    scenario = Scenario(grid, part, LoadProgram.strip(1.0),
                        Material(mu=1, G=1, eps=0.5, cap_C=20),
                        model=const.MODEL_IMPROVED)

    density = evolution.ImprovedModel().surface_density(
        scenario, ScalarField.zeros(grid), DamageField.intact(grid))
    assert np.all(density.values == 20.0)

    broken = DamageField(grid, np.zeros(grid.shape))
    density = evolution.ImprovedModel().surface_density(
        scenario, ScalarField.zeros(grid), broken)
    assert np.all(density.values == 1.0)


def test_griffith_ledger_synthetic():
    trace = synthetic_trace([
        (1.0, 0.2, 0.5, 0.0, 1.0),
        (1.0, 0.2, 1.0, 0.0, 0.5),
        (0.7, 0.7, 1.0, 1.0, 0.0),
    ])
    verdicts = evolution.griffith_ledger_check(trace)

    assert [verdict.ok for verdict in verdicts] == [True, True, False, True]
    assert verdicts[2].lhs == 1.0
    assert verdicts[2].rhs == pytest.approx(1.2)


def test_griffith_ledger_explicit_slack():
    trace = synthetic_trace([(1.0, 0.2, 1.0, 0.0, 1.0)])
    assert not evolution.griffith_ledger_check(trace)[1].ok
    assert evolution.griffith_ledger_check(trace, slack=0.5)[1].ok


@pytest.mark.parametrize('steps, power, ok', [
    ([(0.5, 0.4, 0.0, 0.0, 0.5)], 5.0, True),
    ([(0.5, 0.5, 0.0, 0.0, 0.1)], 1.0, False),
])
def test_power_bound_synthetic(steps, power, ok):
    trace = synthetic_trace(steps)
    assert evolution.power_bound_check(trace) == (pytest.approx(power), ok)


def test_onset_and_transition_synthetic():
    trace = synthetic_trace([(0.5, 0.4, 0.0, 0.0, 0.5)])
    assert evolution.onset_step(trace) is None
    assert evolution.transition_steps(trace) == []


def test_time_refinement_gap():
    trace = synthetic_trace([
        (1.0, 0.2, 0.5, 0.0, 1.0),
        (1.0, 0.3, 0.5, 0.0, 1.0),
    ])
    coarse = synthetic_trace([(1.0, 0.1, 0.5, 0.0, 1.0)])

    assert evolution.time_refinement_gap(trace, trace) == 0.0
    # Shared times are 0 and 0.1
    assert evolution.time_refinement_gap(trace, coarse) == \
        pytest.approx(0.1)
