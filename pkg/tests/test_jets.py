"""Jet filtration, fundamental forms, and the general-point check."""

import dataclasses
from fractions import Fraction

import pytest

from eulersym import (
    ImmersionError,
    Parametrization,
    Polynomial,
    TruncationError,
    build_model,
    cartan_check,
    context,
    extract_fundamental_forms,
    jet_filtration,
    system_from_file,
)
from eulersym.cli import bundled_text
from eulersym.specfiles import parse_param_file

BUNDLED_SYS = ("epr.sys", "quadric.sys", "rnc.sys", "triple.sys", "veronese.sys")


def _bundled(name):
    return system_from_file(bundled_text(name))


def _param(name):
    pf = parse_param_file(bundled_text(name))
    return Parametrization(pf.context, pf.coords, base_point=pf.base_point)


def _cubic():
    ctx = context("z")
    z = Polynomial.variable(ctx, 0)
    return Parametrization(ctx, (z, z**3))


def test_filtration_orders_at_a_flex():
    filt = jet_filtration(_cubic())
    assert filt.base_point == (Fraction(0),)
    assert filt.dims == (1, 1, 0, 1)
    assert filt.max_order == 3


def test_filtration_orders_at_a_general_point():
    filt = jet_filtration(_cubic(), base=(2,))
    assert filt.dims == (1, 1, 1)


def test_fundamental_forms_gap_at_the_flex():
    ffs = extract_fundamental_forms(_cubic())
    assert ffs.dims == (1, 1, 0, 1)
    assert not ffs.is_symbol_system
    assert any("not closed under contraction" in d
               for d in ffs.closure_diagnostics)


def test_fundamental_forms_at_a_general_point():
    ffs = extract_fundamental_forms(_cubic(), base=(2,))
    assert ffs.dims == (1, 1, 1)
    assert ffs.is_symbol_system


def test_recentering_is_exact():
    ffs = extract_fundamental_forms(_cubic(), base=(2,))
    comp = ffs.component(2)
    assert comp.dim == 1
    assert comp.basis[0].homogeneous_degree() == 2


def test_immersion_failure_names_the_flat_directions():
    ctx = context("z1", "z2")
    z1 = Polynomial.variable(ctx, 0)
    z2 = Polynomial.variable(ctx, 1)
    param = Parametrization(ctx, (z1, z1 * z2))
    with pytest.raises(ImmersionError):
        jet_filtration(param)  # d(z1*z2) vanishes at 0 along z2


def test_too_few_coordinates_cannot_immerse():
    ctx = context("z1", "z2")
    z1 = Polynomial.variable(ctx, 0)
    with pytest.raises(ImmersionError):
        jet_filtration(Parametrization(ctx, (z1,)))


def test_truncation_guard():
    param = dataclasses.replace(_cubic(), truncation_degree=2)
    with pytest.raises(TruncationError):
        jet_filtration(param)


def test_chart_extraction_reproduces_every_bundled_system():
    for name in BUNDLED_SYS:
        s = _bundled(name)
        model = build_model(s)
        param = Parametrization(s.context, tuple(model.chart_functions()))
        ffs = extract_fundamental_forms(param)
        assert ffs.dims == s.dims
        for k in range(s.rank + 1):
            assert ffs.component(k) == s.component(k)


def test_chart_extraction_away_from_the_origin():
    s = _bundled("epr.sys")
    model = build_model(s)
    param = Parametrization(s.context, tuple(model.chart_functions()))
    ffs = extract_fundamental_forms(param, base=(1, 2, 3))
    assert ffs.is_symbol_system
    assert ffs.dims == s.dims


def test_cartan_check_on_bundled_parametrizations():
    for name in ("quadric.par", "cubiccurve.par"):
        report = cartan_check(_param(name), trials=5, seed=0)
        assert report.passed
        assert len(report.entries) == 5


def test_cartan_check_is_deterministic():
    a = cartan_check(_param("quadric.par"), trials=3, seed=4)
    b = cartan_check(_param("quadric.par"), trials=3, seed=4)
    assert a == b
