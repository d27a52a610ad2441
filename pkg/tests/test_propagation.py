"""Direct wavelet-sum propagation: closed forms, symmetries, sampling rules."""
import numpy as np
import pytest

import slitwave as sw


def _ctx():
    return sw.WaveContext(650e-9)


def test_single_source_sample_closed_form():
    # one wavelet: amplitude * dy * exp(ikr) / r, r = sqrt(dz^2 + (y-y')^2)
    ctx = _ctx()
    src_grid = sw.make_grid(2e-4, 1e-4, 1)
    amp = 0.7 - 0.3j
    src = sw.SampledField(src_grid, np.array([amp]), 0.0)
    tgt = sw.make_grid(-1.5e-3, 1e-3, 5)
    out = sw.propagate(src, tgt, 2.0, ctx)
    r = np.sqrt(2.0**2 + (tgt.positions - 2e-4) ** 2)
    expected = amp * src_grid.spacing * np.exp(1j * ctx.wavenumber * r) / r
    assert np.allclose(out.amplitudes, expected, rtol=1e-14, atol=0)
    assert out.axial_position == 2.0


def test_propagation_is_deterministic():
    ctx = _ctx()
    rng = np.random.default_rng(7)
    src = sw.SampledField(
        sw.make_grid(0.0, 1e-3, 700),
        rng.standard_normal(700) + 1j * rng.standard_normal(700),
        0.0,
    )
    tgt = sw.make_grid(0.0, 3e-3, 1100)
    a = sw.propagate(src, tgt, 0.8, ctx)
    b = sw.propagate(src, tgt, 0.8, ctx)
    assert np.array_equal(a.amplitudes, b.amplitudes)


def test_each_target_sample_is_independent():
    # pulling single positions out of a composite target grid reproduces the
    # full-grid values bit for bit, so block boundaries cannot leak
    ctx = _ctx()
    rng = np.random.default_rng(11)
    src = sw.SampledField(
        sw.make_grid(0.0, 1e-3, 257),
        rng.standard_normal(257) + 1j * rng.standard_normal(257),
        0.0,
    )
    tgt = sw.make_grid(0.0, 4e-3, 1030)  # spans two and a bit 512-blocks
    full = sw.propagate(src, tgt, 1.0, ctx)
    for i in (0, 511, 512, 513, 1029):
        single = sw.make_grid(tgt.positions[i], 1.0, 1)
        one = sw.propagate(src, single, 1.0, ctx)
        assert one.amplitudes[0] == full.amplitudes[i]


def test_linearity():
    ctx = _ctx()
    g = sw.make_grid(0.0, 1e-3, 400)
    rng = np.random.default_rng(3)
    a = rng.standard_normal(400) + 1j * rng.standard_normal(400)
    b = rng.standard_normal(400) + 1j * rng.standard_normal(400)
    tgt = sw.make_grid(0.0, 3e-3, 500)
    fa = sw.propagate(sw.SampledField(g, a, 0.0), tgt, 1.0, ctx).amplitudes
    fb = sw.propagate(sw.SampledField(g, b, 0.0), tgt, 1.0, ctx).amplitudes
    fab = sw.propagate(sw.SampledField(g, a + b, 0.0), tgt, 1.0, ctx).amplitudes
    scale = np.abs(fa) + np.abs(fb)
    assert np.max(np.abs(fab - (fa + fb)) / scale.max()) < 1e-12


def test_mirror_symmetry():
    # symmetric source on a centered grid -> symmetric target field
    ctx = _ctx()
    cfg = sw.ExperimentConfig().resolve()
    src = sw.source_field(cfg, "both")
    tgt = sw.make_grid(0.0, 4e-3, 901)
    out = sw.propagate(src, tgt, 1.0, ctx).amplitudes
    rel = np.max(np.abs(out - out[::-1])) / np.max(np.abs(out))
    assert rel < 1e-10


def test_extra_phase_of_zero_is_identity():
    ctx = _ctx()
    g = sw.make_grid(0.0, 1e-3, 64)
    src = sw.SampledField(g, np.ones(64, dtype=complex), 0.0)
    tgt = sw.make_grid(0.0, 2e-3, 65)
    plain = sw.propagate(src, tgt, 1.0, ctx)
    zero = sw.propagate(src, tgt, 1.0, ctx, extra_phase=np.zeros(64))
    assert np.array_equal(plain.amplitudes, zero.amplitudes)


def test_extra_phase_of_pi_flips_sign():
    ctx = _ctx()
    g = sw.make_grid(0.0, 1e-3, 64)
    src = sw.SampledField(g, np.ones(64, dtype=complex), 0.0)
    tgt = sw.make_grid(0.0, 2e-3, 65)
    plain = sw.propagate(src, tgt, 1.0, ctx)
    flipped = sw.propagate(src, tgt, 1.0, ctx, extra_phase=np.full(64, np.pi))
    # k*r is ~1e7 rad here, so the shifted phase argument carries an
    # ulp-level error of ~1e-9 rad; that bounds the achievable agreement
    rel = np.max(np.abs(flipped.amplitudes + plain.amplitudes))
    assert rel / np.max(np.abs(plain.amplitudes)) < 1e-7


def test_extra_phase_validation():
    ctx = _ctx()
    g = sw.make_grid(0.0, 1e-3, 8)
    src = sw.SampledField(g, np.ones(8, dtype=complex), 0.0)
    tgt = sw.make_grid(0.0, 2e-3, 9)
    with pytest.raises(ValueError):
        sw.propagate(src, tgt, 1.0, ctx, extra_phase=np.zeros(7))
    with pytest.raises(ValueError):
        sw.propagate(src, tgt, 1.0, ctx, extra_phase=np.full(8, np.nan))


def test_backward_propagation_rejected():
    ctx = _ctx()
    src = sw.SampledField(sw.make_grid(0.0, 1e-3, 4), np.ones(4, dtype=complex), 1.0)
    tgt = sw.make_grid(0.0, 1e-3, 4)
    with pytest.raises(sw.GeometryError):
        sw.propagate(src, tgt, 1.0, ctx)  # zero separation
    with pytest.raises(sw.GeometryError):
        sw.propagate(src, tgt, 0.5, ctx)  # target behind source


def test_far_field_matches_double_slit_formula():
    # narrow slits at 1 m are deep in the Fraunhofer regime, where the
    # wavelet sum must reproduce cos^2 x sinc^2
    lam, w, d, z = 650e-9, 40e-6, 0.25e-3, 1.0
    cfg = sw.ExperimentConfig(
        wavelength_m=lam, slit_width_m=w, slit_separation_m=d, source_samples_per_slit=32
    ).resolve()
    src = sw.source_field(cfg, "both")
    fringe = lam * z / d
    tgt = sw.make_grid(0.0, 2.5 * fringe, 401)
    prof = sw.intensity(sw.propagate(src, tgt, z, cfg.ctx))
    oracle = sw.fraunhofer_double_slit(tgt.positions, lam, z, d, w)
    a = prof.values / prof.values.max()
    b = oracle / oracle.max()
    assert np.sqrt(np.mean((a - b) ** 2)) < 1e-2


def test_source_refinement_converges():
    # doubling source sampling moves the normalized profile by far less
    # than the 0.5% budget because slit edges stay between samples
    tgt = sw.make_grid(0.0, 2e-3, 301)
    profiles = []
    for m in (32, 64):
        cfg = sw.ExperimentConfig(source_samples_per_slit=m).resolve()
        p = sw.intensity(sw.propagate(sw.source_field(cfg, "both"), tgt, 1.0, cfg.ctx)).values
        profiles.append(p / p.max())
    assert np.sqrt(np.mean((profiles[0] - profiles[1]) ** 2)) < 5e-3


class TestRequiredSamples:
    def test_known_geometry(self):
        n = sw.required_samples(3e-3, 5e-3, 1.0, _ctx(), 8.0)
        assert n == 296

    def test_doubling_oversampling_at_least_doubles(self):
        rng = np.random.default_rng(42)
        ctx = _ctx()
        for _ in range(50):
            ap = 10 ** rng.uniform(-4, -2)
            tg = 10 ** rng.uniform(-4, -2)
            z = 10 ** rng.uniform(-1, 1)
            ov = rng.uniform(1.0, 16.0)
            n1 = sw.required_samples(ap, tg, z, ctx, ov)
            n2 = sw.required_samples(ap, tg, z, ctx, 2 * ov)
            assert n2 >= 2 * n1 - 1

    def test_monotone_in_extents(self):
        ctx = _ctx()
        base = sw.required_samples(2e-3, 2e-3, 1.0, ctx, 4.0)
        assert sw.required_samples(4e-3, 2e-3, 1.0, ctx, 4.0) >= base
        assert sw.required_samples(2e-3, 4e-3, 1.0, ctx, 4.0) >= base
        assert sw.required_samples(2e-3, 2e-3, 0.5, ctx, 4.0) >= base

    def test_on_axis_target_needs_one_sample(self):
        # zero target extent and zero offset would mean no transverse phase
        # variation at all; the count still covers the aperture
        n = sw.required_samples(1e-3, 0.0, 1.0, _ctx(), 8.0)
        assert n >= 1

    def test_validation(self):
        ctx = _ctx()
        with pytest.raises(ValueError):
            sw.required_samples(0.0, 1e-3, 1.0, ctx, 8.0)
        with pytest.raises(ValueError):
            sw.required_samples(1e-3, -1e-3, 1.0, ctx, 8.0)
        with pytest.raises(ValueError):
            sw.required_samples(1e-3, 1e-3, 0.0, ctx, 8.0)
        with pytest.raises(ValueError):
            sw.required_samples(1e-3, 1e-3, 1.0, ctx, 0.5)
