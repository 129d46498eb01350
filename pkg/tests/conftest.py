import numpy as np
import pytest

from fasaug import imgcore, sdsc, spsc
from fasaug._backend import available_backends


@pytest.fixture
def np_rng():
    return np.random.default_rng(20240617)


def random_image(rng, h, w):
    return rng.integers(0, 256, (h, w, 3), dtype=np.uint8)


def ramp_image(h, w):
    xs = np.arange(w, dtype=np.float64)[None, :].repeat(h, 0)
    ys = np.arange(h, dtype=np.float64)[:, None].repeat(w, 1)
    r = 255.0 * xs / max(w - 1, 1)
    g = 255.0 * ys / max(h - 1, 1)
    b = 0.5 * (r + g)
    return np.floor(np.stack([r, g, b], -1) + 0.5).astype(np.uint8)


@pytest.fixture(params=sorted(available_backends()))
def backend(request, monkeypatch):
    """Run a test once per importable kernel backend."""
    mod = available_backends()[request.param]
    for target in (imgcore, spsc, sdsc):
        monkeypatch.setattr(target, "kernels", mod)
    return request.param


_criteria = {}


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or report.failed:
        if report.failed or crit not in _criteria:
            _criteria[crit] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_criteria):
        terminalreporter.write_line(f"criterion {crit:2d}: {_criteria[crit]}")


@pytest.fixture
def criterion(record_property):
    """Tag a test with the acceptance criterion number it covers."""
    return lambda n: record_property("criterion", n)
