import pytest
from hypothesis import HealthCheck, settings

from nilclean import DEFAULT_FAMILY, Caps, build

settings.register_profile(
    "suite",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def family_rings():
    """The default check family, built once and shared (rings are immutable)."""
    caps = Caps()
    return [build(spec, caps) for spec in DEFAULT_FAMILY]


@pytest.fixture(scope="session")
def small_family_rings(family_rings):
    return [r for r in family_rings if r.order <= 64]
