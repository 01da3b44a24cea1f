import pytest

from grassmod.config import load_config, set_config


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Every test gets default caps and a private cache directory."""
    monkeypatch.setenv("GRASSMOD_CACHE_DIR", str(tmp_path / "cache"))
    for name in ("GRASSMOD_MAX_GRASSMANNIAN", "GRASSMOD_MAX_SPIN_DIM", "GRASSMOD_SEED", "GRASSMOD_WORKERS"):
        monkeypatch.delenv(name, raising=False)
    set_config(load_config())
    yield
    set_config(None)
