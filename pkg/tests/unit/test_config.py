"""
Unit tests for settings, run configurations and YAML run profiles.
"""

import pytest
from pydantic import ValidationError

from src.config.config_manager import ConfigManager
from src.config.run_config import Caps, Command, GroupChoice, OutputFormat, RunConfig, WitnessMode
from src.config.settings import IndsubSettings
from src.core.errors import InputError


class TestSettings:
    """Test suite for environment-driven caps."""

    def test_defaults(self, monkeypatch):
        monkeypatch.delenv("INDSUB_MAX_ORBITS", raising=False)
        config = IndsubSettings(_env_file=None)
        assert config.max_edges_naive == 25
        assert config.max_orbits == 20
        assert config.monotone_check_n == 6

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv("INDSUB_MAX_ORBITS", "12")
        monkeypatch.setenv("INDSUB_MAX_THREADS", "3")
        config = IndsubSettings(_env_file=None)
        assert config.max_orbits == 12
        assert config.worker_count == 3

    def test_hard_limits(self, monkeypatch):
        """A cap above its hard limit is rejected at load time."""
        monkeypatch.setenv("INDSUB_MAX_TW_N", "40")
        with pytest.raises(ValidationError):
            IndsubSettings(_env_file=None)

    def test_worker_count_floor(self, mocker):
        """An unknown CPU count still leaves one worker."""
        mocker.patch("os.cpu_count", return_value=None)
        assert IndsubSettings(_env_file=None, max_threads=None).worker_count == 1


class TestRunConfig:
    """Test suite for RunConfig validation and conversion."""

    def test_missing_fields(self):
        config = RunConfig(command=Command.REDUCE, property_source="bipartite")
        assert config.get_missing_fields() == ["graph_file", "h_file", "k"]
        with pytest.raises(InputError):
            config.validate()

    @pytest.mark.parametrize(
        "witness,missing",
        [
            (WitnessMode.PRIME_POWER, ["p"]),
            (WitnessMode.CLASSIFY, ["k"]),
            (WitnessMode.PROBE, ["k"]),
            (WitnessMode.AVALANCHE, ["p", "subset"]),
        ],
    )
    def test_witness_requirements(self, witness, missing):
        config = RunConfig(command=Command.WITNESS, property_source="bipartite", witness=witness)
        assert config.get_missing_fields() == missing

    def test_verify_needs_nothing(self):
        RunConfig().validate()

    def test_caps_cannot_exceed_hard_limits(self):
        with pytest.raises(InputError):
            RunConfig(caps=Caps(max_orbits=31)).validate()
        with pytest.raises(InputError):
            Caps(max_edges_naive=-1).validate()

    def test_dict_conversion(self):
        config = RunConfig(
            command=Command.LATTICE,
            p=11,
            group=GroupChoice.PRODUCT,
            output=OutputFormat.CSV,
            caps=Caps(max_orbits=10),
        )
        data = config.to_dict()
        assert data["command"] == "lattice"
        assert data["caps"]["max_orbits"] == 10
        assert RunConfig.from_dict(data) == config

    def test_from_dict_rejects_bad_values(self):
        with pytest.raises(InputError):
            RunConfig.from_dict({"command": "plot"})
        with pytest.raises(InputError):
            RunConfig.from_dict({"colour": "blue"})

    def test_apply_caps(self):
        """Caps are pushed into the target settings object."""
        target = IndsubSettings(_env_file=None)
        RunConfig(caps=Caps(max_edges_naive=12, max_orbits=8, max_tw_n=9)).apply_caps(target)
        assert (target.max_edges_naive, target.max_orbits, target.max_tw_n) == (12, 8, 9)

    def test_unset_caps_keep_settings(self):
        target = IndsubSettings(_env_file=None, max_orbits=12)
        RunConfig(caps=Caps(max_tw_n=9)).apply_caps(target)
        assert target.max_orbits == 12
        assert target.max_tw_n == 9


class TestConfigManager:
    """Test suite for YAML run profiles."""

    def test_save_and_load(self, tmp_path):
        manager = ConfigManager(tmp_path / "profiles" / "run.yml")
        assert not manager.exists()
        config = RunConfig(command=Command.WITNESS, property_source="phi2_3", p=11, verify=True)
        manager.save(config)
        assert manager.exists()
        assert manager.load() == config

    def test_empty_file_gives_defaults(self, tmp_path):
        path = tmp_path / "run.yml"
        path.write_text("", encoding="utf-8")
        assert ConfigManager(path).load() == RunConfig()

    def test_invalid_files(self, tmp_path):
        with pytest.raises(InputError):
            ConfigManager(tmp_path / "missing.yml").load()
        broken = tmp_path / "broken.yml"
        broken.write_text("command: [lattice\n", encoding="utf-8")
        with pytest.raises(InputError):
            ConfigManager(broken).load()
        listed = tmp_path / "list.yml"
        listed.write_text("- lattice\n", encoding="utf-8")
        with pytest.raises(InputError):
            ConfigManager(listed).load()

    def test_merge(self, tmp_path):
        """Flags override the profile; None leaves profile values in place."""
        profile = RunConfig(command=Command.LATTICE, p=7, caps=Caps(max_orbits=10))
        merged = ConfigManager(tmp_path / "run.yml").merge(
            profile, {"p": 11, "m": None, "caps": {"max_orbits": None, "max_tw_n": 8}}
        )
        assert merged.p == 11
        assert merged.m == 1
        assert merged.caps == Caps(max_orbits=10, max_tw_n=8)
