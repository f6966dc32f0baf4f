import json

import pytest

from nlquery.config import Config, ConfigError, load_config


class TestConfig:
    def test_defaults(self):
        config = load_config(env={})
        assert config.service_port == 8000
        assert config.corpus_path is None
        assert config.resolved_source_root().is_dir()

    def test_port_range_enforced(self):
        with pytest.raises(ConfigError):
            Config(service_port=80)
        with pytest.raises(ConfigError):
            Config(service_port=70000)

    def test_missing_path_rejected(self, tmp_path):
        with pytest.raises(ConfigError):
            Config(corpus_path=tmp_path / "nope.txt")

    def test_env_beats_file(self, tmp_path):
        corpus_a = tmp_path / "a.txt"
        corpus_b = tmp_path / "b.txt"
        corpus_a.write_text("x")
        corpus_b.write_text("x")
        config_file = tmp_path / "config.json"
        config_file.write_text(json.dumps({"corpus_path": str(corpus_a)}))
        config = load_config(
            env={"NLQUERY_CORPUS": str(corpus_b)}, config_file=config_file
        )
        assert config.corpus_path == corpus_b

    def test_flags_beat_env(self, tmp_path):
        corpus_a = tmp_path / "a.txt"
        corpus_b = tmp_path / "b.txt"
        corpus_a.write_text("x")
        corpus_b.write_text("x")
        config = load_config(
            overrides={"corpus_path": str(corpus_a)},
            env={"NLQUERY_CORPUS": str(corpus_b)},
        )
        assert config.corpus_path == corpus_a

    def test_unknown_file_keys_rejected(self, tmp_path):
        config_file = tmp_path / "config.json"
        config_file.write_text(json.dumps({"nope": 1}))
        with pytest.raises(ConfigError):
            load_config(env={}, config_file=config_file)

    def test_bad_port_value(self):
        with pytest.raises(ConfigError):
            load_config(env={"NLQUERY_PORT": "not-a-number"})
