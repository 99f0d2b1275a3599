"""Unit tests for configuration parser."""

import pytest

from config.parser import (
    DEFAULT_ENUMERATION_BUDGET,
    DEFAULT_SERIES_BUDGET,
    ConfigurationParser,
    Settings,
    ValidationError,
    load_settings,
)


@pytest.fixture
def temp_env_file(tmp_path, clean_env):
    """Create a temporary .env file."""
    env_file = tmp_path / ".env"
    env_file.write_text("""MWLAB_BUDGET=2**20
MWLAB_TRANSFORM_BUDGET=4096
MWLAB_LOG_LEVEL=info
""")
    return env_file


@pytest.fixture
def parser(temp_env_file):
    """Create configuration parser with temp .env file."""
    return ConfigurationParser(temp_env_file)


def _parser_for(tmp_path, content):
    env_file = tmp_path / ".env"
    env_file.write_text(content)
    parser = ConfigurationParser(env_file)
    parser.load()
    return parser


class TestConfigurationParser:
    """Tests for ConfigurationParser class."""

    def test_load_env_file(self, parser):
        """Test loading .env file."""
        config = parser.load()

        assert config.get("MWLAB_BUDGET") == "2**20"
        assert config.get("MWLAB_TRANSFORM_BUDGET") == "4096"
        assert config.get("MWLAB_LOG_LEVEL") == "info"

    def test_load_nonexistent_file(self, tmp_path, clean_env):
        """A missing .env file yields an empty configuration."""
        parser = ConfigurationParser(tmp_path / "nonexistent.env")

        assert parser.load() == {}
        assert parser.settings() == Settings()

    def test_environment_overrides_file(self, parser, mocker):
        """Test that MWLAB_* variables take precedence over the file."""
        mocker.patch.dict("os.environ", {"MWLAB_BUDGET": "512"})
        parser.load()

        assert parser.get_int("MWLAB_BUDGET") == 512
        assert parser.get_int("MWLAB_TRANSFORM_BUDGET") == 4096

    def test_get_with_default(self, parser):
        """Test getting value with default."""
        parser.load()
        assert parser.get("NONEXISTENT") is None
        assert parser.get("NONEXISTENT", "default_value") == "default_value"

    def test_get_int_power(self, parser):
        """Test that 2**k is accepted as an integer."""
        parser.load()
        assert parser.get_int("MWLAB_BUDGET") == 2**20

    def test_get_int_invalid(self, tmp_path, clean_env):
        """Test getting invalid integer value falls back to the default."""
        parser = _parser_for(tmp_path, "MWLAB_BUDGET=lots\n")
        assert parser.get_int("MWLAB_BUDGET", 5) == 5
        assert parser.get_int("NONEXISTENT", 7) == 7

    def test_parse_int_invalid(self, parser):
        """Test that malformed integers name their field."""
        with pytest.raises(ValidationError) as exc_info:
            parser._parse_int("2^20", "MWLAB_BUDGET")

        assert exc_info.value.field == "MWLAB_BUDGET"
        assert "2^20" in exc_info.value.message

    def test_settings(self, parser):
        """Test resolved settings from the file."""
        parser.load()
        settings = parser.settings()

        assert settings.enumeration_budget == 2**20
        assert settings.transform_budget == 4096
        assert settings.series_budget == DEFAULT_SERIES_BUDGET
        assert settings.log_level == "INFO"

    def test_load_settings(self, temp_env_file):
        """Test the load_settings shortcut."""
        settings = load_settings(temp_env_file)
        assert settings.enumeration_budget == 2**20

    def test_default_budget(self, tmp_path, clean_env):
        """Test that an empty file keeps the default budget."""
        parser = _parser_for(tmp_path, "")
        assert parser.settings().enumeration_budget == DEFAULT_ENUMERATION_BUDGET

    def test_validate_valid(self, parser):
        """Test validation of a well-formed file."""
        parser.load()

        result = parser.validate()
        assert result.valid is True
        assert result.errors == []

    def test_validate_invalid_budget(self, tmp_path, clean_env):
        """Test validation with a non-integer budget."""
        parser = _parser_for(tmp_path, "MWLAB_BUDGET=many\n")

        result = parser.validate()
        assert result.valid is False
        assert any("Invalid integer value for MWLAB_BUDGET" in e for e in result.errors)

    def test_validate_budget_minimum(self, tmp_path, clean_env):
        """Test validation with a zero budget."""
        parser = _parser_for(tmp_path, "MWLAB_SERIES_BUDGET=0\n")

        result = parser.validate()
        assert result.valid is False
        assert any("MWLAB_SERIES_BUDGET must be at least 1" in e for e in result.errors)

    def test_validate_huge_budget_warns(self, tmp_path, clean_env):
        """Test that very large budgets only warn."""
        parser = _parser_for(tmp_path, "MWLAB_BUDGET=2**40\n")

        result = parser.validate()
        assert result.valid is True
        assert any("MWLAB_BUDGET" in w for w in result.warnings)

    def test_validate_log_level(self, tmp_path, clean_env):
        """Test validation with an unknown log level."""
        parser = _parser_for(tmp_path, "MWLAB_LOG_LEVEL=loud\n")

        result = parser.validate()
        assert result.valid is False
        assert any("MWLAB_LOG_LEVEL must be one of" in e for e in result.errors)

    def test_validate_unknown_key(self, tmp_path, clean_env):
        """Test that unknown MWLAB_ keys are reported as warnings."""
        parser = _parser_for(tmp_path, "MWLAB_COLOR=red\nOTHER=1\n")

        result = parser.validate()
        assert result.valid is True
        assert result.warnings == ["Unknown setting ignored: MWLAB_COLOR"]
