"""Suite profile configuration."""

from .loader import ConfigurationLoader, SuiteProfile

__all__ = ["ConfigurationLoader", "SuiteProfile"]
