"""
Configuration module for the skew DGA tool.

Contains configuration management classes and settings.
"""

from skew_dga_tool.config.tool_config import ComputationConfig, ToolConfiguration

__all__ = ["ComputationConfig", "ToolConfiguration"]
