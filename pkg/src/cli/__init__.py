"""
CLI module for pole tables, value tables and verification suites.

This module provides a unified interface for the poles, verify and table
commands through VerificationService.
"""

# Main public interface
from .service import VerificationService

# Export only the public interface
__all__ = ['VerificationService']
