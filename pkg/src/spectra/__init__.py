"""
Spectra module for model operators with explicitly enumerable spectra.

This module provides a unified interface for model operators through SpectraService.
"""

# Main public interface
from .service import SpectraService

# Export only the public interface
__all__ = ['SpectraService']
