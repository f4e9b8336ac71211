"""
Meromorphic module for continued spectral functions of model operators.

This module provides a unified interface for ζ, η, spectral-cut ζ, Laurent
coefficients and pole tables through MeromorphicService.
"""

# Main public interface
from .service import MeromorphicService

# Export only the public interface
__all__ = ['MeromorphicService']
