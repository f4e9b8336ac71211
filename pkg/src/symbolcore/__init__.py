"""
Symbol calculus module for classical bisingular symbols on circle × circle.

This module provides a unified interface for symbol operations through SymbolService.
Lower-level modules (domain, builder, calculus, oracle, legs) are imported
directly by the other packages of the repository.
"""

# Main public interface
from .service import SymbolService

# Export only the public interface
__all__ = ['SymbolService']
