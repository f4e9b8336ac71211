"""
Wodzicki module for residue functionals on bisingular operators.

This module provides a unified interface for Wodzicki residues, restricted
traces and their identities through WodzickiService.
"""

# Main public interface
from .service import WodzickiService

# Export only the public interface
__all__ = ['WodzickiService']
