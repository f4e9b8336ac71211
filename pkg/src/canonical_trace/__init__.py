"""
Canonical trace module for bisingular symbols of non-integer bi-order.

This module provides a unified interface for finite-part densities, the
canonical trace TRb and its residues on holomorphic families through
CanonicalTraceService.
"""

# Main public interface
from .service import CanonicalTraceService

# Export only the public interface
__all__ = ['CanonicalTraceService']
