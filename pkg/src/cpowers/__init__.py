"""
Complex powers module for bisingular symbols and model operators.

This module provides a unified interface for resolvent contour integrals,
complex powers, sign operators and the holomorphic functional calculus
through PowerService.
"""

# Main public interface
from .service import PowerService

# Export only the public interface
__all__ = ['PowerService']
