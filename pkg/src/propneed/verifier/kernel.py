"""Select the assignment scanner: compiled extension if built, else numpy."""
try:
    from ._scan import Scanner
    BACKEND = "cython"
except ImportError:  # extension not built
    from ._scan_py import Scanner
    BACKEND = "python"

__all__ = ["Scanner", "BACKEND"]
