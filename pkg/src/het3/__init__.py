"""het3: curvature engine and residual checker for 3D Heterotic solitons."""

__version__ = "0.1.0"

from . import constructors, frame, geometry, residuals, torsion  # noqa: F401
