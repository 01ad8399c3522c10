from .catalog import Catenoid, Cylinder, Helicoid, Plane, Sphere
from .numeric import FiniteDifferenceSurface, TabulatedSurface
from .patch import Domain, SurfacePatch
from .quadric import Quadric1Surface, Quadric2Surface, default_quadric1_domain
from .wrappers import LinearChart, RigidMotion

__all__ = [
    "Catenoid",
    "Cylinder",
    "default_quadric1_domain",
    "Domain",
    "FiniteDifferenceSurface",
    "Helicoid",
    "LinearChart",
    "Plane",
    "Quadric1Surface",
    "Quadric2Surface",
    "RigidMotion",
    "Sphere",
    "SurfacePatch",
    "TabulatedSurface",
]
