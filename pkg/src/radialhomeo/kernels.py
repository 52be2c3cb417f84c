"""Backend selection for the numerical kernels.

The compiled ``_kernels`` extension is used when it imports cleanly; otherwise
the pure-Python ``_kernels_py`` module is used.  Setting the environment
variable ``RADIALHOMEO_PURE_PYTHON=1`` forces the fallback.
"""
import importlib
import os

from . import _kernels_py

BACKENDS = ("cython", "python")


def load_backend(name):
    """Return the kernel module for ``name`` (``"cython"`` or ``"python"``)."""
    if name == "python":
        return _kernels_py
    if name == "cython":
        return importlib.import_module("radialhomeo._kernels")
    raise ValueError(f"unknown kernel backend {name!r}")


def available_backends():
    out = []
    for name in BACKENDS:
        try:
            load_backend(name)
        except ImportError:
            continue
        out.append(name)
    return out


if os.environ.get("RADIALHOMEO_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        _impl = load_backend("cython")
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND
PARABOLIC = _impl.PARABOLIC
ELLIPSOID_CYLINDER = _impl.ELLIPSOID_CYLINDER

bump = _impl.bump
bump_prime = _impl.bump_prime
gamma = _impl.gamma
profiles = _impl.profiles
dob_F = _impl.dob_F
dob_root = _impl.dob_root
bracket_start = _impl.bracket_start
theta = _impl.theta
theta_prime = _impl.theta_prime
theta_inverse = _impl.theta_inverse
poly_gauge = _impl.poly_gauge
poly_shifted_gauge = _impl.poly_shifted_gauge
poly_contains = _impl.poly_contains
poly_in_cone = _impl.poly_in_cone
smooth_g = _impl.smooth_g
smooth_shifted_gauge = _impl.smooth_shifted_gauge
