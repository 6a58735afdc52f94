"""Engine selection for the edge-subset census.

Prefers the compiled kernel when it was built and the instance fits its
static limits; otherwise uses the pure-Python fallback.  Both expose the
same function and return identical dictionaries.
"""

from __future__ import annotations

from espider import _subsets_py

try:
    from espider import _subsets_c
except ImportError:
    _subsets_c = None

HAVE_COMPILED = _subsets_c is not None
KERNEL_MAX_N = 25
KERNEL_MAX_E = 28


def subset_type_census(n: int, edges: list[tuple[int, int]],
                       engine: str = "auto") -> dict[tuple[int, ...], int]:
    """Signed edge-subset counts per component-size partition.

    engine: "auto" (compiled if possible), "compiled", or "python".
    """
    if engine == "compiled" or (
            engine == "auto" and HAVE_COMPILED
            and n <= KERNEL_MAX_N and len(edges) <= KERNEL_MAX_E):
        if _subsets_c is None:
            raise RuntimeError("compiled kernel requested but not built")
        return _subsets_c.subset_type_census(n, edges)
    if engine not in ("auto", "python"):
        raise ValueError(f"unknown engine {engine!r}")
    return _subsets_py.subset_type_census(n, edges)
