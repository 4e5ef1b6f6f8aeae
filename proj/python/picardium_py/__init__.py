"""Python bindings for the picardium verification library.

The compiled extension exposes three entry points:

- ``run(args)``: execute a CLI command in-process, returning the exit status
  (0 all certificates pass, 1 a certificate failed, 2 input error).
- ``trivialise_cyclic(n, k, elements)``: solve the coboundary equation on a
  subgroup of Z/n against the standard associator with parameter ``k``.
- ``verify_cyclic(theorem, n, k, elements)``: run a named verification
  pipeline and return its certificate list as a dict.
"""

try:
    from ._picardium import run, trivialise_cyclic, verify_cyclic
except ImportError:  # build-tree layout: extension sits next to the package
    from _picardium import run, trivialise_cyclic, verify_cyclic

__all__ = ["run", "trivialise_cyclic", "verify_cyclic"]
