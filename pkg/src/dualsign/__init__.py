"""Exact arithmetic for polarization signs of finite-group representations.

The package has four pillars:

* ``fields`` / ``linalg`` -- exact coefficient fields (rationals, odd prime
  fields, simple polynomial extensions, rational function fields) and the
  dense linear algebra built on them.
* ``groups`` / ``reps`` / ``descent`` -- finite groups with an involution,
  conjugate-self-dual representations, the +-1 sign carried by their
  Schur-unique intertwiner, and the symplectic descent / semidirect
  extension calculations around it.
* ``dvr`` / ``specialize`` -- exact discrete valuation rings, two-fiber
  specialization of goodness, and involution-equivariant idempotent lifting.
* ``slopes`` -- weight/slope grids, general-position scans, canonical
  slope-to-weight matching, transitive refinements and the partial-sum
  and weak-admissibility obstruction checks.

The ``service`` module wraps everything as a FastAPI app; ``cli`` is a thin
client over the same handlers.
"""

__version__ = "0.1.0"
