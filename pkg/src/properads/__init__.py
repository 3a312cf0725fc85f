"""Exact combinatorics of cospans, level graphs, and discrete properads.

The package is organized bottom-up:

- `finset`: finite sets, maps, pushouts/pullbacks, quotients.
- `freemon`: free commutative monoids, hom classification, submonoid audits.
- `cospan`: (projective, weighted) cospans, chains, levelwise freeness.
- `levelgraph`: level objects, the inert/active factorization, DAG realization.
- `properad`: discrete properads, gluing plans, axiom checks, admissible arities.
- `segal`: Segal presheaf checks, free properads on generators, the envelope.
- `verify`: the ten-criterion acceptance battery.
- `cli`: the `properads` command-line front end.
"""

from . import finset, freemon, cospan, levelgraph, properad, segal, verify

__all__ = ["finset", "freemon", "cospan", "levelgraph", "properad", "segal", "verify"]
__version__ = "0.1.0"
