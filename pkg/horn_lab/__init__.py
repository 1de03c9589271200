"""
Horn Lab package.

Exact tools around the Horn cone Delta(n) of spectra (alpha, beta, gamma)
of Hermitian triples A + B + C = 0:
- combinatorics: partitions, Schubert index subsets, LR coefficients
- horn_cone: Horn inequalities, membership, facet classification (exact LP)
- face_geometry: faces of Delta(n) and the block splitting rho
- spectra: Hermitian sampling
- fulton: scaled-coefficient sweeps and the geometric trace
"""

from . import combinatorics  # noqa: F401
