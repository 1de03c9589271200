"""
Combinatorics of partitions, Schubert index subsets and LR coefficients.

Raw counts (`tableaux`) are cross-checked by an independent evaluation
oracle (`schur`).
"""

from .partitions import (  # noqa: F401
    Partition,
    SubsetIndex,
    box_complement,
    conjugate,
    dual_subset,
    from_subset,
    minimal_ambient,
    scale,
    to_subset,
    weight,
)
from .schur import schur_eval, verify_expansion  # noqa: F401
from .tableaux import (  # noqa: F401
    SkewTableau,
    lr_coefficient,
    lr_tableaux,
    product_expansion,
    schubert_constant,
    triple_intersection,
)
