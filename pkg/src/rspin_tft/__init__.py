"""Exact classification of invertible 2d framed and r-spin TFTs."""

from .abelian import (
    FgAbGroup,
    GroupHom,
    IntMatrix,
    SmithDecomposition,
    cokernel,
    enumerate_homs,
    ext_group,
    hom_compose,
    hom_equal,
    hom_group,
    smith_normal_form,
    tensor_z2,
)
from .bordism import circle_class, pi0_presentation
from .picard import (
    FormalGroupExpr,
    PicardData,
    Pi1Group,
    bord_picard_data,
    classify_functors,
    classify_rspin_tfts,
    line,
    sline,
)
from .rspin import (
    HigherGenus,
    LowRGenus,
    Sphere,
    Torus,
    arf_torus,
    euler_char,
    exists_rspin,
    genus_admissible,
    sl2_canonical,
    torus_orbits,
)
from .skk import (
    FormalSurfaceSum,
    SkkClass,
    euler_hom,
    k_invariant_circle,
    section_phi,
    skk_class,
    skk_group,
    torus_subgroup_oracle,
)
from .tft import InvertibleTft, arf_tft, euler_tft, evaluate, verify_skk_invariance

__version__ = "0.1.0"
