"""Gentle algebras as tiling algebras: strings, AR theory, surface model."""

from .algebra import (GentlePresentation, GentlenessError, InputError, Quiver,
                      assign_signs, check_gentle, is_zero_path, load_quiver,
                      parse_quiver)
from .strings import (Band, Letter, StringRejection, StringWord, canonicalize,
                      compose, detect_band, enumerate_strings, parse_band,
                      parse_string, validate_string)
from .artheory import (ARQuiver, ar_quiver_dot, ar_sequence, build_ar_quiver,
                       hook_left, hook_right, hooks, is_injective_string,
                       tau_inverse)
from .homs import (AdmissiblePair, FactorDecomposition, SubDecomposition,
                   factor_strings, hom_dim, hom_dim_detailed, substrings)
from .oracle import (BandModuleSpec, MatrixRep, hom_dim_oracle,
                     realize_band_module, realize_string_module,
                     verify_ar_middle)
from .surface import (Tiling, TilingAlgebra, TilingRejection,
                      collapse_presentation, complete_to_triangulation,
                      presentations_isomorphic, tiling_algebra,
                      validate_tiling)

__all__ = [name for name in dir() if not name.startswith("_")]
