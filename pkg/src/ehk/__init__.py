"""Exact symbolic computation in central extensions of the elliptic Hall
algebra, their Fock modules over Sym (x) Sym, and the induced structures on
cocenters of cyclotomic Hecke algebras."""

from .qfield import ASC, DESC, LaurentSeries, RatFunc, expand_series, qint, tpow
from .lattice import cone, det2, gl2_apply, violet_gamma
from .eha import (
    BracketExpr,
    EHElement,
    apply_gl2,
    apply_omega,
    apply_psi,
    eval_bracket,
    express_w,
    lie_bracket,
    multiply,
    pbw_normalize,
)
from .symfunc import GenPartition, Sym2Element, e_to_P, h_to_P, p_mult, verify_HE_identity
from .fock import FockParams, Sym2Tensor, act_general, act_level0, act_level1, act_word, tensor_act
from .hecke import (
    CocenterClass,
    CyclotomicPoly,
    HeckeAlgebra,
    HeckeElement,
    VfVector,
    cocenter,
    dimension,
    hoop_scalars,
    ind_dot,
    res_trace,
    verify_hoops,
)

__version__ = "0.1.0"
