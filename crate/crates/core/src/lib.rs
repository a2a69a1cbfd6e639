//! Exact computer algebra for affine supervarieties over `Q(i)`.

pub mod calc;
pub mod dsl;
pub mod error;
pub mod groups;
pub mod linalg;
pub mod local;
pub mod monomial;
pub mod point;
pub mod poly;
pub mod presentation;
pub mod scalar;
pub mod supermatrix;
pub mod vars;

pub use calc::{jacobian_at, partial_even, partial_odd, super_rank, NumericBlockMatrix, SuperRank};
pub use dsl::{parse_source, print_source, DslError, SourceFile};
pub use error::{Error, Result};
pub use groups::{
    ber_action_gl, generic_berezinian, gl_presentation, lie_superdim, osp_presentation,
    psp_presentation, sl_presentation, stabilizer_ideal, ActionPresentation, GroupKind,
    GroupPresentation,
};
pub use local::{
    free_model_hilbert, hilbert_function, local_membership, minimal_generator_count,
    point_on_variety, smooth_test, tangent_dim, truncated_quotient, NotSmoothCertificate,
    SmoothnessVerdict, SuperDim, TruncatedLocalRing, Verdict,
};
pub use monomial::Monomial;
pub use point::ClosedPoint;
pub use poly::SuperPolynomial;
pub use presentation::{GenIndex, Presentation};
pub use scalar::Scalar;
pub use supermatrix::SuperMatrix;
pub use vars::{Parity, Var, VarTable};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/superalgebra.md")]
    mod superalgebra {}
    #[doc = include_str!("../../../book/src/jacobian.md")]
    mod jacobian {}
    #[doc = include_str!("../../../book/src/smoothness.md")]
    mod smoothness {}
    #[doc = include_str!("../../../book/src/berezinian.md")]
    mod berezinian {}
    #[doc = include_str!("../../../book/src/supergroups.md")]
    mod supergroups {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
