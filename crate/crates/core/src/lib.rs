//! Exact homological algebra for finitely presented modules over `Z` and `Z/m`.
//!
//! The crate has three layers:
//!
//! * exact integer linear algebra — Smith normal form, Hermite reduction,
//!   modular solving and kernels ([`matrix`], [`snf`], [`solve`]);
//! * a concrete abelian category of finitely presented modules — kernels,
//!   cokernels, biproducts, pullbacks/pushouts, finite colimits and limits
//!   ([`module`], [`morphism`], [`category`], [`diagram`]);
//! * the extension calculus — short exact sequences with Baer sums and
//!   morphism actions, length-`n` extensions, a free-resolution cohomology
//!   oracle for extension classes, and the coproduct/product isomorphisms
//!   between `Ext` of a biproduct and products of `Ext` groups
//!   ([`ses`], [`nextension`], [`resolution`], [`coproduct`]).
//!
//! Deterministic seeded generators for random instances live in [`sample`].

pub mod category;
pub mod coproduct;
pub mod diagram;
pub mod error;
pub mod matrix;
pub mod module;
pub mod morphism;
pub mod nextension;
pub mod resolution;
pub mod ring;
pub mod sample;
pub mod ses;
pub mod snf;
pub mod solve;

pub use category::{
    biproduct, cokernel, cokernel_factor, image, is_epi, is_exact_at, is_iso, is_mono, kernel,
    kernel_factor, minimal_presentation, morphism_direct_sum, morphism_matrix_lattice, pullback,
    pullback_factor, pushout, pushout_factor, sequence_is_exact, Biproduct, Cokernel, Image,
    Kernel, Pullback, Pushout,
};
pub use coproduct::{
    ab4_colim_check, phi, phi_inverse, psi, psi_inverse, theta, theta_dual, Ab4Report,
    DualExtFamily, ExtFamily,
};
pub use diagram::{colimit, limit, Arrow, Colimit, Diagram, Limit};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use module::{describe_factors, FpModule};
pub use morphism::{compose, ModMorphism};
pub use nextension::{natural_decomposition, NExtension};
pub use resolution::{
    classes_equal, ext_group, ext_order, resolution_for, yoneda_class, yoneda_class_ses, ExtClass,
    FreeResolution,
};
pub use ring::RingSpec;
pub use ses::{
    codiagonal, diagonal, extension_from_cocycle, SesMorphism, ShortExactSeq,
};
pub use snf::{column_hermite, row_hermite, smith_normal_form, SmithForm};
pub use solve::{kernel_columns, solve_matrix, solve_modular, MatrixSystem};
