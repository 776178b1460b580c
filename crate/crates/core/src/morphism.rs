use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::module::FpModule;
use crate::ring::RingSpec;
use crate::solve::solve_matrix;

/// A morphism of finitely presented modules, given by its matrix on
/// generators (`target.generators() x source.generators()`).
///
/// Construction requires the well-definedness certificate: some `X` with
/// `matrix * source.relations = target.relations * X` over the ring. The
/// matrix itself is stored as given (reduced into `[0, m)` over `Z/m` but not
/// reduced modulo the target's relations); two morphisms are equal when their
/// difference maps every generator into the target's relation lattice.
#[derive(Clone)]
pub struct ModMorphism {
    source: FpModule,
    target: FpModule,
    matrix: Matrix,
}

impl ModMorphism {
    pub fn new(source: &FpModule, target: &FpModule, matrix: &Matrix) -> Result<Self> {
        if source.ring() != target.ring() {
            return Err(Error::RingMismatch(format!(
                "morphism between {} and {} modules",
                source.ring(),
                target.ring()
            )));
        }
        if matrix.rows() != target.generators() || matrix.cols() != source.generators() {
            return Err(Error::DimensionMismatch(format!(
                "morphism matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.generators(),
                source.generators()
            )));
        }
        let candidate = ModMorphism {
            source: source.clone(),
            target: target.clone(),
            matrix: matrix.reduced_mod(source.ring().modulus()),
        };
        if !candidate.has_certificate() {
            return Err(Error::NotWellDefined(format!(
                "matrix {} does not respect the relations",
                matrix
            )));
        }
        Ok(candidate)
    }

    /// Internal constructor for maps that are well defined by construction.
    pub(crate) fn new_unchecked(source: &FpModule, target: &FpModule, matrix: Matrix) -> Self {
        let morphism = ModMorphism {
            source: source.clone(),
            target: target.clone(),
            matrix: matrix.reduced_mod(source.ring().modulus()),
        };
        debug_assert!(morphism.has_certificate(), "unchecked morphism is invalid");
        morphism
    }

    fn has_certificate(&self) -> bool {
        let image_of_relations = self.matrix.mul(self.source.relations());
        solve_matrix(self.target.relations(), &image_of_relations, self.ring()).is_some()
    }

    pub fn identity(module: &FpModule) -> Self {
        ModMorphism::new_unchecked(module, module, Matrix::identity(module.generators()))
    }

    pub fn zero_map(source: &FpModule, target: &FpModule) -> Self {
        assert_eq!(source.ring(), target.ring());
        ModMorphism::new_unchecked(
            source,
            target,
            Matrix::zero(target.generators(), source.generators()),
        )
    }

    pub fn source(&self) -> &FpModule {
        &self.source
    }

    pub fn target(&self) -> &FpModule {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn ring(&self) -> RingSpec {
        self.source.ring()
    }

    /// Equality modulo the target's relations. Panics if the endpoints differ;
    /// comparing morphisms with different endpoints is a programming error.
    pub fn equal_to(&self, other: &ModMorphism) -> bool {
        assert_eq!(self.source, other.source, "morphism equality: sources differ");
        assert_eq!(self.target, other.target, "morphism equality: targets differ");
        let diff = self.matrix.sub(&other.matrix);
        solve_matrix(self.target.relations(), &diff, self.ring()).is_some()
    }

    pub fn is_zero_morphism(&self) -> bool {
        self.equal_to(&ModMorphism::zero_map(&self.source, &self.target))
    }

    pub fn plus(&self, other: &ModMorphism) -> ModMorphism {
        assert_eq!(self.source, other.source);
        assert_eq!(self.target, other.target);
        ModMorphism::new_unchecked(&self.source, &self.target, self.matrix.add(&other.matrix))
    }

    pub fn negated(&self) -> ModMorphism {
        ModMorphism::new_unchecked(&self.source, &self.target, self.matrix.neg())
    }
}

/// `late ∘ early`. Panics unless `early.target == late.source` as presented
/// objects; categorical gluing in this crate is always on-the-nose.
pub fn compose(late: &ModMorphism, early: &ModMorphism) -> ModMorphism {
    assert_eq!(
        early.target(),
        late.source(),
        "compose: inner objects differ"
    );
    ModMorphism::new_unchecked(
        early.source(),
        late.target(),
        late.matrix().mul(early.matrix()),
    )
}

impl fmt::Debug for ModMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ModMorphism({:?} -> {:?}, {})",
            self.source, self.target, self.matrix
        )
    }
}
