use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::RingSpec;
use crate::snf::{column_hermite, smith_normal_form};

/// A finitely presented module over `Z` or `Z/m`: the cokernel of its relation
/// matrix, one column per relation among the generators.
///
/// Presentations are canonically reduced at construction (over `Z/m` the
/// columns `m * e_i` are adjoined first), so syntactic equality of two values
/// means equality of relation lattices on the same generators. Module equality
/// up to isomorphism is a different notion and always goes through invariant
/// factors or explicit comparison morphisms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpModule {
    ring: RingSpec,
    generators: usize,
    relations: Matrix,
}

impl FpModule {
    /// Present a module by generators and relation columns.
    pub fn present(ring: RingSpec, generators: usize, relations: &Matrix) -> Result<Self> {
        if relations.rows() != generators {
            return Err(Error::DimensionMismatch(format!(
                "relation matrix has {} rows for {} generators",
                relations.rows(),
                generators
            )));
        }
        Ok(FpModule {
            ring,
            generators,
            relations: canonical_relations(ring, generators, relations),
        })
    }

    pub fn free(ring: RingSpec, rank: usize) -> Self {
        FpModule::present(ring, rank, &Matrix::zero(rank, 0)).expect("free presentation is valid")
    }

    pub fn zero(ring: RingSpec) -> Self {
        FpModule::free(ring, 0)
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &Matrix {
        &self.relations
    }

    /// Invariant factors of the underlying abelian group presentation:
    /// nontrivial finite factors in divisibility order, then one `0` per free
    /// rank. Empty exactly for the zero module.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let snf = smith_normal_form(&self.relations);
        let steps = self.generators.min(self.relations.cols());
        let mut factors: Vec<BigInt> = (0..steps)
            .map(|i| snf.d[(i, i)].clone())
            .filter(|d| !d.is_one() && !d.is_zero())
            .collect();
        let rank = (0..steps)
            .filter(|&i| snf.d[(i, i)].is_zero())
            .count()
            + (self.generators - steps);
        factors.extend(std::iter::repeat_n(BigInt::zero(), rank));
        factors
    }

    pub fn is_zero_module(&self) -> bool {
        self.invariant_factors().is_empty()
    }

    /// Number of elements, or `None` when the module is infinite.
    pub fn element_count(&self) -> Option<BigUint> {
        let mut count = BigUint::one();
        for f in self.invariant_factors() {
            if f.is_zero() {
                return None;
            }
            count *= f.magnitude();
        }
        Some(count)
    }

    /// Whether the presentation is the canonical free one of its rank.
    pub fn is_free_presentation(&self) -> bool {
        *self == FpModule::free(self.ring, self.generators)
    }
}

fn canonical_relations(ring: RingSpec, generators: usize, relations: &Matrix) -> Matrix {
    let lattice = if ring.is_integers() {
        relations.clone()
    } else {
        let m = Matrix::identity(generators).scale(&BigInt::from(ring.modulus()));
        Matrix::hstack(&[relations, &m])
    };
    column_hermite(&lattice)
}

/// Renders the isomorphism type from invariant factors: `0`, `Z`, `Z/2 + Z/4`, ...
pub fn describe_factors(factors: &[BigInt]) -> String {
    if factors.is_empty() {
        return "0".to_string();
    }
    factors
        .iter()
        .map(|f| {
            if f.is_zero() {
                "Z".to_string()
            } else {
                format!("Z/{}", f.abs())
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

impl fmt::Display for FpModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", describe_factors(&self.invariant_factors()))
    }
}

impl fmt::Debug for FpModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FpModule({}, gens={}, rel={})",
            self.ring, self.generators, self.relations
        )
    }
}
