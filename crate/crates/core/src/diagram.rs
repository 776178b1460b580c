//! Finite colimits and limits from biproducts plus cokernels/kernels.
//!
//! The colimit of a diagram is the cokernel of the map that sends the summand
//! of an arrow `λ : i -> j` to `u_i - u_j ∘ F(λ)` inside the biproduct of all
//! objects; the limit is the dual kernel. A diagram lists a generating set of
//! arrows rather than a full hom-closure: a cocone is co-compatible with all
//! composites as soon as it is co-compatible with the generators, so the
//! resulting (co)limit is the same. The span/cospan cross-checks against
//! `pullback`/`pushout` in the tests pin this down.

use crate::category::{biproduct, cokernel, kernel};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::module::FpModule;
use crate::morphism::{compose, ModMorphism};
use crate::solve::solve_matrix;

#[derive(Clone)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub map: ModMorphism,
}

/// A finite diagram: indexed objects plus a generating list of arrows.
pub struct Diagram {
    objects: Vec<FpModule>,
    arrows: Vec<Arrow>,
}

impl Diagram {
    pub fn new(objects: Vec<FpModule>, arrows: Vec<Arrow>) -> Result<Self> {
        if objects.is_empty() {
            return Err(Error::MalformedDiagram("no objects".into()));
        }
        let ring = objects[0].ring();
        if objects.iter().any(|o| o.ring() != ring) {
            return Err(Error::MalformedDiagram("mixed rings".into()));
        }
        for (k, arrow) in arrows.iter().enumerate() {
            if arrow.source >= objects.len() || arrow.target >= objects.len() {
                return Err(Error::MalformedDiagram(format!(
                    "arrow {k} references a missing object"
                )));
            }
            if arrow.map.source() != &objects[arrow.source]
                || arrow.map.target() != &objects[arrow.target]
            {
                return Err(Error::MalformedDiagram(format!(
                    "arrow {k} endpoints do not match its morphism"
                )));
            }
        }
        Ok(Diagram { objects, arrows })
    }

    pub fn objects(&self) -> &[FpModule] {
        &self.objects
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }
}

pub struct Colimit {
    pub object: FpModule,
    /// One leg per diagram object, in index order.
    pub cocone: Vec<ModMorphism>,
    relator: ModMorphism,
}

pub struct Limit {
    pub object: FpModule,
    pub cone: Vec<ModMorphism>,
    inclusion: ModMorphism,
}

/// Colimit as the cokernel of `φ : ⊕_λ F(s(λ)) -> ⊕_i F(i)` where the
/// λ-summand maps by `u_{s(λ)} - u_{t(λ)} ∘ F(λ)`.
pub fn colimit(diagram: &Diagram) -> Result<Colimit> {
    let ring = diagram.objects()[0].ring();
    let sum = biproduct(diagram.objects())?;
    let arrow_sources: Vec<FpModule> = diagram
        .arrows()
        .iter()
        .map(|a| diagram.objects()[a.source].clone())
        .collect();
    let arrow_sum = if arrow_sources.is_empty() {
        biproduct(&[FpModule::zero(ring)])?
    } else {
        biproduct(&arrow_sources)?
    };
    let mut blocks: Vec<Matrix> = Vec::with_capacity(diagram.arrows().len());
    for arrow in diagram.arrows() {
        let through = sum.injections[arrow.target].matrix().mul(arrow.map.matrix());
        blocks.push(sum.injections[arrow.source].matrix().sub(&through));
    }
    let relator_matrix = if blocks.is_empty() {
        Matrix::zero(sum.object.generators(), 0)
    } else {
        let refs: Vec<&Matrix> = blocks.iter().collect();
        Matrix::hstack(&refs)
    };
    let relator = ModMorphism::new_unchecked(&arrow_sum.object, &sum.object, relator_matrix);
    let coker = cokernel(&relator);
    let cocone = sum
        .injections
        .iter()
        .map(|u| compose(&coker.projection, u))
        .collect();
    Ok(Colimit {
        object: coker.object,
        cocone,
        relator,
    })
}

impl Colimit {
    /// The morphism out of the colimit induced by a co-compatible family;
    /// panics if the family does not kill the relator (i.e. is not a cocone).
    pub fn factor(&self, legs: &[ModMorphism]) -> ModMorphism {
        assert_eq!(legs.len(), self.cocone.len());
        let target = legs[0].target().clone();
        let blocks: Vec<&Matrix> = legs.iter().map(|l| l.matrix()).collect();
        let combined = Matrix::hstack(&blocks);
        let on_relator = combined.mul(self.relator.matrix());
        let kills = solve_matrix(target.relations(), &on_relator, target.ring()).is_some();
        assert!(kills, "family is not co-compatible with the diagram");
        // The quotient has the same generators, so the matrix descends as is.
        ModMorphism::new_unchecked(&self.object, &target, combined)
    }
}

/// Limit as the kernel of `φ : ∏_i F(i) -> ∏_λ F(t(λ))` where the λ-component
/// is `F(λ) ∘ u_{s(λ)} - u_{t(λ)}`.
pub fn limit(diagram: &Diagram) -> Result<Limit> {
    let ring = diagram.objects()[0].ring();
    let product = biproduct(diagram.objects())?;
    let arrow_targets: Vec<FpModule> = diagram
        .arrows()
        .iter()
        .map(|a| diagram.objects()[a.target].clone())
        .collect();
    let arrow_product = if arrow_targets.is_empty() {
        biproduct(&[FpModule::zero(ring)])?
    } else {
        biproduct(&arrow_targets)?
    };
    let mut blocks: Vec<Matrix> = Vec::with_capacity(diagram.arrows().len());
    for arrow in diagram.arrows() {
        let through = arrow.map.matrix().mul(product.projections[arrow.source].matrix());
        blocks.push(through.sub(product.projections[arrow.target].matrix()));
    }
    let matrix = if blocks.is_empty() {
        Matrix::zero(0, product.object.generators())
    } else {
        let refs: Vec<&Matrix> = blocks.iter().collect();
        Matrix::vstack(&refs)
    };
    let relator = ModMorphism::new_unchecked(&product.object, &arrow_product.object, matrix);
    let ker = kernel(&relator);
    let cone = product
        .projections
        .iter()
        .map(|p| compose(p, &ker.inclusion))
        .collect();
    Ok(Limit {
        object: ker.object,
        cone,
        inclusion: ker.inclusion,
    })
}

impl Limit {
    /// The morphism into the limit induced by a compatible family; panics if
    /// the family is not a cone over the diagram.
    pub fn factor(&self, legs: &[ModMorphism]) -> ModMorphism {
        assert_eq!(legs.len(), self.cone.len());
        let source = legs[0].source().clone();
        let blocks: Vec<&Matrix> = legs.iter().map(|l| l.matrix()).collect();
        let stacked = Matrix::vstack(&blocks);
        let u = solve_matrix(self.inclusion.matrix(), &stacked, source.ring())
            .expect("family is not compatible with the diagram");
        ModMorphism::new_unchecked(&source, &self.object, u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{is_iso, pullback, pushout};
    use crate::ring::RingSpec;

    fn zmod(m: u64) -> RingSpec {
        RingSpec::modular(m).unwrap()
    }

    fn m2() -> FpModule {
        FpModule::present(zmod(4), 1, &Matrix::from_i64(1, 1, &[2])).unwrap()
    }

    fn r() -> FpModule {
        FpModule::free(zmod(4), 1)
    }

    #[test]
    fn single_object_colimit_is_the_object() {
        let d = Diagram::new(vec![m2()], vec![]).unwrap();
        let c = colimit(&d).unwrap();
        assert_eq!(c.object, m2());
        assert!(c.cocone[0].matrix().is_identity());
        let l = limit(&d).unwrap();
        assert_eq!(l.object, m2());
    }

    #[test]
    fn discrete_colimit_is_the_biproduct() {
        let d = Diagram::new(vec![m2(), r()], vec![]).unwrap();
        let c = colimit(&d).unwrap();
        let bp = biproduct(&[m2(), r()]).unwrap();
        assert_eq!(c.object, bp.object);
        for (leg, inj) in c.cocone.iter().zip(&bp.injections) {
            assert!(leg.equal_to(inj));
        }
        let l = limit(&d).unwrap();
        assert_eq!(l.object, bp.object);
        for (leg, proj) in l.cone.iter().zip(&bp.projections) {
            assert!(leg.equal_to(proj));
        }
    }

    #[test]
    fn span_colimit_matches_pushout() {
        // B <- A -> B' with both legs multiplication by 2 out of M2.
        let f = ModMorphism::new(&m2(), &r(), &Matrix::from_i64(1, 1, &[2])).unwrap();
        let d = Diagram::new(
            vec![m2(), r(), r()],
            vec![
                Arrow { source: 0, target: 1, map: f.clone() },
                Arrow { source: 0, target: 2, map: f.clone() },
            ],
        )
        .unwrap();
        let c = colimit(&d).unwrap();
        for arrow in d.arrows() {
            assert!(compose(&c.cocone[arrow.target], &arrow.map).equal_to(&c.cocone[arrow.source]));
        }
        let po = pushout(&f, &f);

        // Mutually inverse comparison morphisms between the two constructions.
        let via_push = c.factor(&[
            compose(&po.from_left, &f),
            po.from_left.clone(),
            po.from_right.clone(),
        ]);
        let back = crate::category::pushout_factor(&po, &c.cocone[1], &c.cocone[2]).unwrap();
        assert!(is_iso(&via_push));
        assert!(compose(&back, &via_push).equal_to(&ModMorphism::identity(&c.object)));
        assert!(compose(&via_push, &back).equal_to(&ModMorphism::identity(&po.object)));
    }

    #[test]
    fn cospan_limit_matches_pullback() {
        let g = ModMorphism::new(&r(), &m2(), &Matrix::from_i64(1, 1, &[1])).unwrap();
        let d = Diagram::new(
            vec![r(), r(), m2()],
            vec![
                Arrow { source: 0, target: 2, map: g.clone() },
                Arrow { source: 1, target: 2, map: g.clone() },
            ],
        )
        .unwrap();
        let l = limit(&d).unwrap();
        for arrow in d.arrows() {
            assert!(compose(&arrow.map, &l.cone[arrow.source]).equal_to(&l.cone[arrow.target]));
        }
        let pb = pullback(&g, &g);
        let into_pb = crate::category::pullback_factor(&pb, &l.cone[0], &l.cone[1]).unwrap();
        let back = l.factor(&[pb.to_left.clone(), pb.to_right.clone(), compose(&g, &pb.to_left)]);
        assert!(compose(&back, &into_pb).equal_to(&ModMorphism::identity(&l.object)));
        assert!(compose(&into_pb, &back).equal_to(&ModMorphism::identity(&pb.object)));
    }
}
