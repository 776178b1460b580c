//! Short exact sequences and the degree-one extension calculus: base change
//! along morphisms into the right end (pullback), cobase change out of the
//! left end (pushout), the Baer sum, splitting and fixed-end equivalence.
//!
//! Every action retains the connecting morphism of sequences it constructs,
//! so associativity-with-morphisms identities can be tested on stored data
//! instead of being re-derived.

use crate::category::{
    biproduct, cokernel, cokernel_factor, is_epi, is_exact_at, is_mono, minimal_presentation,
    pullback, pushout,
};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::module::FpModule;
use crate::morphism::{compose, ModMorphism};
use crate::solve::MatrixSystem;

/// `0 -> A -f-> B -g-> C -> 0`, validated at construction.
#[derive(Clone)]
pub struct ShortExactSeq {
    f: ModMorphism,
    g: ModMorphism,
}

/// A morphism of short exact sequences `(alpha, beta, gamma)`; the two
/// commuting squares are checked at construction.
#[derive(Clone)]
pub struct SesMorphism {
    pub alpha: ModMorphism,
    pub beta: ModMorphism,
    pub gamma: ModMorphism,
}

impl SesMorphism {
    pub fn new(
        from: &ShortExactSeq,
        to: &ShortExactSeq,
        alpha: ModMorphism,
        beta: ModMorphism,
        gamma: ModMorphism,
    ) -> Result<Self> {
        let square_one = compose(&beta, from.f()).equal_to(&compose(to.f(), &alpha));
        let square_two = compose(&gamma, from.g()).equal_to(&compose(to.g(), &beta));
        if !square_one || !square_two {
            return Err(Error::NotExact(
                "triple does not commute with the sequences".into(),
            ));
        }
        Ok(SesMorphism { alpha, beta, gamma })
    }
}

impl ShortExactSeq {
    pub fn new(f: ModMorphism, g: ModMorphism) -> Result<Self> {
        if f.target() != g.source() {
            return Err(Error::EndMismatch(
                "middle objects of the two maps differ".into(),
            ));
        }
        if !is_mono(&f) {
            return Err(Error::NotExact("first map is not a monomorphism".into()));
        }
        if !is_epi(&g) {
            return Err(Error::NotExact("second map is not an epimorphism".into()));
        }
        if !is_exact_at(&f, &g) {
            return Err(Error::NotExact("image of f differs from kernel of g".into()));
        }
        Ok(ShortExactSeq { f, g })
    }

    pub fn left(&self) -> &FpModule {
        self.f.source()
    }

    pub fn middle(&self) -> &FpModule {
        self.f.target()
    }

    pub fn right(&self) -> &FpModule {
        self.g.target()
    }

    pub fn f(&self) -> &ModMorphism {
        &self.f
    }

    pub fn g(&self) -> &ModMorphism {
        &self.g
    }

    /// The canonical split sequence `0 -> A -> A ⊕ C -> C -> 0`.
    pub fn split(a: &FpModule, c: &FpModule) -> Self {
        let bp = biproduct(&[a.clone(), c.clone()]).expect("split ends share the ring");
        ShortExactSeq {
            f: bp.injections[0].clone(),
            g: bp.projections[1].clone(),
        }
    }

    /// Replace the middle by its minimal presentation, conjugating both maps.
    /// The ends are untouched, so the fixed-end equivalence class is the same.
    pub(crate) fn compacted(self) -> Self {
        let (minimal, to_min, from_min) = minimal_presentation(self.middle());
        if minimal.generators() == self.middle().generators() {
            return self;
        }
        ShortExactSeq {
            f: compose(&to_min, &self.f),
            g: compose(&self.g, &from_min),
        }
    }

    /// Componentwise biproduct of sequences. The ends are the literal
    /// biproduct objects; only the middle is re-presented minimally.
    pub fn direct_sum_many(parts: &[&ShortExactSeq]) -> Self {
        assert!(!parts.is_empty());
        let lefts = biproduct(&parts.iter().map(|s| s.left().clone()).collect::<Vec<_>>())
            .expect("shared ring");
        let mids = biproduct(&parts.iter().map(|s| s.middle().clone()).collect::<Vec<_>>())
            .expect("shared ring");
        let rights = biproduct(&parts.iter().map(|s| s.right().clone()).collect::<Vec<_>>())
            .expect("shared ring");
        let f_blocks: Vec<&Matrix> = parts.iter().map(|s| s.f.matrix()).collect();
        let g_blocks: Vec<&Matrix> = parts.iter().map(|s| s.g.matrix()).collect();
        let f = ModMorphism::new_unchecked(&lefts.object, &mids.object, Matrix::block_diag(&f_blocks));
        let g = ModMorphism::new_unchecked(&mids.object, &rights.object, Matrix::block_diag(&g_blocks));
        ShortExactSeq { f, g }.compacted()
    }

    pub fn direct_sum(&self, other: &ShortExactSeq) -> Self {
        ShortExactSeq::direct_sum_many(&[self, other])
    }

    /// Base change along `gamma : C' -> C`: the pullback row `E γ` together
    /// with the connecting morphism `(1, β, γ) : Eγ -> E`.
    pub fn act_right(&self, gamma: &ModMorphism) -> (Self, SesMorphism) {
        assert_eq!(
            gamma.target(),
            self.right(),
            "act_right: morphism must land in the right end"
        );
        let pb = pullback(self.g(), gamma);
        // A -> P induced by (f, 0), which equalizes g and gamma.
        let into = pullback_induced(&pb, self.f(), &ModMorphism::zero_map(self.left(), gamma.source()));
        let result = ShortExactSeq::new(into, pb.to_right.clone())
            .expect("pullback row of an exact sequence is exact")
            .compacted();
        let cert = SesMorphism::new(
            &result,
            self,
            ModMorphism::identity(self.left()),
            compose(&pb.to_left, &reconstruct_iso(&result, &pb)),
            gamma.clone(),
        )
        .expect("pullback certificate commutes");
        (result, cert)
    }

    /// Cobase change along `alpha : A -> A'`: the pushout row `α E` together
    /// with the connecting morphism `(α, β, 1) : E -> αE`.
    pub fn act_left(&self, alpha: &ModMorphism) -> (Self, SesMorphism) {
        assert_eq!(
            alpha.source(),
            self.left(),
            "act_left: morphism must leave the left end"
        );
        let po = pushout(self.f(), alpha);
        let onto = pushout_induced(&po, self.g(), &ModMorphism::zero_map(alpha.target(), self.right()));
        let pre = ShortExactSeq::new(po.from_right.clone(), onto)
            .expect("pushout row of an exact sequence is exact");
        let result = pre.compacted();
        let beta = if result.middle() == po.from_left.target() {
            po.from_left.clone()
        } else {
            let (_, to_min, _) = minimal_presentation(po.from_left.target());
            compose(&to_min, &po.from_left)
        };
        let cert = SesMorphism::new(
            self,
            &result,
            alpha.clone(),
            beta,
            ModMorphism::identity(self.right()),
        )
        .expect("pushout certificate commutes");
        (result, cert)
    }

    /// Baer sum `E + E' = ∇_A (E ⊕ E') Δ_C`.
    pub fn baer_sum(&self, other: &ShortExactSeq) -> Self {
        assert_eq!(self.left(), other.left(), "baer_sum: left ends differ");
        assert_eq!(self.right(), other.right(), "baer_sum: right ends differ");
        let summed = self.direct_sum(other);
        let (pulled, _) = summed.act_right(&diagonal(self.right()));
        let (result, _) = pulled.act_left(&codiagonal(self.left()));
        result
    }

    /// Splitting test: a section `s : C -> B` with `g ∘ s = 1` found by one
    /// linear system (section condition plus well-definedness of `s`).
    pub fn is_split(&self) -> bool {
        self.section().is_some()
    }

    pub fn section(&self) -> Option<ModMorphism> {
        let ring = self.f.ring();
        let b = self.middle();
        let c = self.right();
        let mut sys = MatrixSystem::new(ring);
        let s = sys.unknown(b.generators(), c.generators());
        let w1 = sys.unknown(c.relations().cols(), c.generators());
        let w2 = sys.unknown(b.relations().cols(), c.relations().cols());
        let id_c = Matrix::identity(c.generators());
        let id_rel = Matrix::identity(c.relations().cols());
        // g s + rel_C w1 = 1  and  s rel_C - rel_B w2 = 0
        sys.equation(
            &[(s, self.g.matrix(), &id_c), (w1, c.relations(), &id_c)],
            &id_c,
        );
        sys.equation(
            &[
                (s, &Matrix::identity(b.generators()), c.relations()),
                (w2, &b.relations().neg(), &id_rel),
            ],
            &Matrix::zero(b.generators(), c.relations().cols()),
        );
        let sol = sys.solve()?;
        Some(ModMorphism::new_unchecked(c, b, sol[0].clone()))
    }

    /// Fixed-end equivalence: some `(1_A, β, 1_C) : self -> other`. Any such β
    /// is automatically an isomorphism, so one direction suffices.
    pub fn equivalent(&self, other: &ShortExactSeq) -> bool {
        assert_eq!(self.left(), other.left(), "equivalent: left ends differ");
        assert_eq!(self.right(), other.right(), "equivalent: right ends differ");
        let ring = self.f.ring();
        let b = self.middle();
        let b2 = other.middle();
        let c = self.right();
        let mut sys = MatrixSystem::new(ring);
        let beta = sys.unknown(b2.generators(), b.generators());
        let w1 = sys.unknown(b2.relations().cols(), self.left().generators());
        let w2 = sys.unknown(c.relations().cols(), b.generators());
        let w3 = sys.unknown(b2.relations().cols(), b.relations().cols());
        let id_b = Matrix::identity(b.generators());
        // beta f - rel_B2 w1 = f2
        sys.equation(
            &[
                (beta, &Matrix::identity(b2.generators()), self.f.matrix()),
                (w1, &b2.relations().neg(), &Matrix::identity(self.left().generators())),
            ],
            other.f.matrix(),
        );
        // g2 beta + rel_C w2 = g
        sys.equation(
            &[
                (beta, other.g.matrix(), &id_b),
                (w2, c.relations(), &id_b),
            ],
            self.g.matrix(),
        );
        // beta rel_B - rel_B2 w3 = 0
        sys.equation(
            &[
                (beta, &Matrix::identity(b2.generators()), b.relations()),
                (w3, &b2.relations().neg(), &Matrix::identity(b.relations().cols())),
            ],
            &Matrix::zero(b2.generators(), b.relations().cols()),
        );
        sys.solve().is_some()
    }
}

/// `Δ_C : C -> C ⊕ C`
pub fn diagonal(c: &FpModule) -> ModMorphism {
    let bp = biproduct(&[c.clone(), c.clone()]).expect("shared ring");
    bp.injections[0].plus(&bp.injections[1])
}

/// `∇_C : C ⊕ C -> C`
pub fn codiagonal(c: &FpModule) -> ModMorphism {
    let bp = biproduct(&[c.clone(), c.clone()]).expect("shared ring");
    bp.projections[0].plus(&bp.projections[1])
}

/// Morphism into a pullback from a commuting cone, as a total function
/// (panics when the cone does not commute; internal use only).
fn pullback_induced(
    pb: &crate::category::Pullback,
    to_left: &ModMorphism,
    to_right: &ModMorphism,
) -> ModMorphism {
    crate::category::pullback_factor(pb, to_left, to_right)
        .expect("cone factors through the pullback")
}

fn pushout_induced(
    po: &crate::category::Pushout,
    from_left: &ModMorphism,
    from_right: &ModMorphism,
) -> ModMorphism {
    crate::category::pushout_factor(po, from_left, from_right)
        .expect("cocone factors through the pushout")
}

/// After compaction the pullback projections live on the uncompacted object;
/// this recovers the iso from the compacted middle back to it.
fn reconstruct_iso(
    compacted: &ShortExactSeq,
    pb: &crate::category::Pullback,
) -> ModMorphism {
    let original = pb.to_left.source();
    if compacted.middle() == original {
        return ModMorphism::identity(original);
    }
    let (_, _, from_min) = minimal_presentation(original);
    from_min
}

/// Realize a degree-one cohomology cocycle `ψ : F_1 -> A` over the fixed free
/// presentation `F_1 -d-> F_0 -> C` as an extension `0 -> A -> E -> C -> 0`
/// with `E = (A ⊕ F_0) / (ψ, -d)`.
pub fn extension_from_cocycle(
    left: &FpModule,
    right: &FpModule,
    cocycle: &Matrix,
    cover: &ModMorphism,
    differential: &ModMorphism,
) -> Result<ShortExactSeq> {
    let f0 = differential.target().clone();
    let f1 = differential.source().clone();
    if cocycle.rows() != left.generators() || cocycle.cols() != f1.generators() {
        return Err(Error::DimensionMismatch("cocycle shape".into()));
    }
    let bp = biproduct(&[left.clone(), f0.clone()])?;
    let glue = ModMorphism::new_unchecked(
        &f1,
        &bp.object,
        Matrix::vstack(&[cocycle, &differential.matrix().neg()]),
    );
    let coker = cokernel(&glue);
    let into = compose(&coker.projection, &bp.injections[0]);
    let onto_matrix = Matrix::hstack(&[
        &Matrix::zero(right.generators(), left.generators()),
        cover.matrix(),
    ]);
    let onto = cokernel_factor(
        &coker,
        &ModMorphism::new_unchecked(&bp.object, right, onto_matrix),
    )
    .expect("augmentation kills the glued relations");
    Ok(ShortExactSeq::new(into, onto)?.compacted())
}

/// Explicit witnesses used in tests: a section assembled from component
/// sections through the coproduct universal property.
pub fn section_from_components(
    sequence: &ShortExactSeq,
    component_sections: &[(ModMorphism, ModMorphism)],
) -> ModMorphism {
    // Each pair is (p_i : P_i -> B, h_i : A_i -> P_i); the assembled section
    // sends the i-th summand of the right end through p_i h_i.
    let blocks: Vec<Matrix> = component_sections
        .iter()
        .map(|(p, h)| compose(p, h).matrix().clone())
        .collect();
    let refs: Vec<&Matrix> = blocks.iter().collect();
    ModMorphism::new_unchecked(
        sequence.right(),
        sequence.middle(),
        Matrix::hstack(&refs),
    )
}
