//! The concrete abelian category: kernels, cokernels, biproducts, pullbacks,
//! pushouts and exactness tests for finitely presented modules.
//!
//! Everything reduces to two lattice questions answered in `solve`: membership
//! of a column in a relation span, and generators of a solution set. Kernels
//! are computed on the lifted block `[f | -relations]` so that one integer
//! kernel routine serves `Z` and every `Z/m`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::module::FpModule;
use crate::morphism::{compose, ModMorphism};
use crate::snf::smith_normal_form;
use crate::solve::{kernel_columns, solve_matrix};

pub struct Kernel {
    pub object: FpModule,
    pub inclusion: ModMorphism,
}

pub struct Cokernel {
    pub object: FpModule,
    pub projection: ModMorphism,
}

pub struct Image {
    pub object: FpModule,
    /// Mono `object -> target(f)`.
    pub embedding: ModMorphism,
    /// Epi `source(f) -> object` with `embedding ∘ onto = f`.
    pub onto: ModMorphism,
}

pub struct Biproduct {
    pub object: FpModule,
    pub injections: Vec<ModMorphism>,
    pub projections: Vec<ModMorphism>,
}

pub struct Pullback {
    pub object: FpModule,
    /// Projection onto the source of the first (`g`) leg.
    pub to_left: ModMorphism,
    /// Projection onto the source of the second (`a`) leg.
    pub to_right: ModMorphism,
}

pub struct Pushout {
    pub object: FpModule,
    /// Inclusion of the target of the first (`f`) leg.
    pub from_left: ModMorphism,
    /// Inclusion of the target of the second (`a`) leg.
    pub from_right: ModMorphism,
}

/// Generators of `{ x in source : f(x) lies in the relation span of the target }`,
/// i.e. of the kernel sublattice before quotienting by the source relations.
fn kernel_lattice(f: &ModMorphism) -> Matrix {
    let block = Matrix::hstack(&[f.matrix(), &f.target().relations().neg()]);
    let solutions = kernel_columns(&block, f.ring());
    crate::snf::column_hermite(&solutions.row_block(0, f.source().generators()))
}

/// Categorical kernel: generators of the vanishing locus, presented modulo the
/// source relations. The inclusion is always a monomorphism.
pub fn kernel(f: &ModMorphism) -> Kernel {
    let generators = kernel_lattice(f);
    let identity_like = ModMorphism::new_unchecked(
        &FpModule::free(f.ring(), generators.cols()),
        f.source(),
        generators.clone(),
    );
    let relations = kernel_lattice(&identity_like);
    let object = FpModule::present(f.ring(), generators.cols(), &relations)
        .expect("kernel presentation is consistent");
    let inclusion = ModMorphism::new_unchecked(&object, f.source(), generators);
    Kernel { object, inclusion }
}

/// Categorical cokernel: the target with the image columns adjoined as
/// relations; the projection is the identity on generators.
pub fn cokernel(f: &ModMorphism) -> Cokernel {
    let relations = Matrix::hstack(&[f.target().relations(), f.matrix()]);
    let object = FpModule::present(f.ring(), f.target().generators(), &relations)
        .expect("cokernel presentation is consistent");
    let projection = ModMorphism::new_unchecked(
        f.target(),
        &object,
        Matrix::identity(f.target().generators()),
    );
    Cokernel { object, projection }
}

/// Image factorization `f = embedding ∘ onto` through `ker(coker f)`.
pub fn image(f: &ModMorphism) -> Image {
    let coker = cokernel(f);
    let ker = kernel(&coker.projection);
    let onto = kernel_factor(&ker, f).expect("f factors through the kernel of its cokernel");
    Image {
        object: ker.object,
        embedding: ker.inclusion,
        onto,
    }
}

/// Finite biproduct with the canonical injections and projections.
/// The empty biproduct is the zero module.
pub fn biproduct(parts: &[FpModule]) -> Result<Biproduct> {
    let ring = match parts.first() {
        Some(m) => m.ring(),
        None => crate::ring::RingSpec::integers(),
    };
    if parts.iter().any(|m| m.ring() != ring) {
        return Err(Error::RingMismatch(
            "biproduct components live over different rings".into(),
        ));
    }
    let relations: Vec<&Matrix> = parts.iter().map(|m| m.relations()).collect();
    let object = FpModule::present(
        ring,
        parts.iter().map(|m| m.generators()).sum(),
        &Matrix::block_diag(&relations),
    )?;
    let total = object.generators();
    let mut injections = Vec::with_capacity(parts.len());
    let mut projections = Vec::with_capacity(parts.len());
    let mut offset = 0;
    for part in parts {
        let g = part.generators();
        let mut inj = Matrix::zero(total, g);
        let mut proj = Matrix::zero(g, total);
        for i in 0..g {
            inj[(offset + i, i)] = BigInt::one();
            proj[(i, offset + i)] = BigInt::one();
        }
        injections.push(ModMorphism::new_unchecked(part, &object, inj));
        projections.push(ModMorphism::new_unchecked(&object, part, proj));
        offset += g;
    }
    Ok(Biproduct {
        object,
        injections,
        projections,
    })
}

/// Pullback of `g` and `a` along their common target, realized as the kernel
/// of `(g, -a)` on the biproduct of the sources.
pub fn pullback(g: &ModMorphism, a: &ModMorphism) -> Pullback {
    assert_eq!(g.target(), a.target(), "pullback legs must share a target");
    let sum = biproduct(&[g.source().clone(), a.source().clone()])
        .expect("pullback sources share the ring");
    let difference = ModMorphism::new_unchecked(
        &sum.object,
        g.target(),
        Matrix::hstack(&[g.matrix(), &a.matrix().neg()]),
    );
    let ker = kernel(&difference);
    Pullback {
        to_left: compose(&sum.projections[0], &ker.inclusion),
        to_right: compose(&sum.projections[1], &ker.inclusion),
        object: ker.object,
    }
}

/// Pushout of `f` and `a` along their common source, realized as the cokernel
/// of `(f; -a)` into the biproduct of the targets.
pub fn pushout(f: &ModMorphism, a: &ModMorphism) -> Pushout {
    assert_eq!(f.source(), a.source(), "pushout legs must share a source");
    let sum = biproduct(&[f.target().clone(), a.target().clone()])
        .expect("pushout targets share the ring");
    let difference = ModMorphism::new_unchecked(
        f.source(),
        &sum.object,
        Matrix::vstack(&[f.matrix(), &a.matrix().neg()]),
    );
    let coker = cokernel(&difference);
    Pushout {
        from_left: compose(&coker.projection, &sum.injections[0]),
        from_right: compose(&coker.projection, &sum.injections[1]),
        object: coker.object,
    }
}

pub fn is_mono(f: &ModMorphism) -> bool {
    kernel(f).object.is_zero_module()
}

pub fn is_epi(f: &ModMorphism) -> bool {
    cokernel(f).object.is_zero_module()
}

pub fn is_iso(f: &ModMorphism) -> bool {
    is_mono(f) && is_epi(f)
}

/// Exactness at the joint of `f` then `g`: the composite vanishes and the
/// induced map from `ker g` to `coker f` is zero.
pub fn is_exact_at(f: &ModMorphism, g: &ModMorphism) -> bool {
    assert_eq!(f.target(), g.source(), "exactness needs a composable pair");
    if !compose(g, f).is_zero_morphism() {
        return false;
    }
    let ker = kernel(g);
    let coker = cokernel(f);
    compose(&coker.projection, &ker.inclusion).is_zero_morphism()
}

/// Exactness at every interior joint of a composable chain. Monicity of the
/// first map or epicity of the last are not part of this check; encode them by
/// extending the chain with maps from and to zero modules.
pub fn sequence_is_exact(chain: &[ModMorphism]) -> bool {
    chain
        .windows(2)
        .all(|pair| is_exact_at(&pair[0], &pair[1]))
}

/// Factor `t` through a kernel inclusion: the unique `u` with
/// `inclusion ∘ u = t`, when `t` lands in the kernel.
pub fn kernel_factor(ker: &Kernel, t: &ModMorphism) -> Option<ModMorphism> {
    assert_eq!(t.target(), ker.inclusion.target());
    let u = solve_matrix(ker.inclusion.matrix(), t.matrix(), t.ring())?;
    Some(ModMorphism::new_unchecked(t.source(), &ker.object, u))
}

/// Factor `t` through a cokernel projection: the unique `u` with
/// `u ∘ projection = t`, when `t` kills the quotiented map. Since projections
/// are the identity on generators this is a retyping plus a validity check.
pub fn cokernel_factor(coker: &Cokernel, t: &ModMorphism) -> Option<ModMorphism> {
    assert_eq!(t.source(), coker.projection.source());
    let image_of_relations = t.matrix().mul(coker.object.relations());
    solve_matrix(t.target().relations(), &image_of_relations, t.ring())?;
    Some(ModMorphism::new_unchecked(
        &coker.object,
        t.target(),
        t.matrix().clone(),
    ))
}

/// Factor a compatible cone `(to_left, to_right)` through the pullback.
pub fn pullback_factor(
    pb: &Pullback,
    to_left: &ModMorphism,
    to_right: &ModMorphism,
) -> Option<ModMorphism> {
    assert_eq!(to_left.source(), to_right.source());
    // Stacking the two projections recovers the kernel inclusion P -> B (+) C.
    let inclusion = Matrix::vstack(&[pb.to_left.matrix(), pb.to_right.matrix()]);
    let stacked = Matrix::vstack(&[to_left.matrix(), to_right.matrix()]);
    let u = solve_matrix(&inclusion, &stacked, to_left.ring())?;
    Some(ModMorphism::new_unchecked(to_left.source(), &pb.object, u))
}

/// Factor a compatible cocone `(from_first, from_second)` through the pushout.
pub fn pushout_factor(
    po: &Pushout,
    from_left: &ModMorphism,
    from_right: &ModMorphism,
) -> Option<ModMorphism> {
    assert_eq!(from_left.target(), from_right.target());
    let combined = Matrix::hstack(&[from_left.matrix(), from_right.matrix()]);
    let image_of_relations = combined.mul(po.object.relations());
    solve_matrix(
        from_left.target().relations(),
        &image_of_relations,
        from_left.ring(),
    )?;
    Some(ModMorphism::new_unchecked(
        &po.object,
        from_left.target(),
        combined,
    ))
}

/// A minimal presentation of the same module together with the mutually
/// inverse comparison morphisms `(to_minimal, from_minimal)`.
///
/// Generators whose invariant factor is a unit are dropped; the rest are the
/// Smith-diagonalized coordinates. Used to keep the middles of constructed
/// sequences small; never applied to objects whose labeling matters.
pub fn minimal_presentation(module: &FpModule) -> (FpModule, ModMorphism, ModMorphism) {
    let snf = smith_normal_form(module.relations());
    let g = module.generators();
    let steps = g.min(module.relations().cols());
    let kept: Vec<usize> = (0..g)
        .filter(|&i| i >= steps || !snf.d[(i, i)].is_one())
        .collect();
    let mut diag_cols: Vec<Matrix> = Vec::new();
    for (new_row, &i) in kept.iter().enumerate() {
        if i < steps && !snf.d[(i, i)].is_zero() {
            let mut col = Matrix::zero(kept.len(), 1);
            col[(new_row, 0)] = snf.d[(i, i)].clone();
            diag_cols.push(col);
        }
    }
    let relations = if diag_cols.is_empty() {
        Matrix::zero(kept.len(), 0)
    } else {
        let refs: Vec<&Matrix> = diag_cols.iter().collect();
        Matrix::hstack(&refs)
    };
    let minimal = FpModule::present(module.ring(), kept.len(), &relations)
        .expect("minimal presentation is consistent");
    let to_minimal = ModMorphism::new_unchecked(module, &minimal, snf.u.select_rows(&kept));
    let from_minimal = ModMorphism::new_unchecked(&minimal, module, snf.u_inv.select_columns(&kept));
    debug_assert!(compose(&to_minimal, &from_minimal).equal_to(&ModMorphism::identity(&minimal)));
    debug_assert!(compose(&from_minimal, &to_minimal).equal_to(&ModMorphism::identity(module)));
    (minimal, to_minimal, from_minimal)
}

/// Block-diagonal sum of two morphisms between the canonical biproducts of
/// their endpoints.
pub fn morphism_direct_sum(a: &ModMorphism, b: &ModMorphism) -> ModMorphism {
    let sources = biproduct(&[a.source().clone(), b.source().clone()]).expect("shared ring");
    let targets = biproduct(&[a.target().clone(), b.target().clone()]).expect("shared ring");
    ModMorphism::new_unchecked(
        &sources.object,
        &targets.object,
        Matrix::block_diag(&[a.matrix(), b.matrix()]),
    )
}

/// Hermite basis, in column-vectorized coordinates, for the lattice of
/// matrices that define morphisms `source -> target`. Sampling random
/// well-defined morphisms means taking small combinations of these columns.
pub fn morphism_matrix_lattice(source: &FpModule, target: &FpModule) -> Matrix {
    assert_eq!(source.ring(), target.ring());
    let mut sys = crate::solve::MatrixSystem::new(source.ring());
    let candidate = sys.unknown(target.generators(), source.generators());
    let certificate = sys.unknown(target.relations().cols(), source.relations().cols());
    sys.equation(
        &[
            (
                candidate,
                &Matrix::identity(target.generators()),
                source.relations(),
            ),
            (
                certificate,
                &target.relations().neg(),
                &Matrix::identity(source.relations().cols()),
            ),
        ],
        &Matrix::zero(target.generators(), source.relations().cols()),
    );
    let lattice = sys.solution_lattice();
    crate::snf::column_hermite(
        &lattice.row_block(0, target.generators() * source.generators()),
    )
}
