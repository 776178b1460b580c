//! Length-`n` extensions as chains of short exact sequences in natural
//! decomposition form, with composition, biproducts, Baer sums and the
//! morphism actions on the outermost factors.

use crate::category::image;
use crate::error::{Error, Result};
use crate::module::FpModule;
use crate::morphism::{compose, ModMorphism};
use crate::ses::{codiagonal, diagonal, SesMorphism, ShortExactSeq};

/// An exact sequence of length `n >= 1` stored as its natural decomposition:
/// `factors[0]` touches the left end `A`, `factors[n-1]` touches the right
/// end `C`, and the right end of each factor is the left end of the next,
/// on the nose as presented objects.
#[derive(Clone)]
pub struct NExtension {
    factors: Vec<ShortExactSeq>,
}

impl NExtension {
    pub fn new(factors: Vec<ShortExactSeq>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::EndMismatch("an extension has degree >= 1".into()));
        }
        for pair in factors.windows(2) {
            if pair[0].right() != pair[1].left() {
                return Err(Error::EndMismatch(
                    "adjacent factors do not share their linking object".into(),
                ));
            }
        }
        Ok(NExtension { factors })
    }

    pub fn from_ses(seq: ShortExactSeq) -> Self {
        NExtension { factors: vec![seq] }
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[ShortExactSeq] {
        &self.factors
    }

    pub fn left_end(&self) -> &FpModule {
        self.factors[0].left()
    }

    pub fn right_end(&self) -> &FpModule {
        self.factors[self.factors.len() - 1].right()
    }

    /// For degree one, the underlying short exact sequence.
    pub fn as_ses(&self) -> &ShortExactSeq {
        assert_eq!(self.degree(), 1, "as_ses needs a degree-one extension");
        &self.factors[0]
    }

    /// The underlying chain `A -> B_n -> ... -> B_1 -> C` as `n + 1` maps:
    /// the leftmost mono, the spliced joint maps, and the rightmost epi.
    pub fn chain(&self) -> Vec<ModMorphism> {
        let n = self.degree();
        let mut maps = Vec::with_capacity(n + 1);
        maps.push(self.factors[0].f().clone());
        for j in 1..n {
            maps.push(compose(self.factors[j].f(), self.factors[j - 1].g()));
        }
        maps.push(self.factors[n - 1].g().clone());
        maps
    }

    /// The identity element's representative: `A = A -> 0 -> ... -> 0 -> C = C`
    /// for `n >= 2`, the canonical biproduct sequence for `n = 1`.
    pub fn split_extension(a: &FpModule, c: &FpModule, degree: usize) -> Self {
        assert!(degree >= 1);
        assert_eq!(a.ring(), c.ring());
        if degree == 1 {
            return NExtension::from_ses(ShortExactSeq::split(a, c));
        }
        let zero = FpModule::zero(a.ring());
        let mut factors = Vec::with_capacity(degree);
        factors.push(
            ShortExactSeq::new(
                ModMorphism::identity(a),
                ModMorphism::zero_map(a, &zero),
            )
            .expect("identity-to-zero factor is exact"),
        );
        for _ in 0..degree.saturating_sub(2) {
            factors.push(
                ShortExactSeq::new(
                    ModMorphism::zero_map(&zero, &zero),
                    ModMorphism::zero_map(&zero, &zero),
                )
                .expect("zero factor is exact"),
            );
        }
        factors.push(
            ShortExactSeq::new(
                ModMorphism::zero_map(&zero, c),
                ModMorphism::identity(c),
            )
            .expect("zero-to-identity factor is exact"),
        );
        NExtension { factors }
    }

    /// Yoneda composition: `self` must end where `other` begins; degrees add.
    pub fn compose_with(&self, other: &NExtension) -> Result<NExtension> {
        if self.right_end() != other.left_end() {
            return Err(Error::EndMismatch(
                "composition needs matching linking objects".into(),
            ));
        }
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Ok(NExtension { factors })
    }

    /// Componentwise biproduct of equal-degree extensions; ends and linking
    /// objects become the literal biproduct objects.
    pub fn direct_sum_many(parts: &[&NExtension]) -> NExtension {
        assert!(!parts.is_empty());
        let degree = parts[0].degree();
        assert!(parts.iter().all(|p| p.degree() == degree));
        let factors = (0..degree)
            .map(|k| {
                let row: Vec<&ShortExactSeq> = parts.iter().map(|p| &p.factors[k]).collect();
                ShortExactSeq::direct_sum_many(&row)
            })
            .collect();
        NExtension { factors }
    }

    pub fn direct_sum(&self, other: &NExtension) -> NExtension {
        NExtension::direct_sum_many(&[self, other])
    }

    /// Baer sum in degree `n`: `∇_A (self ⊕ other) Δ_C`.
    pub fn sum(&self, other: &NExtension) -> NExtension {
        assert_eq!(self.left_end(), other.left_end(), "sum: left ends differ");
        assert_eq!(self.right_end(), other.right_end(), "sum: right ends differ");
        assert_eq!(self.degree(), other.degree(), "sum: degrees differ");
        let summed = NExtension::direct_sum_many(&[self, other]);
        let (pulled, _) = summed.act_right(&diagonal(self.right_end()));
        let (result, _) = pulled.act_left(&codiagonal(self.left_end()));
        result
    }

    /// Push the leftmost factor out along `alpha`; the rest is untouched.
    pub fn act_left(&self, alpha: &ModMorphism) -> (NExtension, SesMorphism) {
        let (first, cert) = self.factors[0].act_left(alpha);
        let mut factors = self.factors.clone();
        factors[0] = first;
        (NExtension { factors }, cert)
    }

    /// Pull the rightmost factor back along `gamma`; the rest is untouched.
    pub fn act_right(&self, gamma: &ModMorphism) -> (NExtension, SesMorphism) {
        let last = self.factors.len() - 1;
        let (new_last, cert) = self.factors[last].act_right(gamma);
        let mut factors = self.factors.clone();
        factors[last] = new_last;
        (NExtension { factors }, cert)
    }
}

/// Split an exact chain `A -> B_n -> ... -> B_1 -> C` (as produced by
/// [`NExtension::chain`]) at its images. The first map must be mono, the last
/// epi, and the chain exact at every interior object.
pub fn natural_decomposition(chain: &[ModMorphism]) -> Result<NExtension> {
    if chain.len() < 2 {
        return Err(Error::NotExact("a chain needs at least two maps".into()));
    }
    for pair in chain.windows(2) {
        if pair[0].target() != pair[1].source() {
            return Err(Error::EndMismatch("chain is not composable".into()));
        }
    }
    if !crate::category::is_mono(&chain[0]) {
        return Err(Error::NotExact("leftmost map is not mono".into()));
    }
    if !crate::category::is_epi(&chain[chain.len() - 1]) {
        return Err(Error::NotExact("rightmost map is not epi".into()));
    }
    if !crate::category::sequence_is_exact(chain) {
        return Err(Error::NotExact("chain is not exact at an interior object".into()));
    }

    let n = chain.len() - 1;
    if n == 1 {
        return Ok(NExtension::from_ses(ShortExactSeq::new(
            chain[0].clone(),
            chain[1].clone(),
        )?));
    }

    // Images at the interior joints; splice the chain through them.
    let mut factors = Vec::with_capacity(n);
    let mut left_mono = chain[0].clone();
    for j in 1..=n {
        let (mono_into_next, epi_onto_link) = if j < n {
            let img = image(&chain[j]);
            (Some(img.embedding), img.onto)
        } else {
            (None, chain[n].clone())
        };
        factors.push(ShortExactSeq::new(left_mono, epi_onto_link)?);
        match mono_into_next {
            Some(m) => left_mono = m,
            None => break,
        }
    }
    NExtension::new(factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;
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

    fn eta() -> ShortExactSeq {
        let f = ModMorphism::new(&m2(), &r(), &Matrix::from_i64(1, 1, &[2])).unwrap();
        let g = ModMorphism::new(&r(), &m2(), &Matrix::from_i64(1, 1, &[1])).unwrap();
        ShortExactSeq::new(f, g).unwrap()
    }

    #[test]
    fn composition_concatenates_and_degree_adds() {
        let e = NExtension::from_ses(eta());
        let ee = e.compose_with(&e).unwrap();
        assert_eq!(ee.degree(), 2);
        assert_eq!(ee.left_end(), &m2());
        assert_eq!(ee.right_end(), &m2());
        // The joint map of the chain is mono-after-epi: here [2]*[1] = [2].
        let chain = ee.chain();
        assert_eq!(chain.len(), 3);
        assert_eq!(chain[1].matrix(), &Matrix::from_i64(1, 1, &[2]));
    }

    #[test]
    fn natural_decomposition_round_trip() {
        let e = NExtension::from_ses(eta());
        let ee = e.compose_with(&e).unwrap();
        let chain = ee.chain();
        let recovered = natural_decomposition(&chain).unwrap();
        assert_eq!(recovered.degree(), 2);
        // The linking object is the image of multiplication by two: Z/2.
        assert_eq!(recovered.factors()[0].right(), &m2());
        let rechained = recovered.chain();
        for (a, b) in chain.iter().zip(&rechained) {
            assert!(a.equal_to(b));
        }
    }

    #[test]
    fn degree_one_decomposition_is_identity() {
        let e = eta();
        let rebuilt = natural_decomposition(&[e.f().clone(), e.g().clone()]).unwrap();
        assert_eq!(rebuilt.degree(), 1);
        assert!(rebuilt.as_ses().f().equal_to(e.f()));
    }

    #[test]
    fn non_exact_chain_is_rejected() {
        let zero_map = ModMorphism::zero_map(&m2(), &r());
        let g = ModMorphism::new(&r(), &m2(), &Matrix::from_i64(1, 1, &[1])).unwrap();
        assert!(natural_decomposition(&[zero_map, g]).is_err());
    }

    #[test]
    fn split_extension_shape() {
        let s = NExtension::split_extension(&m2(), &m2(), 3);
        assert_eq!(s.degree(), 3);
        assert_eq!(s.left_end(), &m2());
        assert_eq!(s.right_end(), &m2());
        assert!(s.factors()[1].middle().is_zero_module());

        let s1 = NExtension::split_extension(&m2(), &r(), 1);
        assert!(s1.as_ses().is_split());
    }

    #[test]
    fn componentwise_sum_keeps_biproduct_ends() {
        let e = NExtension::from_ses(eta());
        let both = NExtension::direct_sum_many(&[&e, &e]);
        let bp = crate::category::biproduct(&[m2(), m2()]).unwrap();
        assert_eq!(both.left_end(), &bp.object);
        assert_eq!(both.right_end(), &bp.object);
    }
}
