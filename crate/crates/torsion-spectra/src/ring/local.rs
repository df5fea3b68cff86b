//! Idempotent decomposition of a finite commutative ring into local factors.
//!
//! A finite commutative ring is a product of finite local rings; the
//! primitive idempotents realize that product inside the ring itself.
//! Localization at a prime becomes multiplication by the matching
//! idempotent, which is what makes module supports cheap downstream.

use super::{ElemSet, FiniteRing, Ideal, PrimeIdeal};
use crate::{Error, Result};
use std::sync::Arc;

/// One local factor `eR` of the ring, with its maximal ideal and the maps
/// in and out of the parent.
#[derive(Clone)]
pub struct LocalFactor {
    idempotent: u16,
    ring: Arc<FiniteRing>,
    /// factor element index -> parent element
    embed: Vec<u16>,
    /// parent element -> factor element index of `e·r`
    project: Vec<u16>,
    maximal_ideal: PrimeIdeal,
    prime_in_parent: PrimeIdeal,
}

impl LocalFactor {
    pub fn idempotent(&self) -> u16 {
        self.idempotent
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn embed(&self, factor_elem: u16) -> u16 {
        self.embed[factor_elem as usize]
    }

    pub fn project(&self, parent_elem: u16) -> u16 {
        self.project[parent_elem as usize]
    }

    /// The maximal ideal of the factor ring.
    pub fn maximal_ideal(&self) -> &PrimeIdeal {
        &self.maximal_ideal
    }

    /// The prime of the parent ring this factor sits under.
    pub fn prime_in_parent(&self) -> &PrimeIdeal {
        &self.prime_in_parent
    }
}

impl std::fmt::Debug for LocalFactor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "LocalFactor(e={}, |eR|={})",
            self.idempotent,
            self.ring.size()
        )
    }
}

/// The full decomposition: orthogonal primitive idempotents summing to 1,
/// one local factor per prime of the parent ring.
pub struct Decomposition {
    ring: Arc<FiniteRing>,
    factors: Vec<LocalFactor>,
}

impl Decomposition {
    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn factors(&self) -> &[LocalFactor] {
        &self.factors
    }

    /// The factor whose parent prime equals `p`, if any.
    pub fn factor_for(&self, p: &PrimeIdeal) -> Option<&LocalFactor> {
        self.factors
            .iter()
            .find(|f| f.prime_in_parent.ideal() == p.ideal())
    }
}

/// Computes the local decomposition of `ring`.
///
/// Primitive idempotents are found by scanning all solutions of `e² = e`
/// and keeping the minimal nonzero ones in the order `e ≤ f ⟺ ef = e`.
pub fn local_factors(ring: &Arc<FiniteRing>) -> Result<Decomposition> {
    let idempotents: Vec<u16> = ring
        .elements()
        .filter(|&e| ring.mul(e, e) == e && e != ring.zero())
        .collect();
    let primitive: Vec<u16> = idempotents
        .iter()
        .copied()
        .filter(|&e| {
            !idempotents
                .iter()
                .any(|&f| f != e && ring.mul(e, f) == f)
        })
        .collect();

    // structural sanity: orthogonal and summing to 1
    let mut sum = ring.zero();
    for (i, &e) in primitive.iter().enumerate() {
        sum = ring.add(sum, e);
        for &f in &primitive[i + 1..] {
            if ring.mul(e, f) != ring.zero() {
                return Err(Error::RingAxiom(format!(
                    "idempotents {e} and {f} are not orthogonal"
                )));
            }
        }
    }
    if sum != ring.one() {
        return Err(Error::RingAxiom("primitive idempotents do not sum to 1".into()));
    }

    let mut factors = Vec::with_capacity(primitive.len());
    for e in primitive {
        factors.push(build_factor(ring, e)?);
    }
    // canonical order: aligned with the prime spectrum order
    factors.sort_by(|a, b| a.prime_in_parent.cmp(&b.prime_in_parent));
    Ok(Decomposition {
        ring: ring.clone(),
        factors,
    })
}

fn build_factor(ring: &Arc<FiniteRing>, e: u16) -> Result<LocalFactor> {
    let mut embed: Vec<u16> = Vec::new();
    let mut project = vec![0u16; ring.size()];
    let mut index_of = vec![u16::MAX; ring.size()];
    for r in ring.elements() {
        let er = ring.mul(e, r);
        if index_of[er as usize] == u16::MAX {
            index_of[er as usize] = embed.len() as u16;
            embed.push(er);
        }
    }
    for r in ring.elements() {
        project[r as usize] = index_of[ring.mul(e, r) as usize];
    }
    let m = embed.len();
    let mut add = vec![vec![0u32; m]; m];
    let mut mul = vec![vec![0u32; m]; m];
    for i in 0..m {
        for j in 0..m {
            add[i][j] = index_of[ring.add(embed[i], embed[j]) as usize] as u32;
            mul[i][j] = index_of[ring.mul(embed[i], embed[j]) as usize] as u32;
        }
    }
    let factor = FiniteRing::from_tables(add, mul)?;
    debug_assert_eq!(factor.one(), index_of[e as usize]);

    // maximal ideal of the factor: the non-units
    let mut max_members = ElemSet::empty(m);
    for x in factor.elements() {
        if !factor.is_unit(x) {
            max_members.insert(x);
        }
    }
    let maximal_ideal = Ideal::from_members(&factor, max_members).into_prime().map_err(|_| {
        Error::RingAxiom("factor ring is not local: non-units do not form a prime ideal".into())
    })?;

    // preimage in the parent
    let mut parent_members = ElemSet::empty(ring.size());
    for r in ring.elements() {
        if maximal_ideal.contains(project[r as usize]) {
            parent_members.insert(r);
        }
    }
    let prime_in_parent = Ideal::from_members(ring, parent_members)
        .into_prime()
        .map_err(|_| Error::RingAxiom("factor preimage is not prime".into()))?;

    Ok(LocalFactor {
        idempotent: e,
        ring: factor,
        embed,
        project,
        maximal_ideal,
        prime_in_parent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{all_ideals, prime_spectrum, RingDescription};
    use crate::Bounds;

    #[test]
    fn z12_decomposes_into_z4_and_z3() {
        let r = FiniteRing::zmod(12);
        let d = local_factors(&r).unwrap();
        assert_eq!(d.factors().len(), 2);
        let mut sizes: Vec<usize> = d.factors().iter().map(|f| f.ring().size()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![3, 4]);
        // CRT idempotents of Z/12 are 4 and 9
        let mut es: Vec<u16> = d.factors().iter().map(|f| f.idempotent()).collect();
        es.sort();
        assert_eq!(es, vec![4, 9]);
    }

    #[test]
    fn local_ring_is_its_own_factor() {
        let r = FiniteRing::zmod(8);
        let d = local_factors(&r).unwrap();
        assert_eq!(d.factors().len(), 1);
        assert_eq!(d.factors()[0].idempotent(), r.one());
        assert_eq!(d.factors()[0].ring().size(), 8);
    }

    #[test]
    fn z30_has_three_factors() {
        let r = FiniteRing::zmod(30);
        let d = local_factors(&r).unwrap();
        let mut sizes: Vec<usize> = d.factors().iter().map(|f| f.ring().size()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 3, 5]);
    }

    #[test]
    fn factors_align_with_spectrum() {
        for desc in [
            RingDescription::zmod(12),
            RingDescription::zmod(36),
            RingDescription::Product {
                factors: vec![RingDescription::zmod(4), RingDescription::zmod(9)],
            },
        ] {
            let r = FiniteRing::new(&desc).unwrap();
            let d = local_factors(&r).unwrap();
            let spec = prime_spectrum(&r, &Bounds::default()).unwrap();
            assert_eq!(d.factors().len(), spec.len());
            for p in &spec {
                assert!(d.factor_for(p).is_some());
            }
        }
    }

    #[test]
    fn idempotent_identities() {
        for n in [12u32, 30, 36, 60] {
            let r = FiniteRing::zmod(n);
            let d = local_factors(&r).unwrap();
            let mut sum = r.zero();
            for f in d.factors() {
                let e = f.idempotent();
                assert_eq!(r.mul(e, e), e);
                sum = r.add(sum, e);
                for g in d.factors() {
                    if g.idempotent() != e {
                        assert_eq!(r.mul(e, g.idempotent()), r.zero());
                    }
                }
            }
            assert_eq!(sum, r.one());
        }
    }

    #[test]
    fn reassembled_product_recovers_the_ring() {
        let r = FiniteRing::zmod(12);
        let d = local_factors(&r).unwrap();
        // the map r -> (e_i r)_i is a ring isomorphism onto the product
        let mut seen = std::collections::BTreeSet::new();
        for x in r.elements() {
            let image: Vec<u16> = d.factors().iter().map(|f| f.project(x)).collect();
            assert!(seen.insert(image), "CRT map not injective at {x}");
        }
        for x in r.elements() {
            for y in r.elements() {
                for f in d.factors() {
                    assert_eq!(
                        f.project(r.add(x, y)),
                        f.ring().add(f.project(x), f.project(y))
                    );
                    assert_eq!(
                        f.project(r.mul(x, y)),
                        f.ring().mul(f.project(x), f.project(y))
                    );
                }
            }
        }
    }

    #[test]
    fn spectrum_equals_factor_preimages() {
        for n in [12u32, 16, 30, 64] {
            let r = FiniteRing::zmod(n);
            let spec = prime_spectrum(&r, &Bounds::default()).unwrap();
            let d = local_factors(&r).unwrap();
            let factor_primes: std::collections::BTreeSet<_> = d
                .factors()
                .iter()
                .map(|f| f.prime_in_parent().ideal().clone())
                .collect();
            let spec_primes: std::collections::BTreeSet<_> =
                spec.iter().map(|p| p.ideal().clone()).collect();
            assert_eq!(factor_primes, spec_primes);
        }
    }

    #[test]
    fn galois_factor_of_mixed_product() {
        let desc = RingDescription::Product {
            factors: vec![
                RingDescription::Gf {
                    p: 2,
                    k: 2,
                    modulus: vec![1, 1, 1],
                },
                RingDescription::zmod(9),
            ],
        };
        let r = FiniteRing::new(&desc).unwrap();
        let d = local_factors(&r).unwrap();
        let mut sizes: Vec<usize> = d.factors().iter().map(|f| f.ring().size()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![4, 9]);
        let ideal_count = all_ideals(&r, &Bounds::default()).unwrap().len();
        assert_eq!(ideal_count, 2 * 3);
    }
}
