//! Ideals of a finite ring: closure from generators, the ideal algebra
//! (sum, product, colon, radical), exhaustive enumeration, and the prime
//! spectrum.

use super::{ElemSet, FiniteRing};
use crate::{Bounds, Error, Result};
use std::sync::Arc;

/// An ideal stored as an explicit member bitset plus optional generators.
/// Equality and ordering are member-set equality; the generator list is a
/// presentation aid only.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<FiniteRing>,
    members: ElemSet,
    generators: Option<Vec<u16>>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}
impl Eq for Ideal {}

impl std::hash::Hash for Ideal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ideal {
    /// Canonical order: by cardinality, then by member bitset.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.members.len(), &self.members).cmp(&(other.members.len(), &other.members))
    }
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.generators {
            Some(g) => write!(f, "Ideal{:?}~{:?}", g, self.members),
            None => write!(f, "Ideal{:?}", self.members),
        }
    }
}

impl Ideal {
    /// The smallest ideal containing `gens`: closure under addition and
    /// multiplication by every ring element.
    pub fn generated_by(ring: &Arc<FiniteRing>, gens: &[u16]) -> Ideal {
        let n = ring.size();
        let mut members = ElemSet::empty(n);
        members.insert(ring.zero());
        let mut queue: Vec<u16> = Vec::new();
        for &g in gens {
            // include all ring multiples of each generator up front
            for r in ring.elements() {
                let m = ring.mul(r, g);
                if members.insert(m) {
                    queue.push(m);
                }
            }
        }
        // close under addition
        while let Some(x) = queue.pop() {
            let current: Vec<u16> = members.iter().collect();
            for y in current {
                let s = ring.add(x, y);
                if members.insert(s) {
                    queue.push(s);
                }
            }
        }
        Ideal {
            ring: ring.clone(),
            members,
            generators: Some(gens.to_vec()),
        }
    }

    pub fn zero(ring: &Arc<FiniteRing>) -> Ideal {
        Ideal::generated_by(ring, &[])
    }

    pub fn unit(ring: &Arc<FiniteRing>) -> Ideal {
        let one = ring.one();
        Ideal::generated_by(ring, &[one])
    }

    pub(crate) fn from_members(ring: &Arc<FiniteRing>, members: ElemSet) -> Ideal {
        debug_assert!(is_ideal_set(ring, &members));
        Ideal {
            ring: ring.clone(),
            members,
            generators: None,
        }
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn generators(&self) -> Option<&[u16]> {
        self.generators.as_deref()
    }

    /// A small generating set found greedily (used when presenting ideals
    /// and when enumerating module homomorphisms from an ideal).
    pub fn small_generators(&self) -> Vec<u16> {
        let mut gens: Vec<u16> = Vec::new();
        let mut span = Ideal::generated_by(&self.ring, &[]);
        for x in self.members.iter() {
            if !span.contains(x) {
                gens.push(x);
                span = Ideal::generated_by(&self.ring, &gens);
                if span.members == self.members {
                    break;
                }
            }
        }
        gens
    }

    pub fn contains(&self, x: u16) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.members.len() == self.ring.size()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit_ideal()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    fn check_same_ring(&self, other: &Ideal) -> Result<()> {
        if FiniteRing::same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Ideal sum `I + J = {a + b}`.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        let mut members = ElemSet::empty(self.ring.size());
        for a in self.members.iter() {
            for b in other.members.iter() {
                members.insert(self.ring.add(a, b));
            }
        }
        Ok(Ideal::from_members(&self.ring, members))
    }

    /// Ideal product: generated by pairwise products.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        let mut members = ElemSet::empty(self.ring.size());
        members.insert(self.ring.zero());
        let mut queue: Vec<u16> = Vec::new();
        for a in self.members.iter() {
            for b in other.members.iter() {
                let p = self.ring.mul(a, b);
                if members.insert(p) {
                    queue.push(p);
                }
            }
        }
        // products of ideal members are closed under ring multiples;
        // only additive closure is needed
        while let Some(x) = queue.pop() {
            let current: Vec<u16> = members.iter().collect();
            for y in current {
                let s = self.ring.add(x, y);
                if members.insert(s) {
                    queue.push(s);
                }
            }
        }
        Ok(Ideal::from_members(&self.ring, members))
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        Ok(Ideal::from_members(
            &self.ring,
            self.members.intersect(&other.members),
        ))
    }

    /// The colon ideal `(I : a) = {s | a s ∈ I}`.
    pub fn colon(&self, a: u16) -> Ideal {
        let mut members = ElemSet::empty(self.ring.size());
        for s in self.ring.elements() {
            if self.members.contains(self.ring.mul(a, s)) {
                members.insert(s);
            }
        }
        Ideal::from_members(&self.ring, members)
    }

    /// The radical `{x | x^n ∈ I for some n ≤ |R|}`.
    pub fn radical(&self) -> Ideal {
        let n = self.ring.size();
        let mut members = ElemSet::empty(n);
        for x in self.ring.elements() {
            let mut acc = x;
            for _ in 0..n {
                if self.members.contains(acc) {
                    members.insert(x);
                    break;
                }
                acc = self.ring.mul(acc, x);
            }
        }
        Ideal::from_members(&self.ring, members)
    }

    /// Stable power `I^∞`: the eventual value of the descending chain
    /// `I ⊇ I² ⊇ …`, reached in at most `|R|` steps.
    pub fn stable_power(&self) -> Ideal {
        let mut current = self.clone();
        loop {
            let next = current.product(&current).expect("same ring");
            if next == current {
                return current;
            }
            current = next;
        }
    }

    /// Primality test: proper with multiplicatively closed complement.
    pub fn is_prime(&self) -> bool {
        if !self.is_proper() {
            return false;
        }
        for a in self.ring.elements().filter(|&a| !self.contains(a)) {
            for b in self.ring.elements().filter(|&b| !self.contains(b)) {
                if self.contains(self.ring.mul(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn into_prime(self) -> Result<PrimeIdeal> {
        if self.is_prime() {
            Ok(PrimeIdeal { ideal: self })
        } else {
            Err(Error::BadInput("ideal is not prime".into()))
        }
    }

    /// Annihilator ideal of `x` in the ring acting on itself.
    pub fn annihilator_of(ring: &Arc<FiniteRing>, x: u16) -> Ideal {
        let mut members = ElemSet::empty(ring.size());
        for r in ring.elements() {
            if ring.mul(r, x) == ring.zero() {
                members.insert(r);
            }
        }
        Ideal::from_members(ring, members)
    }
}

fn is_ideal_set(ring: &FiniteRing, members: &ElemSet) -> bool {
    if !members.contains(ring.zero()) {
        return false;
    }
    for a in members.iter() {
        for b in members.iter() {
            if !members.contains(ring.add(a, b)) {
                return false;
            }
        }
        for r in ring.elements() {
            if !members.contains(ring.mul(r, a)) {
                return false;
            }
        }
    }
    true
}

/// A prime ideal; the certificate is the exhaustive check in
/// [`Ideal::is_prime`] run at construction time.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PrimeIdeal {
    ideal: Ideal,
}

impl PrimeIdeal {
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        self.ideal.ring()
    }

    pub fn contains(&self, x: u16) -> bool {
        self.ideal.contains(x)
    }
}

impl std::fmt::Debug for PrimeIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Prime{:?}", self.ideal.members())
    }
}

impl PartialOrd for PrimeIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PrimeIdeal {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.ideal.cmp(&other.ideal)
    }
}

/// All ideals of `ring`, each exactly once, in the canonical order
/// (ascending cardinality, then bitset order).
///
/// Strategy: principal ideals first, then closure under pairwise sums until
/// a fixpoint — every ideal of a finite ring is a finite sum of principal
/// ideals, so this reaches all of them.
pub fn all_ideals(ring: &Arc<FiniteRing>, bounds: &Bounds) -> Result<Vec<Ideal>> {
    super::check_ring_bound(ring, bounds)?;
    let mut seen: std::collections::BTreeSet<ElemSet> = std::collections::BTreeSet::new();
    let mut worklist: Vec<Ideal> = Vec::new();
    for x in ring.elements() {
        let p = Ideal::generated_by(ring, &[x]);
        if seen.insert(p.members().clone()) {
            worklist.push(p);
        }
    }
    let mut all: Vec<Ideal> = worklist.clone();
    while let Some(i) = worklist.pop() {
        for j in all.clone() {
            let s = i.sum(&j).expect("same ring");
            if seen.insert(s.members().clone()) {
                all.push(s.clone());
                worklist.push(s);
            }
        }
    }
    all.sort();
    Ok(all)
}

/// The prime spectrum. For a finite commutative ring every prime is maximal;
/// the spectrum is computed by filtering the ideal enumeration through the
/// primality test (the local-factor route is cross-checked in tests).
pub fn prime_spectrum(ring: &Arc<FiniteRing>, bounds: &Bounds) -> Result<Vec<PrimeIdeal>> {
    if ring.size() <= bounds.ideal_enumeration {
        let mut primes: Vec<PrimeIdeal> = all_ideals(ring, bounds)?
            .into_iter()
            .filter(|i| i.is_prime())
            .map(|ideal| PrimeIdeal { ideal })
            .collect();
        primes.sort();
        Ok(primes)
    } else {
        // beyond the enumeration bound, go through the idempotent decomposition
        let decomp = super::local_factors(ring)?;
        let mut primes: Vec<PrimeIdeal> =
            decomp.factors().iter().map(|f| f.prime_in_parent().clone()).collect();
        primes.sort();
        Ok(primes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::galois_field;

    fn members(i: &Ideal) -> Vec<u16> {
        i.members().iter().collect()
    }

    #[test]
    fn generated_ideal_in_z12() {
        let r = FiniteRing::zmod(12);
        let i = Ideal::generated_by(&r, &[8]);
        assert_eq!(members(&i), vec![0, 4, 8]);
        assert_eq!(members(&Ideal::generated_by(&r, &[])), vec![0]);
        assert!(Ideal::generated_by(&r, &[1]).is_unit_ideal());
    }

    #[test]
    fn ideal_algebra_in_z12() {
        let r = FiniteRing::zmod(12);
        let two = Ideal::generated_by(&r, &[2]);
        let three = Ideal::generated_by(&r, &[3]);
        let six = Ideal::generated_by(&r, &[6]);
        let four = Ideal::generated_by(&r, &[4]);
        assert_eq!(two.product(&three).unwrap(), six);
        assert_eq!(four.radical(), two);
        assert_eq!(two.colon(1), two);
        // colon with the annihilated element recovers a bigger ideal
        assert_eq!(six.colon(6), Ideal::generated_by(&r, &[2]));
    }

    #[test]
    fn ideal_algebra_containments() {
        let r = FiniteRing::zmod(36);
        let ideals = all_ideals(&r, &Bounds::default()).unwrap();
        for i in &ideals {
            assert_eq!(i.radical().radical(), i.radical());
            for j in &ideals {
                let p = i.product(j).unwrap();
                assert!(p.is_subset(&i.intersect(j).unwrap()));
            }
            for a in r.elements() {
                assert!(i.is_subset(&i.colon(a)));
            }
        }
    }

    #[test]
    fn enumerate_ideals_z12_matches_divisor_lattice() {
        let r = FiniteRing::zmod(12);
        let ideals = all_ideals(&r, &Bounds::default()).unwrap();
        // divisor-lattice oracle: ideals of Z/12 are (d) for d | 12
        let expected: Vec<Vec<u16>> = [12u16, 6, 4, 3, 2, 1]
            .iter()
            .map(|&d| (0..12).filter(|x| x % d == 0).collect())
            .collect();
        assert_eq!(ideals.len(), 6);
        let got: std::collections::BTreeSet<Vec<u16>> =
            ideals.iter().map(members).collect();
        let want: std::collections::BTreeSet<Vec<u16>> = expected.into_iter().collect();
        assert_eq!(got, want);
    }

    #[test]
    fn fields_have_two_ideals() {
        for q in [2u32, 3, 4, 5, 7, 8, 9] {
            let r = galois_field(q).unwrap();
            assert_eq!(all_ideals(&r, &Bounds::default()).unwrap().len(), 2);
        }
    }

    #[test]
    fn product_ring_ideal_count_multiplies() {
        let r = FiniteRing::new(&crate::ring::RingDescription::Product {
            factors: vec![
                crate::ring::RingDescription::zmod(4),
                crate::ring::RingDescription::zmod(3),
            ],
        })
        .unwrap();
        assert_eq!(all_ideals(&r, &Bounds::default()).unwrap().len(), 6);
    }

    #[test]
    fn spectrum_of_z12() {
        let r = FiniteRing::zmod(12);
        let spec = prime_spectrum(&r, &Bounds::default()).unwrap();
        assert_eq!(spec.len(), 2);
        let two = Ideal::generated_by(&r, &[2]);
        let three = Ideal::generated_by(&r, &[3]);
        assert!(spec.iter().any(|p| p.ideal() == &two));
        assert!(spec.iter().any(|p| p.ideal() == &three));
    }

    #[test]
    fn spectrum_of_fields_and_local_rings() {
        let f = galois_field(3).unwrap();
        let spec = prime_spectrum(&f, &Bounds::default()).unwrap();
        assert_eq!(spec.len(), 1);
        assert!(spec[0].ideal().is_zero());

        let z8 = FiniteRing::zmod(8);
        let spec = prime_spectrum(&z8, &Bounds::default()).unwrap();
        assert_eq!(spec.len(), 1);
        assert_eq!(members(spec[0].ideal()), vec![0, 2, 4, 6]);
    }

    #[test]
    fn spectrum_is_the_maximal_ideals() {
        let r = FiniteRing::zmod(24);
        let bounds = Bounds::default();
        let ideals = all_ideals(&r, &bounds).unwrap();
        let primes = prime_spectrum(&r, &bounds).unwrap();
        let proper: Vec<&Ideal> = ideals.iter().filter(|i| i.is_proper()).collect();
        let maximal: Vec<&&Ideal> = proper
            .iter()
            .filter(|i| {
                !proper
                    .iter()
                    .any(|j| ***i != **j && i.is_subset(j))
            })
            .collect();
        assert_eq!(maximal.len(), primes.len());
        for m in maximal {
            assert!(primes.iter().any(|p| p.ideal() == **m));
        }
    }
}
