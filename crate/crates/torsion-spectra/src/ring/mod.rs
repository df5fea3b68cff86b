//! Finite commutative rings with explicit operation tables.
//!
//! Rings are constructed from a [`RingDescription`] (residue rings `Z/n`,
//! Galois fields, finite products, or raw tables) and always carry full
//! addition and multiplication tables, whatever the construction. The table
//! representation keeps every downstream question — ideal membership, prime
//! enumeration, module support — a finite scan.

mod ideal;
mod local;
mod module;

pub use ideal::{all_ideals, prime_spectrum, Ideal, PrimeIdeal};
pub use local::{local_factors, Decomposition, LocalFactor};
pub use module::{
    abelian_invariants, are_isomorphic, fraction_localization, FinModule, ModulePresentation,
};

use crate::{Bounds, Error, Result};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// Construction descriptor, also the JSON wire format for rings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RingDescription {
    /// The residue ring `Z/n`, `n >= 1`.
    ZMod { n: u32 },
    /// The field with `p^k` elements presented as `F_p[t]` modulo a monic
    /// irreducible `modulus` of degree `k` (coefficients ascending).
    Gf { p: u32, k: u32, modulus: Vec<u32> },
    /// A finite product of rings, componentwise operations.
    Product { factors: Vec<RingDescription> },
    /// Raw operation tables.
    Table { add: Vec<Vec<u32>>, mul: Vec<Vec<u32>> },
}

impl RingDescription {
    pub fn zmod(n: u32) -> Self {
        RingDescription::ZMod { n }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Short human label, e.g. `Z/12`, `GF(4)`, `Z/4 x Z/3`.
    pub fn label(&self) -> String {
        match self {
            RingDescription::ZMod { n } => format!("Z/{n}"),
            RingDescription::Gf { p, k, .. } => format!("GF({})", (*p as u64).pow(*k)),
            RingDescription::Product { factors } => factors
                .iter()
                .map(|f| f.label())
                .collect::<Vec<_>>()
                .join(" x "),
            RingDescription::Table { add, .. } => format!("table ring of size {}", add.len()),
        }
    }
}

/// A set of ring-element indices, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet {
    n: usize,
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(n: usize) -> Self {
        ElemSet {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for i in 0..n {
            s.insert(i as u16);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, i: u16) -> bool {
        let (w, b) = (i as usize / 64, i as usize % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn contains(&self, i: u16) -> bool {
        let (w, b) = (i as usize / 64, i as usize % 64);
        self.words[w] & (1 << b) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect(&self, other: &ElemSet) -> ElemSet {
        ElemSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = u16> + '_ {
        (0..self.n as u16).filter(move |&i| self.contains(i))
    }
}

impl std::fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A finite commutative unital ring with full operation tables.
pub struct FiniteRing {
    n: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    zero: u16,
    one: u16,
    units: ElemSet,
    provenance: RingDescription,
}

impl std::fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteRing({}, n={})", self.label(), self.n)
    }
}

impl FiniteRing {
    /// Builds the ring described by `desc`, verifying the ring axioms.
    ///
    /// Axioms are checked by full triple loops up to 64 elements and by a
    /// deterministic sample of triples above that; pair-indexed laws
    /// (commutativity, identities, negation) are always checked in full.
    pub fn new(desc: &RingDescription) -> Result<Arc<FiniteRing>> {
        let (n, add, mul) = build_tables(desc)?;
        if n == 0 {
            return Err(Error::BadRing("empty element set".into()));
        }
        let zero = find_zero(n, &add)
            .ok_or_else(|| Error::RingAxiom("no additive identity".into()))?;
        let one = find_one(n, &mul)
            .ok_or_else(|| Error::RingAxiom("no multiplicative identity".into()))?;
        if n > 1 && zero == one {
            return Err(Error::RingAxiom("1 = 0 in a ring with more than one element".into()));
        }
        let mut neg = vec![u16::MAX; n];
        for a in 0..n {
            for b in 0..n {
                if add[a * n + b] == zero {
                    neg[a] = b as u16;
                }
            }
            if neg[a] == u16::MAX {
                return Err(Error::RingAxiom(format!("element {a} has no negative")));
            }
        }
        verify_axioms(n, &add, &mul, zero, one)?;
        let mut units = ElemSet::empty(n);
        for a in 0..n {
            if (0..n).any(|b| mul[a * n + b] == one) {
                units.insert(a as u16);
            }
        }
        Ok(Arc::new(FiniteRing {
            n,
            add,
            mul,
            neg,
            zero,
            one,
            units,
            provenance: desc.clone(),
        }))
    }

    pub fn zmod(n: u32) -> Arc<FiniteRing> {
        FiniteRing::new(&RingDescription::ZMod { n }).expect("Z/n is a ring")
    }

    /// Internal constructor for rings obtained from verified tables
    /// (idempotent factors, character computations). Still validates.
    pub(crate) fn from_tables(
        add: Vec<Vec<u32>>,
        mul: Vec<Vec<u32>>,
    ) -> Result<Arc<FiniteRing>> {
        FiniteRing::new(&RingDescription::Table { add, mul })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> u16 {
        self.zero
    }

    pub fn one(&self) -> u16 {
        self.one
    }

    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.n + b as usize]
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.n + b as usize]
    }

    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: u16, k: usize) -> u16 {
        let mut acc = self.one;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn is_unit(&self, a: u16) -> bool {
        self.units.contains(a)
    }

    pub fn elements(&self) -> impl Iterator<Item = u16> {
        0..self.n as u16
    }

    /// Additive order of 1; the characteristic of the ring.
    pub fn characteristic(&self) -> usize {
        let mut acc = self.one;
        let mut k = 1;
        while acc != self.zero {
            acc = self.add(acc, self.one);
            k += 1;
        }
        k
    }

    pub fn provenance(&self) -> &RingDescription {
        &self.provenance
    }

    pub fn label(&self) -> String {
        self.provenance.label()
    }

    /// Structural equality of the operation tables.
    pub fn same_ring(a: &Arc<FiniteRing>, b: &Arc<FiniteRing>) -> bool {
        Arc::ptr_eq(a, b) || (a.n == b.n && a.add == b.add && a.mul == b.mul)
    }
}

fn find_zero(n: usize, add: &[u16]) -> Option<u16> {
    (0..n as u16).find(|&z| (0..n as u16).all(|a| add[z as usize * n + a as usize] == a))
}

fn find_one(n: usize, mul: &[u16]) -> Option<u16> {
    (0..n as u16).find(|&o| (0..n as u16).all(|a| mul[o as usize * n + a as usize] == a))
}

fn verify_axioms(n: usize, add: &[u16], mul: &[u16], _zero: u16, _one: u16) -> Result<()> {
    let idx = |a: u16, b: u16| a as usize * n + b as usize;
    for a in 0..n as u16 {
        for b in 0..n as u16 {
            if add[idx(a, b)] != add[idx(b, a)] {
                return Err(Error::RingAxiom(format!("addition not commutative at ({a},{b})")));
            }
            if mul[idx(a, b)] != mul[idx(b, a)] {
                return Err(Error::RingAxiom(format!(
                    "multiplication not commutative at ({a},{b})"
                )));
            }
        }
    }
    let mut check = |a: u16, b: u16, c: u16| -> Result<()> {
        if add[idx(add[idx(a, b)], c)] != add[idx(a, add[idx(b, c)])] {
            return Err(Error::RingAxiom(format!("addition not associative at ({a},{b},{c})")));
        }
        if mul[idx(mul[idx(a, b)], c)] != mul[idx(a, mul[idx(b, c)])] {
            return Err(Error::RingAxiom(format!(
                "multiplication not associative at ({a},{b},{c})"
            )));
        }
        if mul[idx(a, add[idx(b, c)])] != add[idx(mul[idx(a, b)], mul[idx(a, c)])] {
            return Err(Error::RingAxiom(format!("distributivity fails at ({a},{b},{c})")));
        }
        Ok(())
    };
    if n <= 64 {
        for a in 0..n as u16 {
            for b in 0..n as u16 {
                for c in 0..n as u16 {
                    check(a, b, c)?;
                }
            }
        }
    } else {
        // Deterministic sample above the exhaustive bound.
        let mut state = 0x9e3779b97f4a7c15u64;
        for _ in 0..200_000 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let a = ((state >> 33) % n as u64) as u16;
            let b = ((state >> 17) % n as u64) as u16;
            let c = (state % n as u64) as u16;
            check(a, b, c)?;
        }
    }
    Ok(())
}

fn build_tables(desc: &RingDescription) -> Result<(usize, Vec<u16>, Vec<u16>)> {
    match desc {
        RingDescription::ZMod { n } => {
            if *n == 0 {
                return Err(Error::BadRing("Z/0 not supported; use the integer backend".into()));
            }
            let n = *n as usize;
            let mut add = vec![0u16; n * n];
            let mut mul = vec![0u16; n * n];
            for a in 0..n {
                for b in 0..n {
                    add[a * n + b] = ((a + b) % n) as u16;
                    mul[a * n + b] = ((a * b) % n) as u16;
                }
            }
            Ok((n, add, mul))
        }
        RingDescription::Gf { p, k, modulus } => build_gf(*p, *k, modulus),
        RingDescription::Product { factors } => {
            if factors.is_empty() {
                return Err(Error::BadRing("empty product".into()));
            }
            let built: Vec<_> = factors
                .iter()
                .map(build_tables)
                .collect::<Result<Vec<_>>>()?;
            let n: usize = built.iter().map(|(m, _, _)| m).product();
            if n > u16::MAX as usize {
                return Err(Error::BoundExceeded(format!("product ring of size {n}")));
            }
            let decode = |mut i: usize| -> Vec<usize> {
                let mut digits = Vec::with_capacity(built.len());
                for (m, _, _) in &built {
                    digits.push(i % m);
                    i /= m;
                }
                digits
            };
            let encode = |digits: &[usize]| -> usize {
                let mut i = 0;
                for (d, (m, _, _)) in digits.iter().zip(&built).rev() {
                    i = i * m + d;
                }
                i
            };
            let mut add = vec![0u16; n * n];
            let mut mul = vec![0u16; n * n];
            for a in 0..n {
                let da = decode(a);
                for b in 0..n {
                    let db = decode(b);
                    let mut sa = Vec::with_capacity(built.len());
                    let mut sm = Vec::with_capacity(built.len());
                    for (idx, (m, fadd, fmul)) in built.iter().enumerate() {
                        sa.push(fadd[da[idx] * m + db[idx]] as usize);
                        sm.push(fmul[da[idx] * m + db[idx]] as usize);
                    }
                    add[a * n + b] = encode(&sa) as u16;
                    mul[a * n + b] = encode(&sm) as u16;
                }
            }
            Ok((n, add, mul))
        }
        RingDescription::Table { add, mul } => {
            let n = add.len();
            if n == 0 || mul.len() != n || add.iter().chain(mul).any(|r| r.len() != n) {
                return Err(Error::BadRing("tables must be square and same size".into()));
            }
            if n > u16::MAX as usize {
                return Err(Error::BoundExceeded(format!("table ring of size {n}")));
            }
            let flat = |t: &[Vec<u32>]| -> Result<Vec<u16>> {
                let mut out = Vec::with_capacity(n * n);
                for row in t {
                    for &v in row {
                        if v as usize >= n {
                            return Err(Error::BadRing(format!("table entry {v} out of range")));
                        }
                        out.push(v as u16);
                    }
                }
                Ok(out)
            };
            Ok((n, flat(add)?, flat(mul)?))
        }
    }
}

/// Polynomial arithmetic over `F_p` used by the Galois field construction.
mod fp_poly {
    pub fn normalize(v: &mut Vec<u32>, p: u32) {
        for c in v.iter_mut() {
            *c %= p;
        }
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut r: Vec<u32> = a.to_vec();
        normalize(&mut r, p);
        let dm = m.len() - 1;
        let lead_inv = inv_mod(m[dm], p);
        while r.len() > dm {
            let shift = r.len() - 1 - dm;
            let factor = (r[r.len() - 1] * lead_inv) % p;
            for i in 0..=dm {
                let idx = shift + i;
                r[idx] = (r[idx] + p - (factor * m[i]) % p) % p;
            }
            normalize(&mut r, p);
            if r.is_empty() {
                break;
            }
        }
        r
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        let mut out = out;
        normalize(&mut out, p);
        out
    }

    pub fn inv_mod(a: u32, p: u32) -> u32 {
        // p is prime and a != 0 mod p
        let mut result = 1u64;
        let mut base = (a % p) as u64;
        let mut e = p as u64 - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % p as u64;
            }
            base = base * base % p as u64;
            e >>= 1;
        }
        result as u32
    }

    /// Trial-division irreducibility over `F_p`.
    pub fn is_irreducible(m: &[u32], p: u32) -> bool {
        let deg = m.len() - 1;
        if deg == 0 {
            return false;
        }
        // enumerate monic divisors of degree 1..=deg/2
        for d in 1..=deg / 2 {
            let count = (p as u64).pow(d as u32);
            for idx in 0..count {
                let mut cand = Vec::with_capacity(d + 1);
                let mut i = idx;
                for _ in 0..d {
                    cand.push((i % p as u64) as u32);
                    i /= p as u64;
                }
                cand.push(1);
                if rem(m, &cand, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

fn build_gf(p: u32, k: u32, modulus: &[u32]) -> Result<(usize, Vec<u16>, Vec<u16>)> {
    if p < 2 || (2..p).any(|d| p % d == 0) {
        return Err(Error::BadRing(format!("{p} is not prime")));
    }
    if k == 0 {
        return Err(Error::BadRing("field degree must be at least 1".into()));
    }
    if modulus.len() != k as usize + 1 {
        return Err(Error::BadRing(format!(
            "modulus must have degree {k} (got {} coefficients)",
            modulus.len()
        )));
    }
    let modulus: Vec<u32> = modulus.iter().map(|&c| c % p).collect();
    if modulus[k as usize] != 1 {
        return Err(Error::BadRing("modulus must be monic".into()));
    }
    if !fp_poly::is_irreducible(&modulus, p) {
        return Err(Error::BadRing("modulus is reducible".into()));
    }
    let n = (p as u64).pow(k) as usize;
    if n > u16::MAX as usize {
        return Err(Error::BoundExceeded(format!("field of size {n}")));
    }
    let decode = |mut i: usize| -> Vec<u32> {
        let mut digits = Vec::with_capacity(k as usize);
        for _ in 0..k {
            digits.push((i % p as usize) as u32);
            i /= p as usize;
        }
        digits
    };
    let encode = |poly: &[u32]| -> usize {
        let mut i = 0usize;
        for &c in poly.iter().rev() {
            i = i * p as usize + c as usize;
        }
        i
    };
    let mut add = vec![0u16; n * n];
    let mut mul = vec![0u16; n * n];
    for a in 0..n {
        let da = decode(a);
        for b in 0..n {
            let db = decode(b);
            let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            add[a * n + b] = encode(&sum) as u16;
            let prod = fp_poly::rem(&fp_poly::mul(&da, &db, p), &modulus, p);
            let mut padded = prod;
            padded.resize(k as usize, 0);
            mul[a * n + b] = encode(&padded) as u16;
        }
    }
    Ok((n, add, mul))
}

/// Smallest monic irreducible of degree `k` over `F_p` in the ascending
/// coefficient order; a deterministic default modulus for `GF(p^k)`.
pub fn default_gf_modulus(p: u32, k: u32) -> Vec<u32> {
    let count = (p as u64).pow(k);
    for idx in 0..count {
        let mut cand = Vec::with_capacity(k as usize + 1);
        let mut i = idx;
        for _ in 0..k {
            cand.push((i % p as u64) as u32);
            i /= p as u64;
        }
        cand.push(1);
        if fp_poly::is_irreducible(&cand, p) {
            return cand;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Convenience: build `GF(q)` for a prime power `q` with the default modulus.
pub fn galois_field(q: u32) -> Result<Arc<FiniteRing>> {
    let (p, k) = prime_power(q)
        .ok_or_else(|| Error::BadRing(format!("{q} is not a prime power")))?;
    FiniteRing::new(&RingDescription::Gf {
        p,
        k,
        modulus: default_gf_modulus(p, k),
    })
}

/// Splits `q` as `p^k` with `p` prime, if possible.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0).unwrap();
    let mut rest = q;
    let mut k = 0;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

pub(crate) fn check_ring_bound(ring: &FiniteRing, bounds: &Bounds) -> Result<()> {
    if ring.size() > bounds.ideal_enumeration {
        return Err(Error::BoundExceeded(format!(
            "ring of size {} exceeds the ideal enumeration bound {}",
            ring.size(),
            bounds.ideal_enumeration
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zmod12_basic() {
        let r = FiniteRing::zmod(12);
        assert_eq!(r.size(), 12);
        assert_eq!(r.characteristic(), 12);
        assert_eq!(r.add(7, 8), 3);
        assert_eq!(r.mul(4, 9), 0);
        assert!(r.is_unit(5));
        assert!(!r.is_unit(4));
    }

    #[test]
    fn zmod1_is_the_zero_ring() {
        let r = FiniteRing::zmod(1);
        assert_eq!(r.size(), 1);
        assert_eq!(r.zero(), r.one());
    }

    #[test]
    fn gf4_every_nonzero_element_invertible() {
        // independent oracle: exhaustive inverse search
        let r = FiniteRing::new(&RingDescription::Gf {
            p: 2,
            k: 2,
            modulus: vec![1, 1, 1],
        })
        .unwrap();
        assert_eq!(r.size(), 4);
        for a in r.elements().filter(|&a| a != r.zero()) {
            assert!(
                r.elements().any(|b| r.mul(a, b) == r.one()),
                "no inverse for {a}"
            );
        }
    }

    #[test]
    fn gf_rejects_reducible_modulus() {
        // t^2 + 1 = (t+1)^2 over F_2
        let err = FiniteRing::new(&RingDescription::Gf {
            p: 2,
            k: 2,
            modulus: vec![1, 0, 1],
        });
        assert!(err.is_err());
    }

    #[test]
    fn gf_rejects_composite_characteristic() {
        assert!(FiniteRing::new(&RingDescription::Gf {
            p: 6,
            k: 1,
            modulus: vec![0, 1],
        })
        .is_err());
    }

    #[test]
    fn table_ring_rejects_non_associative_multiplication() {
        // 2-element structure with xor addition and a doctored multiplication
        let add = vec![vec![0, 1], vec![1, 0]];
        let mul = vec![vec![1, 0], vec![0, 0]]; // no identity behaves correctly
        assert!(FiniteRing::new(&RingDescription::Table { add, mul }).is_err());
    }

    #[test]
    fn product_ring_componentwise() {
        let r = FiniteRing::new(&RingDescription::Product {
            factors: vec![RingDescription::zmod(4), RingDescription::zmod(3)],
        })
        .unwrap();
        assert_eq!(r.size(), 12);
        assert_eq!(r.characteristic(), 12);
    }

    #[test]
    fn default_moduli_are_irreducible() {
        for q in [4u32, 8, 9, 25, 27] {
            let r = galois_field(q).unwrap();
            assert_eq!(r.size(), q as usize);
            for a in r.elements().filter(|&a| a != r.zero()) {
                assert!(r.elements().any(|b| r.mul(a, b) == r.one()));
            }
        }
    }
}
