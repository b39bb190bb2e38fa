//! Truncated occupation-number basis for two a-oscillators and two
//! b-oscillators.
//!
//! States are monomial vectors (a1*)^{n1} (a2*)^{n2} (b1*)^{n3} (b2*)^{n4} |0>
//! without square-root normalization, so every operator matrix element is an
//! exact integer times the matrix entries of the second-quantized expression.
//! The inner product carries the diagonal Gram factor n1! n2! n3! n4!.

use crate::exact::{factorial, ExactComplex, Rat};
use crate::fock::FockError;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};

pub type Occupation = [u16; 4];

/// All occupation 4-tuples with (n1+n2+n3+n4)/2 + 1 <= e_max, i.e. total
/// occupation at most 2(e_max - 1), in graded lexicographic order.
pub struct FockBasis {
    e_max: u16,
    states: Vec<Occupation>,
    index: HashMap<Occupation, u32>,
}

impl FockBasis {
    pub fn new(e_max: u16) -> Result<Self, FockError> {
        if e_max < 1 {
            return Err(FockError::InvalidCutoff(e_max));
        }
        let cutoff = 2 * (e_max - 1);
        let mut states = Vec::new();
        for total in 0..=cutoff {
            for n1 in 0..=total {
                for n2 in 0..=(total - n1) {
                    for n3 in 0..=(total - n1 - n2) {
                        let n4 = total - n1 - n2 - n3;
                        states.push([n1, n2, n3, n4]);
                    }
                }
            }
        }
        let index = states
            .iter()
            .enumerate()
            .map(|(i, s)| (*s, i as u32))
            .collect();
        Ok(FockBasis { e_max, states, index })
    }

    pub fn e_max(&self) -> u16 {
        self.e_max
    }

    /// Largest total occupation kept in the basis, 2(e_max - 1).
    pub fn cutoff_occupation(&self) -> u16 {
        2 * (self.e_max - 1)
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn states(&self) -> &[Occupation] {
        &self.states
    }

    pub fn state(&self, i: u32) -> Occupation {
        self.states[i as usize]
    }

    pub fn find(&self, occ: &Occupation) -> Option<u32> {
        self.index.get(occ).copied()
    }

    /// Index of the Fock vacuum |0>.
    pub fn vacuum_index(&self) -> u32 {
        0
    }

    pub fn total_occupation(occ: &Occupation) -> u16 {
        occ.iter().sum()
    }

    /// Conformal energy (n1+n2+n3+n4)/2 + 1 of a basis state.
    pub fn energy(occ: &Occupation) -> Rat {
        Rat::new(
            BigInt::from(Self::total_occupation(occ) + 2),
            BigInt::from(2),
        )
    }

    /// Twice-helicity eigenvalue (n1+n2) - (n3+n4).
    pub fn helicity(occ: &Occupation) -> i32 {
        (occ[0] as i32 + occ[1] as i32) - (occ[2] as i32 + occ[3] as i32)
    }

    /// Diagonal Gram factor n1! n2! n3! n4! of the monomial state.
    pub fn gram(occ: &Occupation) -> Rat {
        let mut g = BigInt::one();
        for &n in occ {
            g *= factorial(n as u64);
        }
        Rat::from_integer(g)
    }

    /// True when every operator raising the total occupation by `delta`
    /// keeps the image of this state inside the basis.
    pub fn is_guarded(&self, occ: &Occupation, delta: u32) -> bool {
        Self::total_occupation(occ) as u32 + delta <= self.cutoff_occupation() as u32
    }

    /// Indices of all states guarded against a total raise of `delta`.
    pub fn guarded_indices(&self, delta: u32) -> Vec<u32> {
        (0..self.len() as u32)
            .filter(|&i| self.is_guarded(&self.state(i), delta))
            .collect()
    }
}

/// Sparse vector over a Fock basis; canonical form stores no zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FockVector {
    comps: BTreeMap<u32, ExactComplex>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector::default()
    }

    pub fn basis_state(i: u32) -> Self {
        let mut v = FockVector::zero();
        v.add_term(i, &ExactComplex::one());
        v
    }

    pub fn vacuum() -> Self {
        FockVector::basis_state(0)
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.comps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn component(&self, i: u32) -> ExactComplex {
        self.comps.get(&i).cloned().unwrap_or_else(ExactComplex::zero)
    }

    pub fn add_term(&mut self, i: u32, c: &ExactComplex) {
        if c.is_zero() {
            return;
        }
        let entry = self.comps.entry(i).or_insert_with(ExactComplex::zero);
        *entry += c;
        if entry.is_zero() {
            self.comps.remove(&i);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&u32, &ExactComplex)> {
        self.comps.iter()
    }

    pub fn scale(&self, c: &ExactComplex) -> Self {
        let mut out = FockVector::zero();
        if c.is_zero() {
            return out;
        }
        for (i, a) in &self.comps {
            out.comps.insert(*i, a * c);
        }
        out
    }

    pub fn add(&self, rhs: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (i, c) in &rhs.comps {
            out.add_term(*i, c);
        }
        out
    }

    pub fn sub(&self, rhs: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (i, c) in &rhs.comps {
            out.add_term(*i, &-c);
        }
        out
    }

    /// <self | rhs> with the monomial-basis Gram weights.
    pub fn inner(&self, rhs: &FockVector, basis: &FockBasis) -> ExactComplex {
        let mut acc = ExactComplex::zero();
        for (i, a) in &self.comps {
            if let Some(b) = rhs.comps.get(i) {
                let g = FockBasis::gram(&basis.state(*i));
                acc += &(&a.conj() * b).scale(&g);
            }
        }
        acc
    }

    /// Exact squared norm.
    pub fn norm_sq(&self, basis: &FockBasis) -> Rat {
        let mut acc = Rat::zero();
        for (i, a) in &self.comps {
            acc += a.norm_sqr() * FockBasis::gram(&basis.state(*i));
        }
        acc
    }

    /// Largest total occupation in the support.
    pub fn max_occupation(&self, basis: &FockBasis) -> u16 {
        self.comps
            .keys()
            .map(|&i| FockBasis::total_occupation(&basis.state(i)))
            .max()
            .unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{binomial, rat};

    #[test]
    fn basis_sizes() {
        // e_max = 1: just the vacuum; e_max = 2: occupations 0..2 give
        // 1 + 4 + 10 = 15 states.
        assert_eq!(FockBasis::new(1).unwrap().len(), 1);
        assert_eq!(FockBasis::new(2).unwrap().len(), 15);
        // General count: sum_{m=0}^{2(e_max-1)} C(m+3,3) = C(2 e_max + 2, 4).
        for e_max in 1..=8u16 {
            let b = FockBasis::new(e_max).unwrap();
            let m = 2 * (e_max as u64 - 1);
            let expect: BigInt = (0..=m).map(|k| binomial(k + 3, 3)).sum();
            assert_eq!(BigInt::from(b.len()), expect);
            assert_eq!(expect, binomial(2 * e_max as u64 + 2, 4));
        }
    }

    #[test]
    fn enumeration_is_duplicate_free_and_graded() {
        let b = FockBasis::new(5).unwrap();
        let mut seen = std::collections::HashSet::new();
        let mut last_total = 0;
        for s in b.states() {
            assert!(seen.insert(*s), "duplicate state {s:?}");
            let total = FockBasis::total_occupation(s);
            assert!(total >= last_total, "grading violated");
            assert!(total <= b.cutoff_occupation());
            last_total = total;
        }
        // Round trip through the index.
        for (i, s) in b.states().iter().enumerate() {
            assert_eq!(b.find(s), Some(i as u32));
        }
    }

    #[test]
    fn energy_and_helicity() {
        let occ = [2, 0, 1, 0];
        assert_eq!(FockBasis::energy(&occ), rat(5, 2));
        assert_eq!(FockBasis::helicity(&occ), 1);
        assert_eq!(FockBasis::helicity(&[2, 0, 0, 0]), 2);
        assert_eq!(FockBasis::energy(&[0, 0, 0, 0]), rat(1, 1));
    }

    #[test]
    fn gram_factors() {
        assert_eq!(FockBasis::gram(&[0, 0, 0, 0]), rat(1, 1));
        assert_eq!(FockBasis::gram(&[3, 1, 0, 2]), rat(12, 1));
    }

    #[test]
    fn vector_canonical_form() {
        let mut v = FockVector::basis_state(3);
        v.add_term(3, &ExactComplex::from_int(-1));
        assert!(v.is_zero());
    }

    #[test]
    fn inner_product_uses_gram() {
        let basis = FockBasis::new(3).unwrap();
        let i = basis.find(&[2, 0, 0, 0]).unwrap();
        let v = FockVector::basis_state(i);
        // ||(a1*)^2 |0>||^2 = 2!.
        assert_eq!(v.norm_sq(&basis), rat(2, 1));
        let w = v.scale(&ExactComplex::i());
        assert_eq!(w.inner(&v, &basis), ExactComplex::new(rat(0, 1), rat(-2, 1)));
    }
}
