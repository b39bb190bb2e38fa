//! Sparse operators on the truncated Fock space, built from oscillator
//! expressions.
//!
//! Construction applies oscillator monomials symbolically in the untruncated
//! occupation lattice and projects only the final result onto the basis, so a
//! stored operator is exactly P Op P for the basis projector P. Every
//! operator carries a grading shift `delta` (the largest net raise of the
//! total occupation any of its terms can cause); identities are asserted only
//! on states guarded against the combined shift, which keeps truncation
//! artifacts out of every check.

use crate::exact::{rat_int, ExactComplex, Rat};
use crate::fock::basis::{FockBasis, FockVector, Occupation};
use crate::fock::FockError;
use std::collections::BTreeMap;

/// The four oscillator modes, ordered as the occupation tuple.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    A1 = 0,
    A2 = 1,
    B1 = 2,
    B2 = 3,
}

pub const MODES: [Mode; 4] = [Mode::A1, Mode::A2, Mode::B1, Mode::B2];

/// One oscillator factor: a creation (dagger) or annihilation operator.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OscFactor {
    pub mode: Mode,
    pub dagger: bool,
}

pub fn create(mode: Mode) -> OscFactor {
    OscFactor { mode, dagger: true }
}

pub fn annihilate(mode: Mode) -> OscFactor {
    OscFactor { mode, dagger: false }
}

/// A scalar multiple of an ordered oscillator monomial. `factors[0]` acts
/// last, matching the left-to-right operator notation.
#[derive(Clone, Debug)]
pub struct OscTerm {
    pub coeff: ExactComplex,
    pub factors: Vec<OscFactor>,
}

/// A finite sum of oscillator monomials.
#[derive(Clone, Debug, Default)]
pub struct OscExpr {
    pub terms: Vec<OscTerm>,
}

impl OscExpr {
    pub fn new(terms: Vec<OscTerm>) -> Self {
        OscExpr { terms }
    }

    pub fn single(coeff: ExactComplex, factors: Vec<OscFactor>) -> Self {
        OscExpr { terms: vec![OscTerm { coeff, factors }] }
    }

    /// Largest net raise of the total occupation over all terms.
    pub fn delta(&self) -> u32 {
        self.terms
            .iter()
            .map(|t| {
                let net: i32 = t
                    .factors
                    .iter()
                    .map(|f| if f.dagger { 1 } else { -1 })
                    .sum();
                net.max(0) as u32
            })
            .max()
            .unwrap_or(0)
    }

    /// Apply to a single occupation tuple; exact, untruncated.
    pub fn apply_occupation(&self, occ: &Occupation) -> Vec<(Occupation, ExactComplex)> {
        let mut acc: BTreeMap<Occupation, ExactComplex> = BTreeMap::new();
        for term in &self.terms {
            let mut state = *occ;
            let mut weight = rat_int(1);
            let mut dead = false;
            // Rightmost factor acts first.
            for f in term.factors.iter().rev() {
                let m = f.mode as usize;
                if f.dagger {
                    state[m] += 1;
                } else if state[m] == 0 {
                    dead = true;
                    break;
                } else {
                    weight *= rat_int(state[m] as i64);
                    state[m] -= 1;
                }
            }
            if dead {
                continue;
            }
            let c = term.coeff.scale(&weight);
            if c.is_zero() {
                continue;
            }
            let entry = acc.entry(state).or_insert_with(ExactComplex::zero);
            *entry += &c;
            if entry.is_zero() {
                acc.remove(&state);
            }
        }
        acc.into_iter().collect()
    }

    /// Materialize as a sparse matrix over the basis. Components that leave
    /// the basis are dropped; `delta` records how far the expression can
    /// raise states, so guarded checks never see that loss.
    pub fn to_op(&self, basis: &FockBasis) -> FockOp {
        let cols = basis
            .states()
            .iter()
            .map(|occ| {
                self.apply_occupation(occ)
                    .into_iter()
                    .filter_map(|(state, c)| basis.find(&state).map(|row| (row, c)))
                    .collect()
            })
            .collect();
        FockOp { cols, delta: self.delta() }
    }
}

/// A single creation or annihilation operator as a sparse matrix.
pub fn oscillator(mode: Mode, dagger: bool, basis: &FockBasis) -> FockOp {
    OscExpr::single(ExactComplex::one(), vec![OscFactor { mode, dagger }]).to_op(basis)
}

/// Sparse operator over a Fock basis, column-major; entries exact.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FockOp {
    pub(crate) cols: Vec<Vec<(u32, ExactComplex)>>,
    delta: u32,
}

impl FockOp {
    pub fn zero(dim: usize) -> Self {
        FockOp { cols: vec![Vec::new(); dim], delta: 0 }
    }

    pub fn identity(dim: usize) -> Self {
        FockOp {
            cols: (0..dim as u32).map(|i| vec![(i, ExactComplex::one())]).collect(),
            delta: 0,
        }
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn delta(&self) -> u32 {
        self.delta
    }

    /// Override the recorded grading shift (used when an operator is known to
    /// shift less than its construction suggests).
    pub fn with_delta(mut self, delta: u32) -> Self {
        self.delta = delta;
        self
    }

    pub fn column(&self, j: u32) -> &[(u32, ExactComplex)] {
        &self.cols[j as usize]
    }

    pub fn entry(&self, row: u32, col: u32) -> ExactComplex {
        self.cols[col as usize]
            .iter()
            .find(|(r, _)| *r == row)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(ExactComplex::zero)
    }

    /// Apply to a vector, silently truncating at the basis boundary.
    pub fn apply(&self, v: &FockVector) -> FockVector {
        let mut out = FockVector::zero();
        for (j, c) in v.iter() {
            for (row, m) in &self.cols[*j as usize] {
                out.add_term(*row, &(m * c));
            }
        }
        out
    }

    /// Apply only when the input is guarded against this operator's shift.
    pub fn apply_guarded(&self, v: &FockVector, basis: &FockBasis) -> Result<FockVector, FockError> {
        for (j, _) in v.iter() {
            let occ = basis.state(*j);
            if !basis.is_guarded(&occ, self.delta) {
                return Err(FockError::GuardBand {
                    occupation: FockBasis::total_occupation(&occ),
                    delta: self.delta,
                    cutoff: basis.cutoff_occupation(),
                });
            }
        }
        Ok(self.apply(v))
    }

    /// self o rhs (rhs acts first); shifts add.
    pub fn compose(&self, rhs: &FockOp) -> FockOp {
        let cols = rhs
            .cols
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<u32, ExactComplex> = BTreeMap::new();
                for (mid, c) in col {
                    for (row, m) in &self.cols[*mid as usize] {
                        let entry = acc.entry(*row).or_insert_with(ExactComplex::zero);
                        *entry += &(m * c);
                        if entry.is_zero() {
                            acc.remove(row);
                        }
                    }
                }
                acc.into_iter().collect()
            })
            .collect();
        FockOp { cols, delta: self.delta + rhs.delta }
    }

    pub fn add(&self, rhs: &FockOp) -> FockOp {
        assert_eq!(self.dim(), rhs.dim());
        let cols = self
            .cols
            .iter()
            .zip(&rhs.cols)
            .map(|(a, b)| {
                let mut acc: BTreeMap<u32, ExactComplex> = BTreeMap::new();
                for (row, c) in a.iter().chain(b) {
                    let entry = acc.entry(*row).or_insert_with(ExactComplex::zero);
                    *entry += c;
                    if entry.is_zero() {
                        acc.remove(row);
                    }
                }
                acc.into_iter().collect()
            })
            .collect();
        FockOp { cols, delta: self.delta.max(rhs.delta) }
    }

    pub fn scale(&self, c: &ExactComplex) -> FockOp {
        if c.is_zero() {
            return FockOp::zero(self.dim());
        }
        FockOp {
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(r, m)| (*r, m * c)).collect())
                .collect(),
            delta: self.delta,
        }
    }

    pub fn sub(&self, rhs: &FockOp) -> FockOp {
        self.add(&rhs.scale(&ExactComplex::from_int(-1)))
    }

    pub fn commutator(a: &FockOp, b: &FockOp) -> FockOp {
        a.compose(b).sub(&b.compose(a))
    }

    /// Exact equality of columns on every state guarded against both shifts.
    /// Returns the number of columns compared, or an error listing the first
    /// mismatching state.
    pub fn equals_guarded(&self, rhs: &FockOp, basis: &FockBasis) -> Result<usize, FockError> {
        assert_eq!(self.dim(), basis.len());
        assert_eq!(rhs.dim(), basis.len());
        let delta = self.delta.max(rhs.delta);
        let mut compared = 0;
        for j in 0..basis.len() as u32 {
            if !basis.is_guarded(&basis.state(j), delta) {
                continue;
            }
            compared += 1;
            if self.cols[j as usize] != rhs.cols[j as usize] {
                return Err(FockError::OperatorMismatch {
                    state: format!("{:?}", basis.state(j)),
                });
            }
        }
        Ok(compared)
    }

    pub fn is_zero_guarded(&self, basis: &FockBasis) -> bool {
        self.equals_guarded(&FockOp::zero(self.dim()).with_delta(self.delta), basis)
            .is_ok()
    }

    /// Diagonal entries when the operator is diagonal in the occupation basis.
    pub fn diagonal(&self) -> Option<Vec<ExactComplex>> {
        let mut diag = Vec::with_capacity(self.dim());
        for (j, col) in self.cols.iter().enumerate() {
            match col.as_slice() {
                [] => diag.push(ExactComplex::zero()),
                [(row, c)] if *row == j as u32 => diag.push(c.clone()),
                _ => return None,
            }
        }
        Some(diag)
    }

    /// Hermiticity with respect to the Gram inner product:
    /// G_m M[m,n] = conj(M[n,m]) G_n for all stored entries.
    pub fn is_hermitian(&self, basis: &FockBasis) -> bool {
        for (n, col) in self.cols.iter().enumerate() {
            let gn = FockBasis::gram(&basis.state(n as u32));
            for (m, c) in col {
                let gm = FockBasis::gram(&basis.state(*m));
                let lhs = c.scale(&gm);
                let rhs = self.entry(n as u32, *m).conj().scale(&gn);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// <0| Op |0>: the vacuum component of the first column (Gram weight 1).
    pub fn vacuum_expectation(&self) -> ExactComplex {
        self.entry(0, 0)
    }

    /// <v | Op | v> over the Gram inner product, exact.
    pub fn expectation(&self, v: &FockVector, basis: &FockBasis) -> ExactComplex {
        v.inner(&self.apply(v), basis)
    }

    /// Scale by an exact rational.
    pub fn scale_rat(&self, r: &Rat) -> FockOp {
        self.scale(&ExactComplex::from_rat(r.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn basis() -> FockBasis {
        FockBasis::new(4).unwrap()
    }

    #[test]
    fn annihilation_kills_vacuum() {
        let b = basis();
        for mode in MODES {
            let a = oscillator(mode, false, &b);
            assert!(a.apply(&FockVector::vacuum()).is_zero());
        }
    }

    #[test]
    fn ccr_on_guarded_states() {
        let b = basis();
        let id = FockOp::identity(b.len());
        for mode in MODES {
            let a = oscillator(mode, false, &b);
            let adag = oscillator(mode, true, &b);
            let comm = FockOp::commutator(&a, &adag);
            // [a, a*] = 1 on any state at least one occupation unit below cutoff.
            comm.equals_guarded(&id, &b).unwrap();
        }
        // Cross-mode commutators vanish, creation pairs included.
        let a1 = oscillator(Mode::A1, false, &b);
        let b2dag = oscillator(Mode::B2, true, &b);
        assert!(FockOp::commutator(&a1, &b2dag).is_zero_guarded(&b));
        let a1dag = oscillator(Mode::A1, true, &b);
        let a2dag = oscillator(Mode::A2, true, &b);
        assert!(FockOp::commutator(&a1dag, &a2dag).is_zero_guarded(&b));
    }

    #[test]
    fn creation_matrix_elements_are_monomial() {
        let b = basis();
        let adag = oscillator(Mode::A2, true, &b);
        let from = b.find(&[0, 1, 0, 0]).unwrap();
        let to = b.find(&[0, 2, 0, 0]).unwrap();
        assert_eq!(adag.entry(to, from), ExactComplex::one());
        let a = oscillator(Mode::A2, false, &b);
        assert_eq!(a.entry(from, to), ExactComplex::from_int(2));
    }

    #[test]
    fn guard_band_flagging() {
        let b = basis();
        // (a1* b2*)^2 raises by 4; a state with occupation above
        // cutoff - 4 must be flagged.
        let e_theta = OscExpr::single(
            ExactComplex::one(),
            vec![create(Mode::A1), create(Mode::B2)],
        )
        .to_op(&b);
        let sq = e_theta.compose(&e_theta);
        assert_eq!(sq.delta(), 4);
        let top = b.find(&[2, 1, 0, 0]).unwrap(); // occupation 3, cutoff 6
        let v = FockVector::basis_state(top);
        assert!(matches!(
            sq.apply_guarded(&v, &b),
            Err(FockError::GuardBand { .. })
        ));
        // A deep state passes.
        let ok = sq.apply_guarded(&FockVector::vacuum(), &b).unwrap();
        assert!(!ok.is_zero());
    }

    #[test]
    fn intermediate_excursion_is_exact() {
        // b1 b1* on a top-occupation state: the intermediate tuple leaves the
        // basis but the final result is diagonal, and symbolic construction
        // keeps it exact: b b* = N + 1.
        let b = basis();
        let expr = OscExpr::single(
            ExactComplex::one(),
            vec![annihilate(Mode::B1), create(Mode::B1)],
        );
        let op = expr.to_op(&b);
        let top = b.find(&[0, 0, 6, 0]).unwrap();
        assert_eq!(op.entry(top, top), ExactComplex::from_int(7));
        assert_eq!(op.delta(), 0);
    }

    #[test]
    fn hermiticity_and_expectation() {
        let b = basis();
        // N = a* a is hermitian with nonnegative expectations.
        let n_op = OscExpr::single(
            ExactComplex::one(),
            vec![create(Mode::A1), annihilate(Mode::A1)],
        )
        .to_op(&b);
        assert!(n_op.is_hermitian(&b));
        let mut v = FockVector::basis_state(b.find(&[1, 0, 0, 0]).unwrap());
        v.add_term(
            b.find(&[0, 0, 1, 0]).unwrap(),
            &ExactComplex::new(rat(1, 2), rat(1, 3)),
        );
        let e = n_op.expectation(&v, &b);
        assert!(e.is_real());
        assert_eq!(e.re, rat(1, 1));
    }
}
