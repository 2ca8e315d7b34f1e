//! Symmetric bilinear forms on `V = F_q^n`, stored as Gram matrices.

use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, Gf};
use crate::linalg::{self, Matrix};
use crate::subspace::VecSubspace;

/// Default exhaustive-enumeration budget for isotropic counts.
pub const DEFAULT_ISOTROPIC_BUDGET: u64 = 1 << 20;

/// A symmetric `n x n` Gram matrix over a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymForm {
    field: Field,
    n: usize,
    gram: Vec<Gf>,
}

impl Hash for SymForm {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.gram.hash(state);
    }
}

/// Type of a symmetric form over a field of odd order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FormType {
    Zero,
    Odd,
    Positive,
    Negative,
}

/// Result of a congruence diagonalization: `P^T G P = diag(entries)`.
#[derive(Clone, Debug)]
pub struct Diagonalization {
    pub transform: Matrix,
    pub entries: Vec<Gf>,
}

/// Number of upper-triangle coordinates of an `n x n` symmetric matrix.
pub fn upper_len(n: usize) -> usize {
    n * (n + 1) / 2
}

impl SymForm {
    pub fn new(field: &Field, n: usize, gram: Vec<Gf>) -> Result<SymForm> {
        if n == 0 {
            return Err(Error::DimensionMismatch("forms need n >= 1".into()));
        }
        if gram.len() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "expected {} Gram entries, got {}",
                n * n,
                gram.len()
            )));
        }
        if let Some(bad) = gram.iter().find(|g| g.0 >= field.q()) {
            return Err(Error::Parse(format!("{} is not an element of F_{}", bad.0, field.q())));
        }
        for i in 0..n {
            for j in i + 1..n {
                if gram[i * n + j] != gram[j * n + i] {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(SymForm { field: field.clone(), n, gram })
    }

    pub fn from_rows(field: &Field, rows: &[Vec<u32>]) -> Result<SymForm> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("Gram matrix is not square".into()));
        }
        let gram = rows.iter().flatten().map(|&x| Gf(x)).collect();
        SymForm::new(field, n, gram)
    }

    pub fn zero(field: &Field, n: usize) -> SymForm {
        SymForm { field: field.clone(), n, gram: vec![Gf::ZERO; n * n] }
    }

    pub fn identity(field: &Field, n: usize) -> SymForm {
        Self::diagonal(field, &vec![Gf::ONE; n])
    }

    pub fn diagonal(field: &Field, entries: &[Gf]) -> SymForm {
        let n = entries.len();
        let mut f = Self::zero(field, n);
        for (i, &e) in entries.iter().enumerate() {
            f.gram[i * n + i] = e;
        }
        f
    }

    /// Builds a form from its upper-triangle coordinates, row by row.
    pub fn from_upper(field: &Field, n: usize, coords: &[Gf]) -> SymForm {
        assert_eq!(coords.len(), upper_len(n));
        let mut gram = vec![Gf::ZERO; n * n];
        let mut idx = 0;
        for i in 0..n {
            for j in i..n {
                gram[i * n + j] = coords[idx];
                gram[j * n + i] = coords[idx];
                idx += 1;
            }
        }
        SymForm { field: field.clone(), n, gram }
    }

    pub fn upper(&self) -> Vec<Gf> {
        let mut out = Vec::with_capacity(upper_len(self.n));
        for i in 0..self.n {
            for j in i..self.n {
                out.push(self.gram[i * self.n + j]);
            }
        }
        out
    }

    pub(crate) fn from_gram_unchecked(field: &Field, n: usize, gram: Vec<Gf>) -> SymForm {
        debug_assert_eq!(gram.len(), n * n);
        SymForm { field: field.clone(), n, gram }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gram(&self) -> &[Gf] {
        &self.gram
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Gf {
        self.gram[i * self.n + j]
    }

    pub fn matrix(&self) -> Matrix {
        Matrix::from_vec(self.n, self.n, self.gram.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.gram.iter().all(|x| x.is_zero())
    }

    /// `f(u, v)`.
    pub fn eval(&self, u: &[Gf], v: &[Gf]) -> Gf {
        let f = &self.field;
        let mut acc = Gf::ZERO;
        for i in 0..self.n {
            if u[i].is_zero() {
                continue;
            }
            let row = &self.gram[i * self.n..(i + 1) * self.n];
            acc = f.add(acc, f.mul(u[i], linalg::dot(f, row, v)));
        }
        acc
    }

    /// `f(v, v)`.
    pub fn quad(&self, v: &[Gf]) -> Gf {
        self.eval(v, v)
    }

    pub fn add(&self, other: &SymForm) -> SymForm {
        assert_eq!(self.n, other.n);
        let f = &self.field;
        let gram = self.gram.iter().zip(&other.gram).map(|(&a, &b)| f.add(a, b)).collect();
        SymForm { field: self.field.clone(), n: self.n, gram }
    }

    pub fn scale(&self, c: Gf) -> SymForm {
        let f = &self.field;
        let gram = self.gram.iter().map(|&a| f.mul(c, a)).collect();
        SymForm { field: self.field.clone(), n: self.n, gram }
    }

    pub fn neg(&self) -> SymForm {
        self.scale(self.field.neg(Gf::ONE))
    }

    /// `sum c_i forms_i`.
    pub fn combination(field: &Field, n: usize, coeffs: &[Gf], forms: &[SymForm]) -> SymForm {
        let mut gram = vec![Gf::ZERO; n * n];
        for (&c, form) in coeffs.iter().zip(forms) {
            linalg::axpy(field, &mut gram, c, &form.gram);
        }
        SymForm { field: field.clone(), n, gram }
    }

    /// `P^T G P`: the form in the basis given by the columns of `P`.
    pub fn congruent(&self, p: &Matrix) -> SymForm {
        assert_eq!(p.rows(), self.n);
        let f = &self.field;
        let g = self.matrix();
        let out = p.transpose().mul(f, &g).mul(f, p);
        SymForm { field: self.field.clone(), n: p.cols(), gram: out.data().to_vec() }
    }

    pub fn rank(&self) -> usize {
        let mut buf = self.gram.clone();
        linalg::rank_in_place(&self.field, &mut buf, self.n, self.n)
    }

    /// `{v : f(v, w) = 0 for all w}`.
    pub fn radical(&self) -> VecSubspace {
        let basis = self.matrix().nullspace(&self.field);
        VecSubspace::from_rref_unchecked(&self.field, self.n, basis)
    }

    /// Congruence diagonalization by symmetric elimination (odd characteristic).
    pub fn congruent_diagonalize(&self) -> Result<Diagonalization> {
        let f = &self.field;
        if !f.is_odd() {
            return Err(Error::EvenCharUnsupported);
        }
        let n = self.n;
        let mut g = self.matrix();
        let mut p = Matrix::identity(n);

        // Basis change v_a <- v_a + c v_b, applied to both G and P.
        let add_to = |g: &mut Matrix, p: &mut Matrix, a: usize, b: usize, c: Gf| {
            for k in 0..n {
                let v = f.add(g[(a, k)], f.mul(c, g[(b, k)]));
                g[(a, k)] = v;
            }
            for k in 0..n {
                let v = f.add(g[(k, a)], f.mul(c, g[(k, b)]));
                g[(k, a)] = v;
            }
            for k in 0..n {
                let v = f.add(p[(k, a)], f.mul(c, p[(k, b)]));
                p[(k, a)] = v;
            }
        };
        let swap = |g: &mut Matrix, p: &mut Matrix, a: usize, b: usize| {
            for k in 0..n {
                let t = g[(a, k)];
                g[(a, k)] = g[(b, k)];
                g[(b, k)] = t;
            }
            for k in 0..n {
                let t = g[(k, a)];
                g[(k, a)] = g[(k, b)];
                g[(k, b)] = t;
                let t = p[(k, a)];
                p[(k, a)] = p[(k, b)];
                p[(k, b)] = t;
            }
        };

        for i in 0..n {
            if g[(i, i)].is_zero() {
                if let Some(j) = (i + 1..n).find(|&j| !g[(j, j)].is_zero()) {
                    swap(&mut g, &mut p, i, j);
                } else if let Some(j) = (i + 1..n).find(|&j| !g[(i, j)].is_zero()) {
                    // all remaining diagonal entries vanish, so the new
                    // diagonal entry is 2 g_ij, nonzero in odd characteristic
                    add_to(&mut g, &mut p, i, j, Gf::ONE);
                } else {
                    continue;
                }
            }
            let inv = f.inv(g[(i, i)])?;
            for j in i + 1..n {
                let x = g[(j, i)];
                if !x.is_zero() {
                    add_to(&mut g, &mut p, j, i, f.neg(f.mul(x, inv)));
                }
            }
        }
        let entries = (0..n).map(|i| g[(i, i)]).collect();
        Ok(Diagonalization { transform: p, entries })
    }

    /// Number of `v` in `V` with `f(v, v) = 0`, including zero. Enumerates
    /// when `q^n <= budget`, otherwise uses the closed form for the rank and type.
    pub fn isotropic_count(&self, budget: u64) -> Result<u64> {
        let q = self.field.q() as u128;
        let total = q.pow(self.n as u32);
        if total <= budget as u128 {
            return Ok(self.isotropic_count_enumerated());
        }
        if !self.field.is_odd() {
            return Err(Error::BudgetExceeded { needed: total, budget });
        }
        let rank = self.rank();
        let ty = self.type_from_diagonal()?;
        let v = isotropic_census_value(self.n, rank, ty, self.field.q() as u64);
        u64::try_from(v).map_err(|_| Error::BudgetExceeded { needed: total, budget })
    }

    fn isotropic_count_enumerated(&self) -> u64 {
        let mut count = 0u64;
        for_each_vector(&self.field, self.n, |v| {
            if self.quad(v).is_zero() {
                count += 1;
            }
        });
        count
    }

    /// Type via the discriminant of a congruence diagonalization.
    pub fn type_from_diagonal(&self) -> Result<FormType> {
        let f = &self.field;
        let d = self.congruent_diagonalize()?;
        let nonzero: Vec<Gf> = d.entries.into_iter().filter(|x| !x.is_zero()).collect();
        let rank = nonzero.len();
        if rank == 0 {
            return Ok(FormType::Zero);
        }
        if rank % 2 == 1 {
            return Ok(FormType::Odd);
        }
        let mut disc = nonzero.iter().fold(Gf::ONE, |acc, &x| f.mul(acc, x));
        if (rank / 2) % 2 == 1 {
            disc = f.neg(disc);
        }
        Ok(if f.is_square(disc)? { FormType::Positive } else { FormType::Negative })
    }

    /// Type via the isotropic-point census (the defining rule).
    pub fn type_from_count(&self) -> Result<FormType> {
        if !self.field.is_odd() {
            return Err(Error::EvenCharUnsupported);
        }
        let rank = self.rank();
        if rank == 0 {
            return Ok(FormType::Zero);
        }
        if rank % 2 == 1 {
            return Ok(FormType::Odd);
        }
        let count = self.isotropic_count_enumerated() as i128;
        let q = self.field.q() as u64;
        if count == isotropic_census_value(self.n, rank, FormType::Positive, q) {
            Ok(FormType::Positive)
        } else if count == isotropic_census_value(self.n, rank, FormType::Negative, q) {
            Ok(FormType::Negative)
        } else {
            Err(Error::InternalInconsistency(format!(
                "rank {rank} form on F_{q}^{} has {count} isotropic vectors",
                self.n
            )))
        }
    }

    /// Type of the form. Uses the discriminant; in debug builds small cases
    /// are cross-checked against the counting rule.
    pub fn classify_type(&self) -> Result<FormType> {
        let fast = self.type_from_diagonal()?;
        if cfg!(debug_assertions) && (self.field.q() as u64).pow(self.n as u32) <= 4096 {
            let counted = self.type_from_count()?;
            if counted != fast {
                return Err(Error::InternalInconsistency(format!(
                    "discriminant gives {fast:?}, isotropic count gives {counted:?}"
                )));
            }
        }
        Ok(fast)
    }

    /// Rank-2 form with an isotropic vector outside its radical.
    pub fn is_hyperbolic_rank2(&self) -> Result<bool> {
        let rank = self.rank();
        if rank != 2 {
            return Err(Error::RankMismatch { expected: 2, found: rank });
        }
        // f(w, w) only depends on w modulo the radical.
        let reduced = self.quotient_by(&self.radical())?;
        let mut found = false;
        for_each_vector(&self.field, 2, |w| {
            if !found && w.iter().any(|x| !x.is_zero()) && reduced.quad(w).is_zero() {
                found = true;
            }
        });
        Ok(found)
    }

    /// Restriction to `U`, in the canonical basis of `U`.
    pub fn restrict(&self, u: &VecSubspace) -> Result<SymForm> {
        if u.ambient_dim() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "subspace of F_q^{} used with a form on F_q^{}",
                u.ambient_dim(),
                self.n
            )));
        }
        let d = u.dim();
        if d == 0 {
            return Err(Error::DimensionMismatch("restriction to the zero subspace".into()));
        }
        let mut gram = vec![Gf::ZERO; d * d];
        for (i, bi) in u.basis().iter().enumerate() {
            for (j, bj) in u.basis().iter().enumerate() {
                gram[i * d + j] = self.eval(bi, bj);
            }
        }
        Ok(SymForm { field: self.field.clone(), n: d, gram })
    }

    /// Induced form on `V/U` for `U` inside the radical, using the standard
    /// basis vectors off the pivot columns of `U` as the complement.
    pub fn quotient_by(&self, u: &VecSubspace) -> Result<SymForm> {
        if u.ambient_dim() != self.n {
            return Err(Error::DimensionMismatch("ambient dimensions differ".into()));
        }
        if !u.basis().iter().all(|b| self.matrix().mul_vec(&self.field, b).iter().all(|x| x.is_zero())) {
            return Err(Error::NotInRadical);
        }
        let keep: Vec<usize> = (0..self.n).filter(|c| !u.pivots().contains(c)).collect();
        if keep.is_empty() {
            return Err(Error::DimensionMismatch("quotient by the whole space".into()));
        }
        let m = keep.len();
        let mut gram = vec![Gf::ZERO; m * m];
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                gram[a * m + b] = self.get(i, j);
            }
        }
        Ok(SymForm { field: self.field.clone(), n: m, gram })
    }
}

/// Number of isotropic vectors (including 0) of a form on `F_q^n` with the
/// given rank and type.
pub fn isotropic_census_value(n: usize, rank: usize, ty: FormType, q: u64) -> i128 {
    let q = q as i128;
    let n = n as u32;
    match ty {
        FormType::Zero => q.pow(n),
        FormType::Odd => q.pow(n - 1),
        FormType::Positive | FormType::Negative => {
            let k = (rank / 2) as u32;
            let delta = q.pow(n - k) - q.pow(n - k - 1);
            if ty == FormType::Positive {
                q.pow(n - 1) + delta
            } else {
                q.pow(n - 1) - delta
            }
        }
    }
}

/// Calls `visit` on every vector of `F_q^n`, in base-`q` counter order
/// (first coordinate least significant), zero first.
pub fn for_each_vector(field: &Field, n: usize, mut visit: impl FnMut(&[Gf])) {
    let q = field.q();
    let mut v = vec![Gf::ZERO; n];
    loop {
        visit(&v);
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            if v[i].0 + 1 < q {
                v[i] = Gf(v[i].0 + 1);
                break;
            }
            v[i] = Gf::ZERO;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;
    use proptest::prelude::*;

    fn hyperbolic_plane(field: &Field) -> SymForm {
        SymForm::from_rows(field, &[vec![0, 1], vec![1, 0]]).unwrap()
    }

    #[test]
    fn rejects_asymmetric_gram() {
        let f = make_field(3, 1).unwrap();
        assert_eq!(SymForm::from_rows(&f, &[vec![0, 1], vec![2, 0]]).unwrap_err(), Error::NotSymmetric(0, 1));
    }

    #[test]
    fn rank_basics() {
        let f = make_field(3, 1).unwrap();
        assert_eq!(SymForm::zero(&f, 4).rank(), 0);
        assert_eq!(SymForm::identity(&f, 5).rank(), 5);
        assert_eq!(SymForm::identity(&f, 5).radical().dim(), 0);
    }

    #[test]
    fn radical_of_block_form() {
        let f = make_field(5, 1).unwrap();
        // diag(0, 0, A) with A invertible
        let g = SymForm::from_rows(
            &f,
            &[vec![0, 0, 0, 0], vec![0, 0, 0, 0], vec![0, 0, 1, 2], vec![0, 0, 2, 3]],
        )
        .unwrap();
        let r = g.radical();
        let e = |i: usize| {
            let mut v = vec![Gf::ZERO; 4];
            v[i] = Gf::ONE;
            v
        };
        assert_eq!(r, VecSubspace::new(&f, 4, &[e(0), e(1)]));
    }

    #[test]
    fn hyperbolic_plane_diagonalizes_to_one_and_minus_one() {
        let f = make_field(3, 1).unwrap();
        let h = hyperbolic_plane(&f);
        let d = h.congruent_diagonalize().unwrap();
        let diag = h.congruent(&d.transform);
        assert_eq!(diag, SymForm::diagonal(&f, &d.entries));
        assert!(d.transform.inverse(&f).is_some());
        // discriminant class of -1 times product: -(d0 d1) must be a square
        let prod = f.mul(d.entries[0], d.entries[1]);
        assert!(f.is_square(f.neg(prod)).unwrap());
    }

    #[test]
    fn isotropic_counts() {
        let f = make_field(3, 1).unwrap();
        assert_eq!(SymForm::zero(&f, 2).isotropic_count(DEFAULT_ISOTROPIC_BUDGET).unwrap(), 9);
        assert_eq!(hyperbolic_plane(&f).isotropic_count(DEFAULT_ISOTROPIC_BUDGET).unwrap(), 5);
        assert_eq!(SymForm::identity(&f, 2).isotropic_count(DEFAULT_ISOTROPIC_BUDGET).unwrap(), 1);
        // closed form path matches enumeration
        let g = SymForm::from_rows(&f, &[vec![1, 1, 0], vec![1, 0, 0], vec![0, 0, 0]]).unwrap();
        assert_eq!(g.isotropic_count(1).unwrap(), g.isotropic_count(DEFAULT_ISOTROPIC_BUDGET).unwrap());
    }

    #[test]
    fn types_of_small_forms() {
        let f = make_field(3, 1).unwrap();
        assert_eq!(hyperbolic_plane(&f).classify_type().unwrap(), FormType::Positive);
        assert_eq!(SymForm::identity(&f, 2).classify_type().unwrap(), FormType::Negative);
        assert_eq!(SymForm::identity(&f, 3).classify_type().unwrap(), FormType::Odd);
        assert_eq!(SymForm::zero(&f, 3).classify_type().unwrap(), FormType::Zero);
        assert!(hyperbolic_plane(&f).is_hyperbolic_rank2().unwrap());
        assert!(!SymForm::identity(&f, 2).is_hyperbolic_rank2().unwrap());
        assert_eq!(
            SymForm::identity(&f, 3).is_hyperbolic_rank2().unwrap_err(),
            Error::RankMismatch { expected: 2, found: 3 }
        );
    }

    #[test]
    fn hyperbolic_iff_positive_exhaustive() {
        for (q, n) in [(3u64, 2usize), (3, 3), (5, 2), (5, 3)] {
            let f = make_field(q, 1).unwrap();
            let len = upper_len(n);
            let mut seen = 0;
            for_each_vector(&f, len, |c| {
                let g = SymForm::from_upper(&f, n, c);
                if g.rank() == 2 {
                    seen += 1;
                    let hyp = g.is_hyperbolic_rank2().unwrap();
                    assert_eq!(hyp, g.type_from_diagonal().unwrap() == FormType::Positive);
                }
            });
            assert!(seen > 0);
        }
    }

    #[test]
    fn every_even_rank_count_matches_one_census_value() {
        for (q, n) in [(3u64, 2usize), (3, 3), (5, 2)] {
            let f = make_field(q, 1).unwrap();
            for_each_vector(&f, upper_len(n), |c| {
                let g = SymForm::from_upper(&f, n, c);
                let r = g.rank();
                if r > 0 && r.is_multiple_of(2) {
                    let n_iso = g.isotropic_count(DEFAULT_ISOTROPIC_BUDGET).unwrap() as i128;
                    let pos = isotropic_census_value(n, r, FormType::Positive, q);
                    let neg = isotropic_census_value(n, r, FormType::Negative, q);
                    assert!((n_iso == pos) ^ (n_iso == neg));
                    assert_eq!(g.type_from_count().unwrap(), g.type_from_diagonal().unwrap());
                }
            });
        }
    }

    #[test]
    fn restriction_and_quotient() {
        let f = make_field(5, 1).unwrap();
        let g = SymForm::from_rows(&f, &[vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        let full = VecSubspace::full(&f, 3);
        assert_eq!(g.restrict(&full).unwrap(), g);
        let rad = g.radical();
        assert!(g.restrict(&rad).unwrap().is_zero());
        let quo = g.quotient_by(&rad).unwrap();
        assert_eq!(quo.n(), 2);
        assert_eq!(quo.rank(), g.rank());
        assert_eq!(g.quotient_by(&VecSubspace::zero(&f, 3)).unwrap(), g);
        let not_rad = VecSubspace::new(&f, 3, &[vec![Gf(0), Gf(1), Gf(0)]]);
        assert_eq!(g.quotient_by(&not_rad).unwrap_err(), Error::NotInRadical);
        let wrong = VecSubspace::full(&f, 2);
        assert!(matches!(g.restrict(&wrong), Err(Error::DimensionMismatch(_))));
    }

    fn arb_form(q: u64, max_n: usize) -> impl Strategy<Value = SymForm> {
        (1..=max_n).prop_flat_map(move |n| {
            prop::collection::vec(0..q as u32, upper_len(n)).prop_map(move |c| {
                let f = make_field(q, 1).unwrap();
                let coords: Vec<Gf> = c.into_iter().map(Gf).collect();
                SymForm::from_upper(&f, n, &coords)
            })
        })
    }

    fn arb_invertible(q: u64, n: usize) -> impl Strategy<Value = Matrix> {
        prop::collection::vec(0..q as u32, n * n)
            .prop_map(move |d| Matrix::from_vec(n, n, d.into_iter().map(Gf).collect()))
            .prop_filter("invertible", move |m| m.rank(&make_field(q, 1).unwrap()) == n)
    }

    proptest! {
        #[test]
        fn rank_plus_radical_is_n(g in prop_oneof![arb_form(3, 5), arb_form(5, 5)]) {
            prop_assert_eq!(g.rank() + g.radical().dim(), g.n());
            let w: Vec<Gf> = (0..g.n()).map(|i| Gf((i as u32 * 7 + 1) % g.field().q())).collect();
            for v in g.radical().basis() {
                prop_assert!(g.eval(v, &w).is_zero());
            }
        }

        #[test]
        fn diagonalization_is_congruence(g in arb_form(5, 4)) {
            let d = g.congruent_diagonalize().unwrap();
            let f = g.field().clone();
            prop_assert_eq!(g.congruent(&d.transform), SymForm::diagonal(&f, &d.entries));
            prop_assert!(d.transform.inverse(&f).is_some());
            prop_assert_eq!(d.entries.iter().filter(|x| !x.is_zero()).count(), g.rank());
        }

        #[test]
        fn type_is_congruence_invariant(
            (g, p) in (2usize..=4).prop_flat_map(|n| {
                (prop::collection::vec(0..5u32, upper_len(n)), arb_invertible(5, n))
                    .prop_map(move |(c, p)| {
                        let f = make_field(5, 1).unwrap();
                        let coords: Vec<Gf> = c.into_iter().map(Gf).collect();
                        (SymForm::from_upper(&f, n, &coords), p)
                    })
            })
        ) {
            prop_assert_eq!(g.congruent(&p).classify_type().unwrap(), g.classify_type().unwrap());
        }
    }
}
