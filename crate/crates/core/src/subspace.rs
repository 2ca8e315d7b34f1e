//! Subspaces of `V = F_q^n` and of `Symm(V)`: canonical bases, span
//! enumeration, common isotropic points, type censuses and partitions.

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, Gf};
use crate::forms::{for_each_vector, upper_len, FormType, SymForm};
use crate::linalg::{self, Matrix};

/// Enumeration budgets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Maximum number of span elements `q^d` to enumerate.
    pub span: u64,
    /// Maximum number of vectors `q^n` to enumerate.
    pub vectors: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { span: 1 << 22, vectors: 1 << 20 }
    }
}

fn check_budget(q: u32, exp: usize, budget: u64) -> Result<u64> {
    let needed = (q as u128).checked_pow(exp as u32).unwrap_or(u128::MAX);
    if needed > budget as u128 {
        Err(Error::BudgetExceeded { needed, budget })
    } else {
        Ok(needed as u64)
    }
}

/// A subspace of `F_q^n` held in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VecSubspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<Gf>>,
    pivots: Vec<usize>,
}

impl VecSubspace {
    /// The span of `vectors`.
    pub fn new(field: &Field, ambient: usize, vectors: &[Vec<Gf>]) -> VecSubspace {
        let m = Matrix::from_rows(vectors, ambient);
        Self::from_matrix(field, m)
    }

    fn from_matrix(field: &Field, mut m: Matrix) -> VecSubspace {
        let ambient = m.cols();
        let pivots = m.rref(field);
        let basis = m.row_vecs().into_iter().take(pivots.len()).collect();
        VecSubspace { field: field.clone(), ambient, basis, pivots }
    }

    pub(crate) fn from_rref_unchecked(field: &Field, ambient: usize, basis: Vec<Vec<Gf>>) -> VecSubspace {
        let pivots = basis
            .iter()
            .map(|r| r.iter().position(|x| !x.is_zero()).expect("nonzero basis row"))
            .collect();
        VecSubspace { field: field.clone(), ambient, basis, pivots }
    }

    pub fn zero(field: &Field, ambient: usize) -> VecSubspace {
        VecSubspace { field: field.clone(), ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: &Field, ambient: usize) -> VecSubspace {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![Gf::ZERO; ambient];
                v[i] = Gf::ONE;
                v
            })
            .collect();
        VecSubspace { field: field.clone(), ambient, basis, pivots: (0..ambient).collect() }
    }

    pub fn line(field: &Field, v: &[Gf]) -> VecSubspace {
        Self::new(field, v.len(), &[v.to_vec()])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Gf>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coords_of(&self, v: &[Gf]) -> Option<Vec<Gf>> {
        let f = &self.field;
        let coords: Vec<Gf> = self.pivots.iter().map(|&p| v[p]).collect();
        let mut rest = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            linalg::axpy(f, &mut rest, f.neg(*c), b);
        }
        rest.iter().all(|x| x.is_zero()).then_some(coords)
    }

    pub fn contains(&self, v: &[Gf]) -> bool {
        self.coords_of(v).is_some()
    }

    pub fn vector_from_coords(&self, coords: &[Gf]) -> Vec<Gf> {
        let mut v = vec![Gf::ZERO; self.ambient];
        for (&c, b) in coords.iter().zip(&self.basis) {
            linalg::axpy(&self.field, &mut v, c, b);
        }
        v
    }

    pub fn is_subspace_of(&self, other: &VecSubspace) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &VecSubspace) -> VecSubspace {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Self::new(&self.field, self.ambient, &rows)
    }

    /// `{x : <x, b> = 0 for every basis vector b}` under the dot product.
    pub fn annihilator(&self) -> VecSubspace {
        if self.basis.is_empty() {
            return Self::full(&self.field, self.ambient);
        }
        let m = Matrix::from_rows(&self.basis, self.ambient);
        let ns = m.nullspace(&self.field);
        VecSubspace::from_rref_unchecked(&self.field, self.ambient, ns)
    }

    pub fn intersection(&self, other: &VecSubspace) -> VecSubspace {
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    /// All `q^dim` vectors, zero first.
    pub fn elements(&self) -> Vec<Vec<Gf>> {
        let mut out = Vec::new();
        for_each_vector(&self.field, self.dim(), |c| out.push(self.vector_from_coords(c)));
        out
    }
}

impl PartialOrd for VecSubspace {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VecSubspace {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.ambient, &self.basis).cmp(&(other.ambient, &other.basis))
    }
}

/// A `d`-dimensional subspace of `Symm(V)`, canonicalized by the RREF of
/// the forms' upper-triangle coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormSpace {
    field: Field,
    n: usize,
    basis: Vec<SymForm>,
    pivots: Vec<usize>,
}

/// Counts of nonzero elements of a form space by rank and type.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeCensus {
    /// Nonzero elements of positive type.
    pub positive: u64,
    /// Nonzero elements of negative type.
    pub negative: u64,
    pub odd_counts: BTreeMap<usize, u64>,
    pub rank_histogram: BTreeMap<usize, u64>,
    /// Even rank -> (positive, negative).
    pub even_counts: BTreeMap<usize, (u64, u64)>,
}

impl TypeCensus {
    pub fn total(&self) -> u64 {
        self.rank_histogram.values().sum()
    }

    pub fn record(&mut self, rank: usize, ty: FormType) {
        *self.rank_histogram.entry(rank).or_default() += 1;
        match ty {
            FormType::Positive => {
                self.positive += 1;
                self.even_counts.entry(rank).or_default().0 += 1;
            }
            FormType::Negative => {
                self.negative += 1;
                self.even_counts.entry(rank).or_default().1 += 1;
            }
            FormType::Odd => *self.odd_counts.entry(rank).or_default() += 1,
            FormType::Zero => {}
        }
    }
}

/// Common isotropic count (including zero) predicted from a type census:
/// `q^(n-d) + sum over nonzero elements of rank 2k of (+-1) q^(n-d-k)`,
/// with odd ranks contributing nothing. Exact; may be non-integral or
/// negative for a census that no subspace can have.
pub fn common_isotropic_count_formula(n: usize, census: &TypeCensus, d: usize, q: u64) -> Result<Ratio<i128>> {
    let expected = (q as u128).pow(d as u32) - 1;
    let found = census.total();
    if found as u128 != expected {
        return Err(Error::CensusInvalid { found, expected: expected as u64 });
    }
    let q = q as i128;
    let pow = |e: i64| -> Ratio<i128> {
        if e >= 0 {
            Ratio::from_integer(q.pow(e as u32))
        } else {
            Ratio::new(1, q.pow((-e) as u32))
        }
    };
    let base = n as i64 - d as i64;
    let mut value = pow(base);
    for (&rank, &(pos, neg)) in &census.even_counts {
        let k = (rank / 2) as i64;
        value += pow(base - k) * Ratio::from_integer(pos as i128 - neg as i128);
    }
    Ok(value)
}

/// Radicals of the nonzero elements of a form space, grouped.
#[derive(Clone, Debug)]
pub struct RadicalProfile {
    /// Distinct radicals with the number of nonzero elements having each.
    pub groups: Vec<(VecSubspace, u64)>,
    /// For constant rank `n - 1` spaces: the partition of the coordinate
    /// space of `M` by the subspaces `M_<u_i>`.
    pub partition: Option<PartitionReport>,
}

impl RadicalProfile {
    pub fn t(&self) -> usize {
        self.groups.len()
    }
}

impl FormSpace {
    /// Span of `forms`; fails if they span the zero space.
    pub fn from_forms(field: &Field, n: usize, forms: &[SymForm]) -> Result<FormSpace> {
        let len = upper_len(n);
        let rows: Vec<Vec<Gf>> = forms
            .iter()
            .map(|g| {
                if g.n() != n {
                    Err(Error::DimensionMismatch(format!("form on F_q^{} in a space on F_q^{n}", g.n())))
                } else {
                    Ok(g.upper())
                }
            })
            .collect::<Result<_>>()?;
        let mut m = Matrix::from_rows(&rows, len);
        let pivots = m.rref(field);
        if pivots.is_empty() {
            return Err(Error::LinearlyDependent("forms span the zero space".into()));
        }
        let basis = m
            .row_vecs()
            .into_iter()
            .take(pivots.len())
            .map(|c| SymForm::from_upper(field, n, &c))
            .collect();
        Ok(FormSpace { field: field.clone(), n, basis, pivots })
    }

    /// Like [`FormSpace::from_forms`], but rejects dependent input.
    pub fn from_basis(field: &Field, n: usize, forms: &[SymForm]) -> Result<FormSpace> {
        let space = Self::from_forms(field, n, forms)?;
        if space.dim() != forms.len() {
            return Err(Error::LinearlyDependent(format!(
                "{} forms span only a {}-dimensional space",
                forms.len(),
                space.dim()
            )));
        }
        Ok(space)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SymForm] {
        &self.basis
    }

    pub fn element(&self, coeffs: &[Gf]) -> SymForm {
        SymForm::combination(&self.field, self.n, coeffs, &self.basis)
    }

    /// Coordinates of `g` in the canonical basis, if `g` lies in the space.
    pub fn coords_of(&self, g: &SymForm) -> Option<Vec<Gf>> {
        if g.n() != self.n {
            return None;
        }
        let upper = g.upper();
        let coords: Vec<Gf> = self.pivots.iter().map(|&p| upper[p]).collect();
        (self.element(&coords) == *g).then_some(coords)
    }

    pub fn contains(&self, g: &SymForm) -> bool {
        self.coords_of(g).is_some()
    }

    /// The subspace of forms whose coordinates lie in `coords`.
    pub fn subspace_from_coords(&self, coords: &VecSubspace) -> Option<FormSpace> {
        if coords.dim() == 0 {
            return None;
        }
        let forms: Vec<SymForm> = coords.basis().iter().map(|c| self.element(c)).collect();
        Some(Self::from_forms(&self.field, self.n, &forms).expect("independent coordinates"))
    }

    /// Every element with its coordinates: `q^d` items, zero first, counter
    /// order with the first basis coefficient least significant.
    pub fn span_with_coords(&self, limits: &Limits) -> Result<impl Iterator<Item = (Vec<Gf>, SymForm)> + '_> {
        let total = check_budget(self.field.q(), self.dim(), limits.span)?;
        let q = self.field.q();
        let d = self.dim();
        Ok((0..total).map(move |idx| {
            let mut rest = idx;
            let coeffs: Vec<Gf> = (0..d)
                .map(|_| {
                    let c = Gf((rest % q as u64) as u32);
                    rest /= q as u64;
                    c
                })
                .collect();
            let g = self.element(&coeffs);
            (coeffs, g)
        }))
    }

    pub fn span_elements(&self, limits: &Limits) -> Result<impl Iterator<Item = SymForm> + '_> {
        Ok(self.span_with_coords(limits)?.map(|(_, g)| g))
    }

    /// Nonzero elements whose first nonzero coordinate is 1: one per line.
    pub fn projective_points(&self, limits: &Limits) -> Result<Vec<(Vec<Gf>, SymForm)>> {
        Ok(self
            .span_with_coords(limits)?
            .filter(|(c, _)| c.iter().find(|x| !x.is_zero()) == Some(&Gf::ONE))
            .collect())
    }

    /// `Some(r)` if every nonzero element has rank `r`.
    pub fn is_constant_rank(&self, limits: &Limits) -> Result<Option<usize>> {
        let mut rank = None;
        // scalar multiples share rank, so lines suffice
        for (_, g) in self.projective_points(limits)? {
            let r = g.rank();
            match rank {
                None => rank = Some(r),
                Some(prev) if prev != r => return Ok(None),
                _ => {}
            }
        }
        Ok(rank)
    }

    /// All `v` with `f(v, v) = 0` for every `f` in the space (zero included).
    pub fn common_isotropic_points(&self, limits: &Limits) -> Result<Vec<Vec<Gf>>> {
        check_budget(self.field.q(), self.n, limits.vectors)?;
        let mut out = Vec::new();
        for_each_vector(&self.field, self.n, |v| {
            if self.basis.iter().all(|g| g.quad(v).is_zero()) {
                out.push(v.to_vec());
            }
        });
        Ok(out)
    }

    pub fn type_census(&self, limits: &Limits) -> Result<TypeCensus> {
        let mut census = TypeCensus::default();
        for g in self.span_elements(limits)?.skip(1) {
            census.record(g.rank(), g.classify_type()?);
        }
        Ok(census)
    }

    /// Coordinates (in `F_q^d`) of `M_U = {f in M : U <= rad f}`, by solving
    /// the linear conditions `sum_l c_l G_l u = 0` for each basis vector `u`.
    pub fn radical_containing_coords(&self, u: &VecSubspace) -> Result<VecSubspace> {
        if u.ambient_dim() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "subspace of F_q^{} used with forms on F_q^{}",
                u.ambient_dim(),
                self.n
            )));
        }
        let d = self.dim();
        if u.dim() == 0 {
            return Ok(VecSubspace::full(&self.field, d));
        }
        let mut rows = Vec::with_capacity(self.n * u.dim());
        for b in u.basis() {
            let images: Vec<Vec<Gf>> = self.basis.iter().map(|g| g.matrix().mul_vec(&self.field, b)).collect();
            for i in 0..self.n {
                rows.push(images.iter().map(|img| img[i]).collect::<Vec<Gf>>());
            }
        }
        let ns = Matrix::from_rows(&rows, d).nullspace(&self.field);
        Ok(VecSubspace::from_rref_unchecked(&self.field, d, ns))
    }

    /// `M_U`, or `None` when it is the zero subspace.
    pub fn forms_with_radical_containing(&self, u: &VecSubspace) -> Result<Option<FormSpace>> {
        let coords = self.radical_containing_coords(u)?;
        Ok(self.subspace_from_coords(&coords))
    }

    pub fn radical_profile(&self, limits: &Limits) -> Result<RadicalProfile> {
        let mut groups: BTreeMap<VecSubspace, u64> = BTreeMap::new();
        let mut all_lines = true;
        let mut constant_rank = None;
        let mut constant = true;
        for g in self.span_elements(limits)?.skip(1) {
            let rad = g.radical();
            let r = self.n - rad.dim();
            match constant_rank {
                None => constant_rank = Some(r),
                Some(prev) if prev != r => constant = false,
                _ => {}
            }
            all_lines &= rad.dim() == 1;
            *groups.entry(rad).or_default() += 1;
        }
        let partition = if constant && all_lines {
            let pieces = groups
                .keys()
                .map(|line| self.radical_containing_coords(line))
                .collect::<Result<Vec<_>>>()?;
            let spec = PartitionSpec { field: self.field.clone(), ambient_dim: self.dim(), pieces };
            Some(check_partition(&spec, limits)?)
        } else {
            None
        };
        Ok(RadicalProfile { groups: groups.into_iter().collect(), partition })
    }
}

/// A proposed subspace partition of `F_q^ambient_dim`.
#[derive(Clone, Debug)]
pub struct PartitionSpec {
    pub field: Field,
    pub ambient_dim: usize,
    pub pieces: Vec<VecSubspace>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub valid: bool,
    pub t: usize,
    pub piece_dims: Vec<usize>,
    /// Nonzero vectors covered by no piece.
    pub uncovered: u64,
    /// Nonzero vectors covered by more than one piece.
    pub overcovered: u64,
    pub min_bound: Option<u64>,
    pub min_bound_satisfied: Option<bool>,
}

/// Least possible size of a nontrivial subspace partition of `F_q^n`.
pub fn partition_min_bound(n: usize, q: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::TooSmall(n));
    }
    let m = (n / 2) as u32;
    Ok(if n.is_multiple_of(2) { q.pow(m) + 1 } else { q.pow(m + 1) + 1 })
}

/// Checks disjointness and coverage by counting, for every nonzero vector,
/// the pieces containing it.
pub fn check_partition(spec: &PartitionSpec, limits: &Limits) -> Result<PartitionReport> {
    let q = spec.field.q() as u64;
    let total = check_budget(spec.field.q(), spec.ambient_dim, limits.vectors)?;
    let mut cover = vec![0u32; total as usize];
    let index = |v: &[Gf]| v.iter().rev().fold(0u64, |acc, x| acc * q + x.0 as u64) as usize;
    for piece in &spec.pieces {
        if piece.ambient_dim() != spec.ambient_dim {
            return Err(Error::DimensionMismatch("partition piece in a different ambient space".into()));
        }
        for v in piece.elements().into_iter().skip(1) {
            cover[index(&v)] += 1;
        }
    }
    let uncovered = cover.iter().skip(1).filter(|&&c| c == 0).count() as u64;
    let overcovered = cover.iter().skip(1).filter(|&&c| c > 1).count() as u64;
    let nonzero_pieces = spec.pieces.iter().all(|p| p.dim() > 0);
    let valid = nonzero_pieces && uncovered == 0 && overcovered == 0;
    let t = spec.pieces.len();
    let nontrivial = t > 1 && spec.ambient_dim >= 2;
    let min_bound = if nontrivial { Some(partition_min_bound(spec.ambient_dim, q)?) } else { None };
    Ok(PartitionReport {
        valid,
        t,
        piece_dims: spec.pieces.iter().map(|p| p.dim()).collect(),
        uncovered,
        overcovered,
        min_bound,
        min_bound_satisfied: min_bound.map(|b| t as u64 >= b),
    })
}

/// Number of `d`-dimensional subspaces of `F_q^n`, by the product formula.
pub fn gaussian_binomial(n: usize, d: usize, q: u64) -> u128 {
    if d > n {
        return 0;
    }
    let q = q as u128;
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..d as u32 {
        num *= q.pow(n as u32 - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

/// Every `d`-dimensional subspace of `F_q^n` once, as RREF bases: pivot
/// sets in lexicographic order, then free entries as a base-`q` counter.
pub fn enumerate_subspaces(
    field: &Field,
    ambient: usize,
    d: usize,
    limits: &Limits,
) -> Result<impl Iterator<Item = VecSubspace>> {
    let q = field.q() as u64;
    let count = gaussian_binomial(ambient, d, q);
    if count > limits.span as u128 {
        return Err(Error::BudgetExceeded { needed: count, budget: limits.span });
    }
    let field = field.clone();
    let combos = combinations(ambient, d);
    Ok(combos.into_iter().flat_map(move |pivots| {
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(row, &pc)| ((pc + 1)..ambient).filter(|c| !pivots.contains(c)).map(move |c| (row, c)))
            .collect();
        let total = q.pow(free.len() as u32);
        let field = field.clone();
        (0..total).map(move |idx| {
            let mut basis = vec![vec![Gf::ZERO; ambient]; d];
            for (row, &pc) in pivots.iter().enumerate() {
                basis[row][pc] = Gf::ONE;
            }
            let mut rest = idx;
            for &(row, c) in free.iter().rev() {
                basis[row][c] = Gf((rest % q) as u32);
                rest /= q;
            }
            VecSubspace { field: field.clone(), ambient, basis, pivots: pivots.clone() }
        })
    }))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    fn f(q: u64) -> Field {
        make_field(q, 1).unwrap()
    }

    fn gf(v: &[u32]) -> Vec<Gf> {
        v.iter().map(|&x| Gf(x)).collect()
    }

    #[test]
    fn canonical_basis_is_unique() {
        let k = f(5);
        let a = VecSubspace::new(&k, 3, &[gf(&[1, 2, 3]), gf(&[0, 1, 1])]);
        let b = VecSubspace::new(&k, 3, &[gf(&[1, 3, 4]), gf(&[2, 4, 1])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.contains(&gf(&[1, 3, 4])));
        assert!(!a.contains(&gf(&[0, 0, 1])));
    }

    #[test]
    fn intersection_and_sum() {
        let k = f(3);
        let a = VecSubspace::new(&k, 3, &[gf(&[1, 0, 0]), gf(&[0, 1, 0])]);
        let b = VecSubspace::new(&k, 3, &[gf(&[0, 1, 0]), gf(&[0, 0, 1])]);
        let i = a.intersection(&b);
        assert_eq!(i, VecSubspace::line(&k, &gf(&[0, 1, 0])));
        assert_eq!(a.sum(&b).dim(), 3);
        assert_eq!(a.intersection(&VecSubspace::zero(&k, 3)).dim(), 0);
    }

    #[test]
    fn span_counts() {
        let k = f(3);
        let g = SymForm::identity(&k, 2);
        let m = FormSpace::from_forms(&k, 2, &[g]).unwrap();
        assert_eq!(m.span_elements(&Limits::default()).unwrap().count(), 3);
        let first = m.span_elements(&Limits::default()).unwrap().next().unwrap();
        assert!(first.is_zero());
        let tight = Limits { span: 2, ..Limits::default() };
        assert!(matches!(m.span_elements(&tight), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn mixed_rank_space_is_not_constant() {
        let k = f(3);
        let a = SymForm::diagonal(&k, &gf(&[1, 0]));
        let b = SymForm::diagonal(&k, &gf(&[1, 1]));
        let m = FormSpace::from_forms(&k, 2, &[a, b]).unwrap();
        assert_eq!(m.is_constant_rank(&Limits::default()).unwrap(), None);
    }

    #[test]
    fn whole_symm_has_only_zero_common_isotropic() {
        let k = f(3);
        let forms: Vec<SymForm> = (0..upper_len(3))
            .map(|i| {
                let mut c = vec![Gf::ZERO; upper_len(3)];
                c[i] = Gf::ONE;
                SymForm::from_upper(&k, 3, &c)
            })
            .collect();
        let m = FormSpace::from_basis(&k, 3, &forms).unwrap();
        assert_eq!(m.common_isotropic_points(&Limits::default()).unwrap().len(), 1);
    }

    #[test]
    fn dependent_basis_rejected() {
        let k = f(3);
        let g = SymForm::identity(&k, 2);
        assert!(matches!(
            FormSpace::from_basis(&k, 2, &[g.clone(), g.scale(Gf(2))]),
            Err(Error::LinearlyDependent(_))
        ));
        assert!(FormSpace::from_forms(&k, 2, &[SymForm::zero(&k, 2)]).is_err());
    }

    #[test]
    fn formula_instantiations() {
        // constant odd rank: q^(n-d)
        let mut odd = TypeCensus::default();
        for _ in 0..(27 - 1) {
            odd.record(3, FormType::Odd);
        }
        assert_eq!(common_isotropic_count_formula(5, &odd, 3, 3).unwrap(), Ratio::from_integer(9));
        // n = 2m+1, d = n, rank 2m: 1 + (A - B) q^-m
        let mut c = TypeCensus::default();
        for _ in 0..220 {
            c.record(4, FormType::Positive);
        }
        for _ in 0..22 {
            c.record(4, FormType::Negative);
        }
        assert_eq!(common_isotropic_count_formula(5, &c, 5, 3).unwrap(), Ratio::from_integer(23));
        // n = 2m-1, d = m+1, rank 2m-2: q^(m-2) + (A-B)/q  (m = 3, q = 5)
        let mut c = TypeCensus::default();
        for _ in 0..600 {
            c.record(4, FormType::Positive);
        }
        for _ in 0..24 {
            c.record(4, FormType::Negative);
        }
        let expect = Ratio::from_integer(5) + Ratio::new(600 - 24, 5);
        assert_eq!(common_isotropic_count_formula(5, &c, 4, 5).unwrap(), expect);
        // hyperbolic rank 2 at d = n: 1 + q^(n-1) - 1/q is not an integer
        let mut c = TypeCensus::default();
        for _ in 0..8 {
            c.record(2, FormType::Positive);
        }
        let v = common_isotropic_count_formula(2, &c, 2, 3).unwrap();
        assert_eq!(v, Ratio::new(3 + 3 * 3 - 1, 3));
        assert!(!v.is_integer());
        assert!(matches!(
            common_isotropic_count_formula(2, &TypeCensus::default(), 2, 3),
            Err(Error::CensusInvalid { .. })
        ));
    }

    #[test]
    fn partition_bounds() {
        assert_eq!(partition_min_bound(2, 3).unwrap(), 4);
        assert_eq!(partition_min_bound(4, 3).unwrap(), 10);
        assert_eq!(partition_min_bound(3, 3).unwrap(), 10);
        assert_eq!(partition_min_bound(1, 3).unwrap_err(), Error::TooSmall(1));
    }

    #[test]
    fn overlapping_lines_are_not_a_partition() {
        let k = f(3);
        let l = VecSubspace::line(&k, &gf(&[1, 0]));
        let spec = PartitionSpec { field: k.clone(), ambient_dim: 2, pieces: vec![l.clone(), l] };
        let r = check_partition(&spec, &Limits::default()).unwrap();
        assert!(!r.valid);
        assert_eq!(r.overcovered, 2);
        assert_eq!(r.uncovered, 6);
    }

    fn q_pascal(n: usize, d: usize, q: u128) -> u128 {
        if d == 0 || d == n {
            return 1;
        }
        if d > n {
            return 0;
        }
        q_pascal(n - 1, d - 1, q) + q.pow(d as u32) * q_pascal(n - 1, d, q)
    }

    #[test]
    fn subspace_enumeration_counts() {
        let k3 = f(3);
        let l = Limits::default();
        assert_eq!(enumerate_subspaces(&k3, 4, 0, &l).unwrap().count(), 1);
        assert_eq!(enumerate_subspaces(&k3, 2, 1, &l).unwrap().count(), 4);
        assert_eq!(enumerate_subspaces(&k3, 5, 4, &l).unwrap().count(), 121);
        for (q, n) in [(3u64, 4usize), (5, 3), (3, 5)] {
            let k = f(q);
            for d in 0..=n {
                let subs: Vec<VecSubspace> = enumerate_subspaces(&k, n, d, &l).unwrap().collect();
                assert_eq!(subs.len() as u128, gaussian_binomial(n, d, q));
                assert_eq!(subs.len() as u128, q_pascal(n, d, q as u128));
                let mut sorted = subs.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), subs.len());
                for s in &subs {
                    assert_eq!(s, &VecSubspace::new(&k, n, s.basis()));
                }
            }
        }
    }
}
