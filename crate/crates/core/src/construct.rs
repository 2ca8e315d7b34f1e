//! Builders for constant-rank subspaces of `Symm(V)` and for subspace
//! partitions.

use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::field::{make_field, Field, Gf};
use crate::forms::SymForm;
use crate::linalg::Matrix;
use crate::subspace::{FormSpace, PartitionSpec, VecSubspace};

fn require_odd(field: &Field) -> Result<()> {
    if field.is_odd() {
        Ok(())
    } else {
        Err(Error::EvenCharUnsupported)
    }
}

/// Pads every form of `space` (on `F_q^r`) to `F_q^n`. The new leading
/// `n - r` coordinates span the common radical.
pub fn inflate(space: &FormSpace, n: usize) -> Result<FormSpace> {
    let r = space.n();
    if r > n {
        return Err(Error::DimensionMismatch(format!("cannot inflate forms on F_q^{r} to F_q^{n}")));
    }
    let shift = n - r;
    let forms: Vec<SymForm> = space
        .basis()
        .iter()
        .map(|g| {
            let mut gram = vec![Gf::ZERO; n * n];
            for i in 0..r {
                for j in 0..r {
                    gram[(shift + i) * n + shift + j] = g.get(i, j);
                }
            }
            SymForm::from_gram_unchecked(space.field(), n, gram)
        })
        .collect();
    FormSpace::from_basis(space.field(), n, &forms)
}

/// Greedy `K`-basis of a set of elements of `L`, in the given order.
fn k_basis(ext: &Extension, elems: &[Gf]) -> Vec<Gf> {
    let mut chosen: Vec<Gf> = Vec::new();
    let mut span = VecSubspace::zero(ext.base(), ext.degree());
    for &e in elems {
        let c = ext.to_coords(e);
        if !span.contains(&c) {
            chosen.push(e);
            span = span.sum(&VecSubspace::line(ext.base(), &c));
        }
    }
    chosen
}

/// Kernel of `y -> Tr(c y)` for the smallest-encoded nonzero `c` with
/// `Tr(c s) = 0` on all of `sub` (`c = 1` when `sub` is absent).
fn trace_hyperplane(ext: &Extension, sub: Option<&[Gf]>) -> VecSubspace {
    let l = ext.top();
    let c = match sub {
        None => Gf::ONE,
        Some(sub) => {
            let sub_basis = k_basis(ext, sub);
            l.elements()
                .skip(1)
                .find(|&c| sub_basis.iter().all(|&s| ext.relative_trace(l.mul(c, s)).is_zero()))
                .expect("orthogonal complement of a proper subfield is nonzero")
        }
    };
    let row: Vec<Gf> = ext.basis().iter().map(|&b| ext.relative_trace(l.mul(c, b))).collect();
    let ns = Matrix::from_rows(&[row], ext.degree()).nullspace(ext.base());
    VecSubspace::new(ext.base(), ext.degree(), &ns)
}

/// `L = F_{q^(n+1)}` over `K = F_q`, a codimension-1 subspace `V` of `L`
/// and, optionally, an intermediate field `M` contained in `V`.
#[derive(Clone, Debug)]
pub struct TraceSetup {
    pub ext: Extension,
    /// `V` in coordinates of the power basis of `L` over `K`.
    pub v: VecSubspace,
    /// The canonical basis of `V`, as elements of `L`.
    pub v_elems: Vec<Gf>,
    pub subfield_degree: Option<usize>,
    /// Elements of `M`, sorted by encoding; empty without `M`.
    pub subfield: Vec<Gf>,
}

impl TraceSetup {
    pub fn new(base: &Field, n: usize, m: Option<usize>) -> Result<TraceSetup> {
        if n < 2 {
            return Err(Error::TooSmall(n));
        }
        let ext = Extension::new(base, n + 1)?;
        let subfield = match m {
            Some(m) if m > 1 && m < n + 1 && (n + 1).is_multiple_of(m) => ext.intermediate_field(m)?,
            Some(m) => return Err(Error::NoSubfield { m, degree: n + 1 }),
            None => Vec::new(),
        };
        let v = trace_hyperplane(&ext, m.map(|_| subfield.as_slice()));
        let v_elems = v.basis().iter().map(|c| ext.from_coords(c)).collect();
        Ok(TraceSetup { ext, v, v_elems, subfield_degree: m, subfield })
    }

    pub fn base(&self) -> &Field {
        self.ext.base()
    }

    /// `dim V = n`.
    pub fn n(&self) -> usize {
        self.v_elems.len()
    }

    /// `f_z(x, y) = Tr(z x y)` on all of `L`, in the power basis.
    pub fn full_form(&self, z: Gf) -> SymForm {
        self.gram_on(z, self.ext.basis())
    }

    /// The restriction `f_z'` of `f_z` to `V`.
    pub fn form(&self, z: Gf) -> SymForm {
        self.gram_on(z, &self.v_elems)
    }

    fn gram_on(&self, z: Gf, basis: &[Gf]) -> SymForm {
        let l = self.ext.top();
        let d = basis.len();
        let mut gram = vec![Gf::ZERO; d * d];
        for i in 0..d {
            let zi = l.mul(z, basis[i]);
            for j in i..d {
                let t = self.ext.relative_trace(l.mul(zi, basis[j]));
                gram[i * d + j] = t;
                gram[j * d + i] = t;
            }
        }
        SymForm::from_gram_unchecked(self.base(), d, gram)
    }

    /// Coordinates in the basis of `V` of an element of `L` lying in `V`.
    pub fn v_coords(&self, y: Gf) -> Option<Vec<Gf>> {
        self.v.coords_of(&self.ext.to_coords(y))
    }

    pub fn from_v_coords(&self, coords: &[Gf]) -> Gf {
        self.ext.from_coords(&self.v.vector_from_coords(coords))
    }

    /// First `z` (by encoding) with `rank f_z' = n - 1`.
    pub fn rank_deficient_z(&self) -> Gf {
        let n = self.n();
        self.ext
            .top()
            .elements()
            .skip(1)
            .find(|&z| self.form(z).rank() == n - 1)
            .expect("an (n+1)-dimensional space of forms on V has a degenerate member")
    }
}

/// The `(n+1)`-dimensional space `{f_z'}` on a codimension-1 subspace of
/// `F_{q^(n+1)}`.
pub fn trace_space(field: &Field, n: usize) -> Result<(TraceSetup, FormSpace)> {
    require_odd(field)?;
    let setup = TraceSetup::new(field, n, None)?;
    let forms: Vec<SymForm> = setup.ext.basis().iter().map(|&b| setup.form(b)).collect();
    let space = FormSpace::from_basis(field, n, &forms)?;
    Ok((setup, space))
}

/// The `r`-dimensional constant rank `r` space `{Tr(z x y)}` on
/// `F_{q^r}` itself.
pub fn trace_form_family(field: &Field, r: usize) -> Result<FormSpace> {
    require_odd(field)?;
    let ext = Extension::new(field, r)?;
    let l = ext.top();
    let forms: Vec<SymForm> = ext
        .basis()
        .iter()
        .map(|&z| {
            let mut gram = vec![Gf::ZERO; r * r];
            for (i, &bi) in ext.basis().iter().enumerate() {
                for (j, &bj) in ext.basis().iter().enumerate() {
                    gram[i * r + j] = ext.relative_trace(l.mul(z, l.mul(bi, bj)));
                }
            }
            SymForm::from_gram_unchecked(field, r, gram)
        })
        .collect();
    FormSpace::from_basis(field, r, &forms)
}

/// An `m`-dimensional constant rank `n - 1` space whose independent
/// elements have pairwise different radicals.
#[derive(Clone, Debug)]
pub struct DistinctRadicalSpace {
    pub setup: TraceSetup,
    pub space: FormSpace,
    /// The first `z` with `rank f_z' = n - 1`.
    pub z: Gf,
    /// Generator of the radical of `f_z'`.
    pub u: Gf,
    /// `K`-basis of the intermediate field used to span the space.
    pub subfield_basis: Vec<Gf>,
}

impl DistinctRadicalSpace {
    /// `f'_{zuw}`.
    pub fn form_for(&self, w: Gf) -> SymForm {
        let l = self.setup.ext.top();
        self.setup.form(l.mul(l.mul(self.z, self.u), w))
    }

    /// `<w^-1>` as a subspace of `V`.
    pub fn expected_radical(&self, w: Gf) -> Result<VecSubspace> {
        let inv = self.setup.ext.top().inv(w)?;
        let coords = self
            .setup
            .v_coords(inv)
            .ok_or_else(|| Error::InternalInconsistency("w^-1 does not lie in V".into()))?;
        Ok(VecSubspace::line(self.setup.base(), &coords))
    }
}

pub fn distinct_radical_space(field: &Field, n: usize, m: usize) -> Result<DistinctRadicalSpace> {
    require_odd(field)?;
    let setup = TraceSetup::new(field, n, Some(m))?;
    let l = setup.ext.top().clone();
    let z = setup.rank_deficient_z();
    let rad = setup.form(z).radical();
    let u = setup.from_v_coords(&rad.basis()[0]);
    let subfield_basis = k_basis(&setup.ext, &setup.subfield[1..]);
    let forms: Vec<SymForm> = subfield_basis
        .iter()
        .map(|&w| setup.form(l.mul(l.mul(z, u), w)))
        .collect();
    let space = FormSpace::from_basis(field, setup.n(), &forms)?;
    Ok(DistinctRadicalSpace { setup, space, z, u, subfield_basis })
}

/// `(n-1)`-dimensional constant rank 2 space of hyperbolic forms
/// `e_1 v^T + v e_1^T`, `v` in `span(e_2, ..., e_n)`.
pub fn hyperbolic_rank2_space(field: &Field, n: usize) -> Result<FormSpace> {
    require_odd(field)?;
    if n < 2 {
        return Err(Error::TooSmall(n));
    }
    let forms: Vec<SymForm> = (1..n)
        .map(|j| {
            let mut gram = vec![Gf::ZERO; n * n];
            gram[j] = Gf::ONE;
            gram[j * n] = Gf::ONE;
            SymForm::from_gram_unchecked(field, n, gram)
        })
        .collect();
    FormSpace::from_basis(field, n, &forms)
}

/// `(n-t)`-dimensional constant rank `2t` space of positive type: block
/// forms `[[0, A_a], [A_a^T, 0]]` where `A_a` is the first `t` coordinates of
/// multiplication by `a` in `F_{q^(n-t)}`.
pub fn positive_rank2t_space(field: &Field, n: usize, t: usize) -> Result<FormSpace> {
    require_odd(field)?;
    if t == 0 || n < 2 * t {
        return Err(Error::Unsupported(format!("block construction needs 1 <= t and n >= 2t (n = {n}, t = {t})")));
    }
    let s = n - t;
    let ext = Extension::new(field, s)?;
    let l = ext.top();
    let forms: Vec<SymForm> = ext
        .basis()
        .iter()
        .map(|&a| {
            let mut gram = vec![Gf::ZERO; n * n];
            for (j, &bj) in ext.basis().iter().enumerate() {
                let col = ext.to_coords(l.mul(a, bj));
                for (i, &v) in col.iter().take(t).enumerate() {
                    gram[i * n + t + j] = v;
                    gram[(t + j) * n + i] = v;
                }
            }
            SymForm::from_gram_unchecked(field, n, gram)
        })
        .collect();
    FormSpace::from_basis(field, n, &forms)
}

/// The space `{phi_x}` of forms `phi_x(y, z) = Tr(x^9 y z + x y^9 z + x y z^9)`
/// on `F_{3^5}` viewed as `F_3^5` via the power basis.
#[derive(Clone, Debug)]
pub struct WardSpace {
    pub base: Field,
    pub big: Field,
    pub space: FormSpace,
}

impl WardSpace {
    /// Basis `b_i = x^i` of `F_{3^5}` over `F_3`.
    pub fn basis_element(&self, i: usize) -> Gf {
        Gf(3u32.pow(i as u32))
    }

    /// Coordinates of an element of `F_{3^5}`.
    pub fn coords(&self, y: Gf) -> Vec<Gf> {
        self.big.digits(y).into_iter().map(Gf).collect()
    }

    pub fn element(&self, coords: &[Gf]) -> Gf {
        let d: Vec<u32> = coords.iter().map(|g| g.0).collect();
        self.big.from_digits(&d)
    }

    pub fn phi(&self, x: Gf) -> SymForm {
        let l = &self.big;
        let x9 = l.pow(x, 9);
        let b: Vec<Gf> = (0..5).map(|i| self.basis_element(i)).collect();
        let b9: Vec<Gf> = b.iter().map(|&y| l.pow(y, 9)).collect();
        let mut gram = vec![Gf::ZERO; 25];
        for i in 0..5 {
            for j in 0..5 {
                let t1 = l.mul(x9, l.mul(b[i], b[j]));
                let t2 = l.mul(x, l.mul(b9[i], b[j]));
                let t3 = l.mul(x, l.mul(b[i], b9[j]));
                gram[i * 5 + j] = l.trace(l.add(t1, l.add(t2, t3)));
            }
        }
        SymForm::new(&self.base, 5, gram).expect("phi_x is symmetric")
    }

    /// Matrix of multiplication by `c` on `F_3^5`.
    pub fn multiplication_matrix(&self, c: Gf) -> Matrix {
        self.linear_map(|y| self.big.mul(c, y))
    }

    /// Matrix of `y -> y^3`.
    pub fn frobenius_matrix(&self) -> Matrix {
        self.linear_map(|y| self.big.pow(y, 3))
    }

    fn linear_map(&self, map: impl Fn(Gf) -> Gf) -> Matrix {
        let mut m = Matrix::zeros(5, 5);
        for j in 0..5 {
            let col = self.coords(map(self.basis_element(j)));
            for (i, v) in col.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }
}

pub fn ward_space() -> Result<WardSpace> {
    let base = make_field(3, 1)?;
    let big = make_field(3, 5)?;
    let mut w = WardSpace { base: base.clone(), big, space: hyperbolic_rank2_space(&base, 2)? };
    let forms: Vec<SymForm> = (0..5).map(|i| w.phi(w.basis_element(i))).collect();
    w.space = FormSpace::from_basis(&base, 5, &forms)?;
    Ok(w)
}

fn multiplicative_cosets(ext: &Extension, sub: &[Gf]) -> Vec<VecSubspace> {
    let l = ext.top();
    let mut covered = vec![false; l.q() as usize];
    let mut pieces = Vec::new();
    for alpha in l.elements().skip(1) {
        if covered[alpha.0 as usize] {
            continue;
        }
        let members: Vec<Gf> = sub.iter().map(|&s| l.mul(alpha, s)).collect();
        for &y in &members {
            covered[y.0 as usize] = true;
        }
        let coords: Vec<Vec<Gf>> = members.iter().map(|&y| ext.to_coords(y)).collect();
        pieces.push(VecSubspace::new(ext.base(), ext.degree(), &coords));
    }
    pieces
}

/// Spread of `F_q^(2m)` by the `q^m + 1` cosets `a F_{q^m}` in `F_{q^(2m)}`.
pub fn spread(field: &Field, m: usize) -> Result<PartitionSpec> {
    if m == 0 {
        return Err(Error::TooSmall(0));
    }
    let ext = Extension::new(field, 2 * m)?;
    let sub = ext.intermediate_field(m)?;
    let pieces = multiplicative_cosets(&ext, &sub);
    Ok(PartitionSpec { field: field.clone(), ambient_dim: 2 * m, pieces })
}

/// Partition of `F_q^(2m+1)` into one `(m+1)`-space and `q^(m+1)`
/// `m`-spaces: a spread of `F_q^(2m+2)` cut by a hyperplane containing one
/// of its pieces.
pub fn odd_partition(field: &Field, m: usize) -> Result<PartitionSpec> {
    if m == 0 {
        return Err(Error::TooSmall(0));
    }
    let ext = Extension::new(field, 2 * m + 2)?;
    let sub = ext.intermediate_field(m + 1)?;
    let pieces = multiplicative_cosets(&ext, &sub);
    let x = trace_hyperplane(&ext, Some(&sub));
    let sliced = pieces
        .iter()
        .map(|piece| {
            let cut = piece.intersection(&x);
            let coords: Vec<Vec<Gf>> = cut
                .basis()
                .iter()
                .map(|b| x.coords_of(b).expect("intersection lies in the hyperplane"))
                .collect();
            VecSubspace::new(field, 2 * m + 1, &coords)
        })
        .collect();
    Ok(PartitionSpec { field: field.clone(), ambient_dim: 2 * m + 1, pieces: sliced })
}
