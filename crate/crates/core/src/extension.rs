//! A finite field `L = F_{q^e}` viewed as an `e`-dimensional vector space
//! over `K = F_q`.

use crate::error::{Error, Result};
use crate::field::{make_field, poly, Field, Gf};
use crate::linalg::Matrix;

/// `L` over `K`, with an embedding `K -> L` and the power basis
/// `1, x, ..., x^(e-1)` of the root `x` of `L`'s modulus.
#[derive(Clone, Debug)]
pub struct Extension {
    base: Field,
    top: Field,
    prime: Field,
    degree: usize,
    embed: Vec<Gf>,
    basis: Vec<Gf>,
    // F_p matrix taking digits of y in L to the digits of its K-coordinates.
    coords_inv: Matrix,
}

impl Extension {
    pub fn new(base: &Field, degree: usize) -> Result<Extension> {
        if degree == 0 {
            return Err(Error::Unsupported("extension degree must be positive".into()));
        }
        let p = base.p() as u64;
        let k = base.k() as usize;
        let top = make_field(p, (k * degree) as u32)?;
        let prime = make_field(p, 1)?;

        let beta = if k == 1 {
            Gf::ONE
        } else {
            top.elements()
                .find(|&b| poly::eval(&top, base.modulus(), b).is_zero())
                .expect("the base modulus splits in L")
        };
        let embed: Vec<Gf> = base
            .elements()
            .map(|c| {
                let digits = base.digits(c);
                let mut acc = Gf::ZERO;
                let mut power = Gf::ONE;
                for d in digits {
                    acc = top.add(acc, top.mul(top.from_int(d as i64), power));
                    power = top.mul(power, beta);
                }
                acc
            })
            .collect();

        let x = if top.k() > 1 { Gf(top.p()) } else { Gf::ONE };
        let basis: Vec<Gf> = (0..degree).map(|i| top.pow(x, i as u64)).collect();

        let dim = k * degree;
        let mut b = Matrix::zeros(dim, dim);
        let mut beta_pow = Gf::ONE;
        let mut beta_pows = Vec::with_capacity(k);
        for _ in 0..k {
            beta_pows.push(beta_pow);
            beta_pow = top.mul(beta_pow, beta);
        }
        for (i, &xi) in basis.iter().enumerate() {
            for (j, &bj) in beta_pows.iter().enumerate() {
                let col = top.digits(top.mul(bj, xi));
                for (r, &d) in col.iter().enumerate() {
                    b[(r, i * k + j)] = Gf(d);
                }
            }
        }
        let coords_inv = b.inverse(&prime).ok_or_else(|| {
            Error::InternalInconsistency("power basis is not a basis of L over K".into())
        })?;
        Ok(Extension { base: base.clone(), top, prime, degree, embed, basis, coords_inv })
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn top(&self) -> &Field {
        &self.top
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> &[Gf] {
        &self.basis
    }

    pub fn embed(&self, c: Gf) -> Gf {
        self.embed[c.0 as usize]
    }

    /// Coordinates of `y` in the power basis, as elements of `K`.
    pub fn to_coords(&self, y: Gf) -> Vec<Gf> {
        let k = self.base.k() as usize;
        let digits: Vec<Gf> = self.top.digits(y).into_iter().map(Gf).collect();
        let d = self.coords_inv.mul_vec(&self.prime, &digits);
        (0..self.degree)
            .map(|i| {
                let ds: Vec<u32> = d[i * k..(i + 1) * k].iter().map(|g| g.0).collect();
                self.base.from_digits(&ds)
            })
            .collect()
    }

    pub fn from_coords(&self, coords: &[Gf]) -> Gf {
        assert_eq!(coords.len(), self.degree);
        coords
            .iter()
            .zip(&self.basis)
            .fold(Gf::ZERO, |acc, (&c, &b)| self.top.add(acc, self.top.mul(self.embed(c), b)))
    }

    /// The element of `K` equal to `y`, if `y` lies in the embedded copy of `K`.
    pub fn project(&self, y: Gf) -> Option<Gf> {
        let c = self.to_coords(y);
        c[1..].iter().all(|x| x.is_zero()).then_some(c[0])
    }

    /// `Tr_{L/K}(y) = sum_{i<e} y^(q^i)`, as an element of `K`.
    pub fn relative_trace(&self, y: Gf) -> Gf {
        let q = self.base.q() as u64;
        let mut acc = Gf::ZERO;
        let mut z = y;
        for _ in 0..self.degree {
            acc = self.top.add(acc, z);
            z = self.top.pow(z, q);
        }
        self.project(acc).expect("relative trace lies in K")
    }

    /// Elements of the intermediate field of degree `m` over `K`.
    pub fn intermediate_field(&self, m: usize) -> Result<Vec<Gf>> {
        if m == 0 || !self.degree.is_multiple_of(m) {
            return Err(Error::NoSubfield { m, degree: self.degree });
        }
        self.top.subfield_elements(self.base.k() * m as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_base_coordinates_are_digits() {
        let k = make_field(3, 1).unwrap();
        let ext = Extension::new(&k, 4).unwrap();
        for y in ext.top().elements() {
            let c = ext.to_coords(y);
            let digits: Vec<Gf> = ext.top().digits(y).into_iter().map(Gf).collect();
            assert_eq!(c, digits);
            assert_eq!(ext.from_coords(&c), y);
        }
    }

    #[test]
    fn nonprime_base_roundtrip_and_embedding() {
        let k = make_field(3, 2).unwrap();
        let ext = Extension::new(&k, 3).unwrap();
        assert_eq!(ext.top().q(), 729);
        // embedding is a ring homomorphism
        for a in k.elements() {
            for b in k.elements() {
                assert_eq!(ext.embed(k.mul(a, b)), ext.top().mul(ext.embed(a), ext.embed(b)));
                assert_eq!(ext.embed(k.add(a, b)), ext.top().add(ext.embed(a), ext.embed(b)));
            }
        }
        for y in ext.top().elements().step_by(11) {
            assert_eq!(ext.from_coords(&ext.to_coords(y)), y);
        }
        for c in k.elements() {
            assert_eq!(ext.project(ext.embed(c)), Some(c));
        }
    }

    #[test]
    fn relative_trace_is_k_linear() {
        let k = make_field(3, 2).unwrap();
        let ext = Extension::new(&k, 2).unwrap();
        let l = ext.top().clone();
        for y in l.elements().step_by(5) {
            for c in k.elements() {
                let lhs = ext.relative_trace(l.mul(ext.embed(c), y));
                assert_eq!(lhs, k.mul(c, ext.relative_trace(y)));
            }
        }
        assert_eq!(ext.intermediate_field(1).unwrap().len(), 9);
        assert!(ext.intermediate_field(3).is_err());
    }
}
