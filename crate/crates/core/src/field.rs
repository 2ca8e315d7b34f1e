//! Exact arithmetic in `F_{p^k}`.
//!
//! Elements are stored as their canonical integer encoding
//! `e(x) = sum c_i p^i`, where `c_i` are the coefficients of `x` in the power
//! basis of the field modulus. The modulus is the lexicographically smallest
//! monic irreducible polynomial of degree `k` (digits compared constant term
//! first), so encodings are reproducible.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Identifies the rule used to pick a modulus; printed by `--version`.
pub const MODULUS_RULE_VERSION: &str = "modulus-rule/1: lexicographically least monic irreducible, digits constant term first";

/// Fields up to this order get exp/log tables.
const TABLE_LIMIT: u32 = 1 << 20;

/// Largest supported field order.
const MAX_ORDER: u64 = 1 << 31;

/// A field element, as its canonical encoding in `[0, q)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Gf(pub u32);

impl Gf {
    pub const ZERO: Gf = Gf(0);
    pub const ONE: Gf = Gf(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Shared handle to an immutable field context.
pub type Field = Arc<FieldCtx>;

pub struct FieldCtx {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    generator: Gf,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits a prime power into `(p, k)`.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    let factors = prime_factors(q);
    if factors.len() != 1 {
        return None;
    }
    let p = factors[0];
    let mut k = 0;
    let mut rest = q;
    while rest > 1 {
        rest /= p;
        k += 1;
    }
    Some((p as u32, k))
}

/// Builds `F_{p^k}` with the canonical modulus.
pub fn make_field(p: u64, k: u32) -> Result<Field> {
    check_order(p, k)?;
    let p = p as u32;
    let modulus = if k == 1 {
        vec![0, 1]
    } else {
        smallest_irreducible(p, k as usize)
    };
    Ok(Arc::new(FieldCtx::build(p, k, modulus)))
}

/// Builds `F_{p^k}` from an explicit modulus (digits constant term first),
/// checking that it is monic and irreducible.
pub fn field_with_modulus(p: u64, modulus: &[u32]) -> Result<Field> {
    if modulus.len() < 2 {
        return Err(Error::InvalidModulus);
    }
    let k = (modulus.len() - 1) as u32;
    check_order(p, k)?;
    let p = p as u32;
    if modulus.iter().any(|&d| d >= p) || *modulus.last().unwrap() != 1 {
        return Err(Error::InvalidModulus);
    }
    if k > 1 && !poly::is_irreducible(modulus, p) {
        return Err(Error::InvalidModulus);
    }
    let modulus = if k == 1 { vec![0, 1] } else { modulus.to_vec() };
    Ok(Arc::new(FieldCtx::build(p, k, modulus)))
}

/// Parses `"p^k"` or a bare prime power such as `"9"`.
pub fn parse_field_spec(spec: &str) -> Result<Field> {
    let spec = spec.trim();
    if let Some((p, k)) = spec.split_once('^') {
        let p: u64 = p.trim().parse().map_err(|_| Error::Parse(format!("bad field spec '{spec}'")))?;
        let k: u32 = k.trim().parse().map_err(|_| Error::Parse(format!("bad field spec '{spec}'")))?;
        if k == 0 {
            return Err(Error::Parse(format!("bad field spec '{spec}'")));
        }
        make_field(p, k)
    } else {
        let q: u64 = spec.parse().map_err(|_| Error::Parse(format!("bad field spec '{spec}'")))?;
        match prime_power(q) {
            Some((p, k)) => make_field(p as u64, k),
            None => Err(Error::InvalidPrime(q)),
        }
    }
}

fn check_order(p: u64, k: u32) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    if k == 0 {
        return Err(Error::Unsupported("extension degree must be at least 1".into()));
    }
    let q = (p as u128).checked_pow(k).unwrap_or(u128::MAX);
    if q > MAX_ORDER as u128 {
        return Err(Error::FieldTooLarge(q));
    }
    Ok(())
}

fn smallest_irreducible(p: u32, k: usize) -> Vec<u32> {
    let total = (p as u64).pow(k as u32);
    for idx in 0..total {
        // c_0 is the most significant digit of the counter.
        let mut poly = vec![0u32; k + 1];
        let mut rest = idx;
        for j in (0..k).rev() {
            poly[j] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        poly[k] = 1;
        if poly::is_irreducible(&poly, p) {
            return poly;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl FieldCtx {
    fn build(p: u32, k: u32, modulus: Vec<u32>) -> FieldCtx {
        let q = p.pow(k);
        let mut ctx = FieldCtx {
            p,
            k,
            q,
            modulus,
            generator: Gf::ONE,
            exp: Vec::new(),
            log: Vec::new(),
        };
        ctx.generator = ctx.find_generator();
        if q <= TABLE_LIMIT {
            let mut exp = Vec::with_capacity((q - 1) as usize);
            let mut log = vec![0u32; q as usize];
            let mut x = Gf::ONE;
            for i in 0..q - 1 {
                exp.push(x.0);
                log[x.0 as usize] = i;
                x = ctx.poly_mul(x, ctx.generator);
            }
            ctx.exp = exp;
            ctx.log = log;
        }
        ctx
    }

    fn find_generator(&self) -> Gf {
        let order = (self.q - 1) as u64;
        if order == 1 {
            return Gf::ONE;
        }
        let factors = prime_factors(order);
        (1..self.q)
            .map(Gf)
            .find(|&g| factors.iter().all(|&l| self.slow_pow(g, order / l) != Gf::ONE))
            .expect("multiplicative group is cyclic")
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn k(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn is_odd(&self) -> bool {
        self.p != 2
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Generator of the multiplicative group with the smallest encoding.
    pub fn generator(&self) -> Gf {
        self.generator
    }

    pub fn zero(&self) -> Gf {
        Gf::ZERO
    }

    pub fn one(&self) -> Gf {
        Gf::ONE
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Gf {
        Gf(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn element(&self, e: u32) -> Result<Gf> {
        if e < self.q {
            Ok(Gf(e))
        } else {
            Err(Error::Parse(format!("{e} is not an element of F_{}", self.q)))
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Gf> {
        (0..self.q).map(Gf)
    }

    pub fn digits(&self, a: Gf) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.k as usize);
        let mut x = a.0;
        for _ in 0..self.k {
            out.push(x % self.p);
            x /= self.p;
        }
        out
    }

    pub fn from_digits(&self, digits: &[u32]) -> Gf {
        debug_assert_eq!(digits.len(), self.k as usize);
        Gf(digits.iter().rev().fold(0u32, |acc, &d| acc * self.p + d % self.p))
    }

    #[inline]
    pub fn add(&self, a: Gf, b: Gf) -> Gf {
        if self.k == 1 {
            let s = a.0 + b.0;
            return Gf(if s >= self.p { s - self.p } else { s });
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            let s = (x % self.p + y % self.p) % self.p;
            out += s * place;
            place *= self.p;
            x /= self.p;
            y /= self.p;
        }
        Gf(out)
    }

    #[inline]
    pub fn neg(&self, a: Gf) -> Gf {
        if self.k == 1 {
            return Gf(if a.0 == 0 { 0 } else { self.p - a.0 });
        }
        let mut x = a.0;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            let d = x % self.p;
            out += ((self.p - d) % self.p) * place;
            place *= self.p;
            x /= self.p;
        }
        Gf(out)
    }

    #[inline]
    pub fn sub(&self, a: Gf, b: Gf) -> Gf {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Gf, b: Gf) -> Gf {
        if a.0 == 0 || b.0 == 0 {
            return Gf::ZERO;
        }
        if self.k == 1 {
            return Gf(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32);
        }
        if !self.exp.is_empty() {
            let n = self.q - 1;
            let s = self.log[a.0 as usize] + self.log[b.0 as usize];
            return Gf(self.exp[(if s >= n { s - n } else { s }) as usize]);
        }
        self.poly_mul(a, b)
    }

    /// `a * b` computed by schoolbook polynomial multiplication and reduction.
    /// Independent of the lookup tables; used to build them.
    pub fn poly_mul(&self, a: Gf, b: Gf) -> Gf {
        if self.k == 1 {
            return Gf(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32);
        }
        let k = self.k as usize;
        let p = self.p as u64;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for deg in (k..2 * k - 1).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            for i in 0..k {
                let sub = c * self.modulus[i] as u64 % p;
                let idx = deg - k + i;
                prod[idx] = (prod[idx] + p - sub) % p;
            }
            prod[deg] = 0;
        }
        let digits: Vec<u32> = prod[..k].iter().map(|&d| d as u32).collect();
        self.from_digits(&digits)
    }

    fn slow_pow(&self, a: Gf, mut e: u64) -> Gf {
        let mut base = a;
        let mut acc = Gf::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.poly_mul(acc, base);
            }
            base = self.poly_mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn pow(&self, a: Gf, e: u64) -> Gf {
        if e == 0 {
            return Gf::ONE;
        }
        if a.is_zero() {
            return Gf::ZERO;
        }
        if !self.exp.is_empty() {
            let n = (self.q - 1) as u64;
            let l = self.log[a.0 as usize] as u64;
            return Gf(self.exp[((l * (e % n)) % n) as usize]);
        }
        let mut base = a;
        let mut acc = Gf::ONE;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Gf) -> Result<Gf> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if !self.exp.is_empty() {
            let n = self.q - 1;
            let l = self.log[a.0 as usize];
            return Ok(Gf(self.exp[((n - l) % n) as usize]));
        }
        Ok(self.pow(a, (self.q - 2) as u64))
    }

    pub fn div(&self, a: Gf, b: Gf) -> Result<Gf> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `x^(p^i)`.
    pub fn frobenius(&self, x: Gf, i: u32) -> Gf {
        let i = i % self.k;
        self.pow(x, (self.p as u64).pow(i))
    }

    /// Absolute trace to the prime field; the result has encoding `< p`.
    pub fn trace(&self, x: Gf) -> Gf {
        let mut acc = Gf::ZERO;
        let mut y = x;
        for _ in 0..self.k {
            acc = self.add(acc, y);
            y = self.pow(y, self.p as u64);
        }
        debug_assert!(acc.0 < self.p);
        acc
    }

    /// Relative trace to the subfield of order `p^m`.
    pub fn trace_to(&self, x: Gf, m: u32) -> Result<Gf> {
        if m == 0 || !self.k.is_multiple_of(m) {
            return Err(Error::NotASubfield { m, k: self.k });
        }
        let step = (self.p as u64).pow(m);
        let mut acc = Gf::ZERO;
        let mut y = x;
        for _ in 0..self.k / m {
            acc = self.add(acc, y);
            y = self.pow(y, step);
        }
        Ok(acc)
    }

    pub fn is_square(&self, x: Gf) -> Result<bool> {
        if !self.is_odd() {
            return Err(Error::EvenCharUnsupported);
        }
        if x.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(self.pow(x, ((self.q - 1) / 2) as u64) == Gf::ONE)
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, x: Gf) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::ZeroInput);
        }
        let mut order = (self.q - 1) as u64;
        for l in prime_factors(order) {
            while order.is_multiple_of(l) && self.pow(x, order / l) == Gf::ONE {
                order /= l;
            }
        }
        Ok(order)
    }

    /// `g^((q-1)/m)` for the canonical generator `g`.
    pub fn element_of_order(&self, m: u64) -> Result<Gf> {
        let n = (self.q - 1) as u64;
        if m == 0 || !n.is_multiple_of(m) {
            return Err(Error::NoSuchOrder { m, order: n });
        }
        Ok(self.pow(self.generator, n / m))
    }

    /// The subfield of order `p^m`, sorted by encoding.
    pub fn subfield_elements(&self, m: u32) -> Result<Vec<Gf>> {
        if m == 0 || !self.k.is_multiple_of(m) {
            return Err(Error::NotASubfield { m, k: self.k });
        }
        let sub_order = self.p.pow(m) as u64;
        let step = (self.q - 1) as u64 / (sub_order - 1);
        let h = self.pow(self.generator, step);
        let mut out = Vec::with_capacity(sub_order as usize);
        out.push(Gf::ZERO);
        let mut x = Gf::ONE;
        for _ in 0..sub_order - 1 {
            out.push(x);
            x = self.mul(x, h);
        }
        out.sort();
        Ok(out)
    }

    pub fn sum<I: IntoIterator<Item = Gf>>(&self, it: I) -> Gf {
        it.into_iter().fold(Gf::ZERO, |acc, x| self.add(acc, x))
    }
}

/// Polynomials over `F_p` as digit vectors, constant term first.
pub mod poly {
    fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.len() > 1 && *a.last().unwrap() == 0 {
            a.pop();
        }
        a
    }

    /// Remainder of `a` modulo the monic polynomial `m`.
    pub fn rem_monic(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let p = p as u64;
        let mut r: Vec<u64> = a.iter().map(|&x| x as u64).collect();
        let dm = m.len() - 1;
        while r.len() > dm {
            let lead = *r.last().unwrap();
            let shift = r.len() - 1 - dm;
            if lead != 0 {
                for (i, &c) in m.iter().enumerate() {
                    let sub = lead * c as u64 % p;
                    r[shift + i] = (r[shift + i] + p - sub) % p;
                }
            }
            r.pop();
        }
        trim(r.into_iter().map(|x| x as u32).collect())
    }

    /// Trial division by every monic polynomial of degree `1..=deg/2`.
    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let deg = f.len() - 1;
        if deg <= 1 {
            return deg == 1;
        }
        for d in 1..=deg / 2 {
            let count = (p as u64).pow(d as u32);
            for idx in 0..count {
                let mut g = vec![0u32; d + 1];
                let mut rest = idx;
                for c in g.iter_mut().take(d) {
                    *c = (rest % p as u64) as u32;
                    rest /= p as u64;
                }
                g[d] = 1;
                let r = rem_monic(f, &g, p);
                if r.iter().all(|&c| c == 0) {
                    return false;
                }
            }
        }
        true
    }

    /// Evaluates a polynomial with `F_p` coefficients at an element of `field`.
    pub fn eval(field: &super::FieldCtx, f: &[u32], x: super::Gf) -> super::Gf {
        f.iter()
            .rev()
            .fold(super::Gf::ZERO, |acc, &c| field.add(field.mul(acc, x), field.from_int(c as i64)))
    }
}

/// An element bundled with its field, for checked arithmetic across
/// possibly different contexts.
#[derive(Clone, Debug)]
pub struct FieldElement {
    field: Field,
    value: Gf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElement {
    pub fn new(field: &Field, value: Gf) -> Result<Self> {
        field.element(value.0)?;
        Ok(FieldElement { field: field.clone(), value })
    }

    pub fn from_digits(field: &Field, digits: &[u32]) -> Result<Self> {
        if digits.len() != field.k() as usize || digits.iter().any(|&d| d >= field.p()) {
            return Err(Error::Parse("digit vector does not match field".into()));
        }
        Ok(FieldElement { field: field.clone(), value: field.from_digits(digits) })
    }

    pub fn value(&self) -> Gf {
        self.value
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn digits(&self) -> Vec<u32> {
        self.field.digits(self.value)
    }

    fn same_field(&self, other: &FieldElement) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field
    }

    pub fn arith(&self, rhs: &FieldElement, op: ArithOp) -> Result<FieldElement> {
        if !self.same_field(rhs) {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let value = match op {
            ArithOp::Add => f.add(self.value, rhs.value),
            ArithOp::Sub => f.sub(self.value, rhs.value),
            ArithOp::Mul => f.mul(self.value, rhs.value),
            ArithOp::Div => f.div(self.value, rhs.value)?,
        };
        Ok(FieldElement { field: f.clone(), value })
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(FieldElement { field: self.field.clone(), value: self.field.inv(self.value)? })
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        FieldElement { field: self.field.clone(), value: self.field.pow(self.value, e) }
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other) && self.value == other.value
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_irreducible(f: &[u32], p: u32) -> bool {
        // Only valid for degree 2 and 3: irreducible iff no root.
        let field = make_field(p as u64, 1).unwrap();
        (0..p).all(|x| !poly::eval(&field, f, Gf(x)).is_zero() || f.len() > 4)
    }

    #[test]
    fn prime_field_basics() {
        let f = make_field(3, 1).unwrap();
        assert_eq!(f.q(), 3);
        assert_eq!(f.add(Gf(2), Gf(2)), Gf(1));
        assert_eq!(f.modulus(), &[0, 1]);
    }

    #[test]
    fn invalid_prime_rejected() {
        assert_eq!(make_field(9, 1).unwrap_err(), Error::InvalidPrime(9));
        assert_eq!(make_field(1, 3).unwrap_err(), Error::InvalidPrime(1));
    }

    #[test]
    fn f9_modulus_has_no_roots() {
        let f = make_field(3, 2).unwrap();
        assert_eq!(f.q(), 9);
        assert!(brute_irreducible(f.modulus(), 3));
        // x^2 + 1 is the lexicographically first irreducible quadratic over F_3.
        assert_eq!(f.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn modulus_is_lexicographically_least() {
        for (p, k) in [(3u32, 2usize), (3, 3), (5, 2), (5, 3), (7, 2)] {
            let f = make_field(p as u64, k as u32).unwrap();
            let m = f.modulus().to_vec();
            // every monic polynomial preceding m must have a root (degree <= 3)
            let total = (p as u64).pow(k as u32);
            for idx in 0..total {
                let mut g = vec![0u32; k + 1];
                let mut rest = idx;
                for j in (0..k).rev() {
                    g[j] = (rest % p as u64) as u32;
                    rest /= p as u64;
                }
                g[k] = 1;
                if g == m {
                    break;
                }
                assert!(!brute_irreducible(&g, p), "{g:?} precedes {m:?} and is irreducible");
            }
            assert!(brute_irreducible(&m, p));
        }
    }

    #[test]
    fn ward_field_size() {
        let f = make_field(3, 5).unwrap();
        assert_eq!(f.q(), 243);
        assert_eq!(f.trace(Gf::ONE), Gf(2));
        assert_eq!(f.trace(Gf::ZERO), Gf::ZERO);
    }

    #[test]
    fn inverses_in_f9() {
        let f = make_field(3, 2).unwrap();
        for x in 1..9 {
            let x = Gf(x);
            assert_eq!(f.mul(x, f.inv(x).unwrap()), Gf::ONE);
        }
        assert_eq!(f.inv(Gf::ZERO), Err(Error::DivisionByZero));
    }

    #[test]
    fn fermat_in_f27() {
        let f = make_field(3, 3).unwrap();
        for x in f.elements() {
            assert_eq!(f.pow(x, 27), x);
        }
    }

    #[test]
    fn table_and_polynomial_products_agree() {
        let f = make_field(5, 3).unwrap();
        for a in f.elements() {
            for b in f.elements().step_by(7) {
                assert_eq!(f.mul(a, b), f.poly_mul(a, b));
            }
        }
    }

    #[test]
    fn trace_values_balanced_in_f243() {
        let f = make_field(3, 5).unwrap();
        let mut counts = [0usize; 3];
        for x in f.elements() {
            counts[f.trace(x).0 as usize] += 1;
        }
        assert_eq!(counts, [81, 81, 81]);
    }

    #[test]
    fn trace_additive_and_frobenius_stable() {
        for (p, k) in [(3u64, 2u32), (3, 3), (5, 2), (3, 5)] {
            let f = make_field(p, k).unwrap();
            for x in f.elements() {
                assert_eq!(f.trace(f.pow(x, p)), f.trace(x));
                for y in f.elements() {
                    assert_eq!(f.trace(f.add(x, y)), f.add(f.trace(x), f.trace(y)));
                }
            }
        }
    }

    #[test]
    fn relative_trace_requires_divisor() {
        let f = make_field(3, 4).unwrap();
        assert!(f.trace_to(Gf(5), 3).is_err());
        let t = f.trace_to(Gf(5), 2).unwrap();
        assert_eq!(f.frobenius(t, 2), t);
    }

    #[test]
    fn frobenius_orbit_closes_and_is_linear() {
        let f = make_field(3, 5).unwrap();
        for x in f.elements() {
            assert_eq!(f.frobenius(x, 0), x);
            assert_eq!(f.frobenius(x, 5), x);
        }
        // x -> x^9 is additive on a basis and F_3-linear
        let basis: Vec<Gf> = (0..5).map(|i| Gf(3u32.pow(i))).collect();
        for &a in &basis {
            for &b in &basis {
                let lhs = f.frobenius(f.add(a, b), 2);
                assert_eq!(lhs, f.add(f.frobenius(a, 2), f.frobenius(b, 2)));
            }
            assert_eq!(f.frobenius(f.mul(Gf(2), a), 2), f.mul(Gf(2), f.frobenius(a, 2)));
        }
    }

    #[test]
    fn squares() {
        let f3 = make_field(3, 1).unwrap();
        assert!(f3.is_square(Gf(1)).unwrap());
        assert!(!f3.is_square(Gf(2)).unwrap());
        assert_eq!(f3.is_square(Gf::ZERO), Err(Error::ZeroInput));
        let f9 = make_field(3, 2).unwrap();
        let minus_one = f9.neg(Gf::ONE);
        let squares: Vec<Gf> = f9.elements().skip(1).map(|x| f9.mul(x, x)).collect();
        assert!(squares.contains(&minus_one));
        assert!(f9.is_square(minus_one).unwrap());
        let f2 = make_field(2, 3).unwrap();
        assert_eq!(f2.is_square(Gf(1)), Err(Error::EvenCharUnsupported));
    }

    #[test]
    fn square_character_is_multiplicative() {
        for (p, k) in [(3u64, 1u32), (3, 2), (5, 2), (3, 4)] {
            let f = make_field(p, k).unwrap();
            for x in f.elements().skip(1) {
                for y in f.elements().skip(1) {
                    let xy = f.is_square(f.mul(x, y)).unwrap();
                    assert_eq!(xy, f.is_square(x).unwrap() == f.is_square(y).unwrap());
                }
            }
        }
    }

    #[test]
    fn elements_of_given_order() {
        let f = make_field(3, 5).unwrap();
        assert_eq!(f.element_of_order(1).unwrap(), Gf::ONE);
        let eps = f.element_of_order(11).unwrap();
        assert_eq!(f.pow(eps, 11), Gf::ONE);
        assert_ne!(eps, Gf::ONE);
        assert_eq!(f.order(eps).unwrap(), 11);
        for m in [2u64, 11, 22, 121, 242] {
            let x = f.element_of_order(m).unwrap();
            assert_eq!(f.order(x).unwrap(), m);
        }
        let f9 = make_field(3, 2).unwrap();
        assert!(matches!(f9.element_of_order(7), Err(Error::NoSuchOrder { .. })));
        assert_eq!(f9.order(f9.generator()).unwrap(), 8);
    }

    #[test]
    fn subfields() {
        let f = make_field(3, 4).unwrap();
        let sub = f.subfield_elements(2).unwrap();
        assert_eq!(sub.len(), 9);
        for &a in &sub {
            assert_eq!(f.frobenius(a, 2), a);
            for &b in &sub {
                assert!(sub.binary_search(&f.mul(a, b)).is_ok());
                assert!(sub.binary_search(&f.add(a, b)).is_ok());
            }
        }
        assert_eq!(f.subfield_elements(4).unwrap().len(), 81);
        assert!(f.subfield_elements(3).is_err());
    }

    #[test]
    fn explicit_modulus() {
        let f = field_with_modulus(3, &[2, 2, 1]).unwrap();
        assert_eq!(f.q(), 9);
        assert_eq!(field_with_modulus(3, &[1, 0, 1, 0]).unwrap_err(), Error::InvalidModulus);
        assert_eq!(field_with_modulus(3, &[2, 0, 1]).unwrap_err(), Error::InvalidModulus);
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!(parse_field_spec("3^5").unwrap().q(), 243);
        assert_eq!(parse_field_spec("9").unwrap().q(), 9);
        assert!(parse_field_spec("6").is_err());
        assert!(parse_field_spec("x").is_err());
    }

    #[test]
    fn checked_elements() {
        let f9 = make_field(3, 2).unwrap();
        let f3 = make_field(3, 1).unwrap();
        let a = FieldElement::new(&f9, Gf(4)).unwrap();
        let b = FieldElement::new(&f3, Gf(1)).unwrap();
        assert_eq!(a.arith(&b, ArithOp::Add).unwrap_err(), Error::FieldMismatch);
        let again = make_field(3, 2).unwrap();
        let c = FieldElement::new(&again, Gf(4)).unwrap();
        let s = a.arith(&c, ArithOp::Mul).unwrap();
        assert_eq!(s.value(), f9.mul(Gf(4), Gf(4)));
        assert_eq!(a.arith(&a.inv().unwrap(), ArithOp::Mul).unwrap().value(), Gf::ONE);
        let zero = FieldElement::new(&f9, Gf::ZERO).unwrap();
        assert_eq!(zero.inv().unwrap_err(), Error::DivisionByZero);
        assert_eq!(a.digits(), vec![1, 1]);
    }

    #[test]
    fn encodings_are_reproducible() {
        let a = make_field(3, 5).unwrap();
        let b = make_field(3, 5).unwrap();
        for x in a.elements().step_by(5) {
            for y in a.elements().step_by(3) {
                assert_eq!(a.mul(x, y), b.mul(x, y));
                assert_eq!(a.add(x, y), b.add(x, y));
            }
        }
    }
}
