//! Text file formats and the JSON census report.
//!
//! Every file starts with a header line and a line of modulus digits
//! (constant term first). Matrices are written as rows of canonical
//! element encodings.
//!
//! * form: `p k n`, modulus, `n` rows.
//! * form space: `p k n d`, modulus, `d` Gram matrices separated by blank lines.
//! * partition: `p k n t`, modulus, then per piece a line with its dimension
//!   followed by that many basis rows.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{field_with_modulus, Field, Gf};
use crate::forms::SymForm;
use crate::subspace::{common_isotropic_count_formula, FormSpace, Limits, PartitionSpec, VecSubspace};

fn header(field: &Field, extra: &[usize]) -> String {
    let mut s = format!("{} {}", field.p(), field.k());
    for e in extra {
        let _ = write!(s, " {e}");
    }
    s.push('\n');
    let digits: Vec<String> = field.modulus().iter().map(u32::to_string).collect();
    s.push_str(&digits.join(" "));
    s.push('\n');
    s
}

fn write_rows(out: &mut String, rows: impl Iterator<Item = Vec<Gf>>) {
    for row in rows {
        let cells: Vec<String> = row.iter().map(|g| g.0.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
}

fn gram_rows(g: &SymForm) -> impl Iterator<Item = Vec<Gf>> + '_ {
    (0..g.n()).map(move |i| (0..g.n()).map(|j| g.get(i, j)).collect())
}

pub fn write_form(g: &SymForm) -> String {
    let mut s = header(g.field(), &[g.n()]);
    write_rows(&mut s, gram_rows(g));
    s
}

pub fn write_form_space(m: &FormSpace) -> String {
    let mut s = header(m.field(), &[m.n(), m.dim()]);
    for (i, g) in m.basis().iter().enumerate() {
        if i > 0 {
            s.push('\n');
        }
        write_rows(&mut s, gram_rows(g));
    }
    s
}

pub fn write_partition(p: &PartitionSpec) -> String {
    let mut s = header(&p.field, &[p.ambient_dim, p.pieces.len()]);
    for piece in &p.pieces {
        let _ = writeln!(s, "{}", piece.dim());
        write_rows(&mut s, piece.basis().iter().cloned());
    }
    s
}

/// Non-empty lines, each split into integers.
struct Lines {
    rows: Vec<Vec<u64>>,
    pos: usize,
}

impl Lines {
    fn new(text: &str) -> Result<Lines> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|t| t.parse::<u64>().map_err(|_| Error::Parse(format!("not an integer: `{t}`"))))
                    .collect::<Result<Vec<u64>>>()
            })
            .collect::<Result<_>>()?;
        Ok(Lines { rows, pos: 0 })
    }

    fn next(&mut self, what: &str) -> Result<&[u64]> {
        let row = self.rows.get(self.pos).ok_or_else(|| Error::Parse(format!("missing {what}")))?;
        self.pos += 1;
        Ok(row)
    }

    fn next_exact(&mut self, len: usize, what: &str) -> Result<Vec<u64>> {
        let row = self.next(what)?;
        if row.len() != len {
            return Err(Error::Parse(format!("{what}: expected {len} entries, found {}", row.len())));
        }
        Ok(row.to_vec())
    }

    fn finish(&self) -> Result<()> {
        if self.pos != self.rows.len() {
            return Err(Error::Parse(format!("{} trailing lines", self.rows.len() - self.pos)));
        }
        Ok(())
    }
}

fn read_header(lines: &mut Lines, extra: usize) -> Result<(Field, Vec<usize>)> {
    let h = lines.next_exact(2 + extra, "header")?;
    let k = u32::try_from(h[1]).map_err(|_| Error::Parse("degree too large".into()))?;
    let modulus = lines.next_exact(k as usize + 1, "modulus")?;
    let modulus: Vec<u32> = modulus.iter().map(|&d| d as u32).collect();
    let field = field_with_modulus(h[0], &modulus)?;
    Ok((field, h[2..].iter().map(|&x| x as usize).collect()))
}

fn read_row(lines: &mut Lines, field: &Field, len: usize, what: &str) -> Result<Vec<Gf>> {
    lines.next_exact(len, what)?.into_iter().map(|e| field.element(e as u32)).collect()
}

fn read_gram(lines: &mut Lines, field: &Field, n: usize) -> Result<SymForm> {
    let mut gram = Vec::with_capacity(n * n);
    for _ in 0..n {
        gram.extend(read_row(lines, field, n, "matrix row")?);
    }
    SymForm::new(field, n, gram)
}

pub fn read_form(text: &str) -> Result<SymForm> {
    let mut lines = Lines::new(text)?;
    let (field, h) = read_header(&mut lines, 1)?;
    let g = read_gram(&mut lines, &field, h[0])?;
    lines.finish()?;
    Ok(g)
}

pub fn read_form_space(text: &str) -> Result<FormSpace> {
    let mut lines = Lines::new(text)?;
    let (field, h) = read_header(&mut lines, 2)?;
    let (n, d) = (h[0], h[1]);
    let forms = (0..d).map(|_| read_gram(&mut lines, &field, n)).collect::<Result<Vec<_>>>()?;
    lines.finish()?;
    FormSpace::from_basis(&field, n, &forms)
}

pub fn read_partition(text: &str) -> Result<PartitionSpec> {
    let mut lines = Lines::new(text)?;
    let (field, h) = read_header(&mut lines, 2)?;
    let (n, t) = (h[0], h[1]);
    let mut pieces = Vec::with_capacity(t);
    for _ in 0..t {
        let dim = lines.next_exact(1, "piece dimension")?[0] as usize;
        let rows = (0..dim).map(|_| read_row(&mut lines, &field, n, "piece row")).collect::<Result<Vec<_>>>()?;
        let piece = VecSubspace::new(&field, n, &rows);
        if piece.dim() != dim {
            return Err(Error::LinearlyDependent(format!("piece declared of dimension {dim} spans {}", piece.dim())));
        }
        pieces.push(piece);
    }
    lines.finish()?;
    Ok(PartitionSpec { field, ambient_dim: n, pieces })
}

/// Type census of a form space with both common-isotropic counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub q: u64,
    pub n: usize,
    pub d: usize,
    pub rank_histogram: BTreeMap<usize, u64>,
    #[serde(rename = "A")]
    pub a: u64,
    #[serde(rename = "B")]
    pub b: u64,
    /// Brute-force count, zero vector included.
    pub common_isotropic_total: u64,
    /// Exact rational, `"p"` or `"p/q"`.
    pub formula_value: String,
    pub agreement: bool,
}

impl CensusReport {
    pub fn compute(m: &FormSpace, limits: &Limits) -> Result<CensusReport> {
        let q = m.field().q() as u64;
        let census = m.type_census(limits)?;
        let brute = m.common_isotropic_points(limits)?.len() as u64;
        let formula = common_isotropic_count_formula(m.n(), &census, m.dim(), q)?;
        Ok(CensusReport {
            q,
            n: m.n(),
            d: m.dim(),
            rank_histogram: census.rank_histogram.clone(),
            a: census.positive,
            b: census.negative,
            common_isotropic_total: brute,
            formula_value: formula.to_string(),
            agreement: formula.is_integer() && *formula.numer() == brute as i128,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{hyperbolic_rank2_space, spread};
    use crate::field::make_field;

    #[test]
    fn form_roundtrip_over_f9() {
        let f = make_field(3, 2).unwrap();
        let g = SymForm::from_rows(&f, &[vec![1, 5], vec![5, 8]]).unwrap();
        let text = write_form(&g);
        assert_eq!(text, "3 2 2\n1 0 1\n1 5\n5 8\n");
        assert_eq!(read_form(&text).unwrap(), g);
    }

    #[test]
    fn space_roundtrip_is_byte_stable() {
        let k = make_field(5, 1).unwrap();
        let m = hyperbolic_rank2_space(&k, 3).unwrap();
        let text = write_form_space(&m);
        let back = read_form_space(&text).unwrap();
        assert_eq!(back, m);
        assert_eq!(write_form_space(&back), text);
    }

    #[test]
    fn partition_roundtrip() {
        let k = make_field(3, 1).unwrap();
        let s = spread(&k, 2).unwrap();
        let back = read_partition(&write_partition(&s)).unwrap();
        assert_eq!(back.pieces, s.pieces);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(read_form("3 1 2\n0 1\n1 2\n0 1\n"), Err(Error::NotSymmetric(..))));
        assert!(matches!(read_form("3 1 2\n0 1\n1 2\n"), Err(Error::Parse(_))));
        assert!(matches!(read_form("3 1 2\n0 1\n1 2\n2 x\n"), Err(Error::Parse(_))));
        assert!(read_form("3 1 1\n0 1\n7\n").is_err());
        assert!(read_form("4 1 1\n0 1\n1\n").is_err());
        assert!(matches!(read_form_space("3 1 1 2\n0 1\n1\n\n2\n"), Err(Error::LinearlyDependent(_))));
    }

    #[test]
    fn census_json_keys() {
        let k = make_field(3, 1).unwrap();
        let r = CensusReport::compute(&hyperbolic_rank2_space(&k, 4).unwrap(), &Limits::default()).unwrap();
        assert_eq!((r.a, r.b), (26, 0));
        assert!(r.agreement);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["A"], 26);
        assert_eq!(v["rank_histogram"]["2"], 26);
        assert_eq!(v["formula_value"], r.common_isotropic_total.to_string());
    }
}
