//! Falsifiable checks over form spaces, the constructed-instance harness and
//! the verification suites.

mod ward;

use std::collections::BTreeMap;

use rand::Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::construct::{
    distinct_radical_space, hyperbolic_rank2_space, inflate, odd_partition, positive_rank2t_space, spread,
    trace_form_family, trace_space, ward_space,
};
use crate::error::{Error, Result};
use crate::field::{make_field, Field, Gf};
use crate::forms::{upper_len, FormType, SymForm};
use crate::io::{read_form_space, write_form_space, write_partition};
use crate::search::{max_constant_rank_dim, validate_witness, SearchMode, SearchSpec};
use crate::subspace::{check_partition, common_isotropic_count_formula, enumerate_subspaces, FormSpace, Limits, PartitionSpec, VecSubspace};

pub use ward::ward_report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strength {
    /// Every relevant object was enumerated.
    Exhaustive,
    /// Checked on the supplied or generated instances only.
    InstanceVerified,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    pub strength: Strength,
    pub hypotheses: Vec<Hypothesis>,
    pub counts: BTreeMap<String, i64>,
    pub notes: Vec<String>,
    /// Counterexample data for failures.
    pub witnesses: Vec<String>,
    /// The checked form space in the text file format, for re-running.
    pub input: Option<String>,
}

impl CheckResult {
    pub fn new(name: &str) -> CheckResult {
        CheckResult {
            name: name.to_string(),
            params: BTreeMap::new(),
            status: Status::Pass,
            strength: Strength::Exhaustive,
            hypotheses: Vec::new(),
            counts: BTreeMap::new(),
            notes: Vec::new(),
            witnesses: Vec::new(),
            input: None,
        }
    }

    fn for_space(name: &str, m: &FormSpace) -> CheckResult {
        let mut r = CheckResult::new(name);
        r.param("q", json!(m.field().q()));
        r.param("n", json!(m.n()));
        r.param("d", json!(m.dim()));
        r.input = Some(write_form_space(m));
        r
    }

    pub fn param(&mut self, key: &str, v: Value) -> &mut Self {
        self.params.insert(key.to_string(), v);
        self
    }

    pub fn count(&mut self, key: &str, v: impl TryInto<i64>) -> &mut Self {
        self.counts.insert(key.to_string(), v.try_into().unwrap_or(i64::MAX));
        self
    }

    pub fn hypothesis(&mut self, name: &str, holds: bool) -> bool {
        self.hypotheses.push(Hypothesis { name: name.to_string(), holds });
        holds
    }

    pub fn note(&mut self, s: impl Into<String>) -> &mut Self {
        self.notes.push(s.into());
        self
    }

    pub fn fail(&mut self, witness: impl Into<String>) -> &mut Self {
        self.status = Status::Fail;
        self.witnesses.push(witness.into());
        self
    }

    /// Compares a computed count with its expected value, failing on mismatch.
    pub fn expect(&mut self, key: &str, found: impl TryInto<i64>, expected: i64) -> &mut Self {
        let found = found.try_into().unwrap_or(i64::MAX);
        self.count(key, found);
        if found != expected {
            self.fail(format!("{key}: found {found}, expected {expected}"));
        }
        self
    }

    fn skip(&mut self, why: impl Into<String>) -> &mut Self {
        if self.status != Status::Fail {
            self.status = Status::Skipped;
        }
        self.note(why)
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

fn vec_str(v: &[Gf]) -> String {
    let cells: Vec<String> = v.iter().map(|g| g.0.to_string()).collect();
    format!("({})", cells.join(","))
}

fn form_str(g: &SymForm) -> String {
    let rows: Vec<String> = (0..g.n()).map(|i| vec_str(&(0..g.n()).map(|j| g.get(i, j)).collect::<Vec<_>>())).collect();
    format!("[{}]", rows.join(" "))
}

/// Every basis form vanishes on `rad f` for each nonzero `f` in the span.
pub fn check_radical_isotropy(m: &FormSpace, limits: &Limits) -> Result<CheckResult> {
    let mut res = CheckResult::for_space("radical_isotropy", m);
    let Some(r) = m.is_constant_rank(limits)? else {
        res.hypothesis("constant rank", false);
        res.skip("space is not of constant rank");
        return Ok(res);
    };
    res.hypothesis("constant rank", true);
    res.count("rank", r);
    let q = m.field().q() as usize;
    let covered = res.hypothesis("q >= r + 1", q > r);
    let mut violations = 0u64;
    let mut radical_vectors = std::collections::BTreeSet::new();
    let points = m.projective_points(limits)?;
    for (coords, f) in &points {
        let rad = f.radical();
        for v in rad.elements().into_iter().skip(1) {
            radical_vectors.insert(v);
        }
        for g in m.basis() {
            for u in rad.basis() {
                for w in rad.basis() {
                    if !g.eval(u, w).is_zero() {
                        violations += 1;
                        if res.witnesses.len() < 4 && covered {
                            res.fail(format!("f coords {} g {} u {} w {}", vec_str(coords), form_str(g), vec_str(u), vec_str(w)));
                        }
                    }
                }
            }
        }
    }
    res.count("forms_checked", points.len());
    res.count("violations", violations);
    res.count("radical_union_nonzero", radical_vectors.len());
    if !covered {
        if violations == 0 {
            res.note("q < r + 1: conclusion holds outside the hypotheses");
        } else {
            res.skip("q < r + 1: conclusion fails, but the hypotheses do not hold");
        }
    }
    Ok(res)
}

fn even_rank_common_radical_case(n: usize, d: usize) -> bool {
    let m = n / 6;
    match n % 6 {
        0 => m >= 1 && 4 * m <= d && d < 6 * m,
        2 => 4 * m < d && d <= 6 * m + 1,
        4 => 4 * m + 3 <= d && d <= 6 * m + 3,
        _ => false,
    }
}

/// Counts distinct radicals; all nonzero elements must share one radical
/// when a common-radical criterion applies.
pub fn check_common_radical(m: &FormSpace, limits: &Limits) -> Result<CheckResult> {
    let mut res = CheckResult::for_space("common_radical", m);
    let q = m.field().q() as usize;
    let n = m.n();
    let d = m.dim();
    let rank = m.is_constant_rank(limits)?;
    let profile = m.radical_profile(limits)?;
    let t = profile.t();
    res.count("t", t);
    let odd_q = m.field().is_odd();
    let odd_case = match rank {
        Some(r) => {
            res.count("rank", r);
            res.hypothesis("odd rank r, dim = r, q odd, q > r", r % 2 == 1 && d == r && odd_q && q > r)
        }
        None => res.hypothesis("constant rank", false),
    };
    let even_case = res.hypothesis(
        "n even, rank n-1, q >= n, d in the common-radical window",
        n.is_multiple_of(2) && rank == Some(n - 1) && q >= n && odd_q && even_rank_common_radical_case(n, d),
    );
    if odd_case || even_case {
        if t != 1 {
            res.fail(format!("{t} distinct radicals"));
        }
        if odd_case {
            // the common isotropic set is then exactly the common radical
            let common = m.common_isotropic_points(limits)?;
            res.count("common_isotropic_total", common.len());
            if let Some((rad, _)) = profile.groups.first() {
                res.count("radical_size", (q as u64).pow(rad.dim() as u32));
                let iso = VecSubspace::new(m.field(), n, &common);
                if common.len() as u64 != (q as u64).pow(rad.dim() as u32) || iso != *rad {
                    res.fail("common isotropic set differs from the common radical");
                }
            }
        }
    } else {
        res.skip(format!("no common-radical criterion applies; t = {t}"));
    }
    Ok(res)
}

/// Brute-force common isotropic count against the census formula.
pub fn check_count_formula(m: &FormSpace, limits: &Limits) -> Result<CheckResult> {
    let mut res = CheckResult::for_space("count_formula", m);
    let census = m.type_census(limits)?;
    let brute = m.common_isotropic_points(limits)?.len() as i128;
    let formula = common_isotropic_count_formula(m.n(), &census, m.dim(), m.field().q() as u64)?;
    res.count("A", census.positive);
    res.count("B", census.negative);
    res.count("common_isotropic_total", brute as i64);
    res.param("formula_value", json!(formula.to_string()));
    if !formula.is_integer() || *formula.numer() < 0 || *formula.numer() != brute {
        res.fail(format!("formula {formula}, enumeration {brute}"));
    }
    Ok(res)
}

/// Radical intersections in a constant rank 4 space with a negative element.
pub fn check_rank4_radical_intersections(m: &FormSpace, limits: &Limits) -> Result<CheckResult> {
    let mut res = CheckResult::for_space("rank4_radical_intersections", m);
    let q = m.field().q() as usize;
    let n = m.n();
    let rank4 = res.hypothesis("constant rank 4", m.is_constant_rank(limits)? == Some(4));
    let big_q = res.hypothesis("q >= 5, q odd", q >= 5 && m.field().is_odd());
    let dim2 = res.hypothesis("dim >= 2", m.dim() >= 2);
    let big_n = res.hypothesis("n >= 5", n >= 5);
    if !(rank4 && big_q && dim2 && big_n) {
        res.skip("hypotheses not met");
        return Ok(res);
    }
    let points = m.projective_points(limits)?;
    let mut negative = None;
    for (c, g) in &points {
        if g.classify_type()? == FormType::Negative {
            negative = Some((c.clone(), g.clone()));
            break;
        }
    }
    if !res.hypothesis("contains a negative element", negative.is_some()) {
        res.skip("no element of negative type");
        return Ok(res);
    }
    let (fc, f) = negative.unwrap();
    let r = f.radical();
    let mut max_codim = 0;
    for (c, g) in &points {
        if *c == fc {
            continue;
        }
        let s = g.radical();
        let codim = s.dim() - r.intersection(&s).dim();
        max_codim = max_codim.max(codim);
        if codim > 1 {
            res.fail(format!("radicals of {} and {} meet in codimension {codim}", vec_str(&fc), vec_str(c)));
        }
    }
    res.count("max_codim", max_codim);
    // M_U for the hyperplanes U of R
    let m_r = m.radical_containing_coords(&r)?;
    res.count("dim_M_R", m_r.dim());
    let mut hyperplanes = Vec::new();
    for u in enumerate_subspaces(m.field(), r.dim(), r.dim() - 1, limits)? {
        let rows: Vec<Vec<Gf>> = u.basis().iter().map(|c| r.vector_from_coords(c)).collect();
        let u = VecSubspace::new(m.field(), n, &rows);
        hyperplanes.push(m.radical_containing_coords(&u)?);
    }
    res.count("hyperplanes_of_R", hyperplanes.len());
    let max_mi = hyperplanes.iter().map(VecSubspace::dim).max().unwrap_or(0);
    res.count("max_dim_M_i", max_mi);
    if max_mi > 4 || m_r.dim() > 4 {
        res.fail(format!("dim M_i up to {max_mi}, dim M_R {}", m_r.dim()));
    }
    for i in 0..hyperplanes.len() {
        for j in i + 1..hyperplanes.len() {
            if hyperplanes[i].intersection(&hyperplanes[j]) != m_r {
                res.fail(format!("M_{i} and M_{j} meet outside M_R"));
            }
        }
    }
    Ok(res)
}

/// The smallest applicable dimension bound and the criteria giving it.
pub fn dimension_bound(q: u64, n: usize, r: usize, mode: SearchMode) -> Option<(usize, Vec<&'static str>)> {
    let odd = q % 2 == 1;
    let mut bounds: Vec<(usize, &'static str)> = Vec::new();
    if odd && n >= 3 && n % 2 == 1 && r == n - 1 && q >= n as u64 {
        bounds.push((n - 1, "odd n, rank n-1, q >= n"));
    }
    if odd && r == 4 && q >= 5 && n >= 5 {
        bounds.push((n - 1, "rank 4, q >= 5, n >= 5"));
    }
    if odd && r == 2 && n >= 2 && matches!(mode, SearchMode::AllHyperbolic | SearchMode::AllPositive) {
        bounds.push((n - 1, "rank 2, hyperbolic elements"));
    }
    if odd && mode == SearchMode::DistinctRadicals && n >= 3 && n % 2 == 1 && r == n - 1 && q >= n as u64 {
        bounds.push((n.div_ceil(2), "distinct radicals, odd n, rank n-1, q >= n"));
    }
    let best = bounds.iter().map(|b| b.0).min()?;
    Some((best, bounds.iter().filter(|b| b.0 == best).map(|b| b.1).collect()))
}

fn mode_name(mode: SearchMode) -> Value {
    serde_json::to_value(mode).unwrap_or(Value::Null)
}

/// Runs the search and compares its best dimension with the applicable bound.
pub fn check_dimension_bound(spec: &SearchSpec, limits: &Limits) -> Result<CheckResult> {
    let q = spec.field.q() as u64;
    let mut res = CheckResult::new("dimension_bound");
    res.param("q", json!(q)).param("n", json!(spec.n)).param("r", json!(spec.rank));
    res.param("mode", mode_name(spec.mode)).param("budget", json!(spec.budget));
    res.param("exhaustive_requested", json!(spec.exhaustive));
    let out = max_constant_rank_dim(spec)?;
    res.count("best_dim", out.best_dim).count("nodes_visited", out.nodes_visited);
    res.strength = if out.exhaustive_proof { Strength::Exhaustive } else { Strength::InstanceVerified };
    if let Some(w) = &out.witness {
        res.input = Some(write_form_space(w));
        if out.best_dim <= 6 && !validate_witness(w, spec.rank, spec.mode, limits)? {
            res.fail("search witness fails independent validation");
        }
    }
    match dimension_bound(q, spec.n, spec.rank, spec.mode) {
        Some((bound, names)) => {
            for name in names {
                res.hypothesis(name, true);
            }
            res.count("bound", bound);
            if out.best_dim > bound {
                res.fail(format!("found dimension {} above bound {bound}", out.best_dim));
            }
        }
        None => {
            res.hypothesis("a dimension bound applies", false);
            res.skip(format!("no bound applies; best dimension found {} (lower bound)", out.best_dim));
        }
    }
    if !out.exhaustive_proof {
        res.note("search did not cover the full tree");
    }
    Ok(res)
}

/// Applies the dimension bound to a given instance.
pub fn check_bound_on_instance(m: &FormSpace, mode: SearchMode, limits: &Limits) -> Result<CheckResult> {
    let mut res = CheckResult::for_space("bound_on_instance", m);
    res.strength = Strength::InstanceVerified;
    res.param("mode", mode_name(mode));
    let Some(r) = m.is_constant_rank(limits)? else {
        res.hypothesis("constant rank", false);
        res.skip("space is not of constant rank");
        return Ok(res);
    };
    if !validate_witness(m, r, mode, limits)? {
        res.hypothesis("mode predicate", false);
        res.skip("space does not satisfy the mode predicate");
        return Ok(res);
    }
    match dimension_bound(m.field().q() as u64, m.n(), r, mode) {
        Some((bound, names)) => {
            for name in names {
                res.hypothesis(name, true);
            }
            res.count("bound", bound);
            if m.dim() > bound {
                res.fail(format!("dimension {} above bound {bound}", m.dim()));
            }
        }
        None => {
            res.hypothesis("a dimension bound applies", false);
            res.skip("no bound applies");
        }
    }
    Ok(res)
}

/// Checks a subspace partition exhaustively.
pub fn check_partition_result(name: &str, p: &PartitionSpec, limits: &Limits) -> Result<CheckResult> {
    let mut res = CheckResult::new(name);
    res.param("q", json!(p.field.q())).param("n", json!(p.ambient_dim));
    let rep = check_partition(p, limits)?;
    res.count("t", rep.t).count("uncovered", rep.uncovered).count("overcovered", rep.overcovered);
    if let Some(b) = rep.min_bound {
        res.count("min_bound", b);
    }
    let mut dims: BTreeMap<usize, u64> = BTreeMap::new();
    for d in &rep.piece_dims {
        *dims.entry(*d).or_default() += 1;
    }
    for (d, c) in dims {
        res.count(&format!("pieces_of_dim_{d}"), c);
    }
    if !rep.valid {
        res.fail(write_partition(p));
    } else if rep.min_bound_satisfied == Some(false) {
        res.fail("valid partition below the minimum piece count");
    }
    Ok(res)
}

/// An `m`-dimensional constant rank `n-1` space with `(q^m-1)/(q-1)`
/// distinct line radicals, each `<w^-1>`.
pub fn check_distinct_radical_construction(field: &Field, n: usize, m: usize, limits: &Limits) -> Result<CheckResult> {
    let d = distinct_radical_space(field, n, m)?;
    let mut res = CheckResult::for_space("distinct_radical_construction", &d.space);
    res.param("m", json!(m));
    let q = field.q() as i64;
    res.expect("dim", d.space.dim(), m as i64);
    res.expect("rank", d.space.is_constant_rank(limits)?.map_or(-1, |r| r as i64), n as i64 - 1);
    let lines = (q.pow(m as u32) - 1) / (q - 1);
    let profile = d.space.radical_profile(limits)?;
    res.expect("t", profile.t(), lines);
    res.expect("line_radicals", profile.groups.iter().filter(|g| g.0.dim() == 1).count(), lines);
    let mut mismatched = 0;
    for &w in &d.setup.subfield[1..] {
        if d.form_for(w).radical() != d.expected_radical(w)? {
            mismatched += 1;
        }
    }
    res.expect("radical_mismatches", mismatched, 0);
    // the elements f'_{zuw} are exactly the span
    let mut outside = 0;
    for &w in &d.setup.subfield[1..] {
        if !d.space.contains(&d.form_for(w)) {
            outside += 1;
        }
    }
    res.expect("elements_outside_span", outside, 0);
    Ok(res)
}

/// Constant rank and type census of a constructed space.
pub fn check_construction_census(
    name: &str,
    m: &FormSpace,
    dim: usize,
    rank: usize,
    census: (u64, u64),
    limits: &Limits,
) -> Result<CheckResult> {
    let mut res = CheckResult::for_space(name, m);
    res.expect("dim", m.dim(), dim as i64);
    res.expect("rank", m.is_constant_rank(limits)?.map_or(-1, |r| r as i64), rank as i64);
    let c = m.type_census(limits)?;
    res.expect("A", c.positive, census.0 as i64);
    res.expect("B", c.negative, census.1 as i64);
    Ok(res)
}

/// Re-runs a space-based check from its serialized input.
pub fn rerun(result: &CheckResult, limits: &Limits) -> Result<Status> {
    let text = result.input.as_deref().ok_or_else(|| Error::Unsupported("result carries no input".into()))?;
    let m = read_form_space(text)?;
    let r = match result.name.as_str() {
        "radical_isotropy" => check_radical_isotropy(&m, limits)?,
        "common_radical" => check_common_radical(&m, limits)?,
        "count_formula" => check_count_formula(&m, limits)?,
        "rank4_radical_intersections" => check_rank4_radical_intersections(&m, limits)?,
        other => return Err(Error::Unsupported(format!("cannot re-run `{other}` from its input"))),
    };
    Ok(r.status)
}

/// A uniformly random `d`-dimensional subspace of `Symm(F_q^n)`.
pub fn random_form_space(field: &Field, n: usize, d: usize, rng: &mut impl Rng) -> Result<FormSpace> {
    let len = upper_len(n);
    if d == 0 || d > len {
        return Err(Error::DimensionMismatch(format!("no {d}-dimensional subspace of a {len}-dimensional space")));
    }
    let q = field.q();
    loop {
        let forms: Vec<SymForm> = (0..d)
            .map(|_| {
                let c: Vec<Gf> = (0..len).map(|_| Gf(rng.gen_range(0..q))).collect();
                SymForm::from_upper(field, n, &c)
            })
            .collect();
        if let Ok(m) = FormSpace::from_basis(field, n, &forms) {
            return Ok(m);
        }
    }
}

/// Named constructed spaces used by the harness.
pub fn constructed_spaces() -> Result<Vec<(String, FormSpace)>> {
    let mut out = Vec::new();
    for q in [3u64, 5, 7] {
        let k = make_field(q, 1)?;
        for n in [3usize, 4, 5] {
            out.push((format!("hyperbolic({q},{n})"), hyperbolic_rank2_space(&k, n)?));
        }
    }
    let k3 = make_field(3, 1)?;
    let k5 = make_field(5, 1)?;
    out.push(("positive2t(3,4,2)".into(), positive_rank2t_space(&k3, 4, 2)?));
    out.push(("positive2t(5,5,2)".into(), positive_rank2t_space(&k5, 5, 2)?));
    out.push(("positive2t(3,5,1)".into(), positive_rank2t_space(&k3, 5, 1)?));
    for (q, n) in [(3u64, 2usize), (3, 3), (5, 3), (3, 4)] {
        let k = make_field(q, 1)?;
        out.push((format!("trace({q},{n})"), trace_space(&k, n)?.1));
    }
    for (q, n, m) in [(3u64, 3usize, 2usize), (5, 3, 2), (3, 5, 3)] {
        let k = make_field(q, 1)?;
        out.push((format!("distinct_radical({q},{n},{m})"), distinct_radical_space(&k, n, m)?.space));
    }
    for (q, r, n) in [(5u64, 3usize, 4usize), (5, 3, 5), (7, 3, 4), (3, 2, 4), (5, 4, 5)] {
        let k = make_field(q, 1)?;
        out.push((format!("inflate(trace_family({q},{r}),{n})"), inflate(&trace_form_family(&k, r)?, n)?));
    }
    out.push(("ward".into(), ward_space()?.space));
    Ok(out)
}

/// Options for the verification suites.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub limits: Limits,
    /// Node budget of each randomized search in the bounds suite.
    pub random_budget: u64,
    pub rng_seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { limits: Limits::default(), random_budget: 1_000_000, rng_seed: 0 }
    }
}

pub fn core_suite(opts: &SuiteOptions) -> Result<Vec<CheckResult>> {
    let lim = &opts.limits;
    let mut out = Vec::new();
    for (name, m) in constructed_spaces()? {
        for mut r in [check_count_formula(&m, lim)?, check_radical_isotropy(&m, lim)?, check_common_radical(&m, lim)?] {
            r.param("instance", json!(name));
            out.push(r);
        }
        if m.is_constant_rank(lim)? == Some(4) {
            let mut r = check_rank4_radical_intersections(&m, lim)?;
            r.param("instance", json!(name));
            out.push(r);
        }
    }
    for (q, n, m) in [(3u64, 3usize, 2usize), (5, 3, 2), (3, 5, 3), (7, 5, 3), (3, 8, 3)] {
        out.push(check_distinct_radical_construction(&make_field(q, 1)?, n, m, lim)?);
    }
    for q in [3u64, 5, 7] {
        let k = make_field(q, 1)?;
        for n in [3usize, 4, 5] {
            let m = hyperbolic_rank2_space(&k, n)?;
            out.push(check_construction_census("hyperbolic_census", &m, n - 1, 2, (q.pow(n as u32 - 1) - 1, 0), lim)?);
        }
    }
    for (q, n, t) in [(3u64, 4usize, 2usize), (5, 5, 2)] {
        let m = positive_rank2t_space(&make_field(q, 1)?, n, t)?;
        out.push(check_construction_census("positive_census", &m, n - t, 2 * t, (q.pow((n - t) as u32) - 1, 0), lim)?);
    }
    let k3 = make_field(3, 1)?;
    out.push(check_partition_result("spread", &spread(&k3, 2)?, lim)?);
    out.push(check_partition_result("odd_partition", &odd_partition(&k3, 1)?, lim)?);
    Ok(out)
}

pub fn ward_suite(opts: &SuiteOptions) -> Result<Vec<CheckResult>> {
    let w = ward_space()?;
    Ok(vec![
        ward_report()?,
        check_radical_isotropy(&w.space, &opts.limits)?,
        check_common_radical(&w.space, &opts.limits)?,
        check_count_formula(&w.space, &opts.limits)?,
    ])
}

pub fn bounds_suite(opts: &SuiteOptions) -> Result<Vec<CheckResult>> {
    let lim = &opts.limits;
    let k3 = make_field(3, 1)?;
    let k5 = make_field(5, 1)?;
    let mut out = Vec::new();
    out.push(check_dimension_bound(&SearchSpec::new(&k3, 2, 2, SearchMode::AllHyperbolic), lim)?);
    out.push(check_dimension_bound(&SearchSpec::new(&k5, 3, 2, SearchMode::Plain), lim)?);
    let randomized = |field: &Field, n, r, mode, seed: FormSpace| {
        let mut s = SearchSpec::new(field, n, r, mode);
        s.exhaustive = false;
        s.budget = opts.random_budget;
        s.seed = Some(seed);
        s.rng_seed = opts.rng_seed;
        s
    };
    out.push(check_dimension_bound(&randomized(&k3, 5, 4, SearchMode::Plain, ward_space()?.space), lim)?);
    out.push(check_dimension_bound(&randomized(&k5, 6, 4, SearchMode::Plain, positive_rank2t_space(&k5, 6, 2)?), lim)?);
    out.push(check_dimension_bound(
        &randomized(&k5, 5, 4, SearchMode::DistinctRadicals, distinct_radical_space(&k5, 5, 3)?.space),
        lim,
    )?);
    // bounds on generated instances meeting each criterion
    let k7 = make_field(7, 1)?;
    let instances: Vec<(FormSpace, SearchMode)> = vec![
        (positive_rank2t_space(&k5, 5, 2)?, SearchMode::Plain),
        (positive_rank2t_space(&k5, 6, 2)?, SearchMode::Plain),
        (inflate(&trace_form_family(&k5, 4)?, 5)?, SearchMode::Plain),
        (inflate(&trace_form_family(&k5, 4)?, 6)?, SearchMode::Plain),
        (distinct_radical_space(&k5, 5, 3)?.space, SearchMode::DistinctRadicals),
        (distinct_radical_space(&k7, 5, 3)?.space, SearchMode::DistinctRadicals),
        (distinct_radical_space(&k5, 3, 2)?.space, SearchMode::DistinctRadicals),
        (hyperbolic_rank2_space(&k5, 4)?, SearchMode::AllHyperbolic),
        (hyperbolic_rank2_space(&k3, 5)?, SearchMode::AllHyperbolic),
    ];
    for (m, mode) in instances {
        out.push(check_bound_on_instance(&m, mode, lim)?);
    }
    // even-n common radical criterion: a 4-dim subspace of rank 5 forms on F_7^6
    let family = trace_form_family(&k7, 5)?;
    let sub = FormSpace::from_basis(&k7, 5, &family.basis()[..4])?;
    let mut r = check_common_radical(&inflate(&sub, 6)?, lim)?;
    r.strength = Strength::InstanceVerified;
    out.push(r);
    Ok(out)
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<Vec<CheckResult>> {
    match name {
        "core" => core_suite(opts),
        "ward" => ward_suite(opts),
        "bounds" => bounds_suite(opts),
        "all" => {
            let mut v = core_suite(opts)?;
            v.extend(ward_suite(opts)?);
            v.extend(bounds_suite(opts)?);
            Ok(v)
        }
        other => Err(Error::Parse(format!("unknown suite `{other}`"))),
    }
}
