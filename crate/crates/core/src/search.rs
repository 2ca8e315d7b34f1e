//! Search for large constant-rank subspaces of `Symm(V)`.
//!
//! The exhaustive mode walks reduced row echelon bases over the
//! upper-triangle coordinates. A basis is grown by adding a row whose pivot
//! lies left of every existing pivot, so each subspace is reached through
//! exactly one path. The randomized mode grows bases from sampled rank-`r`
//! forms and backtracks when stuck.

use std::collections::HashSet;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, Gf};
use crate::forms::{upper_len, FormType, SymForm};
use crate::linalg::rank_in_place;
use crate::subspace::{FormSpace, Limits};

/// Forms per precomputed evaluation table, at most.
const TABLE_LIMIT: u64 = 1 << 22;
/// Root units evaluated per parallel batch.
const BATCH: usize = 1024;
/// Independent streams of the randomized mode.
pub const RANDOM_STREAMS: u64 = 8;
/// Consecutive rejections before the randomized mode drops a basis element.
const PATIENCE: u64 = 256;

const REJECT: u64 = u64::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    Plain,
    /// `r = 2` and every nonzero element hyperbolic.
    AllHyperbolic,
    /// Even `r` and every nonzero element of positive type.
    AllPositive,
    /// Nonzero elements spanning different lines have different radicals.
    DistinctRadicals,
}

impl FromStr for SearchMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "plain" => Ok(SearchMode::Plain),
            "all_hyperbolic" => Ok(SearchMode::AllHyperbolic),
            "all_positive" => Ok(SearchMode::AllPositive),
            "distinct_radicals" => Ok(SearchMode::DistinctRadicals),
            _ => Err(Error::Parse(format!("unknown search mode `{s}`"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchSpec {
    pub field: Field,
    pub n: usize,
    pub rank: usize,
    pub mode: SearchMode,
    /// Maximum number of candidate extensions tested.
    pub budget: u64,
    /// Canonical tree walk when true, randomized growth otherwise.
    pub exhaustive: bool,
    /// A known witness; the search then only reports strictly larger ones.
    pub seed: Option<FormSpace>,
    pub rng_seed: u64,
    /// Worker threads; 0 uses the rayon default. Never affects the outcome.
    pub jobs: usize,
}

impl SearchSpec {
    pub fn new(field: &Field, n: usize, rank: usize, mode: SearchMode) -> SearchSpec {
        SearchSpec {
            field: field.clone(),
            n,
            rank,
            mode,
            budget: 10_000_000,
            exhaustive: true,
            seed: None,
            rng_seed: 0,
            jobs: 0,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.rank == 0 || self.rank > self.n {
            return Err(Error::Unsupported(format!("rank {} on F_q^{}", self.rank, self.n)));
        }
        match self.mode {
            SearchMode::AllHyperbolic if self.rank != 2 => {
                return Err(Error::Unsupported("all-hyperbolic search needs rank 2".into()))
            }
            SearchMode::AllPositive if self.rank % 2 == 1 => {
                return Err(Error::Unsupported("all-positive search needs even rank".into()))
            }
            _ => {}
        }
        if self.mode != SearchMode::Plain && !self.field.is_odd() {
            return Err(Error::EvenCharUnsupported);
        }
        if let Some(seed) = &self.seed {
            if seed.n() != self.n || seed.field().q() != self.field.q() {
                return Err(Error::DimensionMismatch("seed lives in a different Symm(V)".into()));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub best_dim: usize,
    pub witness: Option<FormSpace>,
    /// True only if the whole canonical tree was walked within budget.
    pub exhaustive_proof: bool,
    pub nodes_visited: u64,
}

/// Per-form acceptance: `REJECT`, or a radical key (0 outside the
/// distinct-radicals mode).
struct Evaluator {
    field: Field,
    n: usize,
    rank: usize,
    mode: SearchMode,
    len: usize,
    table: Option<Vec<u64>>,
}

impl Evaluator {
    fn new(spec: &SearchSpec) -> Result<Evaluator> {
        let n = spec.n;
        let len = upper_len(n);
        let q = spec.field.q() as u128;
        if spec.mode == SearchMode::DistinctRadicals {
            let digits = (n * (n - spec.rank)) as u32;
            if q.checked_pow(digits).is_none_or(|v| v >= REJECT as u128) {
                return Err(Error::Unsupported("radical keys do not fit in 64 bits".into()));
            }
        }
        let mut ev = Evaluator { field: spec.field.clone(), n, rank: spec.rank, mode: spec.mode, len, table: None };
        let size = q.checked_pow(len as u32).unwrap_or(u128::MAX);
        if size <= TABLE_LIMIT as u128 {
            let table: Vec<u64> = (0..size as u64)
                .into_par_iter()
                .map(|idx| ev.eval_direct(&ev.decode(idx)))
                .collect();
            ev.table = Some(table);
        }
        Ok(ev)
    }

    fn q(&self) -> u64 {
        self.field.q() as u64
    }

    fn decode(&self, mut idx: u64) -> Vec<Gf> {
        let q = self.q();
        (0..self.len)
            .map(|_| {
                let d = idx % q;
                idx /= q;
                Gf(d as u32)
            })
            .collect()
    }

    fn encode(&self, v: &[Gf]) -> u64 {
        let q = self.q();
        v.iter().rev().fold(0, |acc, g| acc * q + g.0 as u64)
    }

    fn eval(&self, v: &[Gf]) -> u64 {
        match &self.table {
            Some(t) => t[self.encode(v) as usize],
            None => self.eval_direct(v),
        }
    }

    fn eval_direct(&self, v: &[Gf]) -> u64 {
        let n = self.n;
        let mut gram = vec![Gf::ZERO; n * n];
        let mut idx = 0;
        for i in 0..n {
            for j in i..n {
                gram[i * n + j] = v[idx];
                gram[j * n + i] = v[idx];
                idx += 1;
            }
        }
        let mut buf = gram.clone();
        if rank_in_place(&self.field, &mut buf, n, n) != self.rank {
            return REJECT;
        }
        let form = SymForm::from_gram_unchecked(&self.field, n, gram);
        match self.mode {
            SearchMode::Plain => 0,
            SearchMode::AllHyperbolic | SearchMode::AllPositive => match form.type_from_diagonal() {
                Ok(FormType::Positive) => 0,
                _ => REJECT,
            },
            SearchMode::DistinctRadicals => {
                let q = self.q();
                form.radical().basis().iter().flatten().fold(0, |acc, g| acc * q + g.0 as u64)
            }
        }
    }
}

/// Current basis with its full span and the radical keys of its lines.
#[derive(Clone)]
struct State {
    basis: Vec<Vec<Gf>>,
    pivots: Vec<usize>,
    span: Vec<Vec<Gf>>,
    keys: HashSet<u64>,
    // Lengths of `span` before each push, to undo.
    marks: Vec<(usize, Vec<u64>)>,
}

impl State {
    fn new(len: usize) -> State {
        State { basis: Vec::new(), pivots: Vec::new(), span: vec![vec![Gf::ZERO; len]], keys: HashSet::new(), marks: Vec::new() }
    }

    /// Radical keys of `c + m` for all `m` in the span, or `None` if one of
    /// them is rejected.
    fn gate(&self, ev: &Evaluator, c: &[Gf]) -> Option<Vec<u64>> {
        let f = &ev.field;
        let distinct = ev.mode == SearchMode::DistinctRadicals;
        let mut new_keys = Vec::new();
        let mut w = vec![Gf::ZERO; c.len()];
        for m in &self.span {
            for i in 0..c.len() {
                w[i] = f.add(c[i], m[i]);
            }
            let key = ev.eval(&w);
            if key == REJECT {
                return None;
            }
            if distinct {
                if self.keys.contains(&key) || new_keys.contains(&key) {
                    return None;
                }
                new_keys.push(key);
            }
        }
        Some(new_keys)
    }

    fn push(&mut self, ev: &Evaluator, c: Vec<Gf>, pivot: usize, keys: Vec<u64>) {
        let f = &ev.field;
        let old = self.span.len();
        for a in f.elements().skip(1) {
            for i in 0..old {
                let v: Vec<Gf> = self.span[i].iter().zip(&c).map(|(&m, &x)| f.add(m, f.mul(a, x))).collect();
                self.span.push(v);
            }
        }
        self.keys.extend(keys.iter().copied());
        self.marks.push((old, keys));
        self.basis.push(c);
        self.pivots.push(pivot);
    }

    fn pop(&mut self) {
        let (old, keys) = self.marks.pop().expect("pop on empty state");
        self.span.truncate(old);
        for k in keys {
            self.keys.remove(&k);
        }
        self.basis.pop();
        self.pivots.pop();
    }
}

fn leading_index(v: &[Gf]) -> usize {
    v.iter().position(|g| !g.is_zero()).unwrap_or(v.len())
}

/// Result of walking one root subtree.
#[derive(Clone, Debug)]
struct UnitResult {
    best: usize,
    basis: Vec<Vec<Gf>>,
    nodes: u64,
    complete: bool,
}

struct Walker<'a> {
    ev: &'a Evaluator,
    budget: u64,
    nodes: u64,
    aborted: bool,
    best: usize,
    best_basis: Vec<Vec<Gf>>,
    state: State,
}

impl Walker<'_> {
    /// Tries every row with leading index `p` whose free entries avoid the
    /// current pivots, in base-q counter order.
    fn try_pivot(&mut self, p: usize, recurse: bool) {
        let len = self.ev.len;
        let free: Vec<usize> = (p + 1..len).filter(|i| !self.state.pivots.contains(i)).collect();
        let q = self.ev.q() as u32;
        let mut digits = vec![0u32; free.len()];
        loop {
            if self.nodes >= self.budget {
                self.aborted = true;
                return;
            }
            self.nodes += 1;
            let mut c = vec![Gf::ZERO; len];
            c[p] = Gf::ONE;
            for (&i, &d) in free.iter().zip(&digits) {
                c[i] = Gf(d);
            }
            if let Some(keys) = self.state.gate(self.ev, &c) {
                self.state.push(self.ev, c, p, keys);
                if recurse {
                    self.extend();
                } else {
                    self.record();
                }
                self.state.pop();
                if self.aborted {
                    return;
                }
            }
            // next assignment; the last free position is the least significant
            let mut i = digits.len();
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < q {
                    break;
                }
                digits[i] = 0;
            }
        }
    }

    fn record(&mut self) {
        if self.state.basis.len() > self.best {
            self.best = self.state.basis.len();
            self.best_basis = self.state.basis.clone();
        }
    }

    fn extend(&mut self) {
        self.record();
        let d = self.state.basis.len();
        let p_min = *self.state.pivots.last().unwrap_or(&self.ev.len);
        for p in (0..p_min).rev() {
            // every later row needs its own pivot left of p
            if d + 1 + p <= self.best {
                break;
            }
            self.try_pivot(p, true);
            if self.aborted {
                return;
            }
        }
    }
}

/// Root rows in walk order: leading index descending, then the free part
/// as a base-q counter.
fn root_units(len: usize, q: u64) -> impl Iterator<Item = (usize, u64)> {
    (0..len).rev().flat_map(move |p| (0..q.pow((len - 1 - p) as u32)).map(move |a| (p, a)))
}

fn run_unit(ev: &Evaluator, unit: (usize, u64), floor: usize, budget: u64) -> UnitResult {
    let (p, a) = unit;
    let len = ev.len;
    let q = ev.q();
    let mut w = Walker {
        ev,
        budget,
        nodes: 0,
        aborted: false,
        best: floor,
        best_basis: Vec::new(),
        state: State::new(len),
    };
    if p < floor {
        return UnitResult { best: floor, basis: Vec::new(), nodes: 0, complete: true };
    }
    if budget == 0 {
        return UnitResult { best: floor, basis: Vec::new(), nodes: 0, complete: false };
    }
    w.nodes = 1;
    let mut c = vec![Gf::ZERO; len];
    c[p] = Gf::ONE;
    let mut rest = a;
    for i in (p + 1..len).rev() {
        c[i] = Gf((rest % q) as u32);
        rest /= q;
    }
    if let Some(keys) = w.state.gate(ev, &c) {
        w.state.push(ev, c, p, keys);
        w.extend();
    }
    UnitResult { best: w.best, basis: w.best_basis, nodes: w.nodes, complete: !w.aborted }
}

fn exhaustive(ev: &Evaluator, spec: &SearchSpec, floor: usize) -> (usize, Vec<Vec<Gf>>, u64, bool) {
    let mut best = floor;
    let mut best_basis = Vec::new();
    let mut used = 0u64;
    let mut units = root_units(ev.len, ev.q()).peekable();
    while units.peek().is_some() {
        let batch: Vec<(usize, u64)> = units.by_ref().take(BATCH).collect();
        let remaining = spec.budget - used;
        let results: Vec<UnitResult> = batch.par_iter().map(|&u| run_unit(ev, u, floor, remaining)).collect();
        for (unit, mut r) in batch.into_iter().zip(results) {
            let left = spec.budget - used;
            let truncated = !r.complete || r.nodes > left;
            if truncated && r.nodes > left {
                r = run_unit(ev, unit, floor, left);
            }
            used += r.nodes;
            if r.best > best {
                best = r.best;
                best_basis = r.basis;
            }
            if truncated {
                return (best, best_basis, used, false);
            }
        }
    }
    (best, best_basis, used, true)
}

fn random_candidate(ev: &Evaluator, rng: &mut ChaCha8Rng) -> Vec<Gf> {
    let f = &ev.field;
    let n = ev.n;
    let q = ev.q() as u32;
    // P D P^T with r nonzero diagonal entries
    let p: Vec<Gf> = (0..n * ev.rank).map(|_| Gf(rng.gen_range(0..q))).collect();
    let d: Vec<Gf> = (0..ev.rank).map(|_| Gf(rng.gen_range(1..q))).collect();
    let mut out = Vec::with_capacity(ev.len);
    for i in 0..n {
        for j in i..n {
            let mut acc = Gf::ZERO;
            for k in 0..ev.rank {
                acc = f.add(acc, f.mul(d[k], f.mul(p[i * ev.rank + k], p[j * ev.rank + k])));
            }
            out.push(acc);
        }
    }
    out
}

fn random_stream(ev: &Evaluator, seed_rows: &[Vec<Gf>], budget: u64, rng: &mut ChaCha8Rng) -> (usize, Vec<Vec<Gf>>, u64) {
    let mut state = State::new(ev.len);
    for row in seed_rows {
        let keys = state.gate(ev, row).expect("seed was validated");
        state.push(ev, row.clone(), leading_index(row), keys);
    }
    let mut best = state.basis.len();
    let mut best_basis = state.basis.clone();
    let mut nodes = 0;
    let mut fails = 0;
    while nodes < budget {
        nodes += 1;
        let c = random_candidate(ev, rng);
        match state.gate(ev, &c) {
            Some(keys) => {
                let p = leading_index(&c);
                state.push(ev, c, p, keys);
                fails = 0;
                if state.basis.len() > best {
                    best = state.basis.len();
                    best_basis = state.basis.clone();
                }
            }
            None => {
                fails += 1;
                if fails >= PATIENCE && !state.basis.is_empty() {
                    state.pop();
                    fails = 0;
                }
            }
        }
    }
    (best, best_basis, nodes)
}

fn randomized(ev: &Evaluator, spec: &SearchSpec, seed_rows: &[Vec<Gf>]) -> (usize, Vec<Vec<Gf>>, u64) {
    let streams: Vec<u64> = (0..RANDOM_STREAMS).collect();
    let results: Vec<(usize, Vec<Vec<Gf>>, u64)> = streams
        .par_iter()
        .map(|&s| {
            let share = spec.budget / RANDOM_STREAMS + u64::from(s < spec.budget % RANDOM_STREAMS);
            let mut rng = ChaCha8Rng::seed_from_u64(spec.rng_seed);
            rng.set_stream(s);
            random_stream(ev, seed_rows, share, &mut rng)
        })
        .collect();
    let mut best = 0;
    let mut best_basis = Vec::new();
    let mut nodes = 0;
    for (b, basis, used) in results {
        nodes += used;
        if b > best {
            best = b;
            best_basis = basis;
        }
    }
    (best, best_basis, nodes)
}

/// Largest constant rank `r` subspace satisfying the mode predicate.
pub fn max_constant_rank_dim(spec: &SearchSpec) -> Result<SearchOutcome> {
    spec.validate()?;
    let run = || -> Result<SearchOutcome> {
        let ev = Evaluator::new(spec)?;
        let seed_rows: Vec<Vec<Gf>> = match &spec.seed {
            Some(s) => {
                let rows: Vec<Vec<Gf>> = s.basis().iter().map(|g| g.upper()).collect();
                let mut st = State::new(ev.len);
                for row in &rows {
                    let keys = st.gate(&ev, row).ok_or_else(|| {
                        Error::Unsupported("seed is not constant rank or fails the mode predicate".into())
                    })?;
                    st.push(&ev, row.clone(), leading_index(row), keys);
                }
                rows
            }
            None => Vec::new(),
        };
        let floor = seed_rows.len();
        let (best, rows, nodes, proof) = if spec.exhaustive {
            exhaustive(&ev, spec, floor)
        } else {
            let (b, r, n) = randomized(&ev, spec, &seed_rows);
            (b, r, n, false)
        };
        let rows = if rows.is_empty() && best == floor { seed_rows } else { rows };
        let witness = if rows.is_empty() {
            None
        } else {
            let forms: Vec<SymForm> = rows.iter().map(|r| SymForm::from_upper(&spec.field, spec.n, r)).collect();
            Some(FormSpace::from_basis(&spec.field, spec.n, &forms)?)
        };
        Ok(SearchOutcome { best_dim: best, witness, exhaustive_proof: proof, nodes_visited: nodes })
    };
    if spec.jobs == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(spec.jobs)
            .build()
            .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?
            .install(run)
    }
}

/// True iff `candidate + m` has rank `r` for every `m` in `partial`.
pub fn incremental_rank_gate(partial: &FormSpace, candidate: &SymForm, r: usize) -> Result<bool> {
    for m in partial.span_elements(&Limits::default())? {
        if candidate.add(&m).rank() != r {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Re-checks a witness through the subspace module.
pub fn validate_witness(space: &FormSpace, rank: usize, mode: SearchMode, limits: &Limits) -> Result<bool> {
    if space.is_constant_rank(limits)? != Some(rank) {
        return Ok(false);
    }
    match mode {
        SearchMode::Plain => Ok(true),
        SearchMode::AllHyperbolic => {
            for g in space.span_elements(limits)?.skip(1) {
                if !g.is_hyperbolic_rank2()? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        SearchMode::AllPositive => {
            let census = space.type_census(limits)?;
            Ok(census.negative == 0)
        }
        SearchMode::DistinctRadicals => {
            let points = space.projective_points(limits)?.len();
            Ok(space.radical_profile(limits)?.groups.len() == points)
        }
    }
}
