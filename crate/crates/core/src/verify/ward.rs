//! Statistics of the 5-dimensional constant rank 4 space over `F_3`.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde_json::json;

use super::{CheckResult, Status};
use crate::construct::ward_space;
use crate::error::Result;
use crate::field::Gf;
use crate::forms::{FormType, SymForm};
use crate::linalg::Matrix;
use crate::subspace::{enumerate_subspaces, Limits, VecSubspace};

fn closure(f: &crate::field::FieldCtx, gens: &[Matrix]) -> Vec<Matrix> {
    let id = Matrix::identity(gens[0].rows());
    let mut seen: HashSet<Matrix> = HashSet::from([id.clone()]);
    let mut order = vec![id];
    let mut i = 0;
    while i < order.len() {
        for g in gens {
            let h = order[i].mul(f, g);
            if seen.insert(h.clone()) {
                order.push(h);
            }
        }
        i += 1;
    }
    order
}

fn orbit_sizes<T: Clone + Ord>(items: &[T], act: impl Fn(&T) -> Vec<T>) -> (BTreeMap<usize, i64>, Vec<BTreeSet<T>>) {
    let mut seen: BTreeSet<T> = BTreeSet::new();
    let mut sizes: BTreeMap<usize, i64> = BTreeMap::new();
    let mut orbits = Vec::new();
    for x in items {
        if seen.contains(x) {
            continue;
        }
        let orbit: BTreeSet<T> = act(x).into_iter().collect();
        seen.extend(orbit.iter().cloned());
        *sizes.entry(orbit.len()).or_default() += 1;
        orbits.push(orbit);
    }
    (sizes, orbits)
}

/// Recomputes every statistic and fails on any deviation from the
/// expected values.
pub fn ward_report() -> Result<CheckResult> {
    let lim = Limits::default();
    let w = ward_space()?;
    let k = &w.base;
    let m = &w.space;
    let mut res = CheckResult::new("ward_report");
    res.param("q", json!(3)).param("n", json!(5));

    res.expect("dim", m.dim(), 5);
    res.expect("constant_rank", m.is_constant_rank(&lim)?.map_or(-1, |r| r as i64), 4);
    let phi1 = w.phi(Gf::ONE);
    res.expect("phi1_rank", phi1.rank(), 4);
    let negative = phi1.classify_type()? == FormType::Negative;
    res.expect("phi1_negative", negative as i64, 1);
    res.expect("phi1_isotropic_nonzero", phi1.isotropic_count(1 << 20)? - 1, 62);

    let common = m.common_isotropic_points(&lim)?;
    res.expect("common_isotropic_nonzero", common.len() - 1, 22);
    let census = m.type_census(&lim)?;
    res.expect("A", census.positive, 220);
    res.expect("B", census.negative, 22);
    res.expect("A_plus_B", census.positive + census.negative, 242);
    // every line of V is the radical of exactly one line of M
    let profile = m.radical_profile(&lim)?;
    res.expect("radical_lines", profile.t(), 121);
    let mut single = 0;
    for line in enumerate_subspaces(k, 5, 1, &lim)? {
        if m.radical_containing_coords(&line)?.dim() == 1 {
            single += 1;
        }
    }
    res.expect("lines_with_one_dimensional_M_v", single, 121);
    // radicals of the negative elements are the common isotropic lines
    let common_lines: BTreeSet<VecSubspace> =
        common.iter().skip(1).map(|v| VecSubspace::line(k, v)).collect();
    let mut negative_radicals = BTreeSet::new();
    for g in m.span_elements(&lim)?.skip(1) {
        if g.classify_type()? == FormType::Negative {
            negative_radicals.insert(g.radical());
        }
    }
    res.expect("negative_radical_lines", negative_radicals.len(), 11);
    res.expect("negative_radicals_are_common_isotropic", (negative_radicals == common_lines) as i64, 1);

    // the group generated by y -> eps*y and y -> y^3
    let eps = w.big.element_of_order(11)?;
    let t = w.multiplication_matrix(eps);
    let s = w.frobenius_matrix();
    let s_inv = s.inverse(k).expect("Frobenius is invertible");
    let t4 = t.mul(k, &t).mul(k, &t).mul(k, &t);
    res.expect("s_inv_t_s_equals_t4", (s_inv.mul(k, &t).mul(k, &s) == t4) as i64, 1);
    let group = closure(k, &[t.clone(), s.clone()]);
    res.expect("group_order", group.len(), 55);

    let nonzero: Vec<Vec<Gf>> = VecSubspace::full(k, 5).elements().into_iter().skip(1).collect();
    let (v_sizes, _) = orbit_sizes(&nonzero, |v| group.iter().map(|g| g.mul_vec(k, v)).collect());
    res.expect("v_orbits_of_size_11", *v_sizes.get(&11).unwrap_or(&0), 2);
    res.expect("v_orbits_of_size_55", *v_sizes.get(&55).unwrap_or(&0), 4);
    res.expect("v_orbit_count", v_sizes.values().sum::<i64>(), 6);

    // forms transform as f -> (g^-1)^T f g^-1
    let inverses: Vec<Matrix> = group.iter().map(|g| g.inverse(k).expect("group element is invertible")).collect();
    let forms: Vec<SymForm> = m.span_elements(&lim)?.skip(1).collect();
    let mut escaped = 0;
    let key = |f: &SymForm| f.upper();
    let keys: Vec<Vec<Gf>> = forms.iter().map(key).collect();
    let (m_sizes, m_orbits) = orbit_sizes(&keys, |c| {
        let f = SymForm::from_upper(k, 5, c);
        inverses.iter().map(|gi| f.congruent(gi).upper()).collect()
    });
    for f in &forms {
        for gi in &inverses {
            if !m.contains(&f.congruent(gi)) {
                escaped += 1;
            }
        }
    }
    res.expect("m_not_invariant", escaped, 0);
    res.expect("m_orbits_of_size_11", *m_sizes.get(&11).unwrap_or(&0), 2);
    res.expect("m_orbits_of_size_55", *m_sizes.get(&55).unwrap_or(&0), 4);
    res.expect("m_orbit_count", m_sizes.values().sum::<i64>(), 6);
    let paired = m_orbits
        .iter()
        .filter(|o| {
            let neg: BTreeSet<Vec<Gf>> = o.iter().map(|c| SymForm::from_upper(k, 5, c).neg().upper()).collect();
            neg != **o && m_orbits.contains(&neg)
        })
        .count();
    res.expect("m_orbits_paired_with_negatives", paired, 6);

    // hyperplanes of M
    let common_set: BTreeSet<Vec<Gf>> = common.iter().cloned().collect();
    let mut by_type: BTreeMap<(usize, u64, u64), i64> = BTreeMap::new();
    let mut special: BTreeSet<VecSubspace> = BTreeSet::new();
    let mut extra_pairs_ok = 0;
    let mut hyperplane_total = 0;
    for coords in enumerate_subspaces(k, 5, 4, &lim)? {
        hyperplane_total += 1;
        let h = m.subspace_from_coords(&coords).expect("hyperplane is nonzero");
        let pts = h.common_isotropic_points(&lim)?;
        let c = h.type_census(&lim)?;
        *by_type.entry((pts.len() - 1, c.positive, c.negative)).or_default() += 1;
        if pts.len() - 1 == 26 {
            let extra: Vec<&Vec<Gf>> = pts.iter().filter(|p| !common_set.contains(*p)).collect();
            let closed = extra.iter().all(|v| {
                let neg: Vec<Gf> = v.iter().map(|&x| k.neg(x)).collect();
                extra.contains(&&neg)
            });
            if extra.len() == 4 && closed {
                extra_pairs_ok += 1;
            }
            special.insert(coords);
        }
    }
    res.expect("hyperplanes", hyperplane_total, 121);
    res.expect("hyperplanes_22_points_census_70_10", *by_type.get(&(22, 70, 10)).unwrap_or(&0), 66);
    res.expect("hyperplanes_26_points_census_76_4", *by_type.get(&(26, 76, 4)).unwrap_or(&0), 55);
    res.expect("hyperplane_kinds", by_type.len(), 2);
    res.expect("special_hyperplanes_with_two_extra_pairs", extra_pairs_ok, 55);

    // each non-common v gives N_v = {f : f(v,v) = 0}, a special hyperplane
    let mut hits: BTreeMap<VecSubspace, i64> = BTreeMap::new();
    let mut non_common = 0;
    for v in &nonzero {
        if common_set.contains(v) {
            continue;
        }
        non_common += 1;
        let functional: Vec<Gf> = m.basis().iter().map(|g| g.quad(v)).collect();
        let n_v = VecSubspace::line(k, &functional).annihilator();
        *hits.entry(n_v).or_default() += 1;
    }
    res.expect("non_common_vectors", non_common, 220);
    let from_special = hits.iter().filter(|(h, c)| special.contains(*h) && **c == 4).count();
    res.expect("special_hyperplanes_from_4_vectors", from_special, 55);
    res.expect("vector_hyperplanes", hits.len(), 55);

    if res.status == Status::Pass {
        res.note("all statistics match");
    }
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_passes() {
        let r = ward_report().unwrap();
        assert_eq!(r.status, Status::Pass, "{:?}", r.witnesses);
        assert_eq!(r.counts["common_isotropic_nonzero"], 22);
    }
}
