use proptest::prelude::*;

use symrank::forms::{isotropic_census_value, FormType};
use symrank::io::{read_form, read_form_space, write_form, write_form_space};
use symrank::linalg::Matrix;
use symrank::search::incremental_rank_gate;
use symrank::{make_field, Field, FormSpace, Gf, Limits, SymForm};

fn field_for(idx: usize) -> Field {
    let (p, k) = [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2), (3, 3)][idx];
    make_field(p, k).unwrap()
}

fn element(f: &Field, raw: u32) -> Gf {
    Gf(raw % f.q())
}

fn form(f: &Field, n: usize, raw: &[u32]) -> SymForm {
    let coords: Vec<Gf> = raw.iter().take(n * (n + 1) / 2).map(|&r| element(f, r)).collect();
    SymForm::from_upper(f, n, &coords)
}

/// Brute count of the nonzero-or-zero solutions of `x^T G x = 0`.
fn brute_isotropic(g: &SymForm) -> u64 {
    let f = g.field();
    let n = g.n();
    let total = (f.q() as u64).pow(n as u32);
    let mut count = 0;
    for idx in 0..total {
        let mut rest = idx;
        let v: Vec<Gf> = (0..n)
            .map(|_| {
                let d = rest % f.q() as u64;
                rest /= f.q() as u64;
                Gf(d as u32)
            })
            .collect();
        count += g.quad(&v).is_zero() as u64;
    }
    count
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(idx in 0usize..6, a in 0u32..1000, b in 0u32..1000, c in 0u32..1000) {
        let f = field_for(idx);
        let (a, b, c) = (element(&f, a), element(&f, b), element(&f, c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), Gf::ZERO);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Gf::ONE);
            prop_assert_eq!(f.pow(a, f.q() as u64 - 1), Gf::ONE);
        }
        prop_assert_eq!(f.frobenius(a, f.k()), a);
    }

    #[test]
    fn single_form_census(idx in 0usize..4, n in 1usize..5, raw in prop::collection::vec(0u32..1000, 10)) {
        let f = field_for(idx);
        let g = form(&f, n, &raw);
        let brute = brute_isotropic(&g);
        prop_assert_eq!(g.isotropic_count(1 << 20).unwrap(), brute);
        let r = g.rank();
        if r > 0 {
            let ty = g.classify_type().unwrap();
            prop_assert_eq!(isotropic_census_value(n, r, ty, f.q() as u64), brute as i128);
            if r % 2 == 1 {
                prop_assert_eq!(ty, FormType::Odd);
            }
        }
    }

    #[test]
    fn congruence_preserves_rank_and_type(idx in 0usize..4, raw in prop::collection::vec(0u32..1000, 6), p in prop::collection::vec(0u32..1000, 9)) {
        let f = field_for(idx);
        let g = form(&f, 3, &raw);
        let m = Matrix::from_vec(3, 3, p.iter().map(|&x| element(&f, x)).collect());
        prop_assume!(m.rank(&f) == 3);
        let h = g.congruent(&m);
        prop_assert_eq!(h.rank(), g.rank());
        if g.rank() > 0 {
            prop_assert_eq!(h.classify_type().unwrap(), g.classify_type().unwrap());
        }
    }

    #[test]
    fn form_text_roundtrip(idx in 0usize..6, n in 1usize..5, raw in prop::collection::vec(0u32..1000, 10)) {
        let f = field_for(idx);
        let g = form(&f, n, &raw);
        let text = write_form(&g);
        prop_assert_eq!(read_form(&text).unwrap(), g);
    }

    #[test]
    fn space_text_is_byte_stable(raw in prop::collection::vec(0u32..1000, 18)) {
        let f = field_for(1);
        let forms: Vec<SymForm> = raw.chunks(6).map(|c| form(&f, 3, c)).collect();
        let m = FormSpace::from_forms(&f, 3, &forms).unwrap();
        let text = write_form_space(&m);
        let back = read_form_space(&text).unwrap();
        prop_assert_eq!(write_form_space(&back), text);
        prop_assert_eq!(back, m);
    }

    #[test]
    fn rank_gate_matches_span(raw in prop::collection::vec(0u32..1000, 12), r in 1usize..4) {
        let f = field_for(0);
        let a = form(&f, 3, &raw[..6]);
        let b = form(&f, 3, &raw[6..]);
        prop_assume!(a.rank() == r);
        let partial = FormSpace::from_forms(&f, 3, std::slice::from_ref(&a)).unwrap();
        let gate = incremental_rank_gate(&partial, &b, r).unwrap();
        let brute = FormSpace::from_forms(&f, 3, &[a, b])
            .map(|m| m.dim() == 2 && m.is_constant_rank(&Limits::default()).unwrap() == Some(r))
            .unwrap_or(false);
        prop_assert_eq!(gate, brute);
    }
}
