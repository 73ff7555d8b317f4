mod support;

use std::cmp::Ordering;

use proptest::prelude::*;

use lindefect::asymptotics::{ideal_power, module_power, Variant};
use lindefect::hilbert::{hilbert_series, Grading};
use lindefect::linearity::{linearity_defect, linearity_defect_of_submodule};
use lindefect::module::base_ring;
use lindefect::monomial::{MonoOrder, Monomial};
use lindefect::*;

use support::*;

fn ring3() -> std::sync::Arc<Ring<PrimeField>> {
    Ring::polynomial(PrimeField::default(), &["x", "y", "z"]).unwrap()
}

fn exponents(d: u16) -> impl Strategy<Value = [u16; 3]> {
    (0..=d).prop_flat_map(move |a| (Just(a), 0..=d - a)).prop_map(move |(a, b)| [a, b, d - a - b])
}

/// Homogeneous polynomials in `x, y, z` as (degree, [(exponents, coefficient)]).
fn homogeneous() -> impl Strategy<Value = Vec<([u16; 3], i64)>> {
    (1u16..=3).prop_flat_map(|d| prop::collection::vec((exponents(d), -5i64..=5), 1..=3))
}

fn poly(r: &Ring<PrimeField>, terms: &[([u16; 3], i64)]) -> Polynomial<PrimeField> {
    let f = r.field();
    r.from_terms(terms.iter().map(|(e, c)| (Monomial::from_exponents(e), f.from_i64(*c))).collect())
}

fn monomial_ideal() -> impl Strategy<Value = Vec<[u16; 3]>> {
    prop::collection::vec((2u16..=3).prop_flat_map(exponents), 1..=4)
}

fn monomial_gens(r: &Ring<PrimeField>, exps: &[[u16; 3]]) -> Vec<Polynomial<PrimeField>> {
    let one = r.field().one();
    exps.iter().map(|e| r.from_terms(vec![(Monomial::from_exponents(e), one)])).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn orders_are_multiplicative(a in exponents(4), b in exponents(4), c in exponents(3)) {
        let (a, b, c) = (Monomial::from_exponents(&a), Monomial::from_exponents(&b), Monomial::from_exponents(&c));
        for order in [MonoOrder::grevlex(vec![1, 1, 1]), MonoOrder::elimination(&[0], vec![1, 1, 1]), MonoOrder::refined(vec![1, 1, 1], vec![0, 0, -1])] {
            let before = order.cmp(&a, &b);
            prop_assert_eq!(order.cmp(&a.mul(&c), &b.mul(&c)), before);
            prop_assert_ne!(order.cmp(&c.mul(&a), &a), Ordering::Less);
        }
    }

    #[test]
    fn normal_forms_are_idempotent_and_congruent(gens in prop::collection::vec(homogeneous(), 1..=3), f in homogeneous()) {
        let r = ring3();
        let g: Vec<_> = gens.iter().map(|t| poly(&r, t)).filter(|p| !p.is_zero()).collect();
        prop_assume!(!g.is_empty());
        let i = Submodule::ideal(r.clone(), &g).unwrap();
        let v = r.poly_to_element(&poly(&r, &f), 0, i.order());
        let nf = i.normal_form(&v).unwrap();
        prop_assert_eq!(i.normal_form(&nf).unwrap(), nf.clone());
        let diff = r.add_scaled(&v, &r.field().from_i64(-1), &r.one(), &nf, i.order());
        prop_assert!(i.contains(&diff).unwrap());
        prop_assert!(spairs_vanish(&i));
    }

    #[test]
    fn syzygies_annihilate_generators(gens in prop::collection::vec(homogeneous(), 2..=3)) {
        let r = ring3();
        let g: Vec<_> = gens.iter().map(|t| poly(&r, t)).filter(|p| !p.is_zero()).collect();
        prop_assume!(g.len() >= 2);
        let i = Submodule::ideal(r.clone(), &g).unwrap();
        let syz = i.syzygies().unwrap();
        for s in syz.gens() {
            let mut total = Polynomial::zero();
            for (j, gj) in g.iter().enumerate() {
                total = r.add(&total, &r.mul(&r.component(s, j as u32), gj));
            }
            prop_assert!(total.is_zero());
        }
    }

    #[test]
    fn hilbert_function_matches_brute_force(exps in monomial_ideal(), bin in homogeneous()) {
        let r = ring3();
        let mut g = monomial_gens(&r, &exps);
        let b = poly(&r, &bin);
        if !b.is_zero() {
            g.push(b);
        }
        let i = Submodule::ideal(r.clone(), &g).unwrap();
        let series = hilbert_series(&Module::quotient_ring(&i).unwrap(), Grading::Internal).unwrap();
        for d in 0..=6 {
            prop_assert_eq!(series.value(d as i64), brute_hilbert(&i, d) as i64);
        }
    }

    #[test]
    fn quotient_adds_one_to_the_defect(exps in monomial_ideal()) {
        let r = ring3();
        let i = Submodule::ideal(r.clone(), &monomial_gens(&r, &exps)).unwrap();
        let li = linearity_defect_of_submodule(&i).unwrap();
        let lq = linearity_defect(&Module::quotient_ring(&i).unwrap()).unwrap();
        prop_assert_eq!(lq, li + 1);
    }

    #[test]
    fn rees_slices_are_the_powers(exps in monomial_ideal(), n in 1i64..=3) {
        let r = ring3();
        let i = Submodule::ideal(r.clone(), &monomial_gens(&r, &exps)).unwrap();
        let one = Module::free(r.clone(), FreeModule::free(1));
        let p = lindefect::asymptotics::rees_presentation(&i, &one, false).unwrap();
        let slice = p.module.rees_slice(&base_ring(&p.ring).unwrap(), n).unwrap();
        let power = module_power(&i, n as usize, &one, Variant::Power).unwrap();
        let hs = hilbert_series(&slice, Grading::Internal).unwrap();
        let hp = hilbert_series(&power, Grading::Internal).unwrap();
        for d in 0..=10 {
            prop_assert_eq!(hs.value(d), hp.value(d));
        }
        prop_assert_eq!(linearity_defect(&slice).unwrap(), linearity_defect(&power).unwrap());
    }

    #[test]
    fn saturation_is_closed_and_bounded(exps in monomial_ideal(), n in 1usize..=2) {
        let r = ring3();
        let i = ideal_power(&Submodule::ideal(r.clone(), &monomial_gens(&r, &exps)).unwrap(), n).unwrap();
        let (sat, steps) = i.saturate_base().unwrap();
        prop_assert!(sat.contains_submodule(&i).unwrap());
        let (again, _) = sat.saturate_base().unwrap();
        prop_assert!(again.equals(&sat).unwrap());
        prop_assert!(i.contains_submodule(&sat.times_base_power(steps).unwrap()).unwrap());
    }

    #[test]
    fn polynomials_round_trip_through_text(t in homogeneous()) {
        let r = ring3();
        let p = poly(&r, &t);
        prop_assert_eq!(parse_polynomial(&r, &r.format(&p)).unwrap(), p);
    }
}

#[test]
fn spair_oracle_rejects_a_non_basis() {
    let i = ideal(&["x", "y", "z"], &["xy-z2", "x2"]);
    let gb = i.gb().unwrap();
    assert!(gb.len() > 2);
    assert!(spairs_reduce(i.ring(), gb.order(), gb.elements()));
    let mut gens = i.gens().to_vec();
    for g in gens.iter_mut() {
        i.ring().normalize(g, gb.order());
    }
    assert!(!spairs_reduce(i.ring(), gb.order(), &gens));
}

#[test]
fn powers_of_linear_resolution_ideals_stay_linear() {
    let m2 = ideal(&["x", "y", "z"], &["x2", "xy", "xz", "y2", "yz", "z2"]);
    for n in 1..=3 {
        assert_eq!(linearity_defect_of_submodule(&ideal_power(&m2, n).unwrap()).unwrap(), 0);
    }
}
