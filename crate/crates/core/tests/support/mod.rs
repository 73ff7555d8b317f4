//! Shared corpus and brute-force oracles for the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use lindefect::field::Field;
use lindefect::monomial::Monomial;
use lindefect::order::ModuleOrder;
use lindefect::ring::Homogeneity;
use lindefect::submodule::base_monomials;
use lindefect::*;

/// Monomial and binomial ideals in at most three variables.
pub const CORPUS: &[(&str, &[&str])] = &[
    ("x2,xy,z2", &["x2", "xy", "z2"]),
    ("max-ideal squared", &["x2", "xy", "xz", "y2", "yz", "z2"]),
    ("x2,y2", &["x2", "y2"]),
    ("xy,yz,xz", &["xy", "yz", "xz"]),
    ("x2,xy", &["x2", "xy"]),
    ("x3,y3,xyz", &["x3", "y3", "xyz"]),
    ("xy,z2", &["xy", "z2"]),
    ("x2,y3", &["x2", "y3"]),
    ("x2-yz,y2-xz", &["x2-yz", "y2-xz"]),
    ("xy-z2,x2", &["xy-z2", "x2"]),
    ("x2-y2,xy", &["x2-y2", "xy"]),
    ("twisted cubic", &["xz-y2", "xw-yz", "yw-z2"]),
];

pub fn vars_for(gens: &[&str]) -> Vec<&'static str> {
    if gens.iter().any(|g| g.contains('w')) {
        vec!["x", "y", "z", "w"]
    } else {
        vec!["x", "y", "z"]
    }
}

pub fn ideal_in<F: Field>(field: F, names: &[&str], gens: &[&str]) -> Submodule<F> {
    let r = Ring::polynomial(field, names).unwrap();
    let g: Vec<_> = gens.iter().map(|s| parse_polynomial(&r, s).unwrap()).collect();
    Submodule::ideal(r, &g).unwrap()
}

pub fn ideal(names: &[&str], gens: &[&str]) -> Submodule<PrimeField> {
    ideal_in(PrimeField::default(), names, gens)
}

/// The corpus restricted to three variables.
pub fn corpus() -> Vec<(&'static str, Submodule<PrimeField>)> {
    CORPUS
        .iter()
        .filter(|(_, g)| vars_for(g).len() == 3)
        .map(|(name, g)| (*name, ideal(&["x", "y", "z"], g)))
        .collect()
}

/// Rank by plain Gaussian elimination on row vectors.
pub fn naive_rank<F: Field>(f: &F, rows: &[Vec<F::Elem>]) -> usize {
    let mut rows: Vec<Vec<F::Elem>> = rows.to_vec();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !f.is_zero(&rows[r][col])) else { continue };
        rows.swap(rank, p);
        let inv = f.inv(&rows[rank][col]).unwrap();
        let pivot: Vec<F::Elem> = rows[rank].iter().map(|x| f.mul(x, &inv)).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !f.is_zero(&row[col]) {
                let c = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x = f.sub(x, &f.mul(&c, p));
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

fn internal_degree<F: Field>(ring: &Ring<F>, p: &Polynomial<F>) -> i64 {
    match ring.bidegree(p) {
        Homogeneity::Homogeneous(b) => b.internal,
        other => panic!("inhomogeneous generator: {other:?}"),
    }
}

/// `dim_k (R/I)_d` from the span of `m * g` in degree `d`.
pub fn brute_hilbert<F: Field>(ideal: &Submodule<F>, d: usize) -> usize {
    let ring = ideal.ring();
    let f = ring.field();
    let monos = base_monomials(ring, d);
    let index: HashMap<Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut rows = Vec::new();
    for g in ideal.gen_polys() {
        let e = internal_degree(ring, &g);
        if e > d as i64 {
            continue;
        }
        for m in base_monomials(ring, d - e as usize) {
            let mut row = vec![f.zero(); monos.len()];
            for (mono, c) in g.terms() {
                let k = index[&mono.mul(&m)];
                row[k] = f.add(&row[k], c);
            }
            rows.push(row);
        }
    }
    monos.len() - naive_rank(f, &rows)
}

/// Degree-`d` monomials outside the lead ideal of a Gröbner basis.
pub fn standard_monomials<F: Field>(ideal: &Submodule<F>, d: usize) -> usize {
    let leads = ideal.gb().unwrap().leads();
    base_monomials(ideal.ring(), d).iter().filter(|m| !leads.iter().any(|(l, _)| l.divides(m))).count()
}

/// Reduces `v` by lead-term division only; false when a lead term is irreducible.
fn reduces_to_zero<F: Field>(ring: &Ring<F>, order: &ModuleOrder, basis: &[FreeElement<F>], v: FreeElement<F>) -> bool {
    let f = ring.field();
    let mut v = v;
    while let Some(t) = v.lead().cloned() {
        let Some(g) = basis.iter().find(|g| {
            let l = g.lead().unwrap();
            l.comp == t.comp && l.mono.divides(&t.mono)
        }) else {
            return false;
        };
        let l = g.lead().unwrap();
        let c = f.neg(&f.div(&t.coeff, &l.coeff).unwrap());
        v = ring.add_scaled(&v, &c, &l.mono.div(&t.mono).unwrap(), g, order);
    }
    true
}

/// Every S-element of the Gröbner basis of `sub` reduces to zero.
pub fn spairs_vanish<F: Field>(sub: &Submodule<F>) -> bool {
    let gb = sub.gb().unwrap();
    spairs_reduce(sub.ring(), gb.order(), gb.elements())
}

/// Buchberger's criterion on an arbitrary list of sorted elements.
pub fn spairs_reduce<F: Field>(ring: &Ring<F>, order: &ModuleOrder, basis: &[FreeElement<F>]) -> bool {
    let f = ring.field();
    for (a, ga) in basis.iter().enumerate() {
        for gb_ in &basis[a + 1..] {
            let (la, lb) = (ga.lead().unwrap(), gb_.lead().unwrap());
            if la.comp != lb.comp {
                continue;
            }
            let l = la.mono.lcm(&lb.mono);
            let ca = f.inv(&la.coeff).unwrap();
            let cb = f.neg(&f.inv(&lb.coeff).unwrap());
            let s = ring.add_scaled(&FreeElement::zero(), &ca, &la.mono.div(&l).unwrap(), ga, order);
            let s = ring.add_scaled(&s, &cb, &lb.mono.div(&l).unwrap(), gb_, order);
            if !reduces_to_zero(ring, order, basis, s) {
                return false;
            }
        }
    }
    true
}
