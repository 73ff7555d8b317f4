//! Degreewise computation of `Tor_i(R/m^q, M)` from a resolution, and of the
//! natural maps `Tor_i(R/m^{q+1}, M) -> Tor_i(R/m^q, M)`.
//!
//! `F ⊗ R/m^q` has the basis `x^α w^β e_j` with `|α| < q`; each bigraded
//! piece is a finite-dimensional vector space, so everything reduces to ranks.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg;
use crate::module::{rees_monomials, Module};
use crate::monomial::Monomial;
use crate::resolution::Resolution;
use crate::ring::{FreeModule, Ring};
use crate::submodule::base_monomials;

/// The map `Tor_i(R/m^{q+1}, M) -> Tor_i(R/m^q, M)` in one Rees degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorMap {
    pub i: usize,
    pub q: usize,
    pub rees_degree: i64,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    /// Internal degree -> (source, target, rank).
    pub by_degree: BTreeMap<i64, (usize, usize, usize)>,
}

impl TorMap {
    pub fn is_zero(&self) -> bool {
        self.rank == 0
    }
}

type Basis = Vec<(u32, Monomial)>;

/// Basis of `(F ⊗ R/m^s)_{(d, n)}`.
fn slice_basis<F: Field>(ring: &Ring<F>, module: &FreeModule, s: usize, d: i64, n: i64) -> Basis {
    let rees_idx = ring.rees_indices();
    let mut out = Vec::new();
    for (j, sh) in module.shifts().iter().enumerate() {
        if sh.rees > n {
            continue;
        }
        for w in rees_monomials(ring, &rees_idx, (n - sh.rees) as usize) {
            let a = d - sh.internal - ring.mono_bidegree(&w).internal;
            if a < 0 || a >= s as i64 {
                continue;
            }
            for x in base_monomials(ring, a as usize) {
                out.push((j as u32, x.mul(&w)));
            }
        }
    }
    out
}

/// Internal degrees where `F ⊗ R/m^s` is nonzero in Rees degree `n`.
fn slice_degrees<F: Field>(ring: &Ring<F>, module: &FreeModule, s: usize, n: i64) -> BTreeSet<i64> {
    let rees_idx = ring.rees_indices();
    let mut out = BTreeSet::new();
    for sh in module.shifts() {
        if sh.rees > n {
            continue;
        }
        for w in rees_monomials(ring, &rees_idx, (n - sh.rees) as usize) {
            let lo = sh.internal + ring.mono_bidegree(&w).internal;
            out.extend(lo..lo + s as i64);
        }
    }
    out
}

/// Matrix of `∂_k ⊗ R/m^s` from `source` basis to `target` basis, by columns.
fn differential_matrix<F: Field>(
    ring: &Ring<F>,
    res: &Resolution<F>,
    k: usize,
    s: usize,
    source: &Basis,
    target: &Basis,
) -> Vec<Vec<F::Elem>> {
    let f = ring.field();
    let index: HashMap<(u32, Monomial), usize> = target.iter().enumerate().map(|(i, b)| (*b, i)).collect();
    let d = res.differential(k).expect("differential");
    source
        .iter()
        .map(|(j, m)| {
            let mut col = vec![f.zero(); target.len()];
            for t in d.columns[*j as usize].terms() {
                let mono = t.mono.mul(m);
                if ring.base_degree(&mono) >= s as i64 {
                    continue;
                }
                if let Some(&r) = index.get(&(t.comp, mono)) {
                    col[r] = f.add(&col[r], &t.coeff);
                }
            }
            col
        })
        .collect()
}

/// Cycles of `F_i ⊗ R/m^s` in bidegree `(d, n)` (as vectors in `basis`).
fn cycles<F: Field>(ring: &Ring<F>, res: &Resolution<F>, i: usize, s: usize, basis: &Basis, d: i64, n: i64) -> Vec<Vec<F::Elem>> {
    let f = ring.field();
    if i == 0 {
        return (0..basis.len())
            .map(|k| {
                let mut v = vec![f.zero(); basis.len()];
                v[k] = f.one();
                v
            })
            .collect();
    }
    let target = slice_basis(ring, &res.modules()[i - 1], s, d, n);
    let m = differential_matrix(ring, res, i, s, basis, &target);
    linalg::kernel(f, &m, target.len())
}

/// Boundaries in `F_i ⊗ R/m^s` in bidegree `(d, n)`.
fn boundaries<F: Field>(ring: &Ring<F>, res: &Resolution<F>, i: usize, s: usize, basis: &Basis, d: i64, n: i64) -> Vec<Vec<F::Elem>> {
    match res.module(i + 1) {
        Some(next) if next.rank() > 0 => {
            let source = slice_basis(ring, next, s, d, n);
            differential_matrix(ring, res, i + 1, s, &source, basis)
        }
        _ => Vec::new(),
    }
}

/// `dim Tor_i(R/m^q, M)` in Rees degree `n`, by internal degree.
pub fn tor_dimensions<F: Field>(res: &Resolution<F>, i: usize, q: usize, n: i64) -> BTreeMap<i64, usize> {
    let ring = res.ring();
    let f = ring.field();
    let mut out = BTreeMap::new();
    let Some(fi) = res.module(i) else { return out };
    for d in slice_degrees(ring, fi, q, n) {
        let basis = slice_basis(ring, fi, q, d, n);
        let z = cycles(ring, res, i, q, &basis, d, n).len();
        let b = linalg::rank(f, &boundaries(ring, res, i, q, &basis, d, n), basis.len());
        if z > b {
            out.insert(d, z - b);
        }
    }
    out
}

/// The natural map `Tor_i(R/m^{q+1}, M) -> Tor_i(R/m^q, M)` in Rees degree `n`.
pub fn sega_map<F: Field>(res: &Resolution<F>, i: usize, q: usize, n: i64) -> TorMap {
    let ring = res.ring();
    let f = ring.field();
    let mut map = TorMap { i, q, rees_degree: n, source_dim: 0, target_dim: 0, rank: 0, by_degree: BTreeMap::new() };
    let Some(fi) = res.module(i) else { return map };
    for d in slice_degrees(ring, fi, q + 1, n) {
        let big = slice_basis(ring, fi, q + 1, d, n);
        let small = slice_basis(ring, fi, q, d, n);
        let z_big = cycles(ring, res, i, q + 1, &big, d, n);
        let b_big = linalg::rank(f, &boundaries(ring, res, i, q + 1, &big, d, n), big.len());
        let z_small = cycles(ring, res, i, q, &small, d, n).len();
        let b_small = boundaries(ring, res, i, q, &small, d, n);
        let rb = linalg::rank(f, &b_small, small.len());
        let index: HashMap<(u32, Monomial), usize> = small.iter().enumerate().map(|(k, b)| (*b, k)).collect();
        let projected: Vec<Vec<F::Elem>> = z_big
            .iter()
            .map(|z| {
                let mut v = vec![f.zero(); small.len()];
                for (k, c) in z.iter().enumerate() {
                    if let Some(&t) = index.get(&big[k]) {
                        v[t] = c.clone();
                    }
                }
                v
            })
            .collect();
        let mut all = b_small;
        all.extend(projected);
        let rank = linalg::rank(f, &all, small.len()) - rb;
        let (src, tgt) = (z_big.len() - b_big, z_small - rb);
        if src > 0 || tgt > 0 {
            map.by_degree.insert(d, (src, tgt, rank));
        }
        map.source_dim += src;
        map.target_dim += tgt;
        map.rank += rank;
    }
    map
}

/// Whether `Tor_i(R/m^{q+1}, M) -> Tor_i(R/m^q, M)` vanishes, for a module over the base ring.
pub fn sega_map_is_zero<F: Field>(module: &Module<F>, i: usize, q: usize) -> Result<(TorMap, bool)> {
    if module.ring().has_rees() {
        return Err(Error::InvalidArgument("expected a module over the base ring".into()));
    }
    let res = Resolution::of_module(module, true, None)?;
    let map = sega_map(&res, i, q, 0);
    let zero = map.is_zero();
    Ok((map, zero))
}
