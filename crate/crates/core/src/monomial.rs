//! Monomials with bigraded variables and the monomial orders used by the engine.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest number of variables a ring may have.
pub const MAX_VARS: usize = 16;

/// Role of a variable in a bigraded polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VarKind {
    /// A variable of the base ring: bidegree `(1, 0)`, generates `m`.
    Base,
    /// A Rees variable standing for a generator of an ideal: bidegree `(d, 1)`.
    Rees,
    /// An auxiliary variable used only inside elimination computations.
    Aux,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Variable {
    pub name: String,
    pub kind: VarKind,
    /// Internal (standard) degree.
    pub internal: i64,
    /// Rees degree.
    pub rees: i64,
}

/// Ordered set of variables together with their bidegrees.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VariableSet {
    vars: Vec<Variable>,
}

impl VariableSet {
    pub fn new(vars: Vec<Variable>) -> Result<Self> {
        if vars.len() > MAX_VARS {
            return Err(Error::TooManyVariables { max: MAX_VARS, got: vars.len() });
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].iter().any(|w| w.name == v.name) {
                return Err(Error::DuplicateVariable(v.name.clone()));
            }
            if v.kind == VarKind::Rees && v.internal < 1 {
                return Err(Error::InvalidArgument(format!(
                    "Rees variable {} needs positive internal degree",
                    v.name
                )));
            }
        }
        Ok(VariableSet { vars })
    }

    /// Base variables only, each of bidegree `(1, 0)`.
    pub fn base<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        Self::new(
            names
                .iter()
                .map(|n| Variable { name: n.as_ref().to_string(), kind: VarKind::Base, internal: 1, rees: 0 })
                .collect(),
        )
    }

    /// Base variables followed by Rees variables of the given internal degrees.
    pub fn with_rees<S: AsRef<str>, T: AsRef<str>>(base: &[S], rees: &[(T, i64)]) -> Result<Self> {
        let mut vars: Vec<Variable> = Self::base(base)?.vars;
        vars.extend(rees.iter().map(|(n, d)| Variable {
            name: n.as_ref().to_string(),
            kind: VarKind::Rees,
            internal: *d,
            rees: 1,
        }));
        Self::new(vars)
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.vars.iter().map(|v| v.name.as_str())
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    pub fn indices_of(&self, kind: VarKind) -> Vec<usize> {
        (0..self.vars.len()).filter(|&i| self.vars[i].kind == kind).collect()
    }

    pub fn num_base(&self) -> usize {
        self.vars.iter().filter(|v| v.kind == VarKind::Base).count()
    }

    pub fn internal_weights(&self) -> Vec<i64> {
        self.vars.iter().map(|v| v.internal).collect()
    }

    pub fn rees_weights(&self) -> Vec<i64> {
        self.vars.iter().map(|v| v.rees).collect()
    }

    /// Indicator of base variables: the weight whose value is the `m`-adic order.
    pub fn base_weights(&self) -> Vec<i64> {
        self.vars.iter().map(|v| (v.kind == VarKind::Base) as i64).collect()
    }

    pub fn with_extra(&self, extra: Variable) -> Result<Self> {
        let mut vars = self.vars.clone();
        vars.push(extra);
        Self::new(vars)
    }
}

/// A monomial stored densely as an exponent vector.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    nvars: u8,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS);
        Monomial { exps: [0; MAX_VARS], nvars: nvars as u8 }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        let mut m = Self::one(exps.len());
        m.exps[..exps.len()].copy_from_slice(exps);
        m
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn set_exponent(&mut self, i: usize, e: u16) {
        self.exps[i] = e;
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn weighted_degree(&self, weights: &[i64]) -> i64 {
        self.exponents().iter().zip(weights).map(|(&e, &w)| e as i64 * w).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut r = *self;
        for i in 0..MAX_VARS {
            r.exps[i] += other.exps[i];
        }
        r
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self` when `self` divides `other`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut r = *other;
        for i in 0..MAX_VARS {
            r.exps[i] = other.exps[i].checked_sub(self.exps[i])?;
        }
        Some(r)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        for i in 0..MAX_VARS {
            r.exps[i] = r.exps[i].max(other.exps[i]);
        }
        r
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        for i in 0..MAX_VARS {
            r.exps[i] = r.exps[i].min(other.exps[i]);
        }
        r
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// One bit per variable that occurs; a quick necessary test for divisibility.
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0u32;
        for i in 0..self.nvars as usize {
            if self.exps[i] > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Lexicographic comparison with variable 0 largest.
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        self.exps.cmp(&other.exps)
    }

    pub fn fmt_with(&self, names: &VariableSet) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.exponents().iter().enumerate() {
            let name = &names.vars()[i].name;
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}

/// A monomial order: weight vectors compared in sequence, ties broken reverse
/// lexicographically (the last variable decides, a smaller exponent wins).
///
/// Some weight vector must be strictly positive on every variable while all
/// earlier ones are non-negative; this makes the order a well-order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonoOrder {
    weights: Vec<Vec<i64>>,
    /// Index of the weight vector that is the grading (internal degree); free
    /// module shifts are added to this one.
    grading: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    Grevlex,
    Elimination,
}

impl MonoOrder {
    /// Degree reverse lexicographic order with respect to the given positive weights.
    pub fn grevlex(weights: Vec<i64>) -> Self {
        assert!(weights.iter().all(|&w| w > 0), "grevlex weights must be positive");
        MonoOrder { weights: vec![weights], grading: 0 }
    }

    /// Block elimination order: monomials with larger degree in `block` are
    /// larger; ties are broken by `grading` weights and then reverse lex.
    pub fn elimination(block: &[usize], grading: Vec<i64>) -> Self {
        let mut indicator = vec![0i64; grading.len()];
        for &i in block {
            indicator[i] = 1;
        }
        MonoOrder { weights: vec![indicator, grading], grading: 1 }
    }

    /// Grading first, then a secondary weight, then reverse lex.
    pub fn refined(grading: Vec<i64>, secondary: Vec<i64>) -> Self {
        MonoOrder { weights: vec![grading, secondary], grading: 0 }
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    pub fn grading_index(&self) -> usize {
        self.grading
    }

    pub fn grading_weights(&self) -> &[i64] {
        &self.weights[self.grading]
    }

    pub fn nvars(&self) -> usize {
        self.weights[0].len()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_shifted(a, 0, b, 0)
    }

    /// Compare `a` and `b` after adding `sa`, `sb` to their grading weight.
    #[inline]
    pub fn cmp_shifted(&self, a: &Monomial, sa: i64, b: &Monomial, sb: i64) -> Ordering {
        for (k, w) in self.weights.iter().enumerate() {
            let mut da = a.weighted_degree(w);
            let mut db = b.weighted_degree(w);
            if k == self.grading {
                da += sa;
                db += sb;
            }
            match da.cmp(&db) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        for i in (0..a.nvars()).rev() {
            match a.exps[i].cmp(&b.exps[i]) {
                Ordering::Equal => {}
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }

    /// Checked comparison for monomials that may come from different rings.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() || a.nvars() != self.nvars() {
            return Err(Error::VariableMismatch(a.nvars(), b.nvars()));
        }
        Ok(self.cmp(a, b))
    }
}
