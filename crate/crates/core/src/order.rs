//! Term orders on free modules.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::monomial::{MonoOrder, Monomial};

/// An order on the terms `m * e_c` of a free module.
///
/// In every variant a smaller component index ranks higher when components
/// have to break a tie.
#[derive(Clone, Debug)]
pub enum ModuleOrder {
    /// Term over position: shifted grading degree, then the monomial order, then the component.
    Top { mono: MonoOrder, shifts: Arc<Vec<i64>> },
    /// Position over term: the component first, then the monomial order.
    Pot { mono: MonoOrder, shifts: Arc<Vec<i64>> },
    /// Blocks of components first (a smaller block ranks higher), then as `Top`.
    Block { mono: MonoOrder, shifts: Arc<Vec<i64>>, blocks: Arc<Vec<u32>> },
    /// Order induced by the leading terms of a Gröbner basis in another free module.
    Schreyer(Arc<SchreyerOrder>),
}

/// `m e_j > n e_k` iff `m lt(g_j) > n lt(g_k)` in the base order, ties broken
/// by index.  Stored flattened down to the first free module of the chain.
#[derive(Clone, Debug)]
pub struct SchreyerOrder {
    base: ModuleOrder,
    /// For each generator: its leading term pushed all the way down to the base module.
    leads: Vec<(Monomial, u32)>,
    /// For each generator: the chain of indices through the intermediate modules.
    paths: Vec<Vec<u32>>,
}

impl ModuleOrder {
    pub fn top(mono: MonoOrder, shifts: Vec<i64>) -> Self {
        ModuleOrder::Top { mono, shifts: Arc::new(shifts) }
    }

    pub fn pot(mono: MonoOrder, shifts: Vec<i64>) -> Self {
        ModuleOrder::Pot { mono, shifts: Arc::new(shifts) }
    }

    /// The order induced on a free module whose `j`-th basis vector maps to an
    /// element with leading term `leads[j]` (a term of the module ordered by `self`).
    pub fn schreyer(&self, leads: &[(Monomial, u32)]) -> ModuleOrder {
        let data = match self {
            ModuleOrder::Schreyer(s) => SchreyerOrder {
                base: s.base.clone(),
                leads: leads
                    .iter()
                    .map(|(m, c)| {
                        let (bm, bc) = s.leads[*c as usize];
                        (m.mul(&bm), bc)
                    })
                    .collect(),
                paths: leads
                    .iter()
                    .enumerate()
                    .map(|(j, (_, c))| {
                        let mut p = s.paths[*c as usize].clone();
                        p.push(j as u32);
                        p
                    })
                    .collect(),
            },
            base => SchreyerOrder {
                base: base.clone(),
                leads: leads.to_vec(),
                paths: (0..leads.len()).map(|j| vec![j as u32]).collect(),
            },
        };
        ModuleOrder::Schreyer(Arc::new(data))
    }

    pub fn block(mono: MonoOrder, shifts: Vec<i64>, blocks: Vec<u32>) -> Self {
        ModuleOrder::Block { mono, shifts: Arc::new(shifts), blocks: Arc::new(blocks) }
    }

    pub fn mono(&self) -> &MonoOrder {
        match self {
            ModuleOrder::Top { mono, .. } | ModuleOrder::Pot { mono, .. } | ModuleOrder::Block { mono, .. } => mono,
            ModuleOrder::Schreyer(s) => s.base.mono(),
        }
    }

    /// Grading degree of the term `m e_c`, shift included.
    pub fn degree(&self, m: &Monomial, c: u32) -> i64 {
        match self {
            ModuleOrder::Top { mono, shifts }
            | ModuleOrder::Pot { mono, shifts }
            | ModuleOrder::Block { mono, shifts, .. } => {
                m.weighted_degree(mono.grading_weights()) + shifts.get(c as usize).copied().unwrap_or(0)
            }
            ModuleOrder::Schreyer(s) => {
                let (lm, lc) = &s.leads[c as usize];
                s.base.degree(&m.mul(lm), *lc)
            }
        }
    }

    #[inline]
    pub fn cmp(&self, am: &Monomial, ac: u32, bm: &Monomial, bc: u32) -> Ordering {
        match self {
            ModuleOrder::Top { mono, shifts } => {
                let sa = shifts.get(ac as usize).copied().unwrap_or(0);
                let sb = shifts.get(bc as usize).copied().unwrap_or(0);
                mono.cmp_shifted(am, sa, bm, sb).then_with(|| bc.cmp(&ac))
            }
            ModuleOrder::Pot { mono, .. } => bc.cmp(&ac).then_with(|| mono.cmp(am, bm)),
            ModuleOrder::Block { mono, shifts, blocks } => {
                let (ba, bb) = (blocks[ac as usize], blocks[bc as usize]);
                if ba != bb {
                    return bb.cmp(&ba);
                }
                let sa = shifts.get(ac as usize).copied().unwrap_or(0);
                let sb = shifts.get(bc as usize).copied().unwrap_or(0);
                mono.cmp_shifted(am, sa, bm, sb).then_with(|| bc.cmp(&ac))
            }
            ModuleOrder::Schreyer(s) => {
                if ac == bc {
                    return s.base_cmp_same(am, bm, ac);
                }
                let (la, ca) = &s.leads[ac as usize];
                let (lb, cb) = &s.leads[bc as usize];
                s.base
                    .cmp(&am.mul(la), *ca, &bm.mul(lb), *cb)
                    .then_with(|| s.paths[bc as usize].cmp(&s.paths[ac as usize]))
            }
        }
    }
}

impl SchreyerOrder {
    fn base_cmp_same(&self, am: &Monomial, bm: &Monomial, c: u32) -> Ordering {
        // same generator: multiplication by its leading monomial is order preserving
        let (l, lc) = &self.leads[c as usize];
        self.base.cmp(&am.mul(l), *lc, &bm.mul(l), *lc)
    }

    pub fn rank(&self) -> usize {
        self.leads.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn top_uses_shifts() {
        let o = ModuleOrder::top(MonoOrder::grevlex(vec![1, 1]), vec![0, 2]);
        // equal shifted degree: the reverse-lex tie-break decides
        assert_eq!(o.cmp(&m(&[2, 0]), 0, &m(&[0, 0]), 1), Ordering::Less);
        assert_eq!(o.cmp(&m(&[1, 0]), 0, &m(&[0, 0]), 1), Ordering::Less);
        assert_eq!(o.cmp(&m(&[1, 0]), 0, &m(&[1, 0]), 1), Ordering::Less);
        let flat = ModuleOrder::top(MonoOrder::grevlex(vec![1, 1]), vec![0, 0]);
        assert_eq!(flat.cmp(&m(&[1, 0]), 0, &m(&[1, 0]), 1), Ordering::Greater);
    }

    #[test]
    fn schreyer_breaks_ties_by_index() {
        let base = ModuleOrder::top(MonoOrder::grevlex(vec![1, 1]), vec![0]);
        // generators x e_0 and y e_0; y*(x e_0) vs x*(y e_0) tie on the base
        let s = base.schreyer(&[(m(&[1, 0]), 0), (m(&[0, 1]), 0)]);
        assert_eq!(s.cmp(&m(&[0, 1]), 0, &m(&[1, 0]), 1), Ordering::Greater);
        assert_eq!(s.cmp(&m(&[0, 2]), 0, &m(&[2, 0]), 1), Ordering::Less);
        assert_eq!(s.degree(&m(&[0, 1]), 0), 2);
        // second level: chains through the first one
        let s2 = s.schreyer(&[(m(&[0, 1]), 0)]);
        assert_eq!(s2.degree(&m(&[1, 0]), 0), 3);
    }
}
