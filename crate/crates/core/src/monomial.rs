use crate::variable::Variable;

/// A monomial in canonical sparse form: exponents sorted by the storage
/// order on [`Variable`], no zero exponents stored.  The empty vector is
/// the monomial `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(Variable, u32)>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: Variable) -> Monomial {
        Monomial {
            exps: vec![(v, 1)],
        }
    }

    pub fn from_pairs(mut pairs: Vec<(Variable, u32)>) -> Monomial {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_by_key(|&(v, _)| v);
        let mut out: Vec<(Variable, u32)> = Vec::with_capacity(pairs.len());
        for (v, e) in pairs {
            match out.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => out.push((v, e)),
            }
        }
        Monomial { exps: out }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self) -> &[(Variable, u32)] {
        &self.exps
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.exps
            .iter()
            .find(|&&(x, _)| x == v)
            .map_or(0, |&(_, e)| e)
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn contains(&self, v: Variable) -> bool {
        self.exponent(v) > 0
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e <= 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: merge(&self.exps, &other.exps, |a, b| Some(a + b)),
        }
    }

    /// Pointwise max of exponent vectors.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: merge(&self.exps, &other.exps, |a, b| Some(a.max(b))),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .all(|&(v, e)| other.exponent(v) >= e)
    }

    /// Exact quotient `self / other`; `None` when not divisible.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: merge(&self.exps, &other.exps, |a, b| {
                a.checked_sub(b)
            }),
        })
    }

    /// The same monomial with all exponents clamped to one.
    pub fn support_monomial(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&(v, _)| (v, 1)).collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|&(v, _)| other.exponent(v) == 0)
    }

    /// Renames variables term by term; `f` must be injective on the support.
    pub fn map_vars(&self, f: impl Fn(Variable) -> Variable) -> Monomial {
        Monomial::from_pairs(self.exps.iter().map(|&(v, e)| (f(v), e)).collect())
    }
}

/// Merge two sorted exponent lists; `op` combines exponents (absent = 0)
/// and entries combining to 0 are dropped.  `op` returning `None` means
/// a negative exponent; the merge panics in that case (callers guard).
fn merge(
    a: &[(Variable, u32)],
    b: &[(Variable, u32)],
    op: impl Fn(u32, u32) -> Option<u32>,
) -> Vec<(Variable, u32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let (v, ea, eb) = if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            let r = (a[i].0, a[i].1, 0);
            i += 1;
            r
        } else if i >= a.len() || b[j].0 < a[i].0 {
            let r = (b[j].0, 0, b[j].1);
            j += 1;
            r
        } else {
            let r = (a[i].0, a[i].1, b[j].1);
            i += 1;
            j += 1;
            r
        };
        let e = op(ea, eb).expect("negative exponent in monomial merge");
        if e > 0 {
            out.push((v, e));
        }
    }
    out
}
