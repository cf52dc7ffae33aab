//! Integer polynomials in the grading variables `x1, ..., xn`, used for
//! K-polynomials, multidegrees and Schubert polynomials.

use std::collections::BTreeMap;

/// Sparse polynomial in `x1..xn` with `i64` coefficients.  Exponent
/// vectors always have length `nvars`; coefficient arithmetic is checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u16>, i64>,
}

impl XPoly {
    pub fn zero(nvars: usize) -> XPoly {
        XPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> XPoly {
        XPoly::term(vec![0; nvars], 1)
    }

    pub fn term(exps: Vec<u16>, coef: i64) -> XPoly {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if coef != 0 {
            terms.insert(exps, coef);
        }
        XPoly { nvars, terms }
    }

    /// The variable `x_i`, 1-based.
    pub fn var(nvars: usize, i: usize) -> XPoly {
        let mut exps = vec![0; nvars];
        exps[i - 1] = 1;
        XPoly::term(exps, 1)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &i64)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u16]) -> i64 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    fn add_term(&mut self, exps: Vec<u16>, coef: i64) {
        if coef == 0 {
            return;
        }
        let slot = self.terms.entry(exps).or_insert(0);
        *slot = slot.checked_add(coef).expect("coefficient overflow");
        if *slot == 0 {
            let key: Vec<u16> = self
                .terms
                .iter()
                .find(|(_, &c)| c == 0)
                .map(|(k, _)| k.clone())
                .unwrap();
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &XPoly) -> XPoly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &XPoly) -> XPoly {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> XPoly {
        if k == 0 {
            return XPoly::zero(self.nvars);
        }
        XPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, &c)| (e.clone(), c.checked_mul(k).expect("coefficient overflow")))
                .collect(),
        }
    }

    pub fn mul(&self, other: &XPoly) -> XPoly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = XPoly::zero(self.nvars);
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &other.terms {
                let e: Vec<u16> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.checked_mul(c2).expect("coefficient overflow"));
            }
        }
        out
    }

    /// Substitutes `x_j -> 1 - x_j` for every variable.
    pub fn substitute_one_minus(&self) -> XPoly {
        let mut out = XPoly::zero(self.nvars);
        for (e, &c) in &self.terms {
            let mut factor = XPoly::term(vec![0; self.nvars], c);
            for (j, &a) in e.iter().enumerate() {
                let lin = XPoly::one(self.nvars).sub(&XPoly::var(self.nvars, j + 1));
                for _ in 0..a {
                    factor = factor.mul(&lin);
                }
            }
            out = out.add(&factor);
        }
        out
    }

    /// The homogeneous part of lowest total degree (zero stays zero).
    pub fn lowest_degree_part(&self) -> XPoly {
        let min = match self
            .terms
            .keys()
            .map(|e| e.iter().map(|&a| a as u32).sum::<u32>())
            .min()
        {
            Some(d) => d,
            None => return XPoly::zero(self.nvars),
        };
        XPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().map(|&a| a as u32).sum::<u32>() == min)
                .map(|(e, &c)| (e.clone(), c))
                .collect(),
        }
    }

    /// Total degree when homogeneous, `None` otherwise or when zero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self
            .terms
            .keys()
            .map(|e| e.iter().map(|&a| a as u32).sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }

    /// Evaluation at `x_j = 1` for all `j` (the classical degree).
    pub fn eval_at_ones(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl std::fmt::Display for XPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // descending lex so that x1-heavy terms print first
        let mut first = true;
        for (e, &c) in self.terms.iter().rev() {
            let neg = c < 0;
            if first {
                if neg {
                    f.write_str("-")?;
                }
                first = false;
            } else {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            let mag = c.abs();
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(j, &a)| {
                    if a == 1 {
                        format!("x{}", j + 1)
                    } else {
                        format!("x{}^{}", j + 1, a)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}*")?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_substitution() {
        let x1 = XPoly::var(2, 1);
        let x2 = XPoly::var(2, 2);
        let p = x1.mul(&x1).add(&x1.mul(&x2).scale(3));
        assert_eq!(p.to_string(), "x1^2+3*x1*x2");
        // (1-x1)^2 + 3(1-x1)(1-x2) has constant 4, so lowest part is 4
        let s = p.substitute_one_minus();
        assert_eq!(s.coefficient(&[0, 0]), 4);
        assert_eq!(s.lowest_degree_part().to_string(), "4");
        assert_eq!(p.homogeneous_degree(), Some(2));
        assert_eq!(s.homogeneous_degree(), None);
        assert_eq!(p.eval_at_ones(), 4);
    }

    #[test]
    fn cancellation_removes_terms() {
        let x1 = XPoly::var(1, 1);
        assert!(x1.sub(&x1).is_zero());
    }
}
