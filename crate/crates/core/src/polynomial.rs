use std::cmp::Ordering;
use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::variable::{Ring, Variable};

pub type Rational = num_rational::BigRational;

/// An exact multivariate polynomial over the rationals.
///
/// Terms are kept sorted in descending order under the stamped
/// [`MonomialOrder`], so the leading term is `terms[0]`; querying under a
/// different order re-sorts a clone.  Values are immutable after
/// construction and every operation is a pure function.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Ring,
    order: MonomialOrder,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(ring: Ring, order: &MonomialOrder) -> Polynomial {
        Polynomial {
            ring,
            order: order.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: Ring, order: &MonomialOrder, c: Rational) -> Polynomial {
        let mut p = Polynomial::zero(ring, order);
        if !c.is_zero() {
            p.terms.push((Monomial::one(), c));
        }
        p
    }

    pub fn one(ring: Ring, order: &MonomialOrder) -> Polynomial {
        Polynomial::constant(ring, order, Rational::one())
    }

    pub fn var(ring: Ring, order: &MonomialOrder, v: Variable) -> Result<Polynomial, Error> {
        ring.check_contains(v)?;
        Ok(Polynomial {
            ring,
            order: order.clone(),
            terms: vec![(Monomial::var(v), Rational::one())],
        })
    }

    pub fn from_terms(
        ring: Ring,
        order: &MonomialOrder,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Polynomial {
        let mut map: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            let entry = map.entry(m).or_insert_with(Rational::zero);
            *entry += c;
        }
        Self::from_map(ring, order, map)
    }

    fn from_map(
        ring: Ring,
        order: &MonomialOrder,
        map: HashMap<Monomial, Rational>,
    ) -> Polynomial {
        let mut terms: Vec<(Monomial, Rational)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.cmp(&ring, &b.0, &a.0));
        Polynomial {
            ring,
            order: order.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.first().map_or(true, |(m, _)| m.is_one())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn uses(&self, v: Variable) -> bool {
        self.terms.iter().any(|(m, _)| m.contains(v))
    }

    /// Re-sorted copy under `order` (cheap no-op when already stamped so).
    pub fn sorted_under(&self, order: &MonomialOrder) -> Polynomial {
        if &self.order == order {
            return self.clone();
        }
        let mut p = self.clone();
        p.terms
            .sort_by(|a, b| order.cmp(&self.ring, &b.0, &a.0));
        p.order = order.clone();
        p
    }

    /// The maximal term under the stamped order.
    pub fn leading_term(&self) -> Result<(Rational, Monomial), Error> {
        match self.terms.first() {
            Some((m, c)) => Ok((c.clone(), m.clone())),
            None => Err(Error::LeadingTermOfZero),
        }
    }

    pub fn leading_monomial(&self) -> Result<Monomial, Error> {
        Ok(self.leading_term()?.1)
    }

    pub fn leading_coefficient(&self) -> Result<Rational, Error> {
        Ok(self.leading_term()?.0)
    }

    pub fn monic(&self) -> Result<Polynomial, Error> {
        let lc = self.leading_coefficient()?;
        Ok(self.scale(&(Rational::one() / lc)))
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring, &self.order);
        }
        Polynomial {
            ring: self.ring,
            order: self.order.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    /// `self * c * m`; stays sorted because orders are multiplicative.
    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring, &self.order);
        }
        Polynomial {
            ring: self.ring,
            order: self.order.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, k)| (mm.mul(m), k * c))
                .collect(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.ring, other.ring);
        let rhs = other.sorted_under(&self.order);
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < rhs.terms.len() {
            if j >= rhs.terms.len() {
                out.push(self.terms[i].clone());
                i += 1;
            } else if i >= self.terms.len() {
                out.push(rhs.terms[j].clone());
                j += 1;
            } else {
                match self
                    .order
                    .cmp(&self.ring, &self.terms[i].0, &rhs.terms[j].0)
                {
                    Ordering::Greater => {
                        out.push(self.terms[i].clone());
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push(rhs.terms[j].clone());
                        j += 1;
                    }
                    Ordering::Equal => {
                        let c = &self.terms[i].1 + &rhs.terms[j].1;
                        if !c.is_zero() {
                            out.push((self.terms[i].0.clone(), c));
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
        Polynomial {
            ring: self.ring,
            order: self.order.clone(),
            terms: out,
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    /// `self - c * m * g`, the inner step of multivariate division.
    pub fn sub_mul_term(&self, c: &Rational, m: &Monomial, g: &Polynomial) -> Polynomial {
        self.sub(&g.sorted_under(&self.order).mul_term(c, m))
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.ring, other.ring);
        let mut map: HashMap<Monomial, Rational> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let entry = map.entry(m).or_insert_with(Rational::zero);
                *entry += c1 * c2;
            }
        }
        Self::from_map(self.ring, &self.order, map)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one(self.ring, &self.order);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Replaces `v` by `value` everywhere; exact ring arithmetic.
    pub fn substitute(&self, v: Variable, value: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero(self.ring, &self.order);
        let mut powers: Vec<Polynomial> = vec![Polynomial::one(self.ring, &self.order)];
        for (m, c) in &self.terms {
            let e = m.exponent(v) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().mul(value);
                powers.push(next);
            }
            let rest = Monomial::from_pairs(
                m.exponents()
                    .iter()
                    .filter(|&&(x, _)| x != v)
                    .cloned()
                    .collect(),
            );
            acc = acc.add(&powers[e].mul_term(c, &rest));
        }
        acc
    }

    /// Renames variables in every monomial (used for the `w0` action).
    pub fn map_vars(&self, f: impl Fn(Variable) -> Variable) -> Polynomial {
        Polynomial::from_terms(
            self.ring,
            &self.order,
            self.terms
                .iter()
                .map(|(m, c)| (m.map_vars(&f), c.clone())),
        )
    }

    /// Re-stamps the polynomial into `ring`; every used variable must be
    /// contained in the target ring.
    pub fn with_ring(&self, ring: Ring) -> Result<Polynomial, Error> {
        for (m, _) in &self.terms {
            for &(v, _) in m.exponents() {
                ring.check_contains(v)?;
            }
        }
        let mut p = self.clone();
        p.ring = ring;
        p.terms
            .sort_by(|a, b| self.order.cmp(&ring, &b.0, &a.0));
        Ok(p)
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if self.ring != other.ring || self.terms.len() != other.terms.len() {
            return false;
        }
        if self.order == other.order {
            return self.terms == other.terms;
        }
        let rhs = other.sorted_under(&self.order);
        self.terms == rhs.terms
    }
}

impl Eq for Polynomial {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_polynomial;
    use crate::util::rat;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn ring4t() -> Ring {
        Ring::with_t(4)
    }

    fn p(ring: Ring, s: &str) -> Polynomial {
        parse_polynomial(s, ring, &MonomialOrder::elimination()).unwrap()
    }

    #[test]
    fn leading_terms_match_the_order() {
        let ring = ring4t();
        // minors lead with their diagonal: p_{2,3} with columns 1,2
        let pb = p(ring, "z[2,1]*z[3,2]-z[2,2]*z[3,1]");
        assert_eq!(
            pb.leading_monomial().unwrap(),
            Monomial::from_pairs(vec![(Variable::z(2, 1), 1), (Variable::z(3, 2), 1)])
        );
        // t*z[1,k] + z[n,k] leads with t*z[1,k]
        let g = p(ring, "t*z[1,2]+z[4,2]");
        assert_eq!(
            g.leading_monomial().unwrap(),
            Monomial::from_pairs(vec![(Variable::T, 1), (Variable::z(1, 2), 1)])
        );
        // constants
        let five = Polynomial::constant(ring, &MonomialOrder::elimination(), rat(5));
        let (c, m) = five.leading_term().unwrap();
        assert_eq!(c, rat(5));
        assert!(m.is_one());
        // zero polynomial has no leading term
        assert!(Polynomial::zero(ring, &MonomialOrder::elimination())
            .leading_term()
            .is_err());
    }

    #[test]
    fn diagonal_leading_terms_of_general_minors() {
        // p_B for B = {b1 < b2} leads with z[b1,1]*z[b2,2]
        let ring = Ring::z_only(5);
        let ord = MonomialOrder::elimination();
        let pb = parse_polynomial("z[3,1]*z[5,2]-z[3,2]*z[5,1]", ring, &ord).unwrap();
        assert_eq!(
            pb.leading_monomial().unwrap(),
            Monomial::from_pairs(vec![(Variable::z(3, 1), 1), (Variable::z(5, 2), 1)])
        );
    }

    #[test]
    fn arithmetic_examples() {
        let ring = ring4t();
        let prod = p(ring, "t*z[1,1]+z[4,1]").mul(&p(ring, "z[2,1]*z[3,2]-z[2,2]*z[3,1]"));
        assert_eq!(prod.num_terms(), 4);
        // substitute t := 0
        let g = p(ring, "t*z[1,1]+z[4,1]");
        let zero = Polynomial::zero(ring, g.order());
        assert_eq!(g.substitute(Variable::T, &zero), p(ring, "z[4,1]"));
        // additive inverse
        assert!(g.add(&g.neg()).is_zero());
    }

    fn random_poly(rng: &mut impl Rng, ring: Ring, ord: &MonomialOrder) -> Polynomial {
        let vars = ring.variables();
        let nterms = rng.gen_range(0..5);
        Polynomial::from_terms(
            ring,
            ord,
            (0..nterms).map(|_| {
                let k = rng.gen_range(0..3);
                let m = Monomial::from_pairs(
                    (0..k)
                        .map(|_| (vars[rng.gen_range(0..vars.len())], rng.gen_range(1..3)))
                        .collect(),
                );
                (m, rat(rng.gen_range(-4..5)))
            }),
        )
    }

    #[test]
    fn ring_axioms_and_leading_term_multiplicativity() {
        let ring = ring4t();
        let ord = MonomialOrder::elimination();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let a = random_poly(&mut rng, ring, &ord);
            let b = random_poly(&mut rng, ring, &ord);
            let c = random_poly(&mut rng, ring, &ord);
            assert_eq!(a.add(&b), b.add(&a));
            assert_eq!(a.mul(&b), b.mul(&a));
            assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            if !a.is_zero() && !b.is_zero() {
                assert_eq!(
                    a.mul(&b).leading_monomial().unwrap(),
                    a.leading_monomial()
                        .unwrap()
                        .mul(&b.leading_monomial().unwrap())
                );
            }
        }
    }

    #[test]
    fn equality_across_orders() {
        let ring = ring4t();
        let a = p(ring, "t*z[1,1]+z[4,1]");
        let b = a.sorted_under(&MonomialOrder::plain_lex(&ring));
        assert_eq!(a, b);
    }
}
