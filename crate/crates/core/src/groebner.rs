//! Multivariate division, S-polynomials and Buchberger's algorithm.
//!
//! The engine uses the normal pair-selection strategy (smallest lcm under
//! the active order, ties by pair index), skips pairs with coprime leading
//! monomials, and always returns the reduced basis, which is canonical per
//! (ideal, order).  A configurable S-pair budget guards against runaway
//! computations.

use std::cmp::Ordering;

use num_traits::One;

use crate::error::Error;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::polynomial::{Polynomial, Rational};
use crate::variable::Ring;

#[derive(Debug, Clone)]
pub struct GbOptions {
    /// Abort with [`Error::BudgetExceeded`] after this many processed pairs.
    pub pair_budget: usize,
    /// Reduce batches of same-lcm pairs on the rayon pool.  The returned
    /// reduced basis is identical in both modes.
    pub parallel: bool,
}

impl Default for GbOptions {
    fn default() -> Self {
        GbOptions {
            pair_budget: 1_000_000,
            parallel: cfg!(feature = "parallel"),
        }
    }
}

impl GbOptions {
    pub fn sequential() -> GbOptions {
        GbOptions {
            parallel: false,
            ..GbOptions::default()
        }
    }

    pub fn with_budget(budget: usize) -> GbOptions {
        GbOptions {
            pair_budget: budget,
            ..GbOptions::default()
        }
    }
}

#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub generators: Vec<Polynomial>,
    pub order: MonomialOrder,
    pub reduced: bool,
}

impl GroebnerBasis {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .map(|g| g.leading_monomial().expect("basis elements are nonzero"))
            .collect()
    }

    /// Normal form modulo this basis.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        divide(f, &self.generators, &self.order).remainder
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// The basis cuts out the unit ideal iff it contains a nonzero constant.
    pub fn is_unit_ideal(&self) -> bool {
        self.generators.iter().any(|g| g.is_constant() && !g.is_zero())
    }
}

#[derive(Debug, Clone)]
pub struct DivisionResult {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
    /// True iff the remainder is zero and every nonzero `q_i * g_i` has
    /// leading monomial at most that of the dividend: a standard
    /// representation witnessed by this fixed division order.
    pub standard_representation: bool,
}

/// Divides `f` by the list of divisors: `f = sum q_i g_i + r` exactly, no
/// term of `r` divisible by any divisor's leading monomial.  Deterministic:
/// each reduction step picks the first divisor (lowest index) whose leading
/// monomial divides the current lead.
pub fn divide(f: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> DivisionResult {
    let ring = f.ring();
    let divisors: Vec<Polynomial> = divisors.iter().map(|g| g.sorted_under(order)).collect();
    let leads: Vec<(Rational, Monomial)> = divisors
        .iter()
        .map(|g| g.leading_term().expect("zero divisor in division"))
        .collect();
    let mut quotients: Vec<Polynomial> =
        divisors.iter().map(|_| Polynomial::zero(ring, order)).collect();
    let mut remainder = Polynomial::zero(ring, order);
    let mut p = f.sorted_under(order);
    let lm_f = p.leading_monomial().ok();

    while !p.is_zero() {
        let (c, m) = p.leading_term().unwrap();
        match leads.iter().position(|(_, lm)| lm.divides(&m)) {
            Some(k) => {
                let factor_c = &c / &leads[k].0;
                let factor_m = m.div(&leads[k].1).unwrap();
                quotients[k] =
                    quotients[k].add(&Polynomial::from_terms(
                        ring,
                        order,
                        [(factor_m.clone(), factor_c.clone())],
                    ));
                p = p.sub_mul_term(&factor_c, &factor_m, &divisors[k]);
            }
            None => {
                remainder = remainder.add(&Polynomial::from_terms(
                    ring,
                    order,
                    [(m.clone(), c.clone())],
                ));
                p = p.sub(&Polynomial::from_terms(ring, order, [(m, c)]));
            }
        }
    }

    let standard = remainder.is_zero()
        && match &lm_f {
            None => true,
            Some(lm) => quotients.iter().zip(&divisors).all(|(q, g)| {
                q.is_zero()
                    || order.cmp(
                        &ring,
                        &q.leading_monomial().unwrap().mul(&g.leading_monomial().unwrap()),
                        lm,
                    ) != Ordering::Greater
            }),
        };
    DivisionResult {
        quotients,
        remainder,
        standard_representation: standard,
    }
}

/// `S(f1, f2) = M/LT(f1) * f1 - M/LT(f2) * f2` with `M` the monic lcm of the
/// leading monomials; the leading terms cancel.
pub fn s_polynomial(
    f1: &Polynomial,
    f2: &Polynomial,
    order: &MonomialOrder,
) -> Result<Polynomial, Error> {
    let a = f1.sorted_under(order);
    let b = f2.sorted_under(order);
    let (c1, m1) = a.leading_term()?;
    let (c2, m2) = b.leading_term()?;
    let lcm = m1.lcm(&m2);
    let left = a.mul_term(&(Rational::one() / c1), &lcm.div(&m1).unwrap());
    let right = b.mul_term(&(Rational::one() / c2), &lcm.div(&m2).unwrap());
    Ok(left.sub(&right))
}

/// True iff the fixed-order division of `f` by `g` leaves no remainder.
/// Division order matters in principle: a zero remainder under some other
/// ordering of the steps could exist even when this witness fails, so
/// `false` is evidence, not a proof of non-membership.  Against a Groebner
/// basis the result is exact.
pub fn reduces_to_zero(f: &Polynomial, g: &[Polynomial], order: &MonomialOrder) -> bool {
    if f.is_zero() {
        return true;
    }
    let res = divide(f, g, order);
    res.remainder.is_zero() && res.standard_representation
}

/// Buchberger's criterion over all pairs; pairs with coprime leading
/// monomials are skipped.
pub fn is_groebner_basis(g: &[Polynomial], order: &MonomialOrder) -> bool {
    let basis: Vec<Polynomial> = g
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.sorted_under(order))
        .collect();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let mi = basis[i].leading_monomial().unwrap();
            let mj = basis[j].leading_monomial().unwrap();
            if mi.coprime(&mj) {
                continue;
            }
            let s = s_polynomial(&basis[i], &basis[j], order).unwrap();
            if !divide(&s, &basis, order).remainder.is_zero() {
                return false;
            }
        }
    }
    true
}

pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis, Error> {
    buchberger_with(gens, order, &GbOptions::default())
}

struct Pair {
    lcm: Monomial,
    i: usize,
    j: usize,
}

pub fn buchberger_with(
    gens: &[Polynomial],
    order: &MonomialOrder,
    opts: &GbOptions,
) -> Result<GroebnerBasis, Error> {
    let ring = match gens.first() {
        Some(g) => g.ring(),
        None => {
            return Ok(GroebnerBasis {
                generators: Vec::new(),
                order: order.clone(),
                reduced: true,
            })
        }
    };

    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(g.sorted_under(order).monic()?);
        }
    }
    basis.dedup_by(|a, b| a == b);
    if basis.is_empty() {
        return Ok(GroebnerBasis {
            generators: Vec::new(),
            order: order.clone(),
            reduced: true,
        });
    }

    let mut pairs: Vec<Pair> = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            push_pair(&mut pairs, &basis, i, j);
        }
    }

    let mut processed = 0usize;
    while !pairs.is_empty() {
        // normal strategy: the minimal lcm under the order, ties by (i, j)
        let min_idx = (0..pairs.len())
            .min_by(|&a, &b| {
                order
                    .cmp(&ring, &pairs[a].lcm, &pairs[b].lcm)
                    .then_with(|| (pairs[a].i, pairs[a].j).cmp(&(pairs[b].i, pairs[b].j)))
            })
            .unwrap();
        let min_lcm = pairs[min_idx].lcm.clone();

        // all queued pairs sharing the minimal lcm form one batch
        let mut batch: Vec<Pair> = Vec::new();
        let mut rest: Vec<Pair> = Vec::new();
        for p in pairs.drain(..) {
            if p.lcm == min_lcm {
                batch.push(p);
            } else {
                rest.push(p);
            }
        }
        batch.sort_by_key(|p| (p.i, p.j));
        pairs = rest;

        processed += batch.len();
        if processed > opts.pair_budget {
            return Err(Error::BudgetExceeded(opts.pair_budget));
        }

        let candidates = reduce_batch(&batch, &basis, order, opts);

        for cand in candidates {
            // re-reduce against the current basis, which may have grown
            let r = divide(&cand, &basis, order).remainder;
            if r.is_zero() {
                continue;
            }
            let r = r.monic()?;
            let new_idx = basis.len();
            basis.push(r);
            for i in 0..new_idx {
                push_pair(&mut pairs, &basis, i, new_idx);
            }
        }
    }

    let generators = reduce_basis(basis, order)?;
    Ok(GroebnerBasis {
        generators,
        order: order.clone(),
        reduced: true,
    })
}

fn push_pair(pairs: &mut Vec<Pair>, basis: &[Polynomial], i: usize, j: usize) {
    let mi = basis[i].leading_monomial().unwrap();
    let mj = basis[j].leading_monomial().unwrap();
    // coprime criterion: such S-pairs always reduce to zero
    if mi.coprime(&mj) {
        return;
    }
    pairs.push(Pair {
        lcm: mi.lcm(&mj),
        i,
        j,
    });
}

fn reduce_batch(
    batch: &[Pair],
    basis: &[Polynomial],
    order: &MonomialOrder,
    opts: &GbOptions,
) -> Vec<Polynomial> {
    let reduce_one = |p: &Pair| -> Option<Polynomial> {
        let s = s_polynomial(&basis[p.i], &basis[p.j], order).unwrap();
        let r = divide(&s, basis, order).remainder;
        (!r.is_zero()).then_some(r)
    };
    #[cfg(feature = "parallel")]
    if opts.parallel && batch.len() > 1 {
        use rayon::prelude::*;
        return batch.par_iter().filter_map(reduce_one).collect();
    }
    let _ = opts;
    batch.iter().filter_map(reduce_one).collect()
}

/// Minimalizes and tail-reduces a basis; output is the unique reduced
/// Groebner basis, sorted by descending leading monomial.
fn reduce_basis(
    mut basis: Vec<Polynomial>,
    order: &MonomialOrder,
) -> Result<Vec<Polynomial>, Error> {
    let ring = match basis.first() {
        Some(g) => g.ring(),
        None => return Ok(basis),
    };
    // drop redundant elements (leading monomial divisible by another's)
    basis.sort_by(|a, b| {
        order.cmp(
            &ring,
            &a.leading_monomial().unwrap(),
            &b.leading_monomial().unwrap(),
        )
    });
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|h| h.leading_monomial().unwrap().divides(&lm))
        {
            minimal.push(g);
        }
    }
    // tail-reduce every element against the others
    let mut reduced: Vec<Polynomial> = Vec::new();
    for k in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, g)| g.clone())
            .collect();
        let r = divide(&minimal[k], &others, order).remainder;
        debug_assert!(!r.is_zero());
        reduced.push(r.monic()?);
    }
    reduced.sort_by(|a, b| {
        order.cmp(
            &ring,
            &b.leading_monomial().unwrap(),
            &a.leading_monomial().unwrap(),
        )
    });
    Ok(reduced)
}

/// True when `gb` is reduced: monic generators, and no term of any
/// generator divisible by the leading monomial of another.
pub fn is_reduced_basis(gb: &[Polynomial], order: &MonomialOrder) -> bool {
    for (k, g) in gb.iter().enumerate() {
        let g = g.sorted_under(order);
        match g.leading_coefficient() {
            Ok(c) if c.is_one() => {}
            _ => return false,
        }
        for (i, h) in gb.iter().enumerate() {
            if i == k {
                continue;
            }
            let hm = h.sorted_under(order).leading_monomial().unwrap();
            if g.terms().iter().any(|(m, _)| hm.divides(m)) {
                return false;
            }
        }
    }
    true
}

/// Exact quotient `f / g`; errors when the division leaves a remainder.
pub fn exact_quotient(
    f: &Polynomial,
    g: &Polynomial,
    order: &MonomialOrder,
) -> Result<Polynomial, Error> {
    if g.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let res = divide(f, std::slice::from_ref(g), order);
    if !res.remainder.is_zero() {
        return Err(Error::InexactDivision(format!(
            "{} does not divide {}",
            g, f
        )));
    }
    Ok(res.quotients.into_iter().next().unwrap())
}

#[allow(dead_code)]
fn ring_of(ps: &[Polynomial]) -> Option<Ring> {
    ps.first().map(|p| p.ring())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_polynomial;
    use crate::variable::Variable;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn ord() -> MonomialOrder {
        MonomialOrder::elimination()
    }

    fn p(ring: Ring, s: &str) -> Polynomial {
        parse_polynomial(s, ring, &ord()).unwrap()
    }

    #[test]
    fn s_polynomial_closing_example() {
        // S(f_2, p_{2,4}) = z21*z12 + s*z22*z41 at n = 4
        let ring = Ring::with_t(4).add_s();
        let f2 = p(ring, "s*z[4,2]+z[1,2]");
        let p24 = p(ring, "z[2,1]*z[4,2]-z[2,2]*z[4,1]");
        let s = s_polynomial(&f2, &p24, &ord()).unwrap();
        assert_eq!(s, p(ring, "z[2,1]*z[1,2]+s*z[2,2]*z[4,1]"));
        // self-pair vanishes
        assert!(s_polynomial(&f2, &f2, &ord()).unwrap().is_zero());
        // zero input is a domain error
        assert!(s_polynomial(&Polynomial::zero(ring, &ord()), &f2, &ord()).is_err());
    }

    #[test]
    fn division_basics() {
        let ring = Ring::z_only(4);
        let f = p(ring, "z[4,1]^2");
        let res = divide(&f, &[p(ring, "z[4,1]")], &ord());
        assert!(res.remainder.is_zero());
        assert_eq!(res.quotients[0], p(ring, "z[4,1]"));
        assert!(res.standard_representation);
    }

    #[test]
    fn division_identity_holds_on_random_input() {
        let ring = Ring::with_t(3);
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let vars = ring.variables();
        let rand_poly = |rng: &mut ChaCha8Rng| {
            let nterms = rng.gen_range(1..5);
            Polynomial::from_terms(
                ring,
                &ord(),
                (0..nterms).map(|_| {
                    let k = rng.gen_range(0..3);
                    let m = Monomial::from_pairs(
                        (0..k)
                            .map(|_| (vars[rng.gen_range(0..vars.len())], rng.gen_range(1..3)))
                            .collect(),
                    );
                    (m, crate::util::rat(rng.gen_range(-3..4)))
                }),
            )
        };
        for _ in 0..100 {
            let f = rand_poly(&mut rng);
            let g1 = rand_poly(&mut rng);
            let g2 = rand_poly(&mut rng);
            let divisors: Vec<Polynomial> =
                [g1, g2].into_iter().filter(|g| !g.is_zero()).collect();
            if divisors.is_empty() {
                continue;
            }
            let res = divide(&f, &divisors, &ord());
            let mut recon = res.remainder.clone();
            for (q, g) in res.quotients.iter().zip(&divisors) {
                recon = recon.add(&q.mul(g));
            }
            assert_eq!(recon, f);
            // no term of r divisible by any leading monomial
            for (m, _) in res.remainder.terms() {
                for g in &divisors {
                    assert!(!g.leading_monomial().unwrap().divides(m));
                }
            }
        }
    }

    #[test]
    fn buchberger_trivial_cases() {
        let ring = Ring::z_only(3);
        // empty input: empty basis
        let gb = buchberger(&[], &ord()).unwrap();
        assert!(gb.generators.is_empty());
        assert!(gb.reduced);
        // zero generators only: still the zero ideal
        let gb = buchberger(&[Polynomial::zero(ring, &ord())], &ord()).unwrap();
        assert!(gb.generators.is_empty());
        // principal ideal generated by a monic polynomial
        let f = p(ring, "z[1,2]*z[2,1]-z[1,1]*z[2,2]");
        assert!(f.leading_coefficient().unwrap() == crate::util::rat(1));
        let gb = buchberger(std::slice::from_ref(&f), &ord()).unwrap();
        assert_eq!(gb.generators, vec![f]);
    }

    #[test]
    fn groebner_flags_match_brute_force_membership() {
        let ring = Ring::z_only(2);
        // under an order with z21 > z11 the pair {z11, z11+z21} has coprime
        // leading monomials: a (non-reduced) Groebner basis
        let seq = vec![
            Variable::z(2, 1),
            Variable::z(1, 1),
            Variable::z(1, 2),
            Variable::z(2, 2),
        ];
        let lex = MonomialOrder::Lex(std::sync::Arc::new(seq));
        let g = [
            parse_polynomial("z[1,1]", ring, &lex).unwrap(),
            parse_polynomial("z[1,1]+z[2,1]", ring, &lex).unwrap(),
        ];
        assert!(is_groebner_basis(&g, &lex));
        assert!(!is_reduced_basis(&g, &lex));
        // {z11*z21 + z22, z11} is not a Groebner basis: z22 is a member but
        // its leading monomial is not in the leading-term ideal
        let g = [p(ring, "z[1,1]*z[2,1]+z[2,2]"), p(ring, "z[1,1]")];
        assert!(!is_groebner_basis(&g, &ord()));
        let gb = buchberger(&g, &ord()).unwrap();
        assert!(gb.contains(&p(ring, "z[2,2]")));
    }

    #[test]
    fn coprime_pairs_reduce_to_zero() {
        let ring = Ring::with_t(3);
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let vars = ring.variables();
        for _ in 0..100 {
            let m1 = Monomial::var(vars[rng.gen_range(0..vars.len())]);
            let mut v2 = vars[rng.gen_range(0..vars.len())];
            while m1.contains(v2) {
                v2 = vars[rng.gen_range(0..vars.len())];
            }
            let f = Polynomial::from_terms(
                ring,
                &ord(),
                [
                    (m1.clone(), crate::util::rat(1)),
                    (Monomial::one(), crate::util::rat(rng.gen_range(-2..3))),
                ],
            );
            let g = Polynomial::from_terms(
                ring,
                &ord(),
                [
                    (Monomial::var(v2), crate::util::rat(1)),
                    (Monomial::one(), crate::util::rat(rng.gen_range(-2..3))),
                ],
            );
            let s = s_polynomial(&f, &g, &ord()).unwrap();
            assert!(reduces_to_zero(&s, &[f, g], &ord()));
        }
    }

    #[test]
    fn random_combinations_reduce_to_zero() {
        let ring = Ring::z_only(3);
        let gens = [
            p(ring, "z[1,1]*z[2,2]-z[1,2]*z[2,1]"),
            p(ring, "z[2,1]*z[3,2]-z[2,2]*z[3,1]"),
            p(ring, "z[1,1]*z[3,2]-z[1,2]*z[3,1]"),
        ];
        let gb = buchberger(&gens, &ord()).unwrap();
        assert!(is_groebner_basis(&gb.generators, &ord()));
        assert!(is_reduced_basis(&gb.generators, &ord()));
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let vars = ring.variables();
        for _ in 0..50 {
            let mut f = Polynomial::zero(ring, &ord());
            for g in &gens {
                let m = Monomial::from_pairs(vec![(
                    vars[rng.gen_range(0..vars.len())],
                    rng.gen_range(0..2),
                )]);
                f = f.add(&g.mul_term(&crate::util::rat(rng.gen_range(-3..4)), &m));
            }
            assert!(gb.contains(&f));
        }
    }

    #[test]
    fn budget_is_enforced() {
        let ring = Ring::z_only(3);
        let gens = [
            p(ring, "z[1,1]*z[2,2]-z[1,2]*z[2,1]"),
            p(ring, "z[2,1]*z[3,2]-z[2,2]*z[3,1]"),
            p(ring, "z[1,1]*z[3,2]-z[1,2]*z[3,1]"),
        ];
        match buchberger_with(&gens, &ord(), &GbOptions { pair_budget: 1, parallel: false }) {
            Err(Error::BudgetExceeded(1)) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let ring = Ring::with_t(4).add_s();
        let mut gens = vec![p(ring, "s*t-1")];
        for k in 1..=2 {
            gens.push(p(ring, &format!("t*z[1,{k}]+z[4,{k}]")));
        }
        gens.push(p(ring, "z[2,1]*z[3,2]-z[2,2]*z[3,1]"));
        gens.push(p(ring, "z[2,1]*z[4,2]-z[2,2]*z[4,1]"));
        gens.push(p(ring, "z[3,1]*z[4,2]-z[3,2]*z[4,1]"));
        let seq = buchberger_with(&gens, &ord(), &GbOptions::sequential()).unwrap();
        let par = buchberger_with(
            &gens,
            &ord(),
            &GbOptions {
                parallel: true,
                ..GbOptions::default()
            },
        )
        .unwrap();
        assert_eq!(seq.generators, par.generators);
    }

    #[test]
    fn reduced_basis_is_unique_under_shuffles() {
        let ring = Ring::with_t(4);
        let mut gens = vec![
            p(ring, "t*z[1,1]+z[4,1]"),
            p(ring, "t*z[1,2]+z[4,2]"),
            p(ring, "z[2,1]*z[3,2]-z[2,2]*z[3,1]"),
            p(ring, "z[2,1]*z[4,2]-z[2,2]*z[4,1]"),
            p(ring, "z[3,1]*z[4,2]-z[3,2]*z[4,1]"),
        ];
        let reference = buchberger(&gens, &ord()).unwrap().generators;
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..100 {
            gens.shuffle(&mut rng);
            assert_eq!(buchberger(&gens, &ord()).unwrap().generators, reference);
        }
    }
}
