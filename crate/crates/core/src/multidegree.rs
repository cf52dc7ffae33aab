//! Krull dimension and multidegree of an ideal, computed combinatorially
//! from its initial monomial ideal.
//!
//! The grading is by columns: `deg z[i,j] = e_j` and `deg t = 0`, so that
//! the sheet-line generators `t*z[1,k] + z[n,k]` stay homogeneous.  The
//! multidegree is the lowest-degree homogeneous part of the K-polynomial
//! of the initial ideal after substituting `x_j -> 1 - x_j`.

use crate::error::Error;
use crate::groebner::GbOptions;
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::polynomial::Polynomial;
use crate::variable::Variable;
use crate::xpoly::XPoly;

/// Krull dimension of the quotient by `ideal`: the number of ring
/// variables minus a minimum vertex cover of the supports of the initial
/// ideal.  The unit ideal gets the empty-scheme convention `-1`.
pub fn krull_dimension(ideal: &Ideal, order: &MonomialOrder) -> Result<i64, Error> {
    krull_dimension_with(ideal, order, &GbOptions::default())
}

pub fn krull_dimension_with(
    ideal: &Ideal,
    order: &MonomialOrder,
    opts: &GbOptions,
) -> Result<i64, Error> {
    let ring = ideal.ring();
    let gb = ideal.groebner_with(order, opts)?;
    if gb.is_unit_ideal() {
        return Ok(-1);
    }
    let vars = ring.variables();
    let index_of = |v: Variable| vars.iter().position(|&x| x == v).unwrap();
    let mut supports: Vec<u64> = gb
        .leading_monomials()
        .iter()
        .map(|m| {
            let mut mask = 0u64;
            for &(v, _) in m.support_monomial().exponents() {
                mask |= 1 << index_of(v);
            }
            mask
        })
        .collect();
    supports.sort_unstable();
    supports.dedup();
    // drop supports containing another support (they are covered for free)
    let minimal: Vec<u64> = supports
        .iter()
        .filter(|&&s| !supports.iter().any(|&t| t != s && t & s == t))
        .copied()
        .collect();
    let cover = min_vertex_cover(&minimal, vars.len());
    Ok(vars.len() as i64 - cover as i64)
}

fn min_vertex_cover(edges: &[u64], nvars: usize) -> usize {
    let mut best = nvars;
    branch(edges, 0, &mut best);
    best
}

fn branch(edges: &[u64], used: usize, best: &mut usize) {
    if used >= *best {
        return;
    }
    match edges.first() {
        None => *best = used,
        Some(&e) => {
            let mut bits = e;
            while bits != 0 {
                let v = bits & bits.wrapping_neg();
                bits ^= v;
                let rest: Vec<u64> = edges.iter().filter(|&&f| f & v == 0).copied().collect();
                branch(&rest, used + 1, best);
            }
        }
    }
}

/// Column degree of a monomial as an exponent vector for `x1..xn`;
/// `t` has degree zero, `s` and `w` are rejected.
fn column_degree(m: &Monomial, n: usize) -> Result<Vec<u16>, Error> {
    let mut deg = vec![0u16; n];
    for &(v, e) in m.exponents() {
        match v {
            Variable::Z { col, .. } => deg[col as usize - 1] += e as u16,
            Variable::T => {}
            other => {
                return Err(Error::Invalid(format!(
                    "variable {other} has no column degree"
                )))
            }
        }
    }
    Ok(deg)
}

fn check_homogeneous(p: &Polynomial, n: usize) -> Result<(), Error> {
    let mut expect: Option<Vec<u16>> = None;
    for (m, _) in p.terms() {
        let d = column_degree(m, n)?;
        match &expect {
            None => expect = Some(d),
            Some(e) if *e == d => {}
            Some(_) => {
                return Err(Error::Inhomogeneous(crate::text::format_polynomial(p)));
            }
        }
    }
    Ok(())
}

/// Multidegree under the column grading.  Requires the generators to be
/// homogeneous; uses inclusion-exclusion over generator subsets for up to
/// 20 minimal generators of the initial ideal and a pivot recursion above.
pub fn multidegree(ideal: &Ideal, order: &MonomialOrder) -> Result<XPoly, Error> {
    multidegree_with(ideal, order, &GbOptions::default())
}

pub fn multidegree_with(
    ideal: &Ideal,
    order: &MonomialOrder,
    opts: &GbOptions,
) -> Result<XPoly, Error> {
    let ring = ideal.ring();
    if ring.has_s || ring.has_aux {
        return Err(Error::Invalid(
            "multidegree is defined over the matrix coordinates and t only".into(),
        ));
    }
    let n = ring.n();
    for g in ideal.generators() {
        check_homogeneous(g, n)?;
    }
    let gb = ideal.groebner_with(order, opts)?;
    let initial = gb.leading_monomials();
    let k = k_polynomial(&initial, n, opts)?;
    Ok(k.substitute_one_minus().lowest_degree_part())
}

/// K-polynomial of the quotient by a monomial ideal, in the column grading.
pub fn k_polynomial(gens: &[Monomial], n: usize, opts: &GbOptions) -> Result<XPoly, Error> {
    let mut minimal: Vec<Monomial> = Vec::new();
    for m in gens {
        if !minimal.iter().any(|s: &Monomial| s.divides(m)) {
            minimal.retain(|s| !m.divides(s));
            minimal.push(m.clone());
        }
    }
    if minimal.iter().any(|m| m.is_one()) {
        return Ok(XPoly::zero(n));
    }
    if minimal.len() <= 20 {
        inclusion_exclusion(&minimal, &Monomial::one(), 1, n, opts)
    } else {
        pivot_recursion(minimal, n, opts, 0)
    }
}

/// Taylor-complex inclusion-exclusion: sum over generator subsets of
/// `(-1)^{|S|} x^{deg lcm(S)}`.
fn inclusion_exclusion(
    gens: &[Monomial],
    acc: &Monomial,
    sign: i64,
    n: usize,
    opts: &GbOptions,
) -> Result<XPoly, Error> {
    match gens.split_first() {
        None => Ok(XPoly::term(column_degree(acc, n)?, sign)),
        Some((m, rest)) => {
            let with = acc.lcm(m);
            #[cfg(feature = "parallel")]
            if opts.parallel && rest.len() >= 12 {
                let (a, b) = rayon::join(
                    || inclusion_exclusion(rest, acc, sign, n, opts),
                    || inclusion_exclusion(rest, &with, -sign, n, opts),
                );
                return Ok(a?.add(&b?));
            }
            let a = inclusion_exclusion(rest, acc, sign, n, opts)?;
            let b = inclusion_exclusion(rest, &with, -sign, n, opts)?;
            Ok(a.add(&b))
        }
    }
}

/// Splits on a frequently occurring variable `v` via the exact sequence
/// `0 -> R/(M:v) (-deg v) -> R/M -> R/(M + <v>) -> 0`, giving
/// `K(M) = K(M + <v>) + x^{deg v} K(M : v)`.
fn pivot_recursion(
    gens: Vec<Monomial>,
    n: usize,
    opts: &GbOptions,
    depth: usize,
) -> Result<XPoly, Error> {
    if gens.iter().any(|m| m.is_one()) {
        return Ok(XPoly::zero(n));
    }
    if gens.len() <= 20 {
        return inclusion_exclusion(&gens, &Monomial::one(), 1, n, opts);
    }
    if depth > 200 {
        return Err(Error::Invalid(
            "pivot recursion exceeded its depth budget".into(),
        ));
    }
    // pick the variable occurring in the most generators
    let mut counts: std::collections::HashMap<Variable, usize> = std::collections::HashMap::new();
    for m in &gens {
        for &(v, _) in m.exponents() {
            *counts.entry(v).or_insert(0) += 1;
        }
    }
    let (&pivot, _) = counts
        .iter()
        .max_by_key(|&(v, c)| (*c, format!("{v}")))
        .expect("nonempty generators");
    let pv = Monomial::var(pivot);
    // M + <v>
    let mut plus: Vec<Monomial> = vec![pv.clone()];
    plus.extend(gens.iter().filter(|m| !m.contains(pivot)).cloned());
    // M : v
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| m.div(&pv).unwrap_or_else(|| m.clone()))
        .collect();
    let k_plus = pivot_recursion(plus, n, opts, depth + 1)?;
    let k_colon = pivot_recursion(colon, n, opts, depth + 1)?;
    let xv = XPoly::term(column_degree(&pv, n)?, 1);
    Ok(k_plus.add(&xv.mul(&k_colon)))
}
