//! Permutation combinatorics and the Schubert side: rank functions,
//! determinantal ideals, Bruhat order, the `w0` row relabeling, Schubert
//! polynomials by divided differences, and the cohomology-class formula.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::Error;
use crate::ideal::Ideal;
use crate::order::MonomialOrder;
use crate::polynomial::{Polynomial, Rational};
use crate::util::combinations;
use crate::variable::{Ring, Variable};
use crate::xpoly::XPoly;

/// A permutation of `{1..n}` in one-line notation.  The associated
/// permutation matrix has a 1 in row `i`, column `j` iff `w(j) = i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<u8>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Permutation, Error> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::Invalid(format!(
                    "{one_line:?} is not a permutation in one-line notation"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation {
            one_line: one_line.into_iter().map(|v| v as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            one_line: (1..=n as u8).collect(),
        }
    }

    /// The longest element `[n, n-1, ..., 1]`.
    pub fn w0(n: usize) -> Permutation {
        Permutation {
            one_line: (1..=n as u8).rev().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1] as usize
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.one_line.iter().map(|&v| v as usize).collect()
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.one_line;
        let mut len = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    len += 1;
                }
            }
        }
        len
    }

    /// Composition `self ∘ other`: `k -> self(other(k))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation {
            one_line: (1..=self.n())
                .map(|k| self.apply(other.apply(k)) as u8)
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v as usize - 1] = i as u8 + 1;
        }
        Permutation { one_line: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// All permutations of `S_n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation::new(cur.clone()).unwrap());
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                return out;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
    }

    /// Parses `[2,1,3,4,5]` or the compact form `21345` (n <= 9).
    pub fn parse(s: &str) -> Result<Permutation, Error> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('[').and_then(|x| x.strip_suffix(']')) {
            let vals: Vec<usize> = inner
                .split(',')
                .map(|v| {
                    v.trim()
                        .parse::<usize>()
                        .map_err(|e| Error::Parse(format!("bad permutation entry: {e}")))
                })
                .collect::<Result<_, _>>()?;
            return Permutation::new(vals);
        }
        if !s.is_empty() && s.chars().all(|c| c.is_ascii_digit()) {
            let vals: Vec<usize> = s.chars().map(|c| c.to_digit(10).unwrap() as usize).collect();
            return Permutation::new(vals);
        }
        Err(Error::Parse(format!("cannot parse permutation '{s}'")))
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.n() < 10 {
            write!(f, "[")?;
            for &v in &self.one_line {
                write!(f, "{v}")?;
            }
            write!(f, "]")
        } else {
            write!(
                f,
                "[{}]",
                self.one_line
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        }
    }
}

/// Rank of the northwest `p x q` submatrix of the permutation matrix:
/// `|{w(1..q)} ∩ {1..p}|`.
pub fn rank_fn(w: &Permutation, p: usize, q: usize) -> Result<usize, Error> {
    if !(1..=w.n()).contains(&p) || !(1..=w.n()).contains(&q) {
        return Err(Error::IndexOutOfRange(format!("(p,q)=({p},{q})")));
    }
    Ok((1..=q).filter(|&j| w.apply(j) <= p).count())
}

/// Bruhat order by the tableau criterion: `u <= w` iff for every `k` the
/// sorted prefixes `{u(1..k)}` are entrywise at most `{w(1..k)}`.
pub fn bruhat_leq(u: &Permutation, w: &Permutation) -> Result<bool, Error> {
    if u.n() != w.n() {
        return Err(Error::Invalid("permutation size mismatch".into()));
    }
    let n = u.n();
    let mut us: Vec<usize> = Vec::with_capacity(n);
    let mut ws: Vec<usize> = Vec::with_capacity(n);
    for k in 1..=n {
        us.push(u.apply(k));
        ws.push(w.apply(k));
        us.sort_unstable();
        ws.sort_unstable();
        if us.iter().zip(&ws).any(|(a, b)| a > b) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The shortest permutation with `u(k) = 1`.
pub fn u_of(n: usize, k: usize) -> Result<Permutation, Error> {
    if !(1..=n).contains(&k) {
        return Err(Error::IndexOutOfRange(format!("u[{k}] with n={n}")));
    }
    let mut out: Vec<usize> = (2..=k).collect();
    out.push(1);
    out.extend(k + 1..=n);
    Permutation::new(out)
}

/// The shortest permutation with `v(k) = n`.
pub fn v_of(n: usize, k: usize) -> Result<Permutation, Error> {
    if !(1..=n).contains(&k) {
        return Err(Error::IndexOutOfRange(format!("v[{k}] with n={n}")));
    }
    let mut out: Vec<usize> = (1..k).collect();
    out.push(n);
    out.extend(k..n);
    Permutation::new(out)
}

/// The shortest permutation with `w(i) = 1` and `w(j) = n`: place both and
/// fill the remaining positions with `2..n-1` in increasing order.  For
/// `i < j` this equals the composition `u[i] ∘ v[j]`.
pub fn w_of(n: usize, i: usize, j: usize) -> Result<Permutation, Error> {
    if i == j || !(1..=n).contains(&i) || !(1..=n).contains(&j) {
        return Err(Error::IndexOutOfRange(format!("w[{i},{j}] with n={n}")));
    }
    let mut out = vec![0usize; n];
    out[i - 1] = 1;
    out[j - 1] = n;
    let mut next = 2;
    for slot in out.iter_mut() {
        if *slot == 0 {
            *slot = next;
            next += 1;
        }
    }
    Permutation::new(out)
}

/// Substitutes `z[i,j] -> z[w0(i),j]` in every generator; an involution.
pub fn w0_act(ideal: &Ideal) -> Result<Ideal, Error> {
    let ring = ideal.ring();
    let n = ring.n() as u8;
    ideal.map_generators(ring, |g| {
        Ok(g.map_vars(|v| match v {
            Variable::Z { row, col } => Variable::Z {
                row: n + 1 - row,
                col,
            },
            other => other,
        }))
    })
}

/// Rothe diagram of the permutation matrix (1 at `(i, j)` iff `w(j) = i`):
/// cells whose row-1 lies strictly east and column-1 strictly south.
fn diagram(w: &Permutation) -> Vec<(usize, usize)> {
    let n = w.n();
    let winv = w.inverse();
    let mut cells = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if winv.apply(i) > j && w.apply(j) > i {
                cells.push((i, j));
            }
        }
    }
    cells
}

/// Southeast corners of the diagram; rank conditions at these cells
/// generate the whole determinantal ideal.
fn essential_cells(w: &Permutation) -> Vec<(usize, usize)> {
    let cells = diagram(w);
    let has = |i: usize, j: usize| cells.contains(&(i, j));
    cells
        .iter()
        .filter(|&&(i, j)| !has(i + 1, j) && !has(i, j + 1))
        .copied()
        .collect()
}

/// Determinant of the submatrix of the generic matrix with the given rows
/// and columns (1-based), expanded by the first column.
pub fn generic_minor(
    ring: Ring,
    order: &MonomialOrder,
    rows: &[usize],
    cols: &[usize],
) -> Polynomial {
    assert_eq!(rows.len(), cols.len());
    if rows.is_empty() {
        return Polynomial::one(ring, order);
    }
    let k = rows.len();
    let mut acc = Polynomial::zero(ring, order);
    for (r_idx, &row) in rows.iter().enumerate() {
        let entry = Polynomial::var(ring, order, Variable::z(row, cols[0])).unwrap();
        let sub_rows: Vec<usize> = rows
            .iter()
            .enumerate()
            .filter(|&(x, _)| x != r_idx)
            .map(|(_, &r)| r)
            .collect();
        let minor = generic_minor(ring, order, &sub_rows, &cols[1..]);
        let signed = if r_idx % 2 == 0 {
            entry.mul(&minor)
        } else {
            entry.mul(&minor).neg()
        };
        acc = acc.add(&signed);
    }
    let _ = k;
    acc
}

/// The Schubert determinantal ideal: all `(1 + r_pq(w))`-minors of the
/// northwest `p x q` submatrices of the generic matrix.  Generators are
/// produced from the essential rank conditions only; the ideal is the
/// same as with all `(p, q)`.
pub fn schubert_determinantal_ideal(w: &Permutation) -> Result<Ideal, Error> {
    schubert_determinantal_ideal_in(w, Ring::z_only(w.n()))
}

pub fn schubert_determinantal_ideal_in(w: &Permutation, ring: Ring) -> Result<Ideal, Error> {
    let ord = MonomialOrder::elimination();
    let mut gens: Vec<Polynomial> = Vec::new();
    for (p, q) in essential_cells(w) {
        let size = rank_fn(w, p, q)? + 1;
        if size > p.min(q) {
            continue;
        }
        for rows in combinations(p, size) {
            for cols in combinations(q, size) {
                let rows: Vec<usize> = rows.iter().map(|&r| r + 1).collect();
                let cols: Vec<usize> = cols.iter().map(|&c| c + 1).collect();
                let m = generic_minor(ring, &ord, &rows, &cols);
                if !m.is_zero() {
                    gens.push(m);
                }
            }
        }
    }
    Ok(Ideal::new(ring, gens))
}

/// Same ideal from every `(p, q)` pair; kept as the oracle for the
/// essential-set shortcut.
pub fn schubert_determinantal_ideal_full(w: &Permutation) -> Result<Ideal, Error> {
    let ring = Ring::z_only(w.n());
    let ord = MonomialOrder::elimination();
    let mut gens: Vec<Polynomial> = Vec::new();
    for p in 1..=w.n() {
        for q in 1..=w.n() {
            let size = rank_fn(w, p, q)? + 1;
            if size > p.min(q) {
                continue;
            }
            for rows in combinations(p, size) {
                for cols in combinations(q, size) {
                    let rows: Vec<usize> = rows.iter().map(|&r| r + 1).collect();
                    let cols: Vec<usize> = cols.iter().map(|&c| c + 1).collect();
                    let m = generic_minor(ring, &ord, &rows, &cols);
                    if !m.is_zero() {
                        gens.push(m);
                    }
                }
            }
        }
    }
    Ok(Ideal::new(ring, gens))
}

static SCHUBERT_MEMO: OnceLock<Mutex<HashMap<Vec<u8>, XPoly>>> = OnceLock::new();

/// Schubert polynomial by descending divided differences from the
/// staircase monomial `x1^{n-1} x2^{n-2} ... x_{n-1}`; memoized.
pub fn schubert_polynomial(w: &Permutation) -> XPoly {
    let memo = SCHUBERT_MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    let key: Vec<u8> = w.one_line().iter().map(|&v| v as u8).collect();
    if let Some(p) = memo.lock().unwrap().get(&key) {
        return p.clone();
    }
    let n = w.n();
    let result = if *w == Permutation::w0(n) {
        let exps: Vec<u16> = (0..n).map(|i| (n - 1 - i) as u16).collect();
        XPoly::term(exps, 1)
    } else {
        // first ascent: w s_i is longer, recurse and apply the divided
        // difference
        let one_line = w.one_line();
        let i = (0..n - 1)
            .find(|&i| one_line[i] < one_line[i + 1])
            .expect("every w != w0 has an ascent");
        let mut swapped = one_line.clone();
        swapped.swap(i, i + 1);
        let longer = Permutation::new(swapped).unwrap();
        divided_difference(&schubert_polynomial(&longer), i + 1)
    };
    memo.lock()
        .unwrap()
        .entry(key)
        .or_insert(result)
        .clone()
}

/// `∂_i f = (f - s_i f) / (x_i - x_{i+1})`, computed termwise from the
/// telescoping identity for `x_i^p x_{i+1}^q` with `p > q`.
pub fn divided_difference(f: &XPoly, i: usize) -> XPoly {
    let n = f.nvars();
    let mut out = XPoly::zero(n);
    for (exps, &c) in f.terms() {
        let a = exps[i - 1];
        let b = exps[i];
        if a == b {
            continue;
        }
        let (lo, hi, sign) = if a > b { (b, a, c) } else { (a, b, -c) };
        // x^lo (x_i^{hi-lo} - x_{i+1}^{hi-lo}) / (x_i - x_{i+1})
        for k in 0..(hi - lo) {
            let mut e = exps.clone();
            e[i - 1] = lo + k;
            e[i] = hi - 1 - k;
            out = out.add(&XPoly::term(e, sign));
        }
    }
    out
}

/// Cohomology class of the minimal-sheet Hessenberg variety as a sum of
/// Schubert polynomials over the corners attaining the maximal gap
/// `h(i) - i`, with the special doubled formula for `h = (1, 2, ..., n)`.
pub fn class_formula(
    h: &crate::hessenberg::HessenbergFunction,
    n: usize,
) -> Result<XPoly, Error> {
    if n < 3 {
        return Err(Error::Invalid("class formula requires n >= 3".into()));
    }
    if h.n() != n {
        return Err(Error::Invalid("hessenberg function size mismatch".into()));
    }
    if (1..=n).all(|i| h.value(i) == i) {
        let mut acc = XPoly::zero(n);
        for i in 1..=n - 1 {
            acc = acc.add(&schubert_polynomial(&w_of(n, i + 1, i)?).scale(2));
        }
        return Ok(acc);
    }
    let gap = (1..=n).map(|i| h.value(i) as i64 - i as i64).max().unwrap();
    let mut acc = XPoly::zero(n);
    for i in h.corners() {
        if h.value(i) as i64 - i as i64 == gap {
            let w = if h.value(i) == n {
                u_of(n, i)?
            } else {
                w_of(n, i, h.value(i))?
            };
            acc = acc.add(&schubert_polynomial(&w));
        }
    }
    Ok(acc)
}

/// `x` as a constant for coefficient contexts.
pub fn constant(ring: Ring, order: &MonomialOrder, c: i64) -> Polynomial {
    Polynomial::constant(ring, order, Rational::from_integer(c.into()))
}

/// The determinant of the full generic matrix.
pub fn generic_determinant(ring: Ring, order: &MonomialOrder) -> Polynomial {
    let n = ring.n();
    let all: Vec<usize> = (1..=n).collect();
    generic_minor(ring, order, &all, &all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::GbOptions;

    fn perm(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(perm("[2,1,3,4,5]"), perm("21345"));
        assert_eq!(perm("21345").to_string(), "[21345]");
        assert!(Permutation::parse("[1,1,2]").is_err());
    }

    #[test]
    fn rank_function_examples() {
        assert_eq!(rank_fn(&perm("1423"), 2, 2).unwrap(), 1);
        let id = Permutation::identity(4);
        for p in 1..=4 {
            for q in 1..=4 {
                assert_eq!(rank_fn(&id, p, q).unwrap(), p.min(q));
            }
        }
        assert_eq!(rank_fn(&Permutation::w0(4), 2, 2).unwrap(), 0);
        assert!(rank_fn(&id, 0, 1).is_err());
    }

    #[test]
    fn shortest_coset_representatives() {
        assert_eq!(u_of(5, 2).unwrap(), perm("21345"));
        assert_eq!(v_of(5, 3).unwrap(), perm("12534"));
        assert_eq!(u_of(5, 1).unwrap(), Permutation::identity(5));
        assert_eq!(v_of(5, 5).unwrap(), Permutation::identity(5));
        // lengths and strict minimality over all of S_n, n <= 5
        for n in 2..=5 {
            for k in 1..=n {
                let u = u_of(n, k).unwrap();
                let v = v_of(n, k).unwrap();
                assert_eq!(u.length(), k - 1);
                assert_eq!(v.length(), n - k);
                for w in Permutation::all(n) {
                    if w.apply(k) == 1 && w != u {
                        assert!(w.length() > u.length());
                    }
                    if w.apply(k) == n && w != v {
                        assert!(w.length() > v.length());
                    }
                }
            }
        }
    }

    #[test]
    fn w_of_matches_composition_for_increasing_indices() {
        for n in 3..=5 {
            for i in 1..=n {
                for j in i + 1..=n {
                    let w = w_of(n, i, j).unwrap();
                    assert_eq!(w, u_of(n, i).unwrap().compose(&v_of(n, j).unwrap()));
                    assert_eq!(w.apply(i), 1);
                    assert_eq!(w.apply(j), n);
                }
            }
        }
        assert_eq!(w_of(4, 2, 4).unwrap(), perm("2134"));
        // reversed indices place n before 1
        assert_eq!(w_of(4, 2, 1).unwrap(), perm("4123"));
    }

    #[test]
    fn bruhat_examples_and_subword_oracle() {
        assert!(bruhat_leq(&perm("3142"), &perm("3241")).unwrap());
        assert!(!bruhat_leq(&perm("3214"), &perm("4132")).unwrap());
        assert!(!bruhat_leq(&perm("4132"), &perm("3214")).unwrap());
        for w in Permutation::all(4) {
            assert!(bruhat_leq(&Permutation::identity(4), &w).unwrap());
        }
        // oracle: reflexive-transitive closure of the covering relation
        // w < w t_{ab} when the transposition adds exactly one inversion
        let all = Permutation::all(4);
        let index: HashMap<Permutation, usize> =
            all.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mut leq = vec![vec![false; all.len()]; all.len()];
        for (i, w) in all.iter().enumerate() {
            leq[i][i] = true;
            for a in 1..=4 {
                for b in a + 1..=4 {
                    let mut next = w.one_line();
                    next.swap(a - 1, b - 1);
                    let next = Permutation::new(next).unwrap();
                    if next.length() == w.length() + 1 {
                        leq[i][index[&next]] = true;
                    }
                }
            }
        }
        // transitive closure
        for k in 0..all.len() {
            for i in 0..all.len() {
                if leq[i][k] {
                    for j in 0..all.len() {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for (i, u) in all.iter().enumerate() {
            for (j, w) in all.iter().enumerate() {
                assert_eq!(
                    bruhat_leq(u, w).unwrap(),
                    leq[i][j],
                    "bruhat mismatch for {u} vs {w}"
                );
            }
        }
        // u[i] <= w0 v[j] iff i <= j, exhaustively at n = 4
        for i in 1..=4 {
            for j in 1..=4 {
                let lhs = u_of(4, i).unwrap();
                let rhs = Permutation::w0(4).compose(&v_of(4, j).unwrap());
                assert_eq!(bruhat_leq(&lhs, &rhs).unwrap(), i <= j);
            }
        }
    }

    #[test]
    fn determinantal_ideal_examples() {
        let ord = MonomialOrder::elimination();
        let opts = GbOptions::default();
        // identity: no conditions
        assert!(schubert_determinantal_ideal(&Permutation::identity(4))
            .unwrap()
            .is_zero_ideal());
        // essential-set generators agree with the all-(p,q) enumeration
        for w in Permutation::all(3) {
            let a = schubert_determinantal_ideal(&w).unwrap();
            let b = schubert_determinantal_ideal_full(&w).unwrap();
            assert!(a.equals(&b, &ord, &opts).unwrap(), "essential mismatch for {w}");
        }
        for s in ["1423", "3142", "4132"] {
            let w = perm(s);
            let a = schubert_determinantal_ideal(&w).unwrap();
            let b = schubert_determinantal_ideal_full(&w).unwrap();
            assert!(a.equals(&b, &ord, &opts).unwrap(), "essential mismatch for {w}");
        }
    }

    #[test]
    fn w0_action_is_an_involution() {
        let ring = Ring::z_only(4);
        let ord = MonomialOrder::elimination();
        let i = Ideal::new(
            ring,
            [crate::text::parse_polynomial("z[4,1]*z[3,2]-z[1,1]", ring, &ord).unwrap()],
        );
        let twice = w0_act(&w0_act(&i).unwrap()).unwrap();
        assert!(twice.equals(&i, &ord, &GbOptions::default()).unwrap());
    }

    #[test]
    fn schubert_polynomial_basics() {
        // identity and longest element
        assert_eq!(
            schubert_polynomial(&Permutation::identity(4)),
            XPoly::one(4)
        );
        assert_eq!(
            schubert_polynomial(&Permutation::w0(4)),
            XPoly::term(vec![3, 2, 1, 0], 1)
        );
        // simple transposition s1 in S4
        assert_eq!(schubert_polynomial(&perm("2134")), XPoly::var(4, 1));
        // homogeneous of degree l(w), nonnegative coefficients
        for w in Permutation::all(4) {
            let s = schubert_polynomial(&w);
            assert!(s.is_nonnegative());
            assert_eq!(s.homogeneous_degree(), Some(w.length() as u32));
        }
        // a hand-checked value
        let s = schubert_polynomial(&perm("1423"));
        let x1 = XPoly::var(4, 1);
        let x2 = XPoly::var(4, 2);
        assert_eq!(s, x1.mul(&x1).add(&x1.mul(&x2)).add(&x2.mul(&x2)));
    }
}
