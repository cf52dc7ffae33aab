//! Hessenberg combinatorics and the ideal constructors: Hessenberg
//! functions with their corner calculus, Jordan data with the associated
//! tableau, nilpotent and sheet line, rank-condition ideals, and the
//! special ideal families generated by `t*z[1,k] + z[n,k]` and the column
//! minors `p_B`.

use num_traits::Zero;
use serde::Deserialize;

use crate::error::Error;
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::polynomial::{Polynomial, Rational};
use crate::util::combinations;
use crate::variable::{Ring, Variable};

/// A nondecreasing function `h: [n] -> [n]` with `h(i) >= i`, by the
/// convention `h(0) = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HessenbergFunction {
    values: Vec<usize>,
}

impl HessenbergFunction {
    pub fn new(values: Vec<usize>) -> Result<HessenbergFunction, Error> {
        let n = values.len();
        if n == 0 {
            return Err(Error::Invalid("empty hessenberg function".into()));
        }
        for (idx, &v) in values.iter().enumerate() {
            let i = idx + 1;
            if v < i || v > n {
                return Err(Error::Invalid(format!(
                    "h({i}) = {v} violates i <= h(i) <= n"
                )));
            }
            if idx > 0 && v < values[idx - 1] {
                return Err(Error::Invalid(format!("h is not nondecreasing at {i}")));
            }
        }
        Ok(HessenbergFunction { values })
    }

    pub fn parse(s: &str) -> Result<HessenbergFunction, Error> {
        let values: Vec<usize> = s
            .split(',')
            .map(|v| {
                v.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad hessenberg value: {e}")))
            })
            .collect::<Result<_, _>>()?;
        HessenbergFunction::new(values)
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `h(i)` for `1 <= i <= n`, with `h(0) = 0`.
    pub fn value(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.values[i - 1]
        }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Corners: indices with `h(i) > h(i-1)`; always contains 1.
    pub fn corners(&self) -> Vec<usize> {
        (1..=self.n())
            .filter(|&i| self.value(i) > self.value(i - 1))
            .collect()
    }

    /// `i* = max{k : h(k) = h(i)}`.
    pub fn i_star(&self, i: usize) -> usize {
        (1..=self.n())
            .filter(|&k| self.value(k) == self.value(i))
            .max()
            .unwrap()
    }

    /// `i_* = min{k : h(k) = h(i)}`.
    pub fn i_floor(&self, i: usize) -> usize {
        (1..=self.n())
            .filter(|&k| self.value(k) == self.value(i))
            .min()
            .unwrap()
    }

    pub fn is_indecomposable(&self) -> bool {
        (1..self.n()).all(|i| self.value(i) > i)
    }

    /// `D(h) = {j < n : h(j) = j}`; nonempty exactly when decomposable.
    pub fn decomposable_set(&self) -> Vec<usize> {
        (1..self.n()).filter(|&j| self.value(j) == j).collect()
    }

    /// All Hessenberg functions for a given `n` (lexicographic order).
    pub fn all(n: usize) -> Vec<HessenbergFunction> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<HessenbergFunction>) {
            let i = cur.len() + 1;
            if i > n {
                out.push(HessenbergFunction { values: cur.clone() });
                return;
            }
            let lo = cur.last().copied().unwrap_or(0).max(i);
            for v in lo..=n {
                cur.push(v);
                rec(n, cur, out);
                cur.pop();
            }
        }
        rec(n, &mut cur, &mut out);
        out
    }
}

impl std::fmt::Display for HessenbergFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({})",
            self.values
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Partition, Error> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Invalid("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid("partition must be weakly decreasing".into()));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn part(&self, j: usize) -> usize {
        self.parts.get(j).copied().unwrap_or(0)
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({})",
            self.parts
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Eigenvalue-partition pairs, normalized so that blocks with smaller
/// total size come first, ties broken by lexicographically smaller
/// partition, then by eigenvalue.  Eigenvalues must be pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanData {
    blocks: Vec<(Rational, Partition)>,
}

#[derive(Deserialize)]
struct JordanBlockJson {
    eigenvalue: serde_json::Value,
    mu: Vec<usize>,
}

impl JordanData {
    pub fn new(blocks: Vec<(Rational, Partition)>) -> Result<JordanData, Error> {
        if blocks.is_empty() {
            return Err(Error::Invalid("empty jordan data".into()));
        }
        for (i, (ci, _)) in blocks.iter().enumerate() {
            for (cj, _) in &blocks[i + 1..] {
                if ci == cj {
                    return Err(Error::Invalid(format!(
                        "eigenvalue {ci} appears in two generalized blocks"
                    )));
                }
            }
        }
        let mut blocks = blocks;
        blocks.sort_by(|(ca, ma), (cb, mb)| {
            ma.size()
                .cmp(&mb.size())
                .then_with(|| ma.parts().cmp(mb.parts()))
                .then_with(|| ca.cmp(cb))
        });
        Ok(JordanData { blocks })
    }

    /// `[{"eigenvalue": 4, "mu": [1,1]}, ...]`; eigenvalues may be
    /// integers or strings like `"3/2"`.
    pub fn from_json(value: &serde_json::Value) -> Result<JordanData, Error> {
        let raw: Vec<JordanBlockJson> =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let blocks = raw
            .into_iter()
            .map(|b| {
                let c = match &b.eigenvalue {
                    serde_json::Value::Number(x) if x.is_i64() => {
                        Rational::from_integer(x.as_i64().unwrap().into())
                    }
                    serde_json::Value::String(s) => s
                        .parse::<Rational>()
                        .map_err(|e| Error::Parse(format!("bad eigenvalue: {e}")))?,
                    other => return Err(Error::Parse(format!("bad eigenvalue {other}"))),
                };
                Ok((c, Partition::new(b.mu)?))
            })
            .collect::<Result<Vec<_>, Error>>()?;
        JordanData::new(blocks)
    }

    pub fn blocks(&self) -> &[(Rational, Partition)] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(|(_, mu)| mu.size()).sum()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.blocks.len() == 1 && self.blocks[0].0.is_zero()
    }

    /// The sheet partition: `lambda_j = sum_i mu^i_j`.
    pub fn lambda(&self) -> Partition {
        let rows = self
            .blocks
            .iter()
            .map(|(_, mu)| mu.parts().len())
            .max()
            .unwrap();
        let parts: Vec<usize> = (0..rows)
            .map(|j| self.blocks.iter().map(|(_, mu)| mu.part(j)).sum())
            .filter(|&p| p > 0)
            .collect();
        Partition::new(parts).expect("column sums of partitions are a partition")
    }

    /// Jordan data of `diag(1, 0, ..., 0)`, the semisimple representative
    /// of the minimal sheet.
    pub fn minimal_semisimple(n: usize) -> JordanData {
        assert!(n >= 2);
        JordanData::new(vec![
            (Rational::from_integer(1.into()), Partition::new(vec![1]).unwrap()),
            (
                Rational::from_integer(0.into()),
                Partition::new(vec![1; n - 1]).unwrap(),
            ),
        ])
        .unwrap()
    }

    /// Jordan data of a regular semisimple element with eigenvalues
    /// `1, 2, ..., n`.
    pub fn regular_semisimple(n: usize) -> JordanData {
        JordanData::new(
            (1..=n)
                .map(|c| {
                    (
                        Rational::from_integer((c as i64).into()),
                        Partition::new(vec![1]).unwrap(),
                    )
                })
                .collect(),
        )
        .unwrap()
    }
}

/// Row-indexed entries; rows increase left to right and every entry in a
/// row exceeds everything in the rows below.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect())
            .expect("tableau rows weakly decrease")
    }

    fn check(&self) -> Result<(), Error> {
        for r in &self.rows {
            if r.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Invalid("tableau rows must increase".into()));
            }
        }
        let mut entries: Vec<usize> = self.rows.iter().flatten().copied().collect();
        let total = entries.len();
        entries.sort_unstable();
        entries.dedup();
        if entries.len() != total || entries != (1..=total).collect::<Vec<_>>() {
            return Err(Error::Invalid(
                "tableau entries must be 1..n without repeats".into(),
            ));
        }
        Ok(())
    }
}

/// The block tableau for one partition: label the rows with consecutive
/// integers starting at `offset + 1`, bottom row first, so that every
/// entry in a row exceeds everything in the rows below it.
fn block_tableau(mu: &Partition, offset: usize) -> Vec<Vec<usize>> {
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); mu.parts().len()];
    let mut next = offset + 1;
    for r in (0..mu.parts().len()).rev() {
        for _ in 0..mu.parts()[r] {
            rows[r].push(next);
            next += 1;
        }
    }
    debug_assert!(rows.windows(2).all(|w| {
        let min_here = w[0].iter().min().unwrap();
        let max_below = w[1].iter().max().unwrap();
        min_here > max_below
    }));
    rows
}

/// Concatenated tableau `T_1 ∘ T_2 ∘ ... ∘ T_k` of shape `lambda`.
pub fn build_tableau(jd: &JordanData) -> Result<Tableau, Error> {
    let depth = jd
        .blocks()
        .iter()
        .map(|(_, mu)| mu.parts().len())
        .max()
        .unwrap();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); depth];
    let mut offset = 0;
    for (_, mu) in jd.blocks() {
        let block = block_tableau(mu, offset);
        for (r, row) in block.into_iter().enumerate() {
            rows[r].extend(row);
        }
        offset += mu.size();
    }
    let t = Tableau { rows };
    t.check()?;
    debug_assert_eq!(t.shape(), jd.lambda());
    Ok(t)
}

/// Positions of the 1 entries of the associated nilpotent `n_x`:
/// `(l, m)` for every horizontally adjacent pair in the tableau.
pub fn associated_nilpotent(jd: &JordanData) -> Result<Vec<(usize, usize)>, Error> {
    let t = build_tableau(jd)?;
    let mut ones = Vec::new();
    for row in t.rows() {
        for pair in row.windows(2) {
            ones.push((pair[0], pair[1]));
        }
    }
    ones.sort_unstable();
    Ok(ones)
}

/// The sheet line `x_t = t * x_ss + n_x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SheetLine {
    n: usize,
    diagonal: Vec<Rational>,
    nilpotent_ones: Vec<(usize, usize)>,
}

impl SheetLine {
    pub fn from_jordan(jd: &JordanData) -> Result<SheetLine, Error> {
        let n = jd.n();
        let mut diagonal = Vec::with_capacity(n);
        for (c, mu) in jd.blocks() {
            for _ in 0..mu.size() {
                diagonal.push(c.clone());
            }
        }
        let nilpotent_ones = associated_nilpotent(jd)?;
        // at most one 1 per row and per column
        let mut rows: Vec<usize> = nilpotent_ones.iter().map(|&(r, _)| r).collect();
        let mut cols: Vec<usize> = nilpotent_ones.iter().map(|&(_, c)| c).collect();
        rows.sort_unstable();
        cols.sort_unstable();
        rows.dedup();
        cols.dedup();
        if rows.len() != nilpotent_ones.len() || cols.len() != nilpotent_ones.len() {
            return Err(Error::Invalid("nilpotent part is not a partial permutation".into()));
        }
        Ok(SheetLine {
            n,
            diagonal,
            nilpotent_ones,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn semisimple_diagonal(&self) -> &[Rational] {
        &self.diagonal
    }

    pub fn nilpotent_ones(&self) -> &[(usize, usize)] {
        &self.nilpotent_ones
    }

    /// `x_t` as a matrix over the ring with `t`.
    pub fn family_matrix(&self) -> PolyMatrix {
        let ring = Ring::with_t(self.n);
        let ord = MonomialOrder::elimination();
        let mut m = PolyMatrix::zero(ring, self.n);
        let t = Polynomial::var(ring, &ord, Variable::T).unwrap();
        for (i, c) in self.diagonal.iter().enumerate() {
            *m.entry_mut(i + 1, i + 1) = t.scale(c);
        }
        for &(r, c) in &self.nilpotent_ones {
            let cur = m.entry(r, c).clone();
            *m.entry_mut(r, c) = cur.add(&Polynomial::one(ring, &ord));
        }
        m
    }

    /// The fiber `x_a = a * x_ss + n_x` as a constant matrix over `C[z]`.
    pub fn fiber_matrix(&self, a: &Rational) -> PolyMatrix {
        let ring = Ring::z_only(self.n);
        let ord = MonomialOrder::elimination();
        let mut m = PolyMatrix::zero(ring, self.n);
        for (i, c) in self.diagonal.iter().enumerate() {
            *m.entry_mut(i + 1, i + 1) = Polynomial::constant(ring, &ord, c * a);
        }
        for &(r, c) in &self.nilpotent_ones {
            let cur = m.entry(r, c).clone();
            *m.entry_mut(r, c) = cur.add(&Polynomial::one(ring, &ord));
        }
        m
    }
}

/// The minimal-sheet line `s_t = t*diag(1,0,...,0) + E_{1n}`.
pub fn minimal_sheet_line(n: usize) -> SheetLine {
    SheetLine::from_jordan(&JordanData::minimal_semisimple(n)).unwrap()
}

/// The semisimple representative `s = diag(1, 0, ..., 0)` itself (not a
/// point of the sheet line, but conjugate to its fiber at `t = 1`).
pub fn minimal_semisimple_matrix(n: usize) -> PolyMatrix {
    let ring = Ring::z_only(n);
    let mut m = PolyMatrix::zero(ring, n);
    *m.entry_mut(1, 1) = Polynomial::one(ring, &MonomialOrder::elimination());
    m
}

/// A square matrix with polynomial entries (coefficients may involve `t`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    n: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zero(ring: Ring, n: usize) -> PolyMatrix {
        let ord = MonomialOrder::elimination();
        PolyMatrix {
            ring,
            n,
            entries: vec![Polynomial::zero(ring, &ord); n * n],
        }
    }

    pub fn from_rows(ring: Ring, rows: Vec<Vec<Polynomial>>) -> Result<PolyMatrix, Error> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("matrix must be square".into()));
        }
        Ok(PolyMatrix {
            ring,
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Row-major array of polynomial strings.
    pub fn from_json(value: &serde_json::Value, ring: Ring) -> Result<PolyMatrix, Error> {
        let raw: Vec<Vec<String>> =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let ord = MonomialOrder::elimination();
        let rows = raw
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|s| crate::text::parse_polynomial(&s, ring, &ord))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        PolyMatrix::from_rows(ring, rows)
    }

    /// Constant matrix from rationals.
    pub fn from_scalars(ring: Ring, rows: Vec<Vec<Rational>>) -> Result<PolyMatrix, Error> {
        let ord = MonomialOrder::elimination();
        let rows = rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|c| Polynomial::constant(ring, &ord, c))
                    .collect()
            })
            .collect();
        PolyMatrix::from_rows(ring, rows)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[(row - 1) * self.n + (col - 1)]
    }

    pub fn entry_mut(&mut self, row: usize, col: usize) -> &mut Polynomial {
        &mut self.entries[(row - 1) * self.n + (col - 1)]
    }
}

/// Rank-condition and Hessenberg ideals.
pub mod rank_ideals {
    use super::*;

    /// Column `j` of the generic matrix as a vector of variables.
    fn generic_column(ring: Ring, ord: &MonomialOrder, j: usize) -> Vec<Polynomial> {
        (1..=ring.n())
            .map(|i| Polynomial::var(ring, ord, Variable::z(i, j)).unwrap())
            .collect()
    }

    /// `x * v_j` where `v_j` is the j-th generic column.
    fn image_column(x: &PolyMatrix, j: usize) -> Vec<Polynomial> {
        let ring = x.ring();
        let ord = MonomialOrder::elimination();
        let v = generic_column(ring, &ord, j);
        (1..=x.n())
            .map(|r| {
                let mut acc = Polynomial::zero(ring, &ord);
                for (k, vk) in v.iter().enumerate() {
                    let e = x.entry(r, k + 1);
                    if !e.is_zero() {
                        acc = acc.add(&e.mul(vk));
                    }
                }
                acc
            })
            .collect()
    }

    fn column_matrix_minor(cols: &[Vec<Polynomial>], rows: &[usize], picks: &[usize]) -> Polynomial {
        // Laplace expansion over the first picked column
        let ring = cols[0][0].ring();
        let ord = MonomialOrder::elimination();
        if picks.is_empty() {
            return Polynomial::one(ring, &ord);
        }
        let mut acc = Polynomial::zero(ring, &ord);
        for (r_idx, &row) in rows.iter().enumerate() {
            let entry = &cols[picks[0]][row - 1];
            if entry.is_zero() {
                continue;
            }
            let sub_rows: Vec<usize> = rows
                .iter()
                .enumerate()
                .filter(|&(x, _)| x != r_idx)
                .map(|(_, &r)| r)
                .collect();
            let minor = column_matrix_minor(cols, &sub_rows, &picks[1..]);
            let signed = if r_idx % 2 == 0 {
                entry.mul(&minor)
            } else {
                entry.mul(&minor).neg()
            };
            acc = acc.add(&signed);
        }
        acc
    }

    /// The ideal of `(h(i)+1) x (h(i)+1)` minors of the `n x (h(i)+i)`
    /// matrix `[x v_1 .. x v_i | v_1 .. v_{h(i)}]`; the zero ideal when
    /// `h(i) = n`.  Row and column subsets are enumerated
    /// lexicographically, zero minors dropped.
    pub fn rank_condition_ideal(
        x: &PolyMatrix,
        h: &HessenbergFunction,
        i: usize,
    ) -> Result<Ideal, Error> {
        let n = x.n();
        if h.n() != n {
            return Err(Error::Invalid("matrix and hessenberg sizes differ".into()));
        }
        if !(1..=n).contains(&i) {
            return Err(Error::IndexOutOfRange(format!("rank condition index {i}")));
        }
        let ring = x.ring();
        if h.value(i) == n {
            return Ok(Ideal::zero(ring));
        }
        let ord = MonomialOrder::elimination();
        let hi = h.value(i);
        let mut cols: Vec<Vec<Polynomial>> = Vec::with_capacity(hi + i);
        for j in 1..=i {
            cols.push(image_column(x, j));
        }
        for j in 1..=hi {
            cols.push(generic_column(ring, &ord, j));
        }
        let size = hi + 1;
        let mut gens: Vec<Polynomial> = Vec::new();
        for rows in combinations(n, size) {
            let rows: Vec<usize> = rows.iter().map(|&r| r + 1).collect();
            for picks in combinations(cols.len(), size) {
                let m = column_matrix_minor(&cols, &rows, &picks);
                if !m.is_zero() && !gens.contains(&m) {
                    gens.push(m);
                }
            }
        }
        Ok(Ideal::new(ring, gens))
    }

    /// `I_{x,h} = sum over corners i of I_{x,h,i*}` (corner reduction).
    pub fn hessenberg_ideal(x: &PolyMatrix, h: &HessenbergFunction) -> Result<Ideal, Error> {
        let mut acc = Ideal::zero(x.ring());
        for i in h.corners() {
            acc = acc.sum(&rank_condition_ideal(x, h, h.i_star(i))?)?;
        }
        Ok(acc)
    }

    /// The full sum over all `i in [n]`, kept as the corner-reduction
    /// oracle.
    pub fn hessenberg_ideal_full(x: &PolyMatrix, h: &HessenbergFunction) -> Result<Ideal, Error> {
        let mut acc = Ideal::zero(x.ring());
        for i in 1..=h.n() {
            acc = acc.sum(&rank_condition_ideal(x, h, i)?)?;
        }
        Ok(acc)
    }
}

/// The special ideal families.
pub mod special {
    use super::*;

    /// `p_B`, the minor of the generic matrix on rows `B` and columns
    /// `1..|B|`.
    pub fn p_minor(ring: Ring, rows: &[usize]) -> Polynomial {
        let cols: Vec<usize> = (1..=rows.len()).collect();
        crate::schubert::generic_minor(ring, &MonomialOrder::elimination(), rows, &cols)
    }

    /// `J^t_i = < t z[1,k] + z[n,k] : k <= i >`; the zero ideal at `i = 0`.
    pub fn j_t(ring: Ring, i: usize) -> Result<Ideal, Error> {
        if !ring.has_t {
            return Err(Error::Invalid("j_t needs the family parameter t".into()));
        }
        if i > ring.n() {
            return Err(Error::IndexOutOfRange(format!("j_t({i})")));
        }
        let ord = MonomialOrder::elimination();
        let n = ring.n();
        let t = Polynomial::var(ring, &ord, Variable::T)?;
        let gens: Vec<Polynomial> = (1..=i)
            .map(|k| {
                let top = Polynomial::var(ring, &ord, Variable::z(1, k)).unwrap();
                let bottom = Polynomial::var(ring, &ord, Variable::z(n, k)).unwrap();
                t.mul(&top).add(&bottom)
            })
            .collect();
        Ok(Ideal::new(ring, gens))
    }

    /// `J^a_i = < a z[1,k] + z[n,k] : k <= i >`; at `a = 0` this is
    /// `J^0_i = < z[n,1], ..., z[n,i] >`.
    pub fn j_a(ring: Ring, i: usize, a: &Rational) -> Result<Ideal, Error> {
        if i > ring.n() {
            return Err(Error::IndexOutOfRange(format!("j_a({i})")));
        }
        let ord = MonomialOrder::elimination();
        let n = ring.n();
        let gens: Vec<Polynomial> = (1..=i)
            .map(|k| {
                let top = Polynomial::var(ring, &ord, Variable::z(1, k)).unwrap();
                let bottom = Polynomial::var(ring, &ord, Variable::z(n, k)).unwrap();
                top.scale(a).add(&bottom)
            })
            .collect();
        Ok(Ideal::new(ring, gens))
    }

    /// `K_j = < p_B : B ⊆ {2..n}, |B| = j >`; `K_0` is the unit ideal and
    /// `K_n` the zero ideal.
    pub fn k_of(ring: Ring, j: usize) -> Result<Ideal, Error> {
        let n = ring.n();
        if j > n {
            return Err(Error::IndexOutOfRange(format!("k_of({j})")));
        }
        if j == 0 {
            return Ok(Ideal::unit(ring));
        }
        if j == n {
            return Ok(Ideal::zero(ring));
        }
        let gens: Vec<Polynomial> = combinations(n - 1, j)
            .into_iter()
            .map(|b| {
                let rows: Vec<usize> = b.iter().map(|&r| r + 2).collect();
                p_minor(ring, &rows)
            })
            .collect();
        Ok(Ideal::new(ring, gens))
    }

    /// The corner prime `P^t_{i,h} = J^t_{i-1} + K_{h(i)}`.
    pub fn p_t(ring: Ring, i: usize, h: &HessenbergFunction) -> Result<Ideal, Error> {
        if !(1..=h.n()).contains(&i) {
            return Err(Error::IndexOutOfRange(format!("p_t({i})")));
        }
        j_t(ring, i - 1)?.sum(&k_of(ring, h.value(i))?)
    }

    /// Closed form of the minimal-sheet family ideal:
    /// `sum over corners i of J^t_{i*} * K_{h(i)}`.
    pub fn minimal_sheet_closed_form(ring: Ring, h: &HessenbergFunction) -> Result<Ideal, Error> {
        let mut acc = Ideal::zero(ring);
        for i in h.corners() {
            if h.value(i) == h.n() {
                continue; // K_n = 0 contributes nothing
            }
            let prod = j_t(ring, h.i_star(i))?.product(&k_of(ring, h.value(i))?)?;
            acc = acc.sum(&prod)?;
        }
        Ok(acc)
    }
}

/// The evaluation homomorphism `t := a` applied generator-wise; the image
/// lives in the ring without `t`.
pub fn ev(a: &Rational, ideal: &Ideal) -> Result<Ideal, Error> {
    let ring = ideal.ring();
    if !ring.has_t {
        return Err(Error::Invalid("ev needs the family parameter t".into()));
    }
    let target = ring.drop_var(Variable::T);
    let ord = MonomialOrder::elimination();
    let value = Polynomial::constant(ring, &ord, a.clone());
    ideal.map_generators(target, |g| {
        g.substitute(Variable::T, &value).with_ring(target)
    })
}

/// The change of variables `z[1,l] -> a^{-1} (z[1,l] - z[n,l])`, identity
/// on the other coordinates; requires `a != 0`.
pub fn psi(a: &Rational, ideal: &Ideal) -> Result<Ideal, Error> {
    if a.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let ring = ideal.ring();
    let n = ring.n();
    let ord = MonomialOrder::elimination();
    let inv = Rational::from_integer(1.into()) / a;
    ideal.map_generators(ring, |g| {
        let mut out = g.clone();
        for l in 1..=n {
            let top = Polynomial::var(ring, &ord, Variable::z(1, l))?;
            let bottom = Polynomial::var(ring, &ord, Variable::z(n, l))?;
            let image = top.sub(&bottom).scale(&inv);
            out = out.substitute(Variable::z(1, l), &image);
        }
        Ok(out)
    })
}

/// The determinant monomial ideal membership helper: the full generic
/// determinant `d`.
pub fn determinant(ring: Ring) -> Polynomial {
    crate::schubert::generic_determinant(ring, &MonomialOrder::elimination())
}

/// Builder for the decomposability witness: the smallest `i0` in `D(h)`
/// and `B0 = {n} ∪ {2, 3, ...}` of size `i0`.
pub fn decomposability_witness(h: &HessenbergFunction) -> Option<(usize, Vec<usize>)> {
    let d = h.decomposable_set();
    let i0 = *d.first()?;
    let mut b0 = vec![h.n()];
    let mut next = 2;
    while b0.len() < i0 {
        b0.push(next);
        next += 1;
    }
    b0.sort_unstable();
    Some((i0, b0))
}

#[allow(dead_code)]
fn unused_monomial(_: &Monomial) {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::GbOptions;
    use crate::text::parse_polynomial;
    use crate::util::rat;

    fn ord() -> MonomialOrder {
        MonomialOrder::elimination()
    }

    fn opts() -> GbOptions {
        GbOptions::default()
    }

    fn hf(vals: &[usize]) -> HessenbergFunction {
        HessenbergFunction::new(vals.to_vec()).unwrap()
    }

    fn p(ring: Ring, s: &str) -> Polynomial {
        parse_polynomial(s, ring, &ord()).unwrap()
    }

    #[test]
    fn corner_calculus() {
        let h = hf(&[2, 4, 4, 4]);
        assert_eq!(h.corners(), vec![1, 2]);
        assert_eq!(h.i_star(1), 1);
        assert_eq!(h.i_star(2), 4);
        assert!(h.is_indecomposable());
        assert!(h.decomposable_set().is_empty());

        let full = hf(&[4, 4, 4, 4]);
        assert_eq!(full.corners(), vec![1]);
        assert!(full.is_indecomposable());

        let springer = hf(&[1, 2, 3, 4]);
        assert_eq!(springer.corners(), vec![1, 2, 3, 4]);
        assert_eq!(springer.decomposable_set(), vec![1, 2, 3]);
        assert!(!springer.is_indecomposable());

        assert_eq!(HessenbergFunction::all(4).len(), 14);
        assert!(HessenbergFunction::new(vec![1, 1, 3]).is_err());
        assert!(HessenbergFunction::new(vec![2, 1, 3]).is_err());
        assert_eq!(HessenbergFunction::parse("2,4,4,4").unwrap(), h);
    }

    #[test]
    fn lambda_tableau_and_nilpotent() {
        // two blocks: eigenvalue 4 with (1,1), eigenvalue 5 with (3,1)
        let jd = JordanData::new(vec![
            (rat(4), Partition::new(vec![1, 1]).unwrap()),
            (rat(5), Partition::new(vec![3, 1]).unwrap()),
        ])
        .unwrap();
        assert_eq!(jd.lambda(), Partition::new(vec![4, 2]).unwrap());
        let t = build_tableau(&jd).unwrap();
        assert_eq!(t.rows(), &[vec![2, 4, 5, 6], vec![1, 3]]);
        assert_eq!(
            associated_nilpotent(&jd).unwrap(),
            vec![(1, 3), (2, 4), (4, 5), (5, 6)]
        );
        // nilpotent input: lambda = mu
        let nil = JordanData::new(vec![(rat(0), Partition::new(vec![2, 1]).unwrap())]).unwrap();
        assert_eq!(nil.lambda(), Partition::new(vec![2, 1]).unwrap());
        assert!(nil.is_nilpotent());
        // minimal semisimple: lambda = (2, 1^{n-2}), nilpotent E_{1n}
        let minimal = JordanData::minimal_semisimple(5);
        assert_eq!(minimal.lambda(), Partition::new(vec![2, 1, 1, 1]).unwrap());
        assert_eq!(associated_nilpotent(&minimal).unwrap(), vec![(1, 5)]);
        // regular semisimple: superstandard row, n_x on the superdiagonal
        let reg = JordanData::regular_semisimple(4);
        assert_eq!(
            associated_nilpotent(&reg).unwrap(),
            vec![(1, 2), (2, 3), (3, 4)]
        );
        // equal-sized blocks with equal partitions order by eigenvalue
        let tie = JordanData::new(vec![
            (rat(5), Partition::new(vec![1, 1]).unwrap()),
            (rat(4), Partition::new(vec![1, 1]).unwrap()),
        ])
        .unwrap();
        assert_eq!(tie.blocks()[0].0, rat(4));
        // repeated eigenvalues are rejected
        assert!(JordanData::new(vec![
            (rat(1), Partition::new(vec![1]).unwrap()),
            (rat(1), Partition::new(vec![1]).unwrap()),
        ])
        .is_err());
    }

    #[test]
    fn sheet_lines() {
        let line = minimal_sheet_line(4);
        let fam = line.family_matrix();
        assert_eq!(fam.entry(1, 1), &p(fam.ring(), "t"));
        assert_eq!(fam.entry(1, 4), &p(fam.ring(), "1"));
        assert!(fam.entry(2, 2).is_zero());
        // the 6x6 example: diag(4,4,5,5,5,5) with ones from the tableau
        let jd = JordanData::new(vec![
            (rat(4), Partition::new(vec![1, 1]).unwrap()),
            (rat(5), Partition::new(vec![3, 1]).unwrap()),
        ])
        .unwrap();
        let line6 = SheetLine::from_jordan(&jd).unwrap();
        let fam6 = line6.family_matrix();
        assert_eq!(fam6.entry(1, 1), &p(fam6.ring(), "4*t"));
        assert_eq!(fam6.entry(3, 3), &p(fam6.ring(), "5*t"));
        assert_eq!(fam6.entry(1, 3), &p(fam6.ring(), "1"));
        assert_eq!(fam6.entry(2, 4), &p(fam6.ring(), "1"));
        assert_eq!(fam6.entry(4, 5), &p(fam6.ring(), "1"));
        assert_eq!(fam6.entry(5, 6), &p(fam6.ring(), "1"));
        assert!(fam6.entry(2, 1).is_zero());
        // nilpotent jordan data gives a constant line
        let nil = JordanData::new(vec![(rat(0), Partition::new(vec![2, 1, 1]).unwrap())]).unwrap();
        let line_nil = SheetLine::from_jordan(&nil).unwrap();
        let fam_nil = line_nil.family_matrix();
        for i in 1..=4 {
            assert!(fam_nil.entry(i, i).is_zero());
        }
    }

    #[test]
    fn rank_condition_examples() {
        // n = 4, h = (2,4,4,4), x = E14, i = 1: three displayed products
        let h = hf(&[2, 4, 4, 4]);
        let line = minimal_sheet_line(4);
        let nilp = line.fiber_matrix(&rat(0));
        let ring = nilp.ring();
        let i1 = rank_ideals::rank_condition_ideal(&nilp, &h, 1).unwrap();
        let expect = vec![
            p(ring, "z[4,1]*z[2,1]*z[3,2]-z[4,1]*z[2,2]*z[3,1]"),
            p(ring, "z[4,1]*z[2,1]*z[4,2]-z[4,1]*z[2,2]*z[4,1]"),
            p(ring, "z[4,1]*z[3,1]*z[4,2]-z[4,1]*z[3,2]*z[4,1]"),
        ];
        assert_eq!(i1.generators().len(), 3);
        for e in &expect {
            assert!(i1.generators().contains(e));
        }
        // h(i) = n gives the zero ideal
        assert!(rank_ideals::rank_condition_ideal(&nilp, &h, 2)
            .unwrap()
            .is_zero_ideal());
        // family version: <(t z11 + z41) p_B>
        let fam = line.family_matrix();
        let fam_ring = fam.ring();
        let f1 = rank_ideals::rank_condition_ideal(&fam, &h, 1).unwrap();
        let j1k2 = special::j_t(fam_ring, 1)
            .unwrap()
            .product(&special::k_of(fam_ring, 2).unwrap())
            .unwrap();
        assert!(f1.equals(&j1k2, &ord(), &opts()).unwrap());
    }

    #[test]
    fn hessenberg_ideal_examples() {
        let line = minimal_sheet_line(4);
        let nilp = line.fiber_matrix(&rat(0));
        let ring = nilp.ring();
        // h = (n..n): zero ideal
        let full = rank_ideals::hessenberg_ideal(&nilp, &hf(&[4, 4, 4, 4])).unwrap();
        assert!(full.is_zero_ideal());
        // h = (1,2,3,4): J10 K1 + J20 K2 + J30 K3
        let springer = rank_ideals::hessenberg_ideal(&nilp, &hf(&[1, 2, 3, 4])).unwrap();
        let mut expect = Ideal::zero(ring);
        for i in 1..=3 {
            let j = special::j_a(ring, i, &rat(0)).unwrap();
            let k = special::k_of(ring, i).unwrap();
            expect = expect.sum(&j.product(&k).unwrap()).unwrap();
        }
        assert!(springer.equals(&expect, &ord(), &opts()).unwrap());
    }

    #[test]
    fn corner_reduction_is_exact() {
        let line = minimal_sheet_line(4);
        for h in HessenbergFunction::all(4) {
            for x in [
                line.fiber_matrix(&rat(0)),
                line.fiber_matrix(&rat(1)),
                line.family_matrix(),
            ] {
                let reduced = rank_ideals::hessenberg_ideal(&x, &h).unwrap();
                let full = rank_ideals::hessenberg_ideal_full(&x, &h).unwrap();
                assert!(
                    reduced.equals(&full, &ord(), &opts()).unwrap(),
                    "corner reduction failed for h={h}"
                );
            }
        }
    }

    #[test]
    fn special_ideal_conventions() {
        let ring = Ring::with_t(4);
        // K2 at n = 4: the three displayed minors (up to sign convention)
        let k2 = special::k_of(ring, 2).unwrap();
        assert_eq!(k2.generators().len(), 3);
        for s in [
            "z[2,1]*z[3,2]-z[2,2]*z[3,1]",
            "z[2,1]*z[4,2]-z[2,2]*z[4,1]",
            "z[3,1]*z[4,2]-z[3,2]*z[4,1]",
        ] {
            assert!(k2.member(&p(ring, s), &ord()).unwrap());
        }
        assert!(special::k_of(ring, 4).unwrap().is_zero_ideal());
        assert!(special::j_t(ring, 0).unwrap().is_zero_ideal());
        let k0 = special::k_of(ring, 0).unwrap();
        assert!(k0.member(&Polynomial::one(ring, &ord()), &ord()).unwrap());
        // J^0_i
        let zr = Ring::z_only(4);
        let j0 = special::j_a(zr, 2, &rat(0)).unwrap();
        let expect = Ideal::new(zr, [p(zr, "z[4,1]"), p(zr, "z[4,2]")]);
        assert!(j0.equals(&expect, &ord(), &opts()).unwrap());
        // product with the unit ideal keeps the other factor
        let j1 = special::j_t(ring, 1).unwrap();
        let with_unit = j1.product(&special::k_of(ring, 0).unwrap()).unwrap();
        assert!(with_unit.equals(&j1, &ord(), &opts()).unwrap());
    }

    #[test]
    fn minimal_sheet_closed_form_matches_rank_conditions() {
        let line = minimal_sheet_line(4);
        let fam = line.family_matrix();
        let ring = fam.ring();
        for h in [hf(&[2, 4, 4, 4]), hf(&[4, 4, 4, 4]), hf(&[1, 2, 3, 4])] {
            let closed = special::minimal_sheet_closed_form(ring, &h).unwrap();
            let direct = rank_ideals::hessenberg_ideal(&fam, &h).unwrap();
            assert!(closed.equals(&direct, &ord(), &opts()).unwrap());
        }
        assert!(
            special::minimal_sheet_closed_form(ring, &hf(&[4, 4, 4, 4]))
                .unwrap()
                .is_zero_ideal()
        );
    }

    #[test]
    fn evaluation_and_twist() {
        let ring = Ring::with_t(4);
        let zr = Ring::z_only(4);
        // ev_0(J^t_i) = J^0_i
        for i in 0..=3 {
            let jt = special::j_t(ring, i).unwrap();
            let j0 = special::j_a(zr, i, &rat(0)).unwrap();
            assert!(ev(&rat(0), &jt)
                .unwrap()
                .equals(&j0, &ord(), &opts())
                .unwrap());
        }
        // ev_1(t z11 + z41) = z11 + z41
        let jt = special::j_t(ring, 1).unwrap();
        let at1 = ev(&rat(1), &jt).unwrap();
        assert_eq!(at1.generators()[0], p(zr, "z[1,1]+z[4,1]"));
        // psi_a(J^a_{i-1} + K_j) = w0 J^0_{i-1} + K_j for a in {1, 2}
        for a in [rat(1), rat(2)] {
            for (i, j) in [(2usize, 2usize), (3, 3)] {
                let ja = special::j_a(zr, i - 1, &a).unwrap();
                let kj = special::k_of(zr, j).unwrap();
                let sum = ja.sum(&kj).unwrap();
                let twisted = psi(&a, &sum).unwrap();
                let expect = crate::schubert::w0_act(&special::j_a(zr, i - 1, &rat(0)).unwrap())
                    .unwrap()
                    .sum(&kj)
                    .unwrap();
                assert!(twisted.equals(&expect, &ord(), &opts()).unwrap());
            }
        }
        assert!(psi(&rat(0), &special::k_of(zr, 2).unwrap()).is_err());
    }

    #[test]
    fn fibers_of_the_family_match_direct_construction() {
        let line = minimal_sheet_line(4);
        let fam = line.family_matrix();
        for h in HessenbergFunction::all(4) {
            let family_ideal = rank_ideals::hessenberg_ideal(&fam, &h).unwrap();
            for a in [rat(0), rat(1), rat(2)] {
                let fiber = rank_ideals::hessenberg_ideal(&line.fiber_matrix(&a), &h).unwrap();
                let evaluated = ev(&a, &family_ideal).unwrap();
                assert!(
                    evaluated.equals(&fiber, &ord(), &opts()).unwrap(),
                    "fiber mismatch for h={h}, a={a}"
                );
            }
        }
    }

    #[test]
    fn scaling_the_semisimple_part_keeps_the_ideal() {
        // I_{a s, h} = I_{s, h} for a != 0, with s = diag(1,0,...,0)
        let s = minimal_semisimple_matrix(4);
        let ring = s.ring();
        for a in [rat(2), rat(-1)] {
            let mut scaled = PolyMatrix::zero(ring, 4);
            *scaled.entry_mut(1, 1) = Polynomial::constant(ring, &ord(), a.clone());
            for h in [hf(&[2, 4, 4, 4]), hf(&[1, 2, 3, 4]), hf(&[2, 3, 4, 4])] {
                let a_ideal = rank_ideals::hessenberg_ideal(&scaled, &h).unwrap();
                let s_ideal = rank_ideals::hessenberg_ideal(&s, &h).unwrap();
                assert!(a_ideal.equals(&s_ideal, &ord(), &opts()).unwrap());
            }
        }
    }

    #[test]
    fn only_two_ideal_classes_on_the_minimal_sheet() {
        // diag(c1, c2, ..., c2) gives the same ideal as s = diag(1,0,...,0)
        let n = 4;
        let ring = Ring::z_only(n);
        let mut diag = vec![vec![rat(0); n]; n];
        for (i, row) in diag.iter_mut().enumerate() {
            row[i] = if i == 0 { rat(5) } else { rat(2) };
        }
        let x = PolyMatrix::from_scalars(ring, diag).unwrap();
        let s = minimal_semisimple_matrix(n);
        // cI + E_{n-1,n} gives the same ideal as E_{n-1,n}
        let mut shifted = vec![vec![rat(0); n]; n];
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] = rat(7);
        }
        shifted[n - 2][n - 1] += rat(1);
        let y = PolyMatrix::from_scalars(ring, shifted).unwrap();
        let mut e = vec![vec![rat(0); n]; n];
        e[n - 2][n - 1] = rat(1);
        let e_mat = PolyMatrix::from_scalars(ring, e).unwrap();
        for h in [hf(&[2, 4, 4, 4]), hf(&[2, 2, 4, 4])] {
            let ix = rank_ideals::hessenberg_ideal(&x, &h).unwrap();
            let is = rank_ideals::hessenberg_ideal(&s, &h).unwrap();
            assert!(ix.equals(&is, &ord(), &opts()).unwrap());
            let iy = rank_ideals::hessenberg_ideal(&y, &h).unwrap();
            let ie = rank_ideals::hessenberg_ideal(&e_mat, &h).unwrap();
            assert!(iy.equals(&ie, &ord(), &opts()).unwrap());
        }
    }

    #[test]
    fn decomposability_witness_shape() {
        assert_eq!(
            decomposability_witness(&hf(&[1, 2, 3, 4])),
            Some((1, vec![4]))
        );
        assert_eq!(
            decomposability_witness(&hf(&[2, 2, 4, 4])),
            Some((2, vec![2, 4]))
        );
        assert_eq!(decomposability_witness(&hf(&[2, 4, 4, 4])), None);
    }
}
