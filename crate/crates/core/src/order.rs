use std::cmp::Ordering;
use std::sync::Arc;

use crate::monomial::Monomial;
use crate::variable::{Ring, Variable};

/// A lexicographic monomial order given by a priority sequence on the
/// variables.  Every order used here is of this shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// The default elimination order:
    /// `w > s > t > z[1,n] > z[1,n-1] > ... > z[1,1] > z[2,1] > ... > z[n,n]`
    /// (row one read right to left, the remaining rows row-major).  It is a
    /// diagonal term order on the column minors `p_B` and puts the helper
    /// variables first so that `s`- and `w`-elimination work directly.
    Elimination,
    /// Plain lex on an explicit sequence of all ring variables.
    Lex(Arc<Vec<Variable>>),
    /// Lex reading the `z` rows in the given order, columns right to left
    /// within each row (scalars `w, s, t` still first).  With the identity
    /// row order this is an antidiagonal term order on northwest minors;
    /// with rows reversed it is a diagonal one.
    DiagonalTwist(Arc<Vec<u8>>),
}

impl MonomialOrder {
    pub fn elimination() -> MonomialOrder {
        MonomialOrder::Elimination
    }

    /// Plain lex on the ring's variables in storage order
    /// (`w, s, t, z[1,1], z[1,2], ..., z[n,n]`).
    pub fn plain_lex(ring: &Ring) -> MonomialOrder {
        let mut vars = ring.variables();
        vars.sort();
        MonomialOrder::Lex(Arc::new(vars))
    }

    /// Lex with the given variables first (in the given order), the rest in
    /// the default elimination sequence.  Used for elimination ideals.
    pub fn lex_with_first(ring: &Ring, first: &[Variable]) -> MonomialOrder {
        let mut vars: Vec<Variable> = first.to_vec();
        for v in ring.variables() {
            if !first.contains(&v) {
                vars.push(v);
            }
        }
        MonomialOrder::Lex(Arc::new(vars))
    }

    /// Antidiagonal term order on northwest minors (rows top to bottom).
    pub fn antidiagonal(n: usize) -> MonomialOrder {
        MonomialOrder::DiagonalTwist(Arc::new((1..=n as u8).collect()))
    }

    /// Diagonal term order on northwest minors (rows bottom to top).
    pub fn diagonal(n: usize) -> MonomialOrder {
        MonomialOrder::DiagonalTwist(Arc::new((1..=n as u8).rev().collect()))
    }

    /// Priority rank of a variable; smaller rank = greater variable.
    fn rank(&self, ring: &Ring, v: Variable) -> u32 {
        let n = ring.n() as u32;
        match self {
            MonomialOrder::Elimination => match v {
                Variable::Aux => 0,
                Variable::S => 1,
                Variable::T => 2,
                Variable::Z { row: 1, col } => 3 + (n - col as u32),
                Variable::Z { row, col } => {
                    3 + n + (row as u32 - 2) * n + (col as u32 - 1)
                }
            },
            MonomialOrder::Lex(seq) => seq
                .iter()
                .position(|&x| x == v)
                .map(|p| p as u32)
                .unwrap_or_else(|| panic!("variable {v} not in lex sequence")),
            MonomialOrder::DiagonalTwist(rows) => match v {
                Variable::Aux => 0,
                Variable::S => 1,
                Variable::T => 2,
                Variable::Z { row, col } => {
                    let p = rows
                        .iter()
                        .position(|&r| r == row)
                        .unwrap_or_else(|| panic!("row {row} not in twist sequence"))
                        as u32;
                    3 + p * n + (n - col as u32)
                }
            },
        }
    }

    /// Total lex comparison of two monomials.
    pub fn cmp(&self, ring: &Ring, a: &Monomial, b: &Monomial) -> Ordering {
        if a == b {
            return Ordering::Equal;
        }
        let mut ra: Vec<(u32, u32)> = a
            .exponents()
            .iter()
            .map(|&(v, e)| (self.rank(ring, v), e))
            .collect();
        let mut rb: Vec<(u32, u32)> = b
            .exponents()
            .iter()
            .map(|&(v, e)| (self.rank(ring, v), e))
            .collect();
        ra.sort_unstable();
        rb.sort_unstable();
        let (mut i, mut j) = (0, 0);
        loop {
            match (ra.get(i), rb.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va < vb {
                        return Ordering::Greater;
                    }
                    if vb < va {
                        return Ordering::Less;
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }

    /// Variables of `ring` listed from greatest to least under this order.
    pub fn sequence(&self, ring: &Ring) -> Vec<Variable> {
        let mut vars = ring.variables();
        vars.sort_by_key(|&v| self.rank(ring, v));
        vars
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn random_monomial(rng: &mut impl Rng, ring: &Ring) -> Monomial {
        let vars = ring.variables();
        let k = rng.gen_range(0..=4);
        let pairs = (0..k)
            .map(|_| (vars[rng.gen_range(0..vars.len())], rng.gen_range(1..=3)))
            .collect();
        Monomial::from_pairs(pairs)
    }

    #[test]
    fn elimination_sequence_matches_definition() {
        let ring = Ring::with_t(3).add_s();
        let ord = MonomialOrder::elimination();
        let seq = ord.sequence(&ring);
        let expect: Vec<Variable> = vec![
            Variable::S,
            Variable::T,
            Variable::z(1, 3),
            Variable::z(1, 2),
            Variable::z(1, 1),
            Variable::z(2, 1),
            Variable::z(2, 2),
            Variable::z(2, 3),
            Variable::z(3, 1),
            Variable::z(3, 2),
            Variable::z(3, 3),
        ];
        assert_eq!(seq, expect);
        // aux comes first when present
        let ring = ring.add_aux();
        assert_eq!(ord.sequence(&ring)[0], Variable::Aux);
    }

    #[test]
    fn order_axioms_hold_on_random_triples() {
        let ring = Ring::with_t(4).add_s().add_aux();
        let orders = [
            MonomialOrder::elimination(),
            MonomialOrder::plain_lex(&ring),
            MonomialOrder::diagonal(4),
            MonomialOrder::antidiagonal(4),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for ord in &orders {
            for _ in 0..1000 {
                let a = random_monomial(&mut rng, &ring);
                let b = random_monomial(&mut rng, &ring);
                let c = random_monomial(&mut rng, &ring);
                // totality + antisymmetry
                assert_eq!(
                    ord.cmp(&ring, &a, &b),
                    ord.cmp(&ring, &b, &a).reverse()
                );
                assert_eq!(ord.cmp(&ring, &a, &b) == Ordering::Equal, a == b);
                // transitivity
                if ord.cmp(&ring, &a, &b) != Ordering::Less
                    && ord.cmp(&ring, &b, &c) != Ordering::Less
                {
                    assert_ne!(ord.cmp(&ring, &a, &c), Ordering::Less);
                }
                // multiplicativity: a > b implies ac > bc
                let cm = ord.cmp(&ring, &a, &b);
                assert_eq!(ord.cmp(&ring, &a.mul(&c), &b.mul(&c)), cm);
                // 1 is least
                assert_ne!(ord.cmp(&ring, &a, &Monomial::one()), Ordering::Less);
            }
        }
    }
}
