//! Ideals with cached Groebner bases and the ideal-level calculus: sums,
//! products, intersections, quotients, elimination and saturation.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::groebner::{buchberger_with, GbOptions, GroebnerBasis};
use crate::order::MonomialOrder;
use crate::polynomial::Polynomial;
use crate::text::{format_polynomial, parse_polynomial};
use crate::variable::{Ring, Variable};

/// Outcome of the square-free initial-ideal test.  The test is only
/// sufficient: `Inconclusive` does not mean "not radical".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadicalCertificate {
    CertifiedRadical,
    Inconclusive,
}

/// A finitely generated ideal.  The Groebner cache is synchronized with
/// last-writer-wins semantics; bases are canonical per order, so races are
/// benign.
#[derive(Debug)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    cache: Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring,
            generators: self.generators.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl Ideal {
    pub fn new(ring: Ring, generators: impl IntoIterator<Item = Polynomial>) -> Ideal {
        let generators = generators
            .into_iter()
            .filter(|g| !g.is_zero())
            .collect();
        Ideal {
            ring,
            generators,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn zero(ring: Ring) -> Ideal {
        Ideal::new(ring, [])
    }

    pub fn unit(ring: Ring) -> Ideal {
        Ideal::new(
            ring,
            [Polynomial::one(ring, &MonomialOrder::elimination())],
        )
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    /// Reduced Groebner basis under `order`, computed once and cached.
    pub fn groebner(&self, order: &MonomialOrder) -> Result<Arc<GroebnerBasis>, Error> {
        self.groebner_with(order, &GbOptions::default())
    }

    pub fn groebner_with(
        &self,
        order: &MonomialOrder,
        opts: &GbOptions,
    ) -> Result<Arc<GroebnerBasis>, Error> {
        if let Some(gb) = self.cache.lock().unwrap().get(order) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(buchberger_with(&self.generators, order, opts)?);
        self.cache
            .lock()
            .unwrap()
            .insert(order.clone(), gb.clone());
        Ok(gb)
    }

    fn seed_cache(&self, gb: GroebnerBasis) {
        self.cache
            .lock()
            .unwrap()
            .insert(gb.order.clone(), Arc::new(gb));
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal, Error> {
        self.ring.check_same(&other.ring)?;
        let gens = self
            .generators
            .iter()
            .chain(&other.generators)
            .cloned()
            .collect::<Vec<_>>();
        Ok(Ideal::new(self.ring, gens))
    }

    /// All pairwise generator products.
    pub fn product(&self, other: &Ideal) -> Result<Ideal, Error> {
        self.ring.check_same(&other.ring)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for g in &self.generators {
            for h in &other.generators {
                gens.push(g.mul(h));
            }
        }
        Ok(Ideal::new(self.ring, gens))
    }

    pub fn member(&self, f: &Polynomial, order: &MonomialOrder) -> Result<bool, Error> {
        self.member_with(f, order, &GbOptions::default())
    }

    pub fn member_with(
        &self,
        f: &Polynomial,
        order: &MonomialOrder,
        opts: &GbOptions,
    ) -> Result<bool, Error> {
        if f.is_zero() {
            return Ok(true);
        }
        Ok(self.groebner_with(order, opts)?.contains(f))
    }

    /// Containment `other ⊆ self`.
    pub fn contains_ideal(
        &self,
        other: &Ideal,
        order: &MonomialOrder,
        opts: &GbOptions,
    ) -> Result<bool, Error> {
        self.ring.check_same(&other.ring)?;
        let gb = self.groebner_with(order, opts)?;
        Ok(other.generators.iter().all(|g| gb.contains(g)))
    }

    /// Equality via the canonical reduced bases under a shared order.
    pub fn equals(&self, other: &Ideal, order: &MonomialOrder, opts: &GbOptions) -> Result<bool, Error> {
        self.ring.check_same(&other.ring)?;
        let a = self.groebner_with(order, opts)?;
        let b = other.groebner_with(order, opts)?;
        Ok(a.generators == b.generators)
    }

    /// The elimination ideal obtained by dropping the given scalar
    /// variables (`t`, `s` or `w`): a Groebner basis is computed under a
    /// lex order listing them first, and the basis elements free of them
    /// are returned, re-homed in the smaller ring.
    pub fn eliminate(&self, drop: &[Variable], opts: &GbOptions) -> Result<Ideal, Error> {
        let mut target = self.ring;
        for &v in drop {
            if matches!(v, Variable::Z { .. }) {
                return Err(Error::Invalid(
                    "matrix coordinates cannot be eliminated from the ring".into(),
                ));
            }
            self.ring.check_contains(v)?;
            target = target.drop_var(v);
        }
        let ord = MonomialOrder::lex_with_first(&self.ring, drop);
        let gb = self.groebner_with(&ord, opts)?;
        let target_ord = MonomialOrder::elimination();
        let kept: Vec<Polynomial> = gb
            .generators
            .iter()
            .filter(|g| drop.iter().all(|&v| !g.uses(v)))
            .map(|g| {
                g.with_ring(target)
                    .map(|p| p.sorted_under(&target_ord))
            })
            .collect::<Result<_, _>>()?;
        let out = Ideal::new(target, kept.clone());
        // the restriction of the elimination lex order is the smaller
        // ring's elimination order, so the filtered basis is already its
        // reduced basis
        out.seed_cache(GroebnerBasis {
            generators: kept,
            order: target_ord,
            reduced: true,
        });
        Ok(out)
    }

    /// Saturation `(I : f^∞)`: adjoin `s`, add `s*f - 1`, eliminate `s`.
    pub fn saturate(&self, f: &Polynomial, opts: &GbOptions) -> Result<Ideal, Error> {
        if f.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if self.ring.has_s {
            return Err(Error::Invalid(
                "saturation requires a ring without the localization variable".into(),
            ));
        }
        let big = self.ring.add_s();
        let ord = MonomialOrder::elimination();
        let mut gens: Vec<Polynomial> = self
            .generators
            .iter()
            .map(|g| g.with_ring(big))
            .collect::<Result<_, _>>()?;
        let s = Polynomial::var(big, &ord, Variable::S)?;
        gens.push(
            s.mul(&f.with_ring(big)?)
                .sub(&Polynomial::one(big, &ord)),
        );
        let lifted = Ideal::new(big, gens);
        let out = lifted.eliminate(&[Variable::S], opts)?;
        debug_assert_eq!(out.ring, self.ring);
        Ok(out)
    }

    /// Intersection via the auxiliary variable: eliminate `w` from
    /// `w*I + (1-w)*J`.
    pub fn intersection(a: &Ideal, b: &Ideal, opts: &GbOptions) -> Result<Ideal, Error> {
        a.ring.check_same(&b.ring)?;
        if a.ring.has_aux {
            return Err(Error::Invalid(
                "intersection requires a ring without the auxiliary variable".into(),
            ));
        }
        let big = a.ring.add_aux();
        let ord = MonomialOrder::elimination();
        let w = Polynomial::var(big, &ord, Variable::Aux)?;
        let one_minus_w = Polynomial::one(big, &ord).sub(&w);
        let mut gens: Vec<Polynomial> = Vec::new();
        for g in &a.generators {
            gens.push(w.mul(&g.with_ring(big)?));
        }
        for g in &b.generators {
            gens.push(one_minus_w.mul(&g.with_ring(big)?));
        }
        let lifted = Ideal::new(big, gens);
        let out = lifted.eliminate(&[Variable::Aux], opts)?;
        debug_assert!(out
            .generators
            .iter()
            .all(|g| !g.uses(Variable::Aux)));
        Ok(out)
    }

    /// The colon ideal `(I : f)`, computed as `(I ∩ <f>) / f`.
    pub fn quotient(&self, f: &Polynomial, opts: &GbOptions) -> Result<Ideal, Error> {
        if f.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let ord = MonomialOrder::elimination();
        let principal = Ideal::new(self.ring, [f.clone()]);
        let inter = Ideal::intersection(self, &principal, opts)?;
        let gb = inter.groebner_with(&ord, opts)?;
        let gens: Vec<Polynomial> = gb
            .generators
            .iter()
            .map(|g| crate::groebner::exact_quotient(g, f, &ord))
            .collect::<Result<_, _>>()?;
        Ok(Ideal::new(self.ring, gens))
    }

    /// Certifies radicality when every leading monomial of the reduced
    /// basis is square-free; otherwise reports `Inconclusive`.
    pub fn radical_certificate(
        &self,
        order: &MonomialOrder,
        opts: &GbOptions,
    ) -> Result<RadicalCertificate, Error> {
        let gb = self.groebner_with(order, opts)?;
        let ok = gb
            .leading_monomials()
            .iter()
            .all(|m| m.is_squarefree());
        Ok(if ok {
            RadicalCertificate::CertifiedRadical
        } else {
            RadicalCertificate::Inconclusive
        })
    }

    /// Applies a polynomial map to every generator.
    pub fn map_generators(
        &self,
        ring: Ring,
        f: impl Fn(&Polynomial) -> Result<Polynomial, Error>,
    ) -> Result<Ideal, Error> {
        let gens: Vec<Polynomial> = self
            .generators
            .iter()
            .map(f)
            .collect::<Result<_, _>>()?;
        Ok(Ideal::new(ring, gens))
    }
}

#[derive(Serialize, Deserialize)]
struct GroebnerJson {
    order: String,
    basis: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    ring: Ring,
    generators: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    groebner: Option<GroebnerJson>,
}

pub fn order_name(order: &MonomialOrder) -> String {
    match order {
        MonomialOrder::Elimination => "paper".to_string(),
        MonomialOrder::Lex(_) => "lex".to_string(),
        MonomialOrder::DiagonalTwist(_) => "diagonal-twist".to_string(),
    }
}

pub fn order_from_name(name: &str, ring: &Ring) -> Result<MonomialOrder, Error> {
    match name {
        "paper" => Ok(MonomialOrder::elimination()),
        "lex" => Ok(MonomialOrder::plain_lex(ring)),
        other => Err(Error::Parse(format!("unknown order '{other}'"))),
    }
}

impl Ideal {
    pub fn to_json(&self, with_basis: Option<&MonomialOrder>) -> Result<serde_json::Value, Error> {
        if self.ring.has_s || self.ring.has_aux {
            return Err(Error::Invalid(
                "only rings in the matrix coordinates and t serialize".into(),
            ));
        }
        let groebner = match with_basis {
            None => None,
            Some(ord) => {
                let gb = self.groebner(ord)?;
                Some(GroebnerJson {
                    order: order_name(ord),
                    basis: gb.generators.iter().map(format_polynomial).collect(),
                })
            }
        };
        let doc = IdealJson {
            ring: self.ring,
            generators: self.generators.iter().map(format_polynomial).collect(),
            groebner,
        };
        serde_json::to_value(&doc).map_err(|e| Error::Invalid(e.to_string()))
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Ideal, Error> {
        let doc: IdealJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let ord = MonomialOrder::elimination();
        let gens: Vec<Polynomial> = doc
            .generators
            .iter()
            .map(|s| parse_polynomial(s, doc.ring, &ord))
            .collect::<Result<_, _>>()?;
        Ok(Ideal::new(doc.ring, gens))
    }
}
