//! Named verification jobs.  Each job re-derives one computational claim
//! about the minimal-sheet Hessenberg families from scratch and emits a
//! machine-checkable report with witnesses for every sub-claim.

use std::time::Instant;

use serde::Serialize;

use crate::error::Error;
use crate::groebner::{is_groebner_basis, s_polynomial, GbOptions};
use crate::hessenberg::{
    decomposability_witness, determinant, ev, minimal_sheet_line, psi, rank_ideals, special,
    HessenbergFunction, JordanData, SheetLine,
};
use crate::ideal::{Ideal, RadicalCertificate};
use crate::multidegree::{krull_dimension_with, multidegree_with};
use crate::order::MonomialOrder;
use crate::polynomial::{Polynomial, Rational};
use crate::schubert::{class_formula, schubert_determinantal_ideal_in, u_of, w0_act, w_of};
use crate::text::{format_polynomial, parse_polynomial};
use crate::util::rat;
use crate::variable::{Ring, Variable};

#[derive(Debug, Clone)]
pub struct JobContext {
    pub order: MonomialOrder,
    pub opts: GbOptions,
    pub samples: Vec<Rational>,
}

impl Default for JobContext {
    fn default() -> Self {
        JobContext {
            order: MonomialOrder::elimination(),
            opts: GbOptions::default(),
            samples: vec![rat(0), rat(1), rat(-1), rat(2)],
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub claim: String,
    pub ok: bool,
    pub evidence: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub job: String,
    pub params: serde_json::Value,
    pub verdict: String,
    pub witnesses: Vec<Witness>,
    pub millis: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{} {} {} [{} ms]",
            if self.passed() { "PASS" } else { "FAIL" },
            self.job,
            compact_params(&self.params),
            self.millis
        )
    }

    /// Copy with the wall time zeroed, for byte-identical comparisons.
    pub fn normalized(&self) -> VerificationReport {
        VerificationReport {
            millis: 0,
            ..self.clone()
        }
    }
}

fn compact_params(v: &serde_json::Value) -> String {
    match v.as_object() {
        None => v.to_string(),
        Some(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string())))
            .collect::<Vec<_>>()
            .join(" "),
    }
}

struct Checklist {
    job: String,
    params: serde_json::Value,
    witnesses: Vec<Witness>,
    started: Instant,
}

impl Checklist {
    fn new(job: &str, params: serde_json::Value) -> Checklist {
        Checklist {
            job: job.to_string(),
            params,
            witnesses: Vec::new(),
            started: Instant::now(),
        }
    }

    fn check(&mut self, claim: impl Into<String>, ok: bool, evidence: impl Into<String>) {
        self.witnesses.push(Witness {
            claim: claim.into(),
            ok,
            evidence: evidence.into(),
        });
    }

    fn finish(self) -> VerificationReport {
        let verdict = if self.witnesses.iter().all(|w| w.ok) {
            "pass"
        } else {
            "fail"
        };
        VerificationReport {
            job: self.job,
            params: self.params,
            verdict: verdict.to_string(),
            witnesses: self.witnesses,
            millis: self.started.elapsed().as_millis() as u64,
        }
    }
}

fn h_params(n: usize, h: &HessenbergFunction) -> serde_json::Value {
    serde_json::json!({
        "n": n,
        "h": h.values().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","),
    })
}

/// Equality of ideals plus a short witness for the diff when they differ.
fn equality_with_evidence(
    a: &Ideal,
    b: &Ideal,
    ctx: &JobContext,
) -> Result<(bool, String), Error> {
    let ga = a.groebner_with(&ctx.order, &ctx.opts)?;
    let gb = b.groebner_with(&ctx.order, &ctx.opts)?;
    if ga.generators == gb.generators {
        return Ok((
            true,
            format!("reduced bases agree ({} elements)", ga.generators.len()),
        ));
    }
    let mut only_left: Vec<String> = ga
        .generators
        .iter()
        .filter(|g| !gb.generators.contains(g))
        .take(3)
        .map(format_polynomial)
        .collect();
    let mut only_right: Vec<String> = gb
        .generators
        .iter()
        .filter(|g| !ga.generators.contains(g))
        .take(3)
        .map(format_polynomial)
        .collect();
    if only_left.is_empty() {
        only_left.push("-".into());
    }
    if only_right.is_empty() {
        only_right.push("-".into());
    }
    Ok((
        false,
        format!(
            "bases differ; only left: {}; only right: {}",
            only_left.join(", "),
            only_right.join(", ")
        ),
    ))
}

fn family_ideal(n: usize, h: &HessenbergFunction) -> Result<Ideal, Error> {
    let line = minimal_sheet_line(n);
    rank_ideals::hessenberg_ideal(&line.family_matrix(), h)
}

fn t_minus(ring: Ring, a: &Rational) -> Polynomial {
    let ord = MonomialOrder::elimination();
    Polynomial::var(ring, &ord, Variable::T)
        .unwrap()
        .sub(&Polynomial::constant(ring, &ord, a.clone()))
}

/// Intersection of a nonempty list of ideals.
fn intersect_all(ideals: &[Ideal], opts: &GbOptions) -> Result<Ideal, Error> {
    let mut acc = ideals[0].clone();
    for next in &ideals[1..] {
        acc = Ideal::intersection(&acc, next, opts)?;
    }
    Ok(acc)
}

/// Decomposition of the family ideal into the corner primes, pairwise
/// incomparability, t-saturation and exclusion of the determinant.
pub fn verify_assprimes(
    n: usize,
    h: &HessenbergFunction,
    ctx: &JobContext,
) -> Result<VerificationReport, Error> {
    let mut list = Checklist::new("assprimes", h_params(n, h));
    let ring = Ring::with_t(n);
    let family = family_ideal(n, h)?;
    let corners = h.corners();
    let primes: Vec<Ideal> = corners
        .iter()
        .map(|&i| special::p_t(ring, i, h))
        .collect::<Result<_, _>>()?;

    let inter = intersect_all(&primes, &ctx.opts)?;
    let (ok, ev_str) = equality_with_evidence(&family, &inter, ctx)?;
    list.check(
        "family ideal equals the intersection of its corner primes",
        ok,
        ev_str,
    );

    for (ai, &ci) in corners.iter().enumerate() {
        for (bi, &cj) in corners.iter().enumerate() {
            if ai == bi {
                continue;
            }
            let contained = primes[ai].contains_ideal(&primes[bi], &ctx.order, &ctx.opts)?;
            list.check(
                format!("corner primes {ci} and {cj} are incomparable"),
                !contained,
                if contained {
                    format!("prime at corner {cj} is contained in the one at corner {ci}")
                } else {
                    "no containment".to_string()
                },
            );
        }
    }

    let t = Polynomial::var(ring, &ctx.order, Variable::T)?;
    let det = determinant(ring);
    for (ai, &ci) in corners.iter().enumerate() {
        let saturated = primes[ai].saturate(&t, &ctx.opts)?;
        let (ok, ev_str) = equality_with_evidence(&primes[ai], &saturated, ctx)?;
        list.check(format!("corner prime {ci} is t-saturated"), ok, ev_str);
        let has_det = primes[ai].member_with(&det, &ctx.order, &ctx.opts)?;
        list.check(
            format!("determinant stays outside the corner prime {ci}"),
            !has_det,
            if has_det {
                "determinant reduced to zero".to_string()
            } else {
                "normal form of the determinant is nonzero".to_string()
            },
        );
    }
    Ok(list.finish())
}

/// Torsion-freeness at sampled linear forms plus constancy of fiber
/// dimension and multidegree.
pub fn verify_flatness(
    n: usize,
    h: &HessenbergFunction,
    samples: &[Rational],
    ctx: &JobContext,
) -> Result<VerificationReport, Error> {
    if samples.is_empty() || !samples.contains(&rat(0)) {
        return Err(Error::Invalid("samples must be nonempty and include 0".into()));
    }
    let mut params = h_params(n, h);
    params["samples"] = serde_json::json!(samples
        .iter()
        .map(|a| a.to_string())
        .collect::<Vec<_>>());
    let mut list = Checklist::new("flatness", params);
    let ring = Ring::with_t(n);
    let family = family_ideal(n, h)?;
    let family_dim = krull_dimension_with(&family, &ctx.order, &ctx.opts)?;
    let family_md = multidegree_with(&family, &ctx.order, &ctx.opts)?;

    let mut fiber_mds = Vec::new();
    for a in samples {
        let quot = family.quotient(&t_minus(ring, a), &ctx.opts)?;
        let (ok, ev_str) = equality_with_evidence(&family, &quot, ctx)?;
        list.check(format!("no (t-({a}))-torsion in the family"), ok, ev_str);

        let fiber = ev(a, &family)?;
        let fiber_dim = krull_dimension_with(&fiber, &ctx.order, &ctx.opts)?;
        list.check(
            format!("fiber at t={a} has dimension one below the family"),
            fiber_dim + 1 == family_dim,
            format!("family {family_dim}, fiber {fiber_dim}"),
        );
        fiber_mds.push((a.clone(), multidegree_with(&fiber, &ctx.order, &ctx.opts)?));
    }
    let all_equal = fiber_mds.windows(2).all(|w| w[0].1 == w[1].1)
        && fiber_mds.first().map(|(_, m)| m == &family_md).unwrap_or(true);
    list.check(
        "multidegree is constant across the family and all sampled fibers",
        all_equal,
        fiber_mds
            .iter()
            .map(|(a, m)| format!("t={a}: {m}"))
            .collect::<Vec<_>>()
            .join("; "),
    );
    Ok(list.finish())
}

/// The generator families for the localization ring, with their
/// closed-form S-polynomials.
struct TableFamilies {
    ring: Ring,
    i: usize,
    j: usize,
}

impl TableFamilies {
    fn new(n: usize, i: usize, j: usize) -> TableFamilies {
        TableFamilies {
            ring: Ring::with_t(n).add_s(),
            i,
            j,
        }
    }

    fn poly(&self, s: &str) -> Polynomial {
        parse_polynomial(s, self.ring, &MonomialOrder::elimination()).unwrap()
    }

    fn g(&self, k: usize) -> Polynomial {
        let n = self.ring.n();
        self.poly(&format!("t*z[1,{k}]+z[{n},{k}]"))
    }

    fn h(&self, k: usize, l: usize) -> Polynomial {
        let n = self.ring.n();
        self.poly(&format!("z[1,{l}]*z[{n},{k}]-z[1,{k}]*z[{n},{l}]"))
    }

    fn f(&self, k: usize) -> Polynomial {
        let n = self.ring.n();
        self.poly(&format!("s*z[{n},{k}]+z[1,{k}]"))
    }

    fn st1(&self) -> Polynomial {
        self.poly("s*t-1")
    }

    fn h_i_set(&self) -> Vec<Polynomial> {
        let mut out = Vec::new();
        for k in 1..=self.i {
            out.push(self.g(k));
        }
        for k in 1..=self.i {
            for l in k + 1..=self.i {
                out.push(self.h(k, l));
            }
        }
        for k in 1..=self.i {
            out.push(self.f(k));
        }
        out.push(self.st1());
        out
    }

    fn h_j_set(&self) -> Vec<Polynomial> {
        let n = self.ring.n();
        let mut out = Vec::new();
        if self.j < n {
            for b in crate::util::combinations(n - 1, self.j) {
                let rows: Vec<usize> = b.iter().map(|&r| r + 2).collect();
                out.push(
                    special::p_minor(self.ring, &rows)
                        .sorted_under(&MonomialOrder::elimination()),
                );
            }
        }
        out.push(self.st1());
        out
    }

    fn union_set(&self) -> Vec<Polynomial> {
        let mut out = self.h_i_set();
        for p in self.h_j_set() {
            if !out.contains(&p) {
                out.push(p);
            }
        }
        out
    }
}

/// Certifies the localization bases and replays the S-polynomial table,
/// then checks t-saturation of `J^t_i + K_j`.
pub fn verify_grobner_tables(
    n: usize,
    i: usize,
    j: usize,
    ctx: &JobContext,
) -> Result<VerificationReport, Error> {
    if i > n || j > n {
        return Err(Error::IndexOutOfRange(format!("(i,j)=({i},{j}) with n={n}")));
    }
    let params = serde_json::json!({"n": n, "i": i, "j": j});
    let mut list = Checklist::new("grobner-tables", params);
    let ord = MonomialOrder::elimination();
    let fam = TableFamilies::new(n, i, j);

    let hi = fam.h_i_set();
    list.check(
        "localized sheet-line set is a Groebner basis",
        is_groebner_basis(&hi, &ord),
        format!("{} elements", hi.len()),
    );
    let hj = fam.h_j_set();
    list.check(
        "localized minor set is a Groebner basis",
        is_groebner_basis(&hj, &ord),
        format!("{} elements", hj.len()),
    );
    if i < j {
        let union = fam.union_set();
        list.check(
            "the union is a Groebner basis of the localized sum",
            is_groebner_basis(&union, &ord),
            format!("{} elements", union.len()),
        );
    }

    // the S-polynomial table, row by row
    let mut replay = |claim: String, a: &Polynomial, b: &Polynomial, expect: &Polynomial| {
        let got = s_polynomial(a, b, &ord).unwrap();
        let ok = &got == expect;
        list.check(
            claim,
            ok,
            if ok {
                format!("S = {}", format_polynomial(&got))
            } else {
                format!(
                    "S = {}, expected {}",
                    format_polynomial(&got),
                    format_polynomial(expect)
                )
            },
        );
    };
    for k in 1..=i {
        for l in k + 1..=i {
            replay(
                format!("S(g_{k}, g_{l}) = h_{{{k},{l}}}"),
                &fam.g(k),
                &fam.g(l),
                &fam.h(k, l),
            );
        }
    }
    for a in 1..=i {
        for k in a + 1..=i {
            let znk = fam.poly(&format!("z[{n},{k}]"));
            replay(
                format!("S(g_{k}, h_{{{a},{k}}}) = z[n,{k}]*g_{a}"),
                &fam.g(k),
                &fam.h(a, k),
                &znk.mul(&fam.g(a)),
            );
        }
    }
    for k in 1..=i {
        for b in k + 1..=i {
            for l in b + 1..=i {
                let z1k = fam.poly(&format!("z[1,{k}]"));
                replay(
                    format!("S(h_{{{k},{l}}}, h_{{{k},{b}}}) = z[1,{k}]*h_{{{b},{l}}}"),
                    &fam.h(k, l),
                    &fam.h(k, b),
                    &z1k.mul(&fam.h(b, l)),
                );
            }
        }
    }
    for k in 1..=i {
        for a in k + 1..=i {
            for l in a + 1..=i {
                let znl = fam.poly(&format!("z[{n},{l}]"));
                replay(
                    format!("S(h_{{{k},{l}}}, h_{{{a},{l}}}) = z[n,{l}]*h_{{{k},{a}}}"),
                    &fam.h(k, l),
                    &fam.h(a, l),
                    &znl.mul(&fam.h(k, a)),
                );
            }
        }
    }
    for k in 1..=i {
        replay(
            format!("S(g_{k}, st-1) = f_{k}"),
            &fam.g(k),
            &fam.st1(),
            &fam.f(k),
        );
        replay(
            format!("S(f_{k}, st-1) = g_{k}"),
            &fam.f(k),
            &fam.st1(),
            &fam.g(k),
        );
    }
    for k in 1..=i {
        for l in k + 1..=i {
            let z1k = fam.poly(&format!("z[1,{k}]"));
            replay(
                format!("S(h_{{{k},{l}}}, f_{k}) = -z[1,{k}]*f_{l}"),
                &fam.h(k, l),
                &fam.f(k),
                &z1k.mul(&fam.f(l)).neg(),
            );
            replay(
                format!("S(f_{k}, f_{l}) = -h_{{{k},{l}}}"),
                &fam.f(k),
                &fam.f(l),
                &fam.h(k, l).neg(),
            );
        }
    }

    // t-saturation of the sum in the t-ring
    let tring = Ring::with_t(n);
    let sum = special::j_t(tring, i)?.sum(&special::k_of(tring, j)?)?;
    let t = Polynomial::var(tring, &ord, Variable::T)?;
    let saturated = sum.saturate(&t, &ctx.opts)?;
    let (ok, ev_str) = equality_with_evidence(&sum, &saturated, ctx)?;
    list.check(
        format!("J^t_{i} + K_{j} is t-saturated"),
        ok,
        ev_str,
    );
    Ok(list.finish())
}

/// Golden decompositions for the two decomposable showcase fibers.
fn golden_nilpotent_primes(
    n: usize,
    h: &HessenbergFunction,
) -> Option<(Vec<(String, Ideal)>, Vec<(String, String, bool)>)> {
    if n != 4 {
        return None;
    }
    let zr = Ring::z_only(4);
    let j0 = |i: usize| special::j_a(zr, i, &rat(0)).unwrap();
    let k = |j: usize| special::k_of(zr, j).unwrap();
    if h.values() == [1, 2, 3, 4] {
        let primes = vec![
            ("J^0_3".to_string(), j0(3)),
            ("J^0_2 + K_2".to_string(), j0(2).sum(&k(2)).unwrap()),
            ("K_1".to_string(), k(1)),
        ];
        // the three component permutations are pairwise incomparable
        let bruhat = vec![
            ("3214".to_string(), "3142".to_string(), false),
            ("3142".to_string(), "3214".to_string(), false),
            ("3214".to_string(), "1432".to_string(), false),
            ("1432".to_string(), "3214".to_string(), false),
            ("3142".to_string(), "1432".to_string(), false),
            ("1432".to_string(), "3142".to_string(), false),
        ];
        return Some((primes, bruhat));
    }
    if h.values() == [2, 2, 4, 4] {
        let primes = vec![
            ("J^0_2".to_string(), j0(2)),
            ("J^0_2 + K_2".to_string(), j0(2).sum(&k(2)).unwrap()),
            ("K_2".to_string(), k(2)),
        ];
        let bruhat = vec![
            ("3142".to_string(), "3241".to_string(), true),
            ("3142".to_string(), "4132".to_string(), true),
            ("3214".to_string(), "4132".to_string(), false),
            ("4132".to_string(), "3214".to_string(), false),
        ];
        return Some((primes, bruhat));
    }
    None
}

/// Scheme structure of the nilpotent fiber: the Schubert decomposition
/// for indecomposable functions, the square witness otherwise.
pub fn verify_nilpotent_fiber(
    n: usize,
    h: &HessenbergFunction,
    ctx: &JobContext,
) -> Result<VerificationReport, Error> {
    let mut list = Checklist::new("nilpotent-fiber", h_params(n, h));
    let zr = Ring::z_only(n);
    let line = minimal_sheet_line(n);
    let ideal = rank_ideals::hessenberg_ideal(&line.fiber_matrix(&rat(0)), h)?;

    if h.is_indecomposable() {
        let corners = h.corners();
        let primes: Vec<Ideal> = corners
            .iter()
            .map(|&i| {
                special::j_a(zr, i - 1, &rat(0))?.sum(&special::k_of(zr, h.value(i))?)
            })
            .collect::<Result<_, _>>()?;
        let inter = intersect_all(&primes, &ctx.opts)?;
        let (ok, ev_str) = equality_with_evidence(&ideal, &inter, ctx)?;
        list.check(
            "nilpotent fiber ideal equals the intersection of its corner primes",
            ok,
            ev_str,
        );
        for (idx, &i) in corners.iter().enumerate() {
            let w = if h.value(i) == n {
                u_of(n, i)?
            } else {
                w_of(n, i, h.value(i))?
            };
            let expect = schubert_determinantal_ideal_in(&w, zr)?;
            let twisted = w0_act(&primes[idx])?;
            let (ok, ev_str) = equality_with_evidence(&twisted, &expect, ctx)?;
            let w0 = crate::schubert::Permutation::w0(n);
            list.check(
                format!(
                    "corner {i} component is the matrix Schubert variety X{}",
                    w0.compose(&w)
                ),
                ok,
                ev_str,
            );
        }
    } else {
        let (i0, b0) = decomposability_witness(h).expect("h is decomposable");
        let witness = special::p_minor(zr, &b0);
        let in_ideal = ideal.member_with(&witness, &ctx.order, &ctx.opts)?;
        let sq_in_ideal =
            ideal.member_with(&witness.mul(&witness), &ctx.order, &ctx.opts)?;
        let b0_str = b0
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",");
        list.check(
            format!("witness minor p_{{{b0_str}}} (i0={i0}) lies outside the ideal"),
            !in_ideal,
            format_polynomial(&witness),
        );
        list.check(
            format!("the square of p_{{{b0_str}}} lies in the ideal"),
            sq_in_ideal,
            "square reduces to zero".to_string(),
        );
    }

    if let Some((primes, bruhat)) = golden_nilpotent_primes(n, h) {
        for (name, prime) in &primes {
            let contained = prime.contains_ideal(&ideal, &ctx.order, &ctx.opts)?;
            list.check(
                format!("fiber ideal is contained in the predicted prime {name}"),
                contained,
                if contained { "containment holds" } else { "containment fails" }.to_string(),
            );
        }
        for (u, w, expect) in &bruhat {
            let pu = crate::schubert::Permutation::parse(u)?;
            let pw = crate::schubert::Permutation::parse(w)?;
            let got = crate::schubert::bruhat_leq(&pu, &pw)?;
            list.check(
                format!("Bruhat comparison [{u}] <= [{w}] is {expect}"),
                got == *expect,
                format!("tableau criterion gives {got}"),
            );
        }
    }
    Ok(list.finish())
}

/// Dimension formula and cohomology class for both minimal-sheet fibers,
/// plus the family dimension bound.
pub fn verify_dim_and_class(
    n: usize,
    h: &HessenbergFunction,
    ctx: &JobContext,
) -> Result<VerificationReport, Error> {
    if n < 3 {
        return Err(Error::Invalid("class checks require n >= 3".into()));
    }
    let mut list = Checklist::new("dim-and-class", h_params(n, h));
    let line = minimal_sheet_line(n);
    let gap = h
        .corners()
        .iter()
        .map(|&i| h.value(i) as i64 - i as i64)
        .max()
        .unwrap();
    let expect_dim = (n * (n + 1) / 2) as i64 + ((n - 1) * (n - 2) / 2) as i64 + gap;

    let class = class_formula(h, n)?;
    let fibers = [
        ("semisimple", crate::hessenberg::minimal_semisimple_matrix(n)),
        ("nilpotent", line.fiber_matrix(&rat(0))),
    ];
    for (name, x) in &fibers {
        let ideal = rank_ideals::hessenberg_ideal(x, h)?;
        let dim = krull_dimension_with(&ideal, &ctx.order, &ctx.opts)?;
        list.check(
            format!("{name} fiber has dimension {expect_dim}"),
            dim == expect_dim,
            format!("computed {dim}"),
        );
        let md = multidegree_with(&ideal, &ctx.order, &ctx.opts)?;
        list.check(
            format!("{name} fiber multidegree matches the corner class formula"),
            md == class,
            format!("multidegree {md}, class {class}"),
        );
    }

    let family = family_ideal(n, h)?;
    let fam_dim = krull_dimension_with(&family, &ctx.order, &ctx.opts)?;
    list.check(
        "family dimension is one above the fibers",
        fam_dim == expect_dim + 1,
        format!("family {fam_dim}"),
    );
    let bound = 1 + h.values().iter().sum::<usize>() as i64;
    list.check(
        format!("family dimension is at least 1 + sum h(i) = {bound}"),
        fam_dim >= bound,
        format!("family {fam_dim}"),
    );
    Ok(list.finish())
}

/// Per-corner flat degeneration from the Richardson component to the
/// Schubert component; indecomposable functions only.
pub fn verify_component_degeneration(
    n: usize,
    h: &HessenbergFunction,
    ctx: &JobContext,
) -> Result<VerificationReport, Error> {
    if !h.is_indecomposable() {
        return Err(Error::Invalid(format!(
            "component degeneration requires an indecomposable function, got {h}"
        )));
    }
    let mut list = Checklist::new("component-degeneration", h_params(n, h));
    let ring = Ring::with_t(n);
    let zr = Ring::z_only(n);
    for i in h.corners() {
        let prime = special::p_t(ring, i, h)?;
        for a in &ctx.samples {
            let quot = prime.quotient(&t_minus(ring, a), &ctx.opts)?;
            let (ok, ev_str) = equality_with_evidence(&prime, &quot, ctx)?;
            list.check(
                format!("corner {i} prime has no (t-({a}))-torsion"),
                ok,
                ev_str,
            );
        }
        let special_fiber = ev(&rat(0), &prime)?;
        let expect0 = special::j_a(zr, i - 1, &rat(0))?.sum(&special::k_of(zr, h.value(i))?)?;
        let (ok, ev_str) = equality_with_evidence(&special_fiber, &expect0, ctx)?;
        list.check(
            format!("corner {i} special fiber is the Schubert component"),
            ok,
            ev_str,
        );
        let general_fiber = psi(&rat(1), &ev(&rat(1), &prime)?)?;
        let expect1 = w0_act(&special::j_a(zr, i - 1, &rat(0))?)?
            .sum(&special::k_of(zr, h.value(i))?)?;
        let (ok, ev_str) = equality_with_evidence(&general_fiber, &expect1, ctx)?;
        list.check(
            format!("corner {i} general fiber is the matrix Richardson component"),
            ok,
            ev_str,
        );
    }
    Ok(list.finish())
}

/// Sampled torsion evidence for sheet lines beyond the minimal sheet
/// (the regular sheet); evidence only, not a proof.
pub fn explore_conjecture(
    n: usize,
    h: &HessenbergFunction,
    ctx: &JobContext,
) -> Result<VerificationReport, Error> {
    let mut list = Checklist::new("explore-conjecture", h_params(n, h));
    let line = SheetLine::from_jordan(&JordanData::regular_semisimple(n))?;
    let family = rank_ideals::hessenberg_ideal(&line.family_matrix(), h)?;
    let ring = family.ring();
    for a in &ctx.samples {
        let quot = family.quotient(&t_minus(ring, a), &ctx.opts)?;
        let (ok, ev_str) = equality_with_evidence(&family, &quot, ctx)?;
        list.check(
            format!("regular sheet line: no (t-({a}))-torsion found (sampled evidence)"),
            ok,
            ev_str,
        );
    }
    let family_md = multidegree_with(&family, &ctx.order, &ctx.opts)?;
    let fiber0 = ev(&rat(0), &family)?;
    let md0 = multidegree_with(&fiber0, &ctx.order, &ctx.opts)?;
    list.check(
        "regular sheet line: special-fiber multidegree matches the family (sampled evidence)",
        family_md == md0,
        format!("family {family_md}, fiber {md0}"),
    );
    Ok(list.finish())
}

/// The radical certificate for an indecomposable nilpotent fiber, used by
/// the exhaustive reducedness sweep.
pub fn nilpotent_fiber_radical_certificate(
    n: usize,
    h: &HessenbergFunction,
    ctx: &JobContext,
) -> Result<RadicalCertificate, Error> {
    let line = minimal_sheet_line(n);
    let ideal = rank_ideals::hessenberg_ideal(&line.fiber_matrix(&rat(0)), h)?;
    ideal.radical_certificate(&ctx.order, &ctx.opts)
}

/// The full deterministic suite for one `n`: every Hessenberg function at
/// `n = 4` (a fixed smoke set at `n = 5`) against every applicable job,
/// plus the Groebner-table sweep over `0 <= i < j <= n`.
pub fn suite(n: usize, ctx: &JobContext) -> Result<Vec<VerificationReport>, Error> {
    let functions: Vec<HessenbergFunction> = if n == 5 {
        [
            vec![2, 5, 5, 5, 5],
            vec![1, 2, 3, 4, 5],
            vec![5, 5, 5, 5, 5],
            vec![2, 3, 4, 5, 5],
        ]
        .into_iter()
        .map(|v| HessenbergFunction::new(v).unwrap())
        .collect()
    } else {
        HessenbergFunction::all(n)
    };

    type Task<'a> = Box<dyn Fn() -> Result<VerificationReport, Error> + Send + Sync + 'a>;
    let mut tasks: Vec<Task> = Vec::new();
    for h in &functions {
        let h = h.clone();
        let hc = h.clone();
        tasks.push(Box::new(move || verify_assprimes(n, &hc, ctx)));
        let hc = h.clone();
        tasks.push(Box::new(move || {
            verify_flatness(n, &hc, &ctx.samples, ctx)
        }));
        let hc = h.clone();
        tasks.push(Box::new(move || verify_nilpotent_fiber(n, &hc, ctx)));
        let hc = h.clone();
        tasks.push(Box::new(move || verify_dim_and_class(n, &hc, ctx)));
        if h.is_indecomposable() {
            let hc = h.clone();
            tasks.push(Box::new(move || {
                verify_component_degeneration(n, &hc, ctx)
            }));
        }
    }
    for i in 0..n {
        for j in i + 1..=n {
            tasks.push(Box::new(move || verify_grobner_tables(n, i, j, ctx)));
        }
    }

    let results: Vec<Result<VerificationReport, Error>> = run_tasks(&tasks, ctx);
    results.into_iter().collect()
}

#[cfg(feature = "parallel")]
fn run_tasks<'a>(
    tasks: &[Box<dyn Fn() -> Result<VerificationReport, Error> + Send + Sync + 'a>],
    ctx: &JobContext,
) -> Vec<Result<VerificationReport, Error>> {
    use rayon::prelude::*;
    if ctx.opts.parallel {
        tasks.par_iter().map(|t| t()).collect()
    } else {
        tasks.iter().map(|t| t()).collect()
    }
}

#[cfg(not(feature = "parallel"))]
fn run_tasks<'a>(
    tasks: &[Box<dyn Fn() -> Result<VerificationReport, Error> + Send + Sync + 'a>],
    _ctx: &JobContext,
) -> Vec<Result<VerificationReport, Error>> {
    tasks.iter().map(|t| t()).collect()
}
