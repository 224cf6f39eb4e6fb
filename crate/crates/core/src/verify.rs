//! Seeded property suites over a fixed Lie algebra.
//!
//! Sample `k` of a stream draws from its own generator derived from
//! `(seed, stream, k)`, and results are gathered in sample order, so a
//! report depends only on the configuration and never on thread scheduling.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{basis_chains, koszul_homotopy, Chain, Side, StandardComplex};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::sample::{random_chain, random_element, random_monomial, sample_rng};
use crate::scalar::{LogNorm, Prime, Radius};
use crate::uenv::{RewriteOrder, UAlgebra, UElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Norms,
    Complex,
    Homotopy,
    Hopf,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Norms, Suite::Complex, Suite::Homotopy, Suite::Hopf];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Norms => "norms",
            Suite::Complex => "complex",
            Suite::Homotopy => "homotopy",
            Suite::Hopf => "hopf",
        }
    }

    /// Degree cap used when the configuration leaves it unset.
    pub fn default_max_degree(self) -> u32 {
        match self {
            Suite::Norms => 5,
            Suite::Complex | Suite::Homotopy | Suite::Hopf => 4,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub prime: Prime,
    pub seed: u64,
    pub samples: usize,
    pub max_degree: Option<u32>,
    pub radii: Vec<Radius>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            prime: Prime::default(),
            seed: 0,
            samples: 200,
            max_degree: None,
            radii: ["1/2", "1", "2"].iter().map(|s| Radius::parse(s).expect("default radius")).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub lie: String,
    pub prime: u64,
    pub seed: u64,
    pub samples: usize,
    pub max_degree: u32,
    pub radii: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyOutcome {
    pub name: String,
    pub checked: usize,
    pub failures: usize,
    pub first_counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomotopyMeasurements {
    /// Largest stationary index `n` over all traced chains.
    pub max_iterations: usize,
    /// Largest `n - (|α| + q)` over the traced chains.
    pub max_iterations_over_weight: i64,
    pub chains_traced: usize,
    /// How many traced chains satisfy `s(s(λ)) = 0`; recorded, not asserted.
    pub square_zero: usize,
    pub square_checked: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub config: ConfigEcho,
    pub properties: Vec<PropertyOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measurements: Option<HomotopyMeasurements>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.failures == 0)
    }

    pub fn property(&self, name: &str) -> Option<&PropertyOutcome> {
        self.properties.iter().find(|p| p.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("property,checked,failures,first_counterexample\n");
        for p in &self.properties {
            let ce = p.first_counterexample.as_deref().unwrap_or("").replace('"', "\"\"");
            out.push_str(&format!("{},{},{},\"{ce}\"\n", p.name, p.checked, p.failures));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let c = &self.config;
        let mut out = format!(
            "suite {} on {} (p = {}, seed = {}, samples = {}, max degree = {}, s in {{{}}})\n",
            self.suite,
            c.lie,
            c.prime,
            c.seed,
            c.samples,
            c.max_degree,
            c.radii.join(", ")
        );
        for p in &self.properties {
            let status = if p.failures == 0 { "ok  " } else { "FAIL" };
            out.push_str(&format!("  {status} {:<34} {:>6} checked, {} failed\n", p.name, p.checked, p.failures));
            if let Some(ce) = &p.first_counterexample {
                out.push_str(&format!("       first counterexample: {ce}\n"));
            }
        }
        if let Some(m) = &self.measurements {
            out.push_str(&format!(
                "  max iterations {} (at most {} above |alpha| + q over {} chains); s(s(x)) = 0 on {}/{}\n",
                m.max_iterations, m.max_iterations_over_weight, m.chains_traced, m.square_zero, m.square_checked
            ));
        }
        out.push_str(&format!("  elapsed {} ms\n", self.elapsed_ms));
        out
    }
}

/// Outcome of the checks run on one case.
#[derive(Default)]
struct CaseResult {
    checks: Vec<(&'static str, Option<String>)>,
    iterations: Option<(usize, u64)>,
    square_zero: Option<bool>,
}

impl CaseResult {
    fn check(&mut self, name: &'static str, failure: Option<String>) {
        self.checks.push((name, failure));
    }
}

struct Tally {
    properties: Vec<PropertyOutcome>,
    measurements: Option<HomotopyMeasurements>,
}

impl Tally {
    fn new(names: &[&str]) -> Self {
        let properties = names
            .iter()
            .map(|n| PropertyOutcome { name: n.to_string(), checked: 0, failures: 0, first_counterexample: None })
            .collect();
        Tally { properties, measurements: None }
    }

    /// Runs `f` on cases `0..cases` in parallel and merges in case order.
    fn run<F>(&mut self, cases: usize, f: F)
    where
        F: Fn(usize) -> CaseResult + Sync + Send,
    {
        let results: Vec<CaseResult> = (0..cases).into_par_iter().map(f).collect();
        for r in results {
            for (name, failure) in r.checks {
                let p = self
                    .properties
                    .iter_mut()
                    .find(|p| p.name == name)
                    .unwrap_or_else(|| panic!("undeclared property {name}"));
                p.checked += 1;
                if let Some(ce) = failure {
                    p.failures += 1;
                    p.first_counterexample.get_or_insert(ce);
                }
            }
            if let Some((n, weight)) = r.iterations {
                let m = self.measurements.get_or_insert_with(empty_measurements);
                m.max_iterations = m.max_iterations.max(n);
                m.max_iterations_over_weight = m.max_iterations_over_weight.max(n as i64 - weight as i64);
                m.chains_traced += 1;
            }
            if let Some(zero) = r.square_zero {
                let m = self.measurements.get_or_insert_with(empty_measurements);
                m.square_checked += 1;
                m.square_zero += zero as usize;
            }
        }
    }
}

fn empty_measurements() -> HomotopyMeasurements {
    HomotopyMeasurements {
        max_iterations: 0,
        max_iterations_over_weight: i64::MIN,
        chains_traced: 0,
        square_zero: 0,
        square_checked: 0,
    }
}

fn fail_if(bad: bool, msg: impl FnOnce() -> String) -> Option<String> {
    bad.then(msg)
}

fn error_text(e: Error) -> Option<String> {
    Some(e.to_string())
}

struct Ctx<'a> {
    alg: &'a UAlgebra,
    cfg: &'a RunConfig,
    suite: Suite,
    cap: u32,
}

impl Ctx<'_> {
    fn rng(&self, stream: &str, k: usize) -> ChaCha8Rng {
        sample_rng(self.cfg.seed, &format!("{}/{stream}", self.suite), k as u64)
    }

    fn p(&self) -> Prime {
        self.cfg.prime
    }

    fn dim(&self) -> usize {
        self.alg.dim()
    }

    fn element(&self, rng: &mut ChaCha8Rng, max_degree: u32) -> UElement {
        random_element(rng, self.dim(), self.p(), max_degree)
    }

    fn norm(&self, u: &UElement, r: &Radius) -> LogNorm {
        u.gauss_norm(self.p(), r)
    }

    fn mul(&self, u: &UElement, v: &UElement) -> UElement {
        self.alg.mul(u, v).expect("operands share the algebra's dimension")
    }
}

/// Runs `suite` against `lie`; `label` names the algebra in the report.
pub fn run_suite(suite: Suite, lie: &LieAlgebra, label: &str, cfg: &RunConfig) -> VerificationReport {
    let start = Instant::now();
    let alg = UAlgebra::new(lie.clone());
    let cap = cfg.max_degree.unwrap_or_else(|| suite.default_max_degree());
    let ctx = Ctx { alg: &alg, cfg, suite, cap };
    let tally = match suite {
        Suite::Norms => norms_suite(&ctx),
        Suite::Complex => complex_suite(&ctx),
        Suite::Homotopy => homotopy_suite(&ctx),
        Suite::Hopf => hopf_suite(&ctx),
    };
    VerificationReport {
        suite,
        config: ConfigEcho {
            lie: label.to_string(),
            prime: cfg.prime.get(),
            seed: cfg.seed,
            samples: cfg.samples,
            max_degree: cap,
            radii: cfg.radii.iter().map(ToString::to_string).collect(),
        },
        properties: tally.properties,
        measurements: tally.measurements,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

fn norms_suite(ctx: &Ctx) -> Tally {
    let mut t = Tally::new(&[
        "multiplicativity",
        "principal_symbol",
        "commutator_estimate",
        "structure_term_bound",
        "pbw_rewriting_agreement",
        "associativity",
    ]);
    let small = ctx.cap.min(3);

    t.run(ctx.cfg.samples, |k| {
        let mut out = CaseResult::default();
        let mut rng = ctx.rng("pairs", k);
        let u = ctx.element(&mut rng, ctx.cap);
        let v = ctx.element(&mut rng, ctx.cap);
        let uv = ctx.mul(&u, &v);
        for r in &ctx.cfg.radii {
            let (nu, nv, nuv) = (ctx.norm(&u, r), ctx.norm(&v, r), ctx.norm(&uv, r));
            let expected = nu.clone() * nv.clone();
            out.check(
                "multiplicativity",
                fail_if(nuv != expected, || {
                    format!("u = {u}; v = {v}; s = {r}: ||uv|| = {nuv} but ||u||*||v|| = {expected}")
                }),
            );
            out.check("principal_symbol", principal_symbol(ctx, &u, &v, &uv, r));
        }
        out
    });

    let d = ctx.dim();
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
    t.run(pairs.len(), |k| {
        let (i, j) = pairs[k];
        let mut out = CaseResult::default();
        let comm = ctx.alg.adjoint_action(i, &ctx.alg.generator(j)).expect("generator of the algebra");
        for r in &ctx.cfg.radii {
            let n = ctx.norm(&comm, r);
            let bound = r.power(1);
            out.check(
                "commutator_estimate",
                fail_if(n > bound || n >= r.power(2), || {
                    format!("[x{}, x{}] = {comm}; s = {r}: norm {n} exceeds {bound}", i + 1, j + 1)
                }),
            );
        }
        out
    });

    t.run(ctx.cfg.samples, |k| {
        let mut out = CaseResult::default();
        let mut rng = ctx.rng("monomials", k);
        let a = random_monomial(&mut rng, d, ctx.cap);
        let b = random_monomial(&mut rng, d, ctx.cap);
        let prod = ctx.alg.mul_monomials(&a, &b);
        let total = a.degree() + b.degree();
        for r in &ctx.cfg.radii {
            let bad = prod.terms().find(|(g, c)| ctx.p().scaled_norm(c, g.degree(), r) > r.power(total));
            out.check(
                "structure_term_bound",
                bad.map(|(g, c)| {
                    format!(
                        "X^a = {}; X^b = {}; s = {r}: term {c}*{} has |c| > r^(|a|+|b|-|g|)",
                        a.render(),
                        b.render(),
                        g.render()
                    )
                }),
            );
        }
        let small_a = random_monomial(&mut rng, d, small);
        let small_b = random_monomial(&mut rng, d, small);
        let word: Vec<usize> = small_a.word().into_iter().chain(small_b.word()).collect();
        let direct = ctx.alg.mul_monomials(&small_a, &small_b);
        let left = ctx.alg.normal_order_word(&word, RewriteOrder::LeftmostFirst);
        let right = ctx.alg.normal_order_word(&word, RewriteOrder::RightmostFirst);
        out.check(
            "pbw_rewriting_agreement",
            fail_if(left != right || left != direct, || {
                format!(
                    "{} * {}: leftmost-first {left}, rightmost-first {right}, memoized {direct}",
                    small_a.render(),
                    small_b.render()
                )
            }),
        );
        out
    });

    t.run(ctx.cfg.samples, |k| {
        let mut rng = ctx.rng("triples", k);
        let u = ctx.element(&mut rng, small);
        let v = ctx.element(&mut rng, small);
        let w = ctx.element(&mut rng, small);
        let lhs = ctx.mul(&ctx.mul(&u, &v), &w);
        let rhs = ctx.mul(&u, &ctx.mul(&v, &w));
        let mut out = CaseResult::default();
        out.check(
            "associativity",
            fail_if(lhs != rhs, || format!("u = {u}; v = {v}; w = {w}: (uv)w = {lhs}, u(vw) = {rhs}")),
        );
        out
    });
    t
}

/// `uv` and `lead(u)·lead(v)` have the same symbol: the top part of the
/// latter sits at `level(u)·level(v)` and differs from `uv` by terms of
/// strictly smaller norm. Exact coefficients at the top level may differ by
/// such terms, so equality is checked in the associated graded ring.
fn principal_symbol(ctx: &Ctx, u: &UElement, v: &UElement, uv: &UElement, r: &Radius) -> Option<String> {
    let p = ctx.p();
    let (pu, pv) = match (u.principal_part(p, r), v.principal_part(p, r)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return error_text(e),
    };
    let level = pu.level.clone() * pv.level.clone();
    let top = ctx.mul(&pu.leading, &pv.leading).part_at_level(p, r, &level);
    let rest = uv.sub(&top).expect("same dimension").gauss_norm(p, r);
    fail_if(top.is_zero() || rest >= level, || {
        format!("u = {u}; v = {v}; s = {r}: top part of lead(u)lead(v) at {level} is {top}, uv - top has norm {rest}")
    })
}

fn complex_suite(ctx: &Ctx) -> Tally {
    let mut t = Tally::new(&[
        "d_squared_zero",
        "phi_squared_zero",
        "differential_norm_decreasing",
        "pbw_iso_isometry",
        "pbw_iso_round_trip",
    ]);
    let cx = StandardComplex::new(ctx.alg);
    let d = ctx.dim();
    let basis_u = basis_chains(Side::Enveloping, d, ctx.cap);
    t.run(basis_u.len(), |k| {
        let ch = &basis_u[k];
        let dd = cx.differential(&cx.differential(ch));
        let mut out = CaseResult::default();
        out.check("d_squared_zero", fail_if(!dd.is_zero(), || format!("λ = {ch}: ∂∂λ = {dd}")));
        out
    });
    let basis_s = basis_chains(Side::Symmetric, d, ctx.cap);
    t.run(basis_s.len(), |k| {
        let ch = &basis_s[k];
        let pp = cx.phi(&cx.phi(ch));
        let mut out = CaseResult::default();
        out.check("phi_squared_zero", fail_if(!pp.is_zero(), || format!("λ = {ch}: φφλ = {pp}")));
        out
    });
    t.run(ctx.cfg.samples, |k| {
        let mut rng = ctx.rng("chains", k);
        let ch = random_chain(&mut rng, Side::Enveloping, d, ctx.p(), ctx.cap);
        let dch = cx.differential(&ch);
        let mut out = CaseResult::default();
        let iso = ch.pbw_iso().expect("enveloping side");
        for r in &ctx.cfg.radii {
            let (a, b) = (dch.chain_norm(ctx.p(), r), ch.chain_norm(ctx.p(), r));
            out.check(
                "differential_norm_decreasing",
                fail_if(a > b, || format!("λ = {ch}; s = {r}: ||∂λ|| = {a} > ||λ|| = {b}")),
            );
            let c = iso.chain_norm(ctx.p(), r);
            out.check(
                "pbw_iso_isometry",
                fail_if(c != b, || format!("λ = {ch}; s = {r}: ||f(λ)|| = {c}, ||λ|| = {b}")),
            );
        }
        let back = iso.pbw_iso_inv().expect("symmetric side");
        out.check("pbw_iso_round_trip", fail_if(back != ch, || format!("λ = {ch}: f⁻¹f(λ) = {back}")));
        out
    });
    t
}

fn homotopy_suite(ctx: &Ctx) -> Tally {
    let abelian = ctx.alg.lie().is_abelian();
    let mut names = vec![
        "koszul_contract",
        "koszul_norm_decreasing",
        "homotopy_contract",
        "homotopy_norm_decreasing",
        "stationarity",
        "iterates_norm_decreasing",
        "series_agrees_with_iteration",
    ];
    if abelian {
        names.push("abelian_s_equals_sigma");
    }
    let mut t = Tally::new(&names);
    let cx = StandardComplex::new(ctx.alg);
    let d = ctx.dim();
    let p = ctx.p();

    let basis_s = basis_chains(Side::Symmetric, d, ctx.cap);
    t.run(basis_s.len(), |k| {
        let ch = &basis_s[k];
        let mut out = CaseResult::default();
        let residual = cx.contract_residual(ch, koszul_homotopy);
        out.check(
            "koszul_contract",
            match residual {
                Ok(res) => fail_if(!res.is_zero(), || format!("λ = {ch}: (φs̄ + s̄φ - id + ηε)λ = {res}")),
                Err(e) => error_text(e),
            },
        );
        out
    });
    t.run(ctx.cfg.samples, |k| {
        let mut rng = ctx.rng("symmetric_chains", k);
        let ch = random_chain(&mut rng, Side::Symmetric, d, p, ctx.cap);
        let mut out = CaseResult::default();
        match koszul_homotopy(&ch) {
            Ok(sbar) => {
                for r in &ctx.cfg.radii {
                    let (a, b) = (sbar.chain_norm(p, r), ch.chain_norm(p, r));
                    out.check(
                        "koszul_norm_decreasing",
                        fail_if(a > b, || format!("λ = {ch}; s = {r}: ||s̄λ|| = {a} > ||λ|| = {b}")),
                    );
                }
            }
            Err(e) => out.check("koszul_norm_decreasing", error_text(e)),
        }
        out
    });

    let basis_u = basis_chains(Side::Enveloping, d, ctx.cap);
    let n_basis = basis_u.len();
    t.run(n_basis + ctx.cfg.samples, |k| {
        let ch = if k < n_basis {
            basis_u[k].clone()
        } else {
            let mut rng = ctx.rng("chains", k - n_basis);
            random_chain(&mut rng, Side::Enveloping, d, p, ctx.cap)
        };
        homotopy_case(ctx, &cx, &ch, abelian)
    });
    t
}

fn homotopy_case(ctx: &Ctx, cx: &StandardComplex, ch: &Chain, abelian: bool) -> CaseResult {
    let p = ctx.p();
    let mut out = CaseResult::default();
    let trace = match cx.homotopy_iteration_trace(ch) {
        Ok(t) => t,
        Err(e) => {
            out.check("stationarity", Some(format!("λ = {ch}: {e}")));
            return out;
        }
    };
    let last = trace.last().expect("nonempty trace");
    let s_ch = last.iterate.clone();
    let weight = ch.weight().unwrap_or(0);
    out.iterations = Some((last.n, weight));
    out.check(
        "stationarity",
        fail_if(last.n as u64 > weight + 1, || {
            format!("λ = {ch}: stationary at n = {} > |α| + q + 1 = {}", last.n, weight + 1)
        }),
    );
    let residual = cx.contract_residual(ch, |c| cx.homotopy_s(c));
    out.check(
        "homotopy_contract",
        match residual {
            Ok(res) => fail_if(!res.is_zero(), || format!("λ = {ch}: (∂s + s∂ - id + ηε)λ = {res}")),
            Err(e) => error_text(e),
        },
    );
    for r in &ctx.cfg.radii {
        let base = ch.chain_norm(p, r);
        let sn = s_ch.chain_norm(p, r);
        out.check(
            "homotopy_norm_decreasing",
            fail_if(sn > base, || format!("λ = {ch}; s = {r}: ||sλ|| = {sn} > ||λ|| = {base}")),
        );
        let bad = trace.iter().find(|step| step.iterate.chain_norm(p, r) > base);
        out.check(
            "iterates_norm_decreasing",
            bad.map(|step| {
                format!("λ = {ch}; s = {r}: ||σ_({})λ|| = {} > ||λ|| = {base}", step.n, step.iterate.chain_norm(p, r))
            }),
        );
    }
    out.check(
        "series_agrees_with_iteration",
        match cx.homotopy_series(ch) {
            Ok(series) => fail_if(series != s_ch, || format!("λ = {ch}: series {series}, iteration {s_ch}")),
            Err(e) => error_text(e),
        },
    );
    if abelian {
        out.check(
            "abelian_s_equals_sigma",
            match cx.sigma(ch) {
                Ok(sigma) => fail_if(sigma != s_ch, || format!("λ = {ch}: σλ = {sigma}, sλ = {s_ch}")),
                Err(e) => error_text(e),
            },
        );
    }
    out.square_zero = cx.homotopy_s(&s_ch).ok().map(|ss| ss.is_zero());
    out
}

fn hopf_suite(ctx: &Ctx) -> Tally {
    let mut t = Tally::new(&[
        "counit_left",
        "counit_right",
        "antipode_left",
        "antipode_right",
        "antipode_involution",
        "antipode_isometry",
        "comultiplication_isometry",
        "comultiplication_multiplicative",
        "antipode_antimultiplicative",
    ]);
    let big = ctx.alg.doubled();
    let small = ctx.cap.min(2);
    t.run(ctx.cfg.samples, |k| {
        let mut rng = ctx.rng("elements", k);
        let u = ctx.element(&mut rng, ctx.cap);
        let mut out = CaseResult::default();
        let delta = ctx.alg.comultiply(&u);
        let (first, second) = ctx.alg.counit_projections(&delta);
        out.check("counit_left", fail_if(first != u, || format!("u = {u}: (ε⊗id)Δu = {first}")));
        out.check("counit_right", fail_if(second != u, || format!("u = {u}: (id⊗ε)Δu = {second}")));
        let unit = UElement::constant(ctx.dim(), u.counit());
        let left = ctx.alg.antipode_then_multiply(&delta);
        let right = ctx.alg.multiply_then_antipode(&delta);
        out.check("antipode_left", fail_if(left != unit, || format!("u = {u}: m(S⊗id)Δu = {left}, ε(u) = {unit}")));
        out.check("antipode_right", fail_if(right != unit, || format!("u = {u}: m(id⊗S)Δu = {right}, ε(u) = {unit}")));
        let su = ctx.alg.antipode(&u);
        let ssu = ctx.alg.antipode(&su);
        out.check("antipode_involution", fail_if(ssu != u, || format!("u = {u}: S(S(u)) = {ssu}")));
        for r in &ctx.cfg.radii {
            let n = ctx.norm(&u, r);
            let ns = ctx.norm(&su, r);
            out.check(
                "antipode_isometry",
                fail_if(ns != n, || format!("u = {u}; s = {r}: ||S(u)|| = {ns}, ||u|| = {n}")),
            );
            let nd = delta.gauss_norm(ctx.p(), r);
            out.check(
                "comultiplication_isometry",
                fail_if(nd != n, || format!("u = {u}; s = {r}: ||Δu|| = {nd}, ||u|| = {n}")),
            );
        }
        let a = ctx.element(&mut rng, small);
        let b = ctx.element(&mut rng, small);
        let ab = ctx.mul(&a, &b);
        let lhs = ctx.alg.comultiply(&ab);
        let rhs = big.mul(&ctx.alg.comultiply(&a), &ctx.alg.comultiply(&b)).expect("doubled dimension");
        out.check(
            "comultiplication_multiplicative",
            fail_if(lhs != rhs, || format!("u = {a}; v = {b}: Δ(uv) = {lhs}, Δ(u)Δ(v) = {rhs}")),
        );
        let s_ab = ctx.alg.antipode(&ab);
        let sb_sa = ctx.mul(&ctx.alg.antipode(&b), &ctx.alg.antipode(&a));
        out.check(
            "antipode_antimultiplicative",
            fail_if(s_ab != sb_sa, || format!("u = {a}; v = {b}: S(uv) = {s_ab}, S(v)S(u) = {sb_sa}")),
        );
        out
    });
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn cfg(samples: usize) -> RunConfig {
        RunConfig { seed: 7, samples, ..RunConfig::default() }
    }

    #[test]
    fn suites_pass_on_presets() {
        for name in ["abelian(2)", "heisenberg", "sl2", "borel2"] {
            let lie = LieAlgebra::preset(name).unwrap();
            for suite in Suite::ALL {
                let c = RunConfig { max_degree: Some(2), ..cfg(20) };
                let report = run_suite(suite, &lie, name, &c);
                assert!(report.passed(), "{name} {suite}:\n{}", report.to_text());
            }
        }
    }

    #[test]
    fn homotopy_measurements_recorded() {
        let lie = LieAlgebra::heisenberg();
        let report = run_suite(Suite::Homotopy, &lie, "heisenberg", &RunConfig { max_degree: Some(2), ..cfg(10) });
        let m = report.measurements.unwrap();
        assert!(m.max_iterations >= 1);
        assert!(m.max_iterations_over_weight <= 1);
        assert_eq!(m.square_checked, m.chains_traced);
    }

    #[test]
    fn non_integral_constant_breaks_multiplicativity() {
        let lie = LieAlgebra::from_brackets(2, &[(0, 1, vec![(1, ratio(1, 2))])]).unwrap();
        let report = run_suite(Suite::Norms, &lie, "half", &cfg(50));
        let m = report.property("multiplicativity").unwrap();
        assert!(m.failures > 0);
        assert!(m.first_counterexample.as_ref().unwrap().contains("||uv||"));
    }

    #[test]
    fn reports_are_reproducible() {
        let lie = LieAlgebra::sl2();
        let c = RunConfig { max_degree: Some(3), ..cfg(30) };
        let mut a = run_suite(Suite::Norms, &lie, "sl2", &c);
        let mut b = run_suite(Suite::Norms, &lie, "sl2", &c);
        a.elapsed_ms = 0;
        b.elapsed_ms = 0;
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn suite_names_parse() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
