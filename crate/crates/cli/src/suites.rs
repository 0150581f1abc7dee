//! Verification suites. Each check is a plain function so the acceptance
//! harness can run the same code the `verify` command runs.

use qhopf_core::chern::{idempotent, matrix_trace, pairing, trace_functional};
use qhopf_core::galois::{
    check_connection_properties, galois_witness, lifted_can, partition_identity, strong_connection, strong_connection_closed,
};
use qhopf_core::gluing::{base_trivialization_check, colinearity_check, gluing_check};
use qhopf_core::hopf::CotensorElement;
use qhopf_core::numrep::{
    build_rep, classical_maps_check, faithfulness_probe, homomorphism_defect, mvn_witness_check, numeric_trace, polar_isometry_check,
    relation_defects, sample_phases, spectrum_check, Family,
};
use qhopf_core::s3core::{iota, is_coinvariant, mul_via_generators, S2Generator, S2Poly};
use qhopf_core::sample::{random_coinvariant, random_element, random_nonzero, SampleBounds};
use qhopf_core::{AlgElement, BasisMonomial, Generator, Param, ParamScalar};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::params::ParamValue;
use crate::report::{CheckRecord, SuiteReport};

pub const IDENTITY_TOL: f64 = 1e-12;
pub const HOMOMORPHISM_TOL: f64 = 1e-10;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub p: ParamValue,
    pub q: ParamValue,
    pub n: usize,
    pub seed: u64,
}

impl SuiteConfig {
    pub fn pf(&self) -> f64 {
        self.p.as_f64()
    }

    pub fn qf(&self) -> f64 {
        self.q.as_f64()
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { p: "1/2".parse().unwrap(), q: "1/3".parse().unwrap(), n: 300, seed: 7 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Algebra,
    Gluing,
    Galois,
    Chern,
    Numeric,
    Classical,
    All,
}

impl Suite {
    pub const PARTS: [Suite; 6] = [Suite::Algebra, Suite::Gluing, Suite::Galois, Suite::Chern, Suite::Numeric, Suite::Classical];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Gluing => "gluing",
            Suite::Galois => "galois",
            Suite::Chern => "chern",
            Suite::Numeric => "numeric",
            Suite::Classical => "classical",
            Suite::All => "all",
        }
    }
}

fn bounds() -> SampleBounds {
    SampleBounds::default()
}

// ---------------------------------------------------------------- algebra

/// The defining relations of the 3-sphere algebra, as elements that must vanish.
pub fn defining_relations() -> Vec<(&'static str, AlgElement)> {
    let (a, a_s, b, b_s) = (AlgElement::a(), AlgElement::a_star(), AlgElement::b(), AlgElement::b_star());
    let (p, q, one) = (ParamScalar::p(), ParamScalar::q(), ParamScalar::one());
    vec![
        ("a* a - q a a* = 1 - q", a_s.mul(&a).sub(&a.mul(&a_s).scale(&q)).sub(&AlgElement::scalar(&one - &q))),
        ("b* b - p b b* = 1 - p", b_s.mul(&b).sub(&b.mul(&b_s).scale(&p)).sub(&AlgElement::scalar(&one - &p))),
        ("a b = b a, a b* = b* a", a.mul(&b).sub(&b.mul(&a)).add(&a.mul(&b_s).sub(&b_s.mul(&a)))),
        ("(1 - a a*)(1 - b b*) = 0", AlgElement::one().sub(&a.mul(&a_s)).mul(&AlgElement::one().sub(&b.mul(&b_s)))),
    ]
}

/// The relations of the 2-sphere algebra in `f0, f1`.
pub fn sphere_relations() -> Vec<(&'static str, S2Poly)> {
    let f0 = || S2Poly::generator(S2Generator::F0);
    let f1 = || S2Poly::generator(S2Generator::F1);
    let f1s = || S2Poly::generator(S2Generator::F1Star);
    let (p, q, one) = (ParamScalar::p(), ParamScalar::q(), ParamScalar::one());
    vec![
        ("f0* = f0", f0().star().sub(&f0())),
        (
            "f1* f1 - q f1 f1* = (p - q) f0 + 1 - p",
            f1s().mul(&f1()).sub(&f1().mul(&f1s()).scale(&q)).sub(&f0().scale(&(&p - &q))).sub(&S2Poly::scalar(&one - &p)),
        ),
        ("f0 f1 - p f1 f0 = (1 - p) f1", f0().mul(&f1()).sub(&f1().mul(&f0()).scale(&p)).sub(&f1().scale(&(&one - &p)))),
        ("(1 - f0)(f1 f1* - f0) = 0", S2Poly::one().sub(&f0()).mul(&f1().mul(&f1s()).sub(&f0()))),
    ]
}

pub fn symbolic_relations() -> Vec<CheckRecord> {
    let mut out: Vec<_> = defining_relations()
        .into_iter()
        .map(|(name, r)| CheckRecord::exact(format!("relation {name}"), json!({}), r.is_zero(), (!r.is_zero()).then(|| r.to_string())))
        .collect();
    out.extend(sphere_relations().into_iter().map(|(name, r)| {
        let img = iota(&r);
        CheckRecord::exact(format!("iota kills {name}"), json!({}), img.is_zero(), (!img.is_zero()).then(|| img.to_string()))
    }));
    out
}

fn sampled(name: &str, cfg: &SuiteConfig, salt: u64, count: usize, arity: usize, check: impl Fn(&[AlgElement]) -> bool) -> CheckRecord {
    let mut rng = cfg.rng(salt);
    let mut failures = 0;
    let mut first = None;
    for _ in 0..count {
        let xs: Vec<AlgElement> = (0..arity).map(|_| random_element(&mut rng, &bounds())).collect();
        if !check(&xs) {
            failures += 1;
            first.get_or_insert_with(|| xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" | "));
        }
    }
    let rec = CheckRecord::exact(name, json!({ "samples": count, "seed": cfg.seed }), failures == 0, None);
    match first {
        Some(f) => rec.with_detail(format!("{failures} failures, first: {f}")),
        None => rec,
    }
}

pub fn associativity(cfg: &SuiteConfig, count: usize) -> CheckRecord {
    sampled("associativity (xy)z = x(yz)", cfg, 1, count, 3, |v| v[0].mul(&v[1]).mul(&v[2]) == v[0].mul(&v[1].mul(&v[2])))
}

pub fn involution(cfg: &SuiteConfig, count: usize) -> CheckRecord {
    sampled("involution (xy)* = y* x*", cfg, 2, count, 2, |v| {
        v[0].mul(&v[1]).star() == v[1].star().mul(&v[0].star()) && v[0].star().star() == v[0]
    })
}

pub fn product_routes(cfg: &SuiteConfig, count: usize) -> CheckRecord {
    sampled("closed-form product = letter-by-letter product", cfg, 3, count, 2, |v| v[0].mul(&v[1]) == mul_via_generators(&v[0], &v[1]))
}

pub fn algebra_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut checks = symbolic_relations();
    checks.push(associativity(cfg, 500));
    checks.push(involution(cfg, 500));
    checks.push(product_routes(cfg, 200));
    SuiteReport::new("algebra", checks)
}

// ---------------------------------------------------------------- gluing

pub fn basis_monomials(max_degree: u64) -> Vec<BasisMonomial> {
    let d = max_degree as i64;
    let mut out = Vec::new();
    for mu in -d..=d {
        for nu in -d..=d {
            for e in 0..=max_degree as u32 {
                let shapes = if e == 0 { vec![(0, 0)] } else { vec![(e, 0), (0, e)] };
                for (m, n) in shapes {
                    let t = BasisMonomial::new(mu, m, n, nu);
                    if t.total_degree() <= max_degree {
                        out.push(t);
                    }
                }
            }
        }
    }
    out
}

pub fn gluing_on_monomials(max_degree: u64) -> CheckRecord {
    let all = basis_monomials(max_degree);
    let bad: Vec<_> = all.iter().filter(|t| !gluing_check(&AlgElement::basis(**t))).collect();
    let rec = CheckRecord::exact(
        "chart pullbacks agree on basis monomials",
        json!({ "max_degree": max_degree, "count": all.len() }),
        bad.is_empty(),
        None,
    );
    if bad.is_empty() {
        rec
    } else {
        rec.with_detail(format!("{} failures, first: {}", bad.len(), bad[0]))
    }
}

pub fn gluing_random(cfg: &SuiteConfig, count: usize) -> CheckRecord {
    sampled("chart pullbacks agree on random elements", cfg, 4, count, 1, |v| gluing_check(&v[0]))
}

pub fn chart_colinearity(cfg: &SuiteConfig, count: usize) -> CheckRecord {
    sampled("chart maps are colinear", cfg, 5, count, 1, |v| colinearity_check(&v[0], Param::P) && colinearity_check(&v[0], Param::Q))
}

pub fn base_charts() -> CheckRecord {
    let f0 = S2Poly::generator(S2Generator::F0);
    let f1 = S2Poly::generator(S2Generator::F1);
    let f1s = S2Poly::generator(S2Generator::F1Star);
    let samples = [f0.clone(), f1.clone(), f1s.clone(), f1.mul(&f1s).sub(&f0.mul(&f0)), f0.mul(&f1).mul(&f1)];
    let ok = samples.iter().all(|f| base_trivialization_check(f, Param::P) && base_trivialization_check(f, Param::Q));
    CheckRecord::exact("charts restrict to the base", json!({ "samples": samples.len() }), ok, None)
}

pub fn gluing_suite(cfg: &SuiteConfig) -> SuiteReport {
    SuiteReport::new("gluing", vec![gluing_on_monomials(6), gluing_random(cfg, 100), chart_colinearity(cfg, 100), base_charts()])
}

// ---------------------------------------------------------------- galois

pub fn connection_identities(k_max: u32) -> CheckRecord {
    let report = check_connection_properties(k_max);
    let rec = CheckRecord::exact(
        "strong connection identities",
        json!({ "k_max": k_max, "identities": report.checks.len() }),
        report.passed(),
        None,
    );
    let detail =
        report.failures().next().map(|f| format!("k = {}: {} fails, difference {}", f.k, f.identity, f.defect.clone().unwrap_or_default()));
    match detail {
        Some(d) => rec.with_detail(d),
        None => rec,
    }
}

pub fn closed_form_agreement(k_max: u32) -> CheckRecord {
    let bad: Vec<i64> = (1..=k_max)
        .flat_map(|n| [(n, true), (n, false)])
        .filter(|&(n, pos)| {
            let k = if pos { i64::from(n) } else { -i64::from(n) };
            strong_connection(k) != strong_connection_closed(n, pos)
        })
        .map(|(n, pos)| if pos { i64::from(n) } else { -i64::from(n) })
        .collect();
    CheckRecord::exact(
        "recursion = closed form",
        json!({ "k_max": k_max }),
        bad.is_empty(),
        (!bad.is_empty()).then(|| format!("k = {bad:?}")),
    )
}

pub fn lifted_can_identity(k_max: u32) -> CheckRecord {
    let k_max = i64::from(k_max);
    let bad: Vec<i64> =
        (-k_max..=k_max).filter(|&k| lifted_can(&strong_connection(k)) != CotensorElement::simple(&AlgElement::one(), k)).collect();
    CheckRecord::exact(
        "lifted canonical map sends l(u^k) to 1 (x) u^k",
        json!({ "k_max": k_max }),
        bad.is_empty(),
        (!bad.is_empty()).then(|| format!("k = {bad:?}")),
    )
}

pub fn partition_identities(n_max: u32) -> CheckRecord {
    let bad: Vec<String> = (0..=n_max)
        .flat_map(|n| [(n, true), (n, false)])
        .filter(|&(n, pos)| partition_identity(n, pos) != AlgElement::one())
        .map(|(n, pos)| format!("{n}{}", if pos { "q" } else { "p" }))
        .collect();
    CheckRecord::exact(
        "partition of unity (q and p sides)",
        json!({ "n_max": n_max }),
        bad.is_empty(),
        (!bad.is_empty()).then(|| bad.join(",")),
    )
}

pub fn witnesses(k_max: i64) -> CheckRecord {
    let bad: Vec<i64> =
        (-k_max..=k_max).filter(|&k| lifted_can(&galois_witness(k)) != CotensorElement::simple(&AlgElement::one(), k)).collect();
    CheckRecord::exact(
        "Galois witnesses reach 1 (x) u^k",
        json!({ "k_max": k_max }),
        bad.is_empty(),
        (!bad.is_empty()).then(|| format!("k = {bad:?}")),
    )
}

pub fn galois_suite(_cfg: &SuiteConfig) -> SuiteReport {
    SuiteReport::new(
        "galois",
        vec![connection_identities(8), closed_form_agreement(8), lifted_can_identity(8), partition_identities(8), witnesses(6)],
    )
}

// ---------------------------------------------------------------- chern

pub fn idempotency(n_max: i64) -> CheckRecord {
    let mut bad = Vec::new();
    for n in 1..=n_max {
        for mu in [-n, n] {
            match idempotent(mu) {
                Ok(e) if e.is_idempotent() && e.entries().iter().all(is_coinvariant) => {}
                _ => bad.push(mu),
            }
        }
    }
    CheckRecord::exact(
        "E_mu^2 = E_mu with coinvariant entries",
        json!({ "n_max": n_max }),
        bad.is_empty(),
        (!bad.is_empty()).then(|| format!("mu = {bad:?}")),
    )
}

pub fn pairing_minus_one() -> CheckRecord {
    match pairing(-1) {
        Ok(v) => CheckRecord::exact("<tr, [E_-1]> = -1", json!({ "mu": -1 }), v == ParamScalar::from_int(-1), Some(format!("value {v}"))),
        Err(e) => CheckRecord::exact("<tr, [E_-1]> = -1", json!({ "mu": -1 }), false, Some(e.to_string())),
    }
}

pub fn trace_anchors() -> CheckRecord {
    let t1 = trace_functional(&AlgElement::one());
    let t2 = trace_functional(&AlgElement::p_atom(1));
    let expect = (ParamScalar::one() - ParamScalar::q()).inv().expect("nonzero");
    let ok = t1.as_ref().is_ok_and(ParamScalar::is_zero) && t2.as_ref().is_ok_and(|v| *v == expect);
    CheckRecord::exact("tr(1) = 0, tr(1 - aa*) = 1/(1 - q)", json!({}), ok, None)
}

pub fn traciality(cfg: &SuiteConfig, count: usize) -> CheckRecord {
    let mut rng = cfg.rng(6);
    let mut bad = 0;
    for _ in 0..count {
        let (x, y) = (random_coinvariant(&mut rng, &bounds()), random_coinvariant(&mut rng, &bounds()));
        if trace_functional(&x.mul(&y)).ok() != trace_functional(&y.mul(&x)).ok() {
            bad += 1;
        }
    }
    CheckRecord::exact(
        "tr(xy) = tr(yx)",
        json!({ "samples": count, "seed": cfg.seed }),
        bad == 0,
        (bad > 0).then(|| format!("{bad} failures")),
    )
}

/// Closed-form trace against the truncated operator trace on winding-0 basis
/// monomials with `m + n <= 6`, `|mu| <= 3`. The defect is the excess over the
/// reported tail bound.
pub fn trace_vs_truncation(cfg: &SuiteConfig) -> CheckRecord {
    let (p, q) = (cfg.pf(), cfg.qf());
    let mut worst: f64 = 0.0;
    let mut err = None;
    for mu in -3..=3i64 {
        for e in 0..=6u32 {
            for (m, n) in [(e, 0), (0, e)] {
                let x = AlgElement::basis(BasisMonomial::new(mu, m, n, mu));
                match (trace_functional(&x).and_then(|v| v.eval(p, q)), numeric_trace(&x, cfg.n, p, q)) {
                    (Ok(exact), Ok(t)) => worst = worst.max((t.re - exact).abs() - t.tail_bound).max(t.im.abs()),
                    (Err(e), _) | (_, Err(e)) => err = Some(e.to_string()),
                }
            }
        }
    }
    let rec = CheckRecord::measured("closed-form trace = truncated trace", json!({ "p": p, "q": q, "N": cfg.n }), worst.max(0.0), 1e-9);
    match err {
        Some(e) => CheckRecord { pass: false, ..rec.with_detail(e) },
        None => rec,
    }
}

/// `<tr, [E_mu]>` for `1 <= |mu| <= n_max`, required to be an integer and to
/// match the truncated operator trace.
pub fn pairing_values(cfg: &SuiteConfig, n_max: i64) -> CheckRecord {
    let (p, q) = (cfg.pf(), cfg.qf());
    let mut values = Vec::new();
    let mut ok = true;
    let mut worst: f64 = 0.0;
    for n in 1..=n_max {
        for mu in [-n, n] {
            let Ok(v) = pairing(mu) else {
                ok = false;
                continue;
            };
            ok &= v.as_integer().is_some();
            let tr = matrix_trace(&idempotent(mu).expect("mu != 0")).expect("square");
            match (numeric_trace(&tr, cfg.n, p, q), v.eval(p, q)) {
                (Ok(t), Ok(exact)) => worst = worst.max((t.re - exact).abs() - t.tail_bound),
                _ => ok = false,
            }
            values.push(format!("{mu}: {v}"));
        }
    }
    let rec = CheckRecord::measured(
        "pairings are integers matching truncated traces",
        json!({ "n_max": n_max, "p": p, "q": q, "N": cfg.n }),
        worst.max(0.0),
        1e-9,
    );
    CheckRecord { pass: rec.pass && ok, ..rec.with_detail(values.join(", ")) }
}

pub fn chern_suite(cfg: &SuiteConfig) -> SuiteReport {
    SuiteReport::new(
        "chern",
        vec![idempotency(5), pairing_minus_one(), trace_anchors(), traciality(cfg, 200), trace_vs_truncation(cfg), pairing_values(cfg, 5)],
    )
}

// ---------------------------------------------------------------- numeric

pub fn seeded_families(seed: u64, per_family: usize) -> Vec<Family> {
    let phases = sample_phases(seed, 2 * per_family);
    (0..per_family)
        .flat_map(|i| {
            [
                Family::Rho1Theta { theta: phases[i] },
                Family::Rho2Theta { theta: phases[i] },
                Family::Classical { theta1: phases[i], theta2: phases[per_family + i] },
            ]
        })
        .collect()
}

pub fn representation_relations(cfg: &SuiteConfig, sizes: &[usize]) -> CheckRecord {
    let mut worst: f64 = 0.0;
    let mut err = None;
    for &n in sizes {
        for fam in seeded_families(cfg.seed, 5) {
            match build_rep(fam, n, cfg.pf(), cfg.qf()) {
                Ok(rep) => worst = relation_defects(&rep).iter().map(|r| r.defect).fold(worst, f64::max),
                Err(e) => err = Some(e.to_string()),
            }
        }
    }
    let rec = CheckRecord::measured(
        "relations hold in truncated representations",
        json!({ "N": sizes, "phases_per_family": 5, "seed": cfg.seed, "p": cfg.pf(), "q": cfg.qf() }),
        worst,
        IDENTITY_TOL,
    );
    match err {
        Some(e) => CheckRecord { pass: false, ..rec.with_detail(e) },
        None => rec,
    }
}

/// Size used for the homomorphism oracle: large enough for a nonempty safe
/// block, small enough for dense products.
pub const HOMOMORPHISM_DIM: usize = 24;

pub fn homomorphism_oracle(cfg: &SuiteConfig, count: usize) -> CheckRecord {
    let mut rng = cfg.rng(7);
    let fams = seeded_families(cfg.seed, 5);
    let mut worst: f64 = 0.0;
    let mut err = None;
    for i in 0..count {
        let (x, y) = (random_element(&mut rng, &bounds()), random_element(&mut rng, &bounds()));
        match build_rep(fams[i % fams.len()], HOMOMORPHISM_DIM, cfg.pf(), cfg.qf()).and_then(|r| homomorphism_defect(&x, &y, &r)) {
            Ok(d) => worst = worst.max(d),
            Err(e) => err = Some(e.to_string()),
        }
    }
    let rec = CheckRecord::measured(
        "evaluation respects products on safe blocks",
        json!({ "samples": count, "N": HOMOMORPHISM_DIM, "seed": cfg.seed }),
        worst,
        HOMOMORPHISM_TOL,
    );
    match err {
        Some(e) => CheckRecord { pass: false, ..rec.with_detail(e) },
        None => rec,
    }
}

pub fn faithfulness(cfg: &SuiteConfig, count: usize) -> CheckRecord {
    let mut rng = cfg.rng(8);
    let mut missing = 0;
    for i in 0..count {
        let x = random_nonzero(&mut rng, &bounds());
        match faithfulness_probe(&x, 0, 4, cfg.pf(), cfg.qf(), cfg.seed.wrapping_add(i as u64)) {
            Ok(r) if r.witness_found && r.consistent() => {}
            _ => missing += 1,
        }
    }
    CheckRecord::exact(
        "nonzero elements are separated by a representation",
        json!({ "samples": count, "trials": 4, "seed": cfg.seed }),
        missing == 0,
        (missing > 0).then(|| format!("{missing} elements without a witness")),
    )
}

pub fn spectra(cfg: &SuiteConfig, sizes: &[usize]) -> CheckRecord {
    let mut worst: f64 = 0.0;
    let mut ok = true;
    for &n in sizes {
        for fam in [Family::Rho1Theta { theta: 0.0 }, Family::Rho2Theta { theta: 0.0 }] {
            match build_rep(fam, n, cfg.pf(), cfg.qf()).and_then(|r| spectrum_check(&r)) {
                Ok(r) => {
                    worst = worst.max(r.max_error);
                    ok &= r.pass;
                }
                Err(_) => ok = false,
            }
        }
    }
    let rec = CheckRecord::measured("spectra of 1 - aa*, 1 - bb* are geometric", json!({ "N": sizes }), worst, 1e-10);
    CheckRecord { pass: rec.pass && ok, ..rec }
}

pub fn polar_parts(cfg: &SuiteConfig, n: usize) -> CheckRecord {
    let mut worst_defect: f64 = 0.0;
    let mut worst_gap = f64::INFINITY;
    let mut ok = true;
    let cases = [
        (Family::Rho2Theta { theta: 0.0 }, Generator::A),
        (Family::Rho1Theta { theta: 0.0 }, Generator::B),
        (Family::Rho1Theta { theta: 0.0 }, Generator::A),
    ];
    for (fam, g) in cases {
        match build_rep(fam, n, cfg.pf(), cfg.qf()).and_then(|r| polar_isometry_check(&r, g)) {
            Ok(r) => {
                worst_defect = worst_defect.max(r.isometry_defect);
                worst_gap = worst_gap.min(r.min_eigenvalue - r.lower_bound);
                ok &= r.pass;
            }
            Err(_) => ok = false,
        }
    }
    let rec = CheckRecord::measured("polar parts of a, b are isometries with x*x >= 1 - r", json!({ "N": n }), worst_defect, 1e-10)
        .with_detail(format!("min eigenvalue margin {worst_gap:.3e}"));
    CheckRecord { pass: rec.pass && ok, ..rec }
}

pub fn mvn(n: usize) -> CheckRecord {
    match mvn_witness_check(n) {
        Ok(r) => {
            let d = r.range_defect.max(r.source_defect).max(r.partial_isometry_defect);
            let rec =
                CheckRecord::measured("s (x) p is a partial isometry from 1 (x) p to (1 - p) (x) p", json!({ "N": n }), d, IDENTITY_TOL)
                    .with_detail(format!("rank p = {}", r.rank_p));
            CheckRecord { pass: rec.pass && r.pass, ..rec }
        }
        Err(e) => CheckRecord::exact("s (x) p is a partial isometry", json!({ "N": n }), false, Some(e.to_string())),
    }
}

pub fn numeric_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut sizes = vec![10, 50, 200];
    if !sizes.contains(&cfg.n) {
        sizes.push(cfg.n);
    }
    SuiteReport::new(
        "numeric",
        vec![
            representation_relations(cfg, &sizes),
            homomorphism_oracle(cfg, 200),
            spectra(cfg, &[10, 50, 200]),
            polar_parts(cfg, 100),
            mvn(10),
            faithfulness(cfg, 100),
        ],
    )
}

// ---------------------------------------------------------------- classical

pub fn classical(cfg: &SuiteConfig, samples: usize) -> CheckRecord {
    let r = classical_maps_check(samples, cfg.seed);
    CheckRecord::measured(
        "f, g are inverse U(1)-equivariant maps between X and S^3",
        json!({ "samples": samples, "seed": cfg.seed }),
        r.max_error,
        IDENTITY_TOL,
    )
    .with_detail(format!(
        "f.g {:.1e}, g.f {:.1e}, membership {:.1e}, equivariance {:.1e}",
        r.f_after_g, r.g_after_f, r.membership, r.equivariance
    ))
}

pub fn classical_suite(cfg: &SuiteConfig) -> SuiteReport {
    SuiteReport::new("classical", vec![classical(cfg, 1000)])
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Vec<SuiteReport> {
    match suite {
        Suite::Algebra => vec![algebra_suite(cfg)],
        Suite::Gluing => vec![gluing_suite(cfg)],
        Suite::Galois => vec![galois_suite(cfg)],
        Suite::Chern => vec![chern_suite(cfg)],
        Suite::Numeric => vec![numeric_suite(cfg)],
        Suite::Classical => vec![classical_suite(cfg)],
        Suite::All => Suite::PARTS.iter().flat_map(|s| run_suite(*s, cfg)).collect(),
    }
}
