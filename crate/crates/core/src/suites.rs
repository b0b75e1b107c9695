//! Seeded self-check suites shared by the command-line `verify` command and the
//! acceptance tests.

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::analysis::{category_sweep, face_count_audit};
use crate::error::{Error, Result};
use crate::hull::extreme_points;
use crate::lattice::{
    census_report, enumerate_directions, filter_directions, filter_radius, hyperplane_count, jordan_totient,
    primitive_normal, zeta, CALIBRATED_ALPHA_3,
};
use crate::oracle::oracle_layers;
use crate::peel::{grid_trace, peel_all, restriction_equivalence_check, PeelOptions};
use crate::point::{LatticePoint, PointSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Oracle,
    Euler,
    Categories,
    Hyperplanes,
    Census,
    Restriction,
    Survival,
    Normal,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Oracle,
        Suite::Euler,
        Suite::Categories,
        Suite::Hyperplanes,
        Suite::Census,
        Suite::Restriction,
        Suite::Survival,
        Suite::Normal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Euler => "euler",
            Suite::Categories => "categories",
            Suite::Hyperplanes => "hyperplanes",
            Suite::Census => "census",
            Suite::Restriction => "restriction",
            Suite::Survival => "survival",
            Suite::Normal => "normal",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Overrides the suite's default sample count.
    pub samples: Option<usize>,
    /// Overrides the suite's default grid side (restriction suite).
    pub n: Option<i64>,
    /// Replace the engine's extreme-point predicate by one that misses a vertex.
    pub inject_fault: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub passed: bool,
    pub checks: usize,
    pub failures: usize,
    /// First failure, if any.
    pub detail: Option<String>,
}

struct Tally {
    checks: usize,
    failures: usize,
    detail: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checks: 0,
            failures: 0,
            detail: None,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.detail.is_none() {
                self.detail = Some(what());
            }
        }
    }

    fn finish(self, suite: Suite) -> SuiteOutcome {
        SuiteOutcome {
            suite,
            passed: self.failures == 0 && self.checks > 0,
            checks: self.checks,
            failures: self.failures,
            detail: self.detail,
        }
    }
}

/// Random subset of `[n]^d` keeping each point with probability 1/2; never empty.
pub fn random_grid_subset(rng: &mut impl Rng, n: i64, d: usize) -> Result<PointSet> {
    let grid = PointSet::grid(n, d)?;
    loop {
        let pts: Vec<LatticePoint> = grid.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
        if !pts.is_empty() {
            return PointSet::new(d, pts);
        }
    }
}

fn faulty_layers(s: &PointSet) -> Vec<PointSet> {
    let mut rest = s.clone();
    let mut out = Vec::new();
    while !rest.is_empty() {
        let ext = extreme_points(&rest);
        let mut pts = ext.into_points();
        if pts.len() > 1 {
            pts.pop();
        }
        let removed = PointSet::new(s.dim(), pts).expect("same dimension");
        rest = rest.difference(&removed);
        out.push(removed);
    }
    out
}

fn oracle_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let per_grid = cfg.samples.unwrap_or(100);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut t = Tally::new();
    for (n, d) in [(6, 3), (8, 2)] {
        for i in 0..per_grid {
            let s = random_grid_subset(&mut rng, n, d)?;
            let engine = if cfg.inject_fault {
                faulty_layers(&s)
            } else {
                peel_all(&s, PeelOptions::counts_only().with_points())?.layers()?.to_vec()
            };
            let oracle = oracle_layers(&s)?;
            t.check(engine == oracle, || format!("[{n}]^{d} sample {i}: layers differ from the oracle"));
        }
    }
    Ok(t.finish(Suite::Oracle))
}

fn euler_suite(_cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let mut t = Tally::new();
    for n in [2, 3, 4, 5, 8, 12, 16] {
        let trace = grid_trace(n, 3, PeelOptions::default())?;
        t.check(trace.total_points() as i64 == n * n * n, || format!("n={n}: layer sizes do not sum to n^3"));
        for a in face_count_audit(&trace, None)? {
            t.check(a.passed(), || format!("n={n} layer {}: face counts {a:?}", a.layer_index));
        }
    }
    Ok(t.finish(Suite::Euler))
}

fn categories_suite(_cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let mut t = Tally::new();
    for n in [5, 9, 15] {
        let trace = grid_trace(n, 3, PeelOptions::default())?;
        for mu in 1..=3 {
            let v = enumerate_directions(mu, 3)?;
            let recs = category_sweep(&trace, &v, false)?;
            for r in &recs {
                t.check(r.total() == v.len(), || format!("n={n} mu={mu} layer {}: counts do not partition V_mu", r.layer_index));
            }
            for a in face_count_audit(&trace, Some(&recs))? {
                t.check(a.passed(), || format!("n={n} mu={mu} layer {}: {a:?}", a.layer_index));
            }
        }
    }
    Ok(t.finish(Suite::Categories))
}

/// Every `v` in `V_mu` for `mu <= 5`, `d` in `{2, 3}`, `n <= 50`: `|H_v| <= d n mu`.
fn hyperplanes_suite(_cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let mut t = Tally::new();
    for d in [2usize, 3] {
        for mu in 1..=5 {
            let v = enumerate_directions(mu, d)?;
            for p in &v.vectors {
                for n in 1..=50 {
                    let h = hyperplane_count(p, n)?;
                    let bound = d as u64 * n as u64 * mu as u64;
                    t.check(h <= bound, || format!("{:?} n={n}: {h} > {bound}", p.coords()));
                }
            }
        }
    }
    Ok(t.finish(Suite::Hyperplanes))
}

fn jordan_by_tuples(r: u32, k: u64) -> u128 {
    let mut count = 0u128;
    let mut t = vec![1u64; r as usize];
    loop {
        if t.iter().fold(k, |g, x| g.gcd(x)) == 1 {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == t.len() {
                return count;
            }
            if t[i] < k {
                t[i] += 1;
                break;
            }
            t[i] = 1;
            i += 1;
        }
    }
}

fn census_suite(_cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let mut t = Tally::new();
    for r in 1..=3 {
        for k in 1..=50 {
            let (a, b) = (jordan_totient(r, k), jordan_by_tuples(r, k));
            t.check(a == b, || format!("J_{r}({k}): formula {a}, direct count {b}"));
        }
    }
    let v60 = enumerate_directions(60, 3)?;
    let expected = 60f64.powi(3) / zeta(3);
    let rel = (v60.len() as f64 - expected).abs() / expected;
    t.check(rel <= 0.1, || format!("|V_60| = {} is {:.3} away from 60^3/zeta(3)", v60.len(), rel));
    for d in [2usize, 3] {
        for m in 1..=60 {
            let c = census_report(m, d)?;
            t.check(c.jordan_sum <= c.exact_count as u128, || {
                format!("d={d} m={m}: jordan sum {} exceeds |V_m| = {}", c.jordan_sum, c.exact_count)
            });
        }
    }
    Ok(t.finish(Suite::Census))
}

fn restriction_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let n = cfg.n.unwrap_or(5);
    let samples = cfg.samples.unwrap_or(50);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut t = Tally::new();
    for i in 0..samples {
        let a = random_grid_subset(&mut rng, n, 3)?;
        let mut bad = None;
        for face in 0..6 {
            if !restriction_equivalence_check(&a, n, face)? {
                bad = Some(face);
                break;
            }
        }
        t.check(bad.is_none(), || format!("sample {i}: face {} disagrees", bad.unwrap_or_default()));
    }
    Ok(t.finish(Suite::Restriction))
}

fn survival_suite(_cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let mut t = Tally::new();
    for mu in [5, 10, 20, 40] {
        let v = enumerate_directions(mu, 3)?;
        let f = filter_directions(&v, filter_radius(CALIBRATED_ALPHA_3, mu, 3))?;
        t.check(2 * f.len() >= v.len(), || format!("mu={mu}: {} of {} survive", f.len(), v.len()));
    }
    Ok(t.finish(Suite::Survival))
}

/// Hadamard bound `(d-1)^((d-1)/2) n^(d-1)` on the normal of `d` points of `[n]^d`.
pub fn normal_bound(n: i64, d: usize) -> f64 {
    let k = (d - 1) as f64;
    k.powf(k / 2.0) * (n as f64).powf(k)
}

fn normal_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let samples = cfg.samples.unwrap_or(1000);
    let (n, d) = (20i64, 3usize);
    let bound = normal_bound(n, d);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut t = Tally::new();
    let mut drawn = 0;
    while drawn < samples {
        let pts: Vec<LatticePoint> = (0..d)
            .map(|_| LatticePoint::new((0..d).map(|_| rng.gen_range(1..=n))))
            .collect();
        let normal = match primitive_normal(&pts) {
            Ok(v) => v,
            Err(Error::AffinelyDependent) => continue,
            Err(e) => return Err(e),
        };
        drawn += 1;
        let orthogonal = pts[1..].iter().all(|p| {
            let diff: Vec<i64> = p.coords().iter().zip(pts[0].coords()).map(|(a, b)| a - b).collect();
            diff.iter().zip(normal.coords()).map(|(a, b)| a * b).sum::<i64>() == 0
        });
        t.check(orthogonal, || format!("{pts:?}: normal {:?} not orthogonal", normal.coords()));
        t.check((normal.max_coord() as f64) <= bound, || {
            format!("{pts:?}: normal {:?} exceeds {bound}", normal.coords())
        });
    }
    Ok(t.finish(Suite::Normal))
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    match suite {
        Suite::Oracle => oracle_suite(cfg),
        Suite::Euler => euler_suite(cfg),
        Suite::Categories => categories_suite(cfg),
        Suite::Hyperplanes => hyperplanes_suite(cfg),
        Suite::Census => census_suite(cfg),
        Suite::Restriction => restriction_suite(cfg),
        Suite::Survival => survival_suite(cfg),
        Suite::Normal => normal_suite(cfg),
    }
}
