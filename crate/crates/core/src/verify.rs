//! Cross-method verification.
//!
//! Every suite here is deterministic given its seed and bounds, and the
//! reports (apart from [`CountReport::timings_ms`]) serialize to identical
//! bytes across runs.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::counting::{count_bruteforce, count_lgv, count_transfer};
use crate::formulas::{closed_form, count_from_base, macmahon, pochhammer, BigCount, FormulaError, LoptopCase};
use crate::lattice::{Region, TriCoord};
use crate::region::{build_region, is_tileable, reduce_forced, DentedHexParams, ParamError};

pub const DEFAULT_SEED: u64 = 0x10_2e_4e;

fn decimal<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn decimal_int<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn decimal_map<S: Serializer, K: Serialize + Ord>(m: &BTreeMap<K, BigUint>, s: S) -> Result<S::Ok, S::Error> {
    s.collect_map(m.iter().map(|(k, v)| (k, v.to_string())))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Lgv,
    Formula,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Brute, Method::Lgv, Method::Formula];
}

#[derive(Debug, Clone, Serialize)]
pub struct CountReport {
    pub params: DentedHexParams,
    #[serde(serialize_with = "decimal_map")]
    pub counts: BTreeMap<Method, BigCount>,
    pub agree: bool,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub timings_ms: BTreeMap<Method, f64>,
    pub notes: Vec<String>,
}

impl CountReport {
    /// The common count, when every method that ran agrees.
    pub fn count(&self) -> Option<&BigCount> {
        if self.agree {
            self.counts.values().next()
        } else {
            None
        }
    }
}

/// Count via closed forms where they apply, otherwise `M(H_0)` by the path
/// determinant scaled by the main ratio. Returns the route taken.
pub fn formula_count(p: &DentedHexParams) -> Result<(BigCount, String), FormulaError> {
    if let Some(r) = closed_form(p) {
        return r.map(|(c, how)| (c, how.to_string()));
    }
    let base = count_lgv(&p.with_a(0)?)?;
    Ok((count_from_base(p, &base)?, "main ratio over H_0".to_string()))
}

pub fn cross_check(p: &DentedHexParams, methods: &[Method]) -> Result<CountReport, ParamError> {
    p.ensure_balanced()?;
    let mut counts = BTreeMap::new();
    let mut timings_ms = BTreeMap::new();
    let mut notes = Vec::new();
    for &method in methods {
        let start = Instant::now();
        let result = match method {
            Method::Brute => Ok(count_bruteforce(&build_region(p))),
            Method::Lgv => count_lgv(p).map_err(FormulaError::from),
            Method::Formula => formula_count(p).map(|(c, how)| {
                notes.push(format!("formula: {how}"));
                c
            }),
        };
        timings_ms.insert(method, start.elapsed().as_secs_f64() * 1e3);
        match result {
            Ok(c) => {
                counts.insert(method, c);
            }
            Err(e) => notes.push(format!("{method:?} not applicable: {e}")),
        }
    }
    let agree = counts.values().collect::<BTreeSet<_>>().len() <= 1;
    Ok(CountReport { params: p.clone(), counts, agree, timings_ms, notes })
}

/// Size limits shared by the suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub max_b: u32,
    pub max_c: u32,
    pub max_m: u32,
    pub max_n: u32,
    pub a_max: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_b: 2, max_c: 2, max_m: 2, max_n: 2, a_max: 3 }
    }
}

fn all_subsets(max: u32, size: u32) -> Vec<Vec<u32>> {
    fn go(start: u32, max: u32, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for x in start..=max {
            cur.push(x);
            go(x + 1, max, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, max, size, &mut Vec::new(), &mut out);
    out
}

/// Every valid balanced shape within the bounds, with the given `a`.
pub fn all_shapes(bounds: &Bounds, a: u32) -> Vec<DentedHexParams> {
    let mut out = Vec::new();
    for b in 0..=bounds.max_b {
        for c in 0..=bounds.max_c {
            for m in 0..=bounds.max_m {
                for n in 0..=bounds.max_n {
                    let t = m + n;
                    for u in all_subsets(b + t, m) {
                        for v in all_subsets(c + t, n) {
                            if let Ok(p) = DentedHexParams::new(a, b, c, t, u.clone(), v) {
                                out.push(p);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn random_subset(rng: &mut ChaCha8Rng, max: u32, size: u32) -> Vec<u32> {
    let pool: Vec<u32> = (1..=max).collect();
    let mut s: Vec<u32> = pool.choose_multiple(rng, size as usize).copied().collect();
    s.sort_unstable();
    s
}

/// `count` distinct shapes with `a = 0` and `1 <= b, c <= max_b, max_c`, at
/// most `max_dents` dents in total.
pub fn sample_shapes(seed: u64, count: usize, max_b: u32, max_c: u32, max_dents: u32) -> Vec<DentedHexParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    while out.len() < count {
        let b = rng.gen_range(1..=max_b);
        let c = rng.gen_range(1..=max_c);
        let k = rng.gen_range(0..=max_dents);
        let m = rng.gen_range(0..=k);
        let n = k - m;
        let u = random_subset(&mut rng, b + k, m);
        let v = random_subset(&mut rng, c + k, n);
        if let Ok(p) = DentedHexParams::new(0, b, c, k, u, v) {
            if seen.insert(p.to_string()) {
                out.push(p);
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Kuo condensation

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KuoCells {
    pub alpha: TriCoord,
    pub beta: TriCoord,
    pub gamma: TriCoord,
    pub delta: TriCoord,
}

impl KuoCells {
    pub fn as_array(&self) -> [TriCoord; 4] {
        [self.alpha, self.beta, self.gamma, self.delta]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KuoError {
    #[error("cell {0} is not in the region")]
    NotInRegion(TriCoord),
    #[error("cells must be distinct and share one orientation")]
    BadCells,
    #[error("cell {0} does not touch the region boundary")]
    NotOnBoundary(TriCoord),
    #[error("region boundary is not a single closed walk")]
    NotSimplyConnected,
    #[error("cells are not in cyclic order alpha, beta, gamma, delta along the boundary")]
    NotCyclic,
}

/// The six tiling counts in the condensation identity; `ab` is `M(R - alpha - beta)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KuoCounts {
    #[serde(serialize_with = "decimal")]
    pub ab: BigCount,
    #[serde(serialize_with = "decimal")]
    pub gd: BigCount,
    #[serde(serialize_with = "decimal")]
    pub ad: BigCount,
    #[serde(serialize_with = "decimal")]
    pub bg: BigCount,
    #[serde(serialize_with = "decimal")]
    pub ag: BigCount,
    #[serde(serialize_with = "decimal")]
    pub bd: BigCount,
}

impl KuoCounts {
    /// `M(R-a-g) M(R-b-d) = M(R-a-b) M(R-g-d) + M(R-a-d) M(R-b-g)`.
    pub fn condensation_holds(&self) -> bool {
        &self.ag * &self.bd == &self.ab * &self.gd + &self.ad * &self.bg
    }

    /// `M(R-a-b) M(R-g-d) = M(R-a-d) M(R-b-g) - M(R-a-g) M(R-b-d)`, the
    /// sign arrangement that is sometimes quoted for the same identity.
    pub fn alternate_sign_holds(&self) -> bool {
        &self.ab * &self.gd + &self.ag * &self.bd == &self.ad * &self.bg
    }
}

/// Position of `cell` along the boundary walk: the index of its first
/// boundary edge, or failing that of its first boundary vertex.
pub fn boundary_position(walk: &[crate::lattice::Point], cell: &TriCoord) -> Option<usize> {
    let verts = cell.vertices();
    let edges: Vec<_> = cell.edges().iter().map(|&(f, t, _)| (f, t)).collect();
    let len = walk.len();
    (0..len)
        .find(|&i| edges.contains(&(walk[i], walk[(i + 1) % len])))
        .or_else(|| (0..len).find(|&i| verts.contains(&walk[i])))
}

/// Checks that the four cells appear in the order alpha, beta, gamma, delta
/// when walking the boundary in one of the two directions.
pub fn check_cyclic_order(r: &Region, cells: &KuoCells) -> Result<(), KuoError> {
    let cycles = r.boundary_cycles();
    let [walk] = &cycles[..] else {
        return Err(KuoError::NotSimplyConnected);
    };
    let mut pos = Vec::new();
    for (label, cell) in cells.as_array().iter().enumerate() {
        let at = boundary_position(walk, cell).ok_or(KuoError::NotOnBoundary(*cell))?;
        pos.push((at, label));
    }
    pos.sort();
    if pos.windows(2).any(|w| w[0].0 == w[1].0) {
        return Err(KuoError::NotCyclic);
    }
    let labels: Vec<usize> = pos.iter().map(|&(_, l)| l).collect();
    let start = labels.iter().position(|&l| l == 0).expect("alpha present");
    let rotated: Vec<usize> = (0..4).map(|k| labels[(start + k) % 4]).collect();
    if rotated == [0, 1, 2, 3] || rotated == [0, 3, 2, 1] {
        Ok(())
    } else {
        Err(KuoError::NotCyclic)
    }
}

fn validate_kuo(r: &Region, cells: &KuoCells) -> Result<(), KuoError> {
    let arr = cells.as_array();
    for c in &arr {
        if !r.contains(c) {
            return Err(KuoError::NotInRegion(*c));
        }
    }
    let distinct: BTreeSet<_> = arr.iter().collect();
    if distinct.len() != 4 || arr.iter().any(|c| c.orient != arr[0].orient) {
        return Err(KuoError::BadCells);
    }
    check_cyclic_order(r, cells)
}

pub fn kuo_counts(r: &Region, cells: &KuoCells) -> Result<KuoCounts, KuoError> {
    validate_kuo(r, cells)?;
    let m = |x: &TriCoord, y: &TriCoord| count_bruteforce(&r.without([x, y]));
    let KuoCells { alpha, beta, gamma, delta } = cells;
    Ok(KuoCounts {
        ab: m(alpha, beta),
        gd: m(gamma, delta),
        ad: m(alpha, delta),
        bg: m(beta, gamma),
        ag: m(alpha, gamma),
        bd: m(beta, delta),
    })
}

/// Whether Kuo's condensation identity holds for `r` and the four cells.
pub fn kuo_check(r: &Region, cells: &KuoCells) -> Result<bool, KuoError> {
    Ok(kuo_counts(r, cells)?.condensation_holds())
}

/// A region with two more up-pointing than down-pointing triangles and four
/// labelled up-pointing triangles on its boundary.
#[derive(Debug, Clone, Serialize)]
pub struct KuoConfig {
    pub label: String,
    pub scaffold: DentedHexParams,
    pub cells: KuoCells,
}

impl KuoConfig {
    pub fn region(&self) -> Region {
        build_region(&self.scaffold)
    }
}

/// Scaffold for a region with northwest dents only: `H(a,b,c,n,(),v)` sits
/// inside `R = H(a, b, c-1, n+1, (), (v_1..v_{n-1}))` as `R - alpha - gamma`.
pub fn one_sided_scaffold(a: u32, b: u32, c: u32, v: &[u32]) -> Result<KuoConfig, ParamError> {
    let n = v.len() as u32;
    assert!(n >= 1 && c >= 1, "need a dent and c >= 1");
    let r = DentedHexParams::new(a, b, c - 1, n + 1, vec![], v[..v.len() - 1].to_vec())?;
    let cells = KuoCells {
        alpha: r.northwest_cell(v[v.len() - 1]),
        beta: r.northwest_cell(1),
        gamma: r.northeast_cell(b + n + 1),
        delta: r.northwest_cell(c + n),
    };
    let label = format!("one-sided {}", DentedHexParams::new(a, b, c, n, vec![], v.to_vec())?);
    Ok(KuoConfig { label, scaffold: r, cells })
}

/// Scaffold for a region with dents on both sides: `H` sits inside
/// `R = H(a, b, c, t, u_1..u_{m-1}, v_1..v_{n-1})` as `R - alpha - beta`.
pub fn two_sided_scaffold(p: &DentedHexParams) -> Result<KuoConfig, ParamError> {
    assert!(p.m() >= 1 && p.n() >= 1, "need dents on both sides");
    let (u, v) = (p.u(), p.v());
    let r = DentedHexParams::new(p.a(), p.b(), p.c(), p.t(), u[..u.len() - 1].to_vec(), v[..v.len() - 1].to_vec())?;
    let cells = KuoCells {
        alpha: r.northwest_cell(v[v.len() - 1]),
        beta: r.northeast_cell(u[u.len() - 1]),
        gamma: r.northeast_cell(p.b() + p.t()),
        delta: r.northwest_cell(p.c() + p.t()),
    };
    Ok(KuoConfig { label: format!("two-sided {p}"), scaffold: r, cells })
}

/// The two induction scaffolds for `a = 0..=a_max`: one-sided dents
/// `(2,3,5)` in `H(a,5,4,3)` and two-sided dents `(3,6)`, `(2,5,6)` in `H(a,4,2,5)`.
pub fn kuo_family(a_max: u32) -> Vec<KuoConfig> {
    let mut out = Vec::new();
    for a in 0..=a_max {
        out.push(one_sided_scaffold(a, 5, 4, &[2, 3, 5]).expect("valid scaffold"));
    }
    for a in 0..=a_max {
        let p = DentedHexParams::new(a, 4, 2, 5, vec![3, 6], vec![2, 5, 6]).expect("valid params");
        out.push(two_sided_scaffold(&p).expect("valid scaffold"));
    }
    out
}

/// Random configurations on small scaffolds: four distinct edge-touching
/// up-pointing triangles, labelled in boundary order from a random start.
pub fn random_kuo_configs(seed: u64, count: usize) -> Vec<KuoConfig> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let (a, b, c) = (rng.gen_range(0..=2), rng.gen_range(1..=3), rng.gen_range(1..=3));
        let k = rng.gen_range(0..=2);
        let m = rng.gen_range(0..=k);
        let t = k + 2;
        let u = random_subset(&mut rng, b + t, m);
        let v = random_subset(&mut rng, c + t, k - m);
        let Ok(p) = DentedHexParams::new(a, b, c, t, u, v) else { continue };
        let r = build_region(&p);
        let cycles = r.boundary_cycles();
        let [walk] = &cycles[..] else { continue };
        let candidates: Vec<TriCoord> = r.edge_boundary_cells().into_iter().filter(|c| c.is_up()).collect();
        if candidates.len() < 4 {
            continue;
        }
        let mut picked: Vec<(usize, TriCoord)> = candidates
            .choose_multiple(&mut rng, 4)
            .map(|c| (boundary_position(walk, c).expect("boundary cell"), *c))
            .collect();
        picked.sort();
        if picked.windows(2).any(|w| w[0].0 == w[1].0) {
            continue;
        }
        let shift = rng.gen_range(0..4);
        let at = |i: usize| picked[(i + shift) % 4].1;
        let cells = KuoCells { alpha: at(0), beta: at(1), gamma: at(2), delta: at(3) };
        out.push(KuoConfig { label: format!("random #{}", out.len() + 1), scaffold: p, cells });
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct KuoEntry {
    pub label: String,
    pub scaffold: DentedHexParams,
    pub cells: KuoCells,
    pub counts: Option<KuoCounts>,
    pub holds: bool,
    pub alternate_sign_holds: bool,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct KuoSuiteReport {
    pub seed: u64,
    pub entries: Vec<KuoEntry>,
    pub passed: bool,
}

pub fn kuo_entry(cfg: &KuoConfig) -> KuoEntry {
    let (counts, error) = match kuo_counts(&cfg.region(), &cfg.cells) {
        Ok(c) => (Some(c), None),
        Err(e) => (None, Some(e.to_string())),
    };
    KuoEntry {
        label: cfg.label.clone(),
        scaffold: cfg.scaffold.clone(),
        cells: cfg.cells,
        holds: counts.as_ref().is_some_and(KuoCounts::condensation_holds),
        alternate_sign_holds: counts.as_ref().is_some_and(KuoCounts::alternate_sign_holds),
        counts,
        error,
    }
}

pub fn kuo_suite(seed: u64, random_count: usize, family_a_max: u32) -> KuoSuiteReport {
    let configs = kuo_family(family_a_max).into_iter().chain(random_kuo_configs(seed, random_count));
    let entries: Vec<KuoEntry> = configs.map(|c| kuo_entry(&c)).collect();
    let passed = entries.iter().all(|e| e.holds);
    KuoSuiteReport { seed, entries, passed }
}

// ---------------------------------------------------------------------------
// Monotonicity of tileability

#[derive(Debug, Clone, Serialize)]
pub struct MonotoneReport {
    pub bounds: Bounds,
    pub instances: usize,
    pub pairs_checked: usize,
    /// `(H, H')` with `H` tileable, dents of `H'` weakly south, `H'` untileable.
    pub counterexamples: Vec<(DentedHexParams, DentedHexParams)>,
    /// Instances where the line-count criterion disagrees with enumeration.
    pub criterion_mismatches: Vec<DentedHexParams>,
}

impl MonotoneReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty() && self.criterion_mismatches.is_empty()
    }
}

fn dominated(x: &[u32], y: &[u32]) -> bool {
    x.iter().zip(y).all(|(a, b)| a <= b)
}

/// Moving dents south (and changing `a, b, c`) never destroys tileability.
/// Tileability is decided by enumeration at `a = 1`.
pub fn monotonicity_suite(bounds: &Bounds) -> MonotoneReport {
    let shapes = all_shapes(bounds, 1);
    let mut criterion_mismatches = Vec::new();
    let mut by_dents: BTreeMap<(u32, u32), Vec<(DentedHexParams, bool)>> = BTreeMap::new();
    for p in &shapes {
        let tileable = !count_bruteforce(&build_region(p)).is_zero();
        if is_tileable(p).ok() != Some(tileable) {
            criterion_mismatches.push(p.clone());
        }
        by_dents.entry((p.m(), p.n())).or_default().push((p.clone(), tileable));
    }
    let mut pairs_checked = 0;
    let mut counterexamples = Vec::new();
    for group in by_dents.values() {
        for (h, ht) in group.iter().filter(|(_, t)| *t) {
            for (h2, h2t) in group {
                if dominated(h.u(), h2.u()) && dominated(h.v(), h2.v()) {
                    pairs_checked += 1;
                    if *ht && !h2t {
                        counterexamples.push((h.clone(), h2.clone()));
                    }
                }
            }
        }
    }
    MonotoneReport { bounds: *bounds, instances: shapes.len(), pairs_checked, counterexamples, criterion_mismatches }
}

// ---------------------------------------------------------------------------
// Polynomiality in a

#[derive(Debug, Clone, Serialize)]
pub struct PolyPoint {
    pub a: u32,
    #[serde(serialize_with = "decimal_int")]
    pub lhs: BigInt,
    #[serde(serialize_with = "decimal_int")]
    pub rhs: BigInt,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PolyReport {
    pub shape: DentedHexParams,
    pub a_max: u32,
    pub underline_offset: i64,
    pub points: Vec<PolyPoint>,
    pub holds: bool,
}

fn dent_product(p: &DentedHexParams, a: u32, offset: i64) -> Result<BigInt, FormulaError> {
    let mut prod = BigInt::one();
    let len = |x: i64| {
        u32::try_from(x + offset).map_err(|_| FormulaError::HypothesisNotMet(format!("negative underline in {p}")))
    };
    for (i, &ui) in p.u().iter().enumerate() {
        prod *= pochhammer(a as i64 + ui as i64, len(p.u_under(i))?);
    }
    for (j, &vj) in p.v().iter().enumerate() {
        prod *= pochhammer(a as i64 + vj as i64, len(p.v_under(j))?);
    }
    Ok(prod)
}

/// Checks `M(H_a) D(a) = M(H_0) D(0) P(a, b+n, c+m)` for `a = 0..=a_max`,
/// where `D(a)` is the product of the dent Pochhammer symbols and the counts
/// come from enumeration. `underline_offset` perturbs every underline length
/// and exists to confirm the check can fail.
pub fn polynomiality_suite_with(
    shape: &DentedHexParams,
    a_max: u32,
    underline_offset: i64,
) -> Result<PolyReport, FormulaError> {
    shape.ensure_balanced()?;
    let h0 = shape.with_a(0)?;
    let base = BigInt::from(count_bruteforce(&build_region(&h0)));
    let base_side = &base * dent_product(&h0, 0, underline_offset)?;
    let mut points = Vec::new();
    for a in 0..=a_max {
        let ha = shape.with_a(a)?;
        let count = BigInt::from(count_bruteforce(&build_region(&ha)));
        let lhs = count * dent_product(&ha, a, underline_offset)?;
        let rhs = &base_side * BigInt::from(macmahon(a, shape.b() + shape.n(), shape.c() + shape.m()));
        points.push(PolyPoint { a, holds: lhs == rhs, lhs, rhs });
    }
    let holds = points.iter().all(|p| p.holds);
    Ok(PolyReport { shape: h0, a_max, underline_offset, points, holds })
}

pub fn polynomiality_suite(shape: &DentedHexParams, a_max: u32) -> Result<PolyReport, FormulaError> {
    polynomiality_suite_with(shape, a_max, 0)
}

// ---------------------------------------------------------------------------
// Forced lozenges

#[derive(Debug, Clone, Serialize)]
pub struct ReductionEntry {
    pub params: DentedHexParams,
    pub cells_before: usize,
    pub cells_after: usize,
    #[serde(serialize_with = "decimal")]
    pub count_before: BigCount,
    #[serde(serialize_with = "decimal")]
    pub count_after: BigCount,
    pub holds: bool,
}

/// Enumerates the region as given and after removing forced lozenges.
pub fn reduction_entry(p: &DentedHexParams) -> ReductionEntry {
    let region = build_region(p);
    let count_before = count_transfer(&region);
    let (cells_after, count_after) = match reduce_forced(&region) {
        Ok(red) => (red.region.len(), count_transfer(&red.region)),
        Err(_) => (0, BigCount::zero()),
    };
    ReductionEntry {
        params: p.clone(),
        cells_before: region.len(),
        cells_after,
        holds: count_before == count_after,
        count_before,
        count_after,
    }
}

/// Random small dented hexagons, biased toward dents at the ends of the
/// sides where lozenges are forced.
pub fn forced_reduction_instances(seed: u64, count: usize) -> Vec<DentedHexParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let (a, b, c) = (rng.gen_range(0..=3), rng.gen_range(1..=3), rng.gen_range(1..=3));
        let k = rng.gen_range(1..=3);
        let m = rng.gen_range(0..=k);
        let mut u = random_subset(&mut rng, b + k, m);
        let mut v = random_subset(&mut rng, c + k, k - m);
        if rng.gen_bool(0.5) {
            if let Some(last) = u.last_mut() {
                *last = b + k;
            }
            if let Some(first) = v.first_mut() {
                *first = 1;
            }
        }
        u.dedup();
        v.dedup();
        if let Ok(p) = DentedHexParams::new(a, b, c, k, u, v) {
            out.push(p);
        }
    }
    out
}

/// Whether peeling forced lozenges from `H` and from its reduced parameters
/// leaves translates of the same region.
pub fn loptop_region_check(p: &DentedHexParams, case: LoptopCase) -> Result<bool, FormulaError> {
    let q = case.reduce(p)?;
    let core = |x: &DentedHexParams| reduce_forced(&build_region(x)).map(|r| r.region.canonical()).ok();
    Ok(core(p) == core(&q))
}

/// Shapes satisfying each reduction hypothesis.
pub fn loptop_examples() -> Vec<(DentedHexParams, LoptopCase)> {
    let mk = |a, b, c, u: &[u32], v: &[u32]| DentedHexParams::balanced(a, b, c, u.to_vec(), v.to_vec()).expect("valid");
    vec![
        (mk(2, 3, 2, &[1, 4], &[3]), LoptopCase::TopRowNortheast),
        (mk(1, 2, 3, &[1], &[]), LoptopCase::TopRowNortheast),
        (mk(2, 2, 3, &[2], &[1, 4]), LoptopCase::TopRowNorthwest),
        (mk(0, 3, 2, &[], &[1, 3]), LoptopCase::TopRowNorthwest),
        (mk(2, 2, 2, &[4], &[2]), LoptopCase::SoutheastSide),
        (mk(1, 3, 2, &[2, 6], &[3]), LoptopCase::SoutheastSide),
        (mk(2, 2, 2, &[2], &[4]), LoptopCase::SouthwestSide),
        (mk(1, 2, 3, &[3], &[1, 6]), LoptopCase::SouthwestSide),
    ]
}

#[derive(Debug, Clone, Serialize)]
pub struct ReductionReport {
    pub seed: u64,
    pub entries: Vec<ReductionEntry>,
    pub loptop: Vec<(DentedHexParams, String, bool)>,
    pub passed: bool,
}

pub fn forced_reduction_suite(seed: u64, count: usize) -> ReductionReport {
    let entries: Vec<ReductionEntry> = forced_reduction_instances(seed, count).iter().map(reduction_entry).collect();
    let loptop: Vec<_> = loptop_examples()
        .into_iter()
        .map(|(p, case)| {
            let ok = loptop_region_check(&p, case).unwrap_or(false);
            (p, format!("{case:?}"), ok)
        })
        .collect();
    let passed = entries.iter().all(|e| e.holds) && loptop.iter().all(|l| l.2);
    ReductionReport { seed, entries, loptop, passed }
}

// ---------------------------------------------------------------------------
// Combined runs

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Cross,
    Kuo,
    Monotone,
    Poly,
    All,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteOptions {
    pub seed: u64,
    pub bounds: Bounds,
    /// Added to every underline length in the polynomiality check.
    pub underline_fault: i64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { seed: DEFAULT_SEED, bounds: Bounds::default(), underline_fault: 0 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub bounds: Bounds,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cross: Option<Vec<CountReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kuo: Option<KuoSuiteReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monotone: Option<MonotoneReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poly: Option<Vec<PolyReport>>,
    /// One line per failed check, naming the suite and the instance.
    pub failures: Vec<String>,
    /// The shapes named in `failures`.
    pub offending: Vec<DentedHexParams>,
    pub passed: bool,
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> SuiteReport {
    let want = |s: Suite| suite == s || suite == Suite::All;
    let b = &opts.bounds;
    let mut failures = Vec::new();
    let mut offending = Vec::new();
    let shapes = sample_shapes(opts.seed, 12, b.max_b.max(1), b.max_c.max(1), b.max_m + b.max_n);

    let cross = want(Suite::Cross).then(|| {
        let mut reports = Vec::new();
        for shape in &shapes {
            for a in 0..=b.a_max {
                let p = shape.with_a(a).expect("a > 0 keeps the shape valid");
                let mut rep = cross_check(&p, &Method::ALL).expect("sampled shapes are balanced");
                rep.timings_ms.clear();
                if !rep.agree {
                    failures.push(format!("cross_check: methods disagree on {p}"));
                    offending.push(p.clone());
                }
                reports.push(rep);
            }
        }
        reports
    });

    let kuo = want(Suite::Kuo).then(|| {
        let rep = kuo_suite(opts.seed, 20, 1);
        for e in rep.entries.iter().filter(|e| !e.holds) {
            failures.push(format!("kuo_check: condensation fails for {} on {}", e.label, e.scaffold));
            offending.push(e.scaffold.clone());
        }
        rep
    });

    let monotone = want(Suite::Monotone).then(|| {
        let rep = monotonicity_suite(b);
        for (h, h2) in &rep.counterexamples {
            failures.push(format!("monotonicity_suite: {h} tileable but {h2} is not"));
            offending.push(h2.clone());
        }
        for p in &rep.criterion_mismatches {
            failures.push(format!("monotonicity_suite: line-count criterion wrong on {p}"));
            offending.push(p.clone());
        }
        rep
    });

    let poly = want(Suite::Poly).then(|| {
        let mut reports = Vec::new();
        for shape in &shapes {
            match polynomiality_suite_with(shape, b.a_max, opts.underline_fault) {
                Ok(rep) => {
                    if !rep.holds {
                        failures.push(format!("polynomiality_suite: identity fails for {}", rep.shape));
                        offending.push(rep.shape.clone());
                    }
                    reports.push(rep);
                }
                Err(e) => {
                    failures.push(format!("polynomiality_suite: {shape}: {e}"));
                    offending.push(shape.clone());
                }
            }
        }
        reports
    });

    SuiteReport {
        seed: opts.seed,
        bounds: *b,
        cross,
        kuo,
        monotone,
        poly,
        passed: failures.is_empty(),
        failures,
        offending,
    }
}
