//! The `verify-all` property suites over a corpus directory.
//!
//! Every suite records how many checks it ran and a message per failure. The
//! report contains no timings, so repeated runs with the same seed produce
//! byte-identical JSON.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::artinian::artinian_hilbert_function;
use crate::classify::{
    c_linear, census_by_hstar, census_sums_match, enumerate_2d, enumerate_simplices,
    exceptional_triangle, lawrence_prism, partition_count, scan_scott, ClassificationTable,
};
use crate::corpus::{dilated_triangle, load_corpus, load_golden};
use crate::ehrhart::{degree_and_codegree, hstar, hstar_from_series, reciprocity_check};
use crate::error::{Error, Result};
use crate::linalg::determinant;
use crate::monoid::{minimal_monoid_generators, verify_generation};
use crate::normal_form::{are_equivalent, normal_form};
use crate::points::{count_in_dilate, lattice_points_in_dilate};
use crate::polytope::{apply_map, random_unimodular_map, LatticePolytope, Point};
use crate::pyramid::{base_without_apex, geometric_pyramid_apexes, peel, pyramid};
use crate::toric::{
    binomial_count_bound, compare_pyramid_detectors, fiber_census, stabilization_index,
    theorem_bound, toric_ideal_minimal_generators, toric_ideal_with, Representative,
};
use crate::volume::{normalized_volume, triangulate};

/// Random images per corpus polytope in the equivalence-invariance suite.
pub const MAPS_PER_POLYTOPE: u64 = 20;
/// Random images in the detector suite.
pub const DETECTOR_IMAGES: u64 = 20;
/// Largest normalized volume in the planar classification suite.
pub const CLASSIFY_VMAX: u64 = 8;
/// Planar enumeration bound for the `h*_1 <= 3 h*_2 + 4` scan; the extremal
/// triangle `conv{(0,0), (3,0), (0,3)}` has normalized volume 9.
pub const SCOTT_VMAX: u64 = 9;
pub const MIN_CORPUS_SIZE: usize = 10;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub checked: usize,
    pub failures: Vec<String>,
    pub passed: bool,
}

impl SuiteResult {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    /// Runs a fallible check; an error counts as a failure.
    fn try_check(&mut self, what: &str, f: impl FnOnce() -> Result<Option<String>>) {
        self.checked += 1;
        match f() {
            Ok(None) => {}
            Ok(Some(msg)) => self.failures.push(format!("{what}: {msg}")),
            Err(e) => self.failures.push(format!("{what}: {e}")),
        }
    }

    fn finish(mut self) -> Self {
        self.passed = self.failures.is_empty();
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub corpus: Vec<String>,
    pub suites: BTreeMap<String, SuiteResult>,
    pub passed: bool,
}

impl VerifyReport {
    /// Pretty JSON with keys in sorted order.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report is serializable");
        serde_json::to_string_pretty(&value).expect("value is serializable")
    }

    pub fn failed_suites(&self) -> Vec<&str> {
        self.suites
            .iter()
            .filter(|(_, s)| !s.passed)
            .map(|(k, _)| k.as_str())
            .collect()
    }
}

fn fail_if(cond: bool, msg: impl FnOnce() -> String) -> Option<String> {
    if cond {
        Some(msg())
    } else {
        None
    }
}

/// Barycentric membership test in a simplex given by `n + 1` vertices.
fn in_simplex(simplex: &[&Point], x: &[i64]) -> Result<bool> {
    let v0 = simplex[0];
    let n = v0.len();
    let cols: Vec<Vec<i64>> = simplex[1..]
        .iter()
        .map(|v| v.iter().zip(v0).map(|(a, b)| a - b).collect())
        .collect();
    let as_matrix = |cols: &[Vec<i64>]| -> Vec<Vec<i64>> {
        (0..n)
            .map(|r| cols.iter().map(|c| c[r]).collect())
            .collect()
    };
    let d = determinant(&as_matrix(&cols))?;
    let rhs: Vec<i64> = x.iter().zip(v0).map(|(a, b)| a - b).collect();
    let mut total: i128 = 0;
    for i in 0..n {
        let mut c = cols.clone();
        c[i] = rhs.clone();
        // λ_i = d_i / d, so λ_i >= 0 iff d_i and d share a sign.
        let di = determinant(&as_matrix(&c))? * d.signum();
        if di < 0 {
            return Ok(false);
        }
        total += di;
    }
    Ok(total <= d.abs())
}

/// Lattice points of `P` found by scanning the bounding box and testing
/// membership in the cells of a triangulation.
fn box_scan_via_triangulation(p: &LatticePolytope) -> Result<Vec<Point>> {
    let cells = triangulate(p)?;
    let (lo, hi) = p.bounding_box();
    let mut out = Vec::new();
    let mut x = lo.clone();
    loop {
        let mut inside = false;
        for cell in &cells {
            let verts: Vec<&Point> = cell.iter().map(|&i| &p.vertices()[i]).collect();
            if in_simplex(&verts, &x)? {
                inside = true;
                break;
            }
        }
        if inside {
            out.push(x.clone());
        }
        let mut i = p.dim();
        loop {
            if i == 0 {
                out.sort();
                return Ok(out);
            }
            i -= 1;
            if x[i] < hi[i] {
                x[i] += 1;
                break;
            }
            x[i] = lo[i];
        }
    }
}

fn map_seed(seed: u64, idx: usize, j: u64) -> u64 {
    seed.wrapping_mul(1_000_003)
        .wrapping_add((idx as u64) << 16)
        .wrapping_add(j)
}

fn suite_golden(
    corpus: &BTreeMap<String, LatticePolytope>,
    golden: Option<&BTreeMap<String, Vec<u64>>>,
) -> SuiteResult {
    let mut s = SuiteResult::default();
    let Some(golden) = golden else {
        s.check(false, || "golden h* file is missing".into());
        return s.finish();
    };
    for (name, p) in corpus {
        s.try_check(name, || {
            let Some(want) = golden.get(name) else {
                return Ok(Some("no golden entry".into()));
            };
            let got = hstar(p)?;
            Ok(fail_if(got.coefficients() != want.as_slice(), || {
                format!("h* = {:?}, golden {want:?}", got.coefficients())
            }))
        });
    }
    for name in golden.keys().filter(|k| !corpus.contains_key(*k)) {
        s.check(false, || {
            format!("{name}: golden entry without corpus file")
        });
    }
    s.finish()
}

fn suite_ehrhart(corpus: &BTreeMap<String, LatticePolytope>) -> SuiteResult {
    let mut s = SuiteResult::default();
    for (name, p) in corpus {
        s.try_check(name, || {
            let n = p.dim();
            let h = hstar(p)?;
            let nv = normalized_volume(p)?;
            if h.sum() != nv {
                return Ok(Some(format!("h*(1) = {} but nv = {nv}", h.sum())));
            }
            let (d, codeg) = degree_and_codegree(p)?;
            if d > n || codeg > n + 1 || d + codeg != n + 1 {
                return Ok(Some(format!(
                    "degree {d}, codegree {codeg} in dimension {n}"
                )));
            }
            let counts: Vec<u64> = (0..=n as u64 + 2).map(|k| count_in_dilate(p, k)).collect();
            if counts.windows(2).skip(1).any(|w| w[0] >= w[1]) {
                return Ok(Some(format!("L is not strictly increasing: {counts:?}")));
            }
            let again = hstar_from_series(&counts, n)?;
            Ok(fail_if(again != h, || {
                "series round trip changed h*".into()
            }))
        });
    }
    s.finish()
}

fn suite_facets(corpus: &BTreeMap<String, LatticePolytope>) -> SuiteResult {
    let mut s = SuiteResult::default();
    for (name, p) in corpus {
        s.try_check(name, || {
            let scan = box_scan_via_triangulation(p)?;
            let mut direct = lattice_points_in_dilate(p, 1);
            direct.sort();
            Ok(fail_if(scan != direct, || {
                format!(
                    "{} points from facets, {} from triangulation",
                    direct.len(),
                    scan.len()
                )
            }))
        });
        let desc = p.facets();
        s.check(
            desc.facets.iter().all(|f| {
                crate::linalg::content(&f.normal) == 1 && p.vertices_on(f).len() >= p.dim()
            }),
            || format!("{name}: facet normal not primitive or facet not tight"),
        );
    }
    s.finish()
}

fn suite_agl(corpus: &BTreeMap<String, LatticePolytope>, seed: u64) -> SuiteResult {
    let mut s = SuiteResult::default();
    for (idx, (name, p)) in corpus.iter().enumerate() {
        let base = (|| -> Result<_> {
            let counts: Vec<u64> = (1..=p.dim() as u64)
                .map(|k| count_in_dilate(p, k))
                .collect();
            Ok((normal_form(p)?, normalized_volume(p)?, counts))
        })();
        let (nf, nv, counts) = match base {
            Ok(b) => b,
            Err(e) => {
                s.check(false, || format!("{name}: {e}"));
                continue;
            }
        };
        for j in 0..MAPS_PER_POLYTOPE {
            s.try_check(&format!("{name} map {j}"), || {
                let g = random_unimodular_map(p.dim(), map_seed(seed, idx, j), 6);
                let q = apply_map(p, &g)?;
                let qc: Vec<u64> = (1..=q.dim() as u64)
                    .map(|k| count_in_dilate(&q, k))
                    .collect();
                if normal_form(&q)? != nf {
                    return Ok(Some("normal form changed".into()));
                }
                if normalized_volume(&q)? != nv {
                    return Ok(Some("normalized volume changed".into()));
                }
                Ok(fail_if(qc != counts, || {
                    format!("counts {qc:?} vs {counts:?}")
                }))
            });
        }
    }
    s.finish()
}

fn suite_distinct(corpus: &BTreeMap<String, LatticePolytope>) -> SuiteResult {
    let mut s = SuiteResult::default();
    s.check(corpus.len() >= MIN_CORPUS_SIZE, || {
        format!(
            "corpus has {} polytopes, need {MIN_CORPUS_SIZE}",
            corpus.len()
        )
    });
    let mut seen = BTreeMap::new();
    for (name, p) in corpus {
        s.try_check(name, || {
            let nf = normal_form(p)?;
            Ok(seen
                .insert(nf, name.clone())
                .map(|other| format!("equivalent to {other}")))
        });
    }
    s.finish()
}

fn suite_pyramid(corpus: &BTreeMap<String, LatticePolytope>) -> SuiteResult {
    let mut s = SuiteResult::default();
    for (name, p) in corpus {
        s.try_check(name, || {
            let q = pyramid(p);
            let (h, hq) = (hstar(p)?, hstar(&q)?);
            if h.coefficients() != hq.coefficients() {
                return Ok(Some(format!("h* {h} became {hq}")));
            }
            if normalized_volume(p)? != normalized_volume(&q)? {
                return Ok(Some("nv changed".into()));
            }
            let (_, c) = degree_and_codegree(p)?;
            let (_, cq) = degree_and_codegree(&q)?;
            if cq != c + 1 {
                return Ok(Some(format!("codegree {c} became {cq}")));
            }
            let n = p.dim() as u64;
            for k in 0..=n + 1 {
                let lhs =
                    count_in_dilate(&q, k) - if k > 0 { count_in_dilate(&q, k - 1) } else { 0 };
                if lhs != count_in_dilate(p, k) {
                    return Ok(Some(format!("series identity fails at k = {k}")));
                }
            }
            let apex = q
                .vertices()
                .iter()
                .position(|v| v[q.dim() - 1] == 1)
                .expect("apex present");
            if !geometric_pyramid_apexes(&q).contains(&apex) {
                return Ok(Some("apex of the pyramid not detected".into()));
            }
            let base = base_without_apex(&q, apex)?;
            if base.dim() != p.dim()
                || !are_equivalent(&base, p)?
                || normalized_volume(&base)? != normalized_volume(p)?
            {
                return Ok(Some("re-embedded base differs from the original".into()));
            }
            let core = peel(&q)?;
            let core_p = peel(p)?;
            Ok(fail_if(
                core.multiplicity != core_p.multiplicity + 1
                    || core.core.dim != core_p.core.dim
                    || !are_equivalent(&core.core_polytope(), &core_p.core_polytope())?,
                || "peeling the pyramid does not reduce to the peeled base".into(),
            ))
        });
    }
    s.finish()
}

fn suite_reciprocity(corpus: &BTreeMap<String, LatticePolytope>) -> SuiteResult {
    let mut s = SuiteResult::default();
    for (name, p) in corpus {
        s.try_check(name, || {
            Ok(fail_if(!reciprocity_check(p, p.dim() as u64 + 2)?, || {
                "interior counts differ from reciprocity".into()
            }))
        });
    }
    s.finish()
}

fn suite_monoid(corpus: &BTreeMap<String, LatticePolytope>) -> SuiteResult {
    let mut s = SuiteResult::default();
    for (name, p) in corpus {
        s.try_check(name, || {
            let h = hstar(p)?;
            let (d, v, n) = (h.degree() as u64, h.sum(), p.dim() as u64);
            let gens = minimal_monoid_generators(p)?;
            if (count_in_dilate(p, 1) as usize) < p.dim() + 1 {
                return Ok(Some("fewer than n + 1 lattice points".into()));
            }
            if gens.len() as u64 > v + n || gens.max_degree() > d.max(1) {
                return Ok(Some(format!(
                    "{} generators up to degree {}, V + n = {}, d = {d}",
                    gens.len(),
                    gens.max_degree(),
                    v + n
                )));
            }
            if !verify_generation(p, &gens.generators, d.max(1) + 1) {
                return Ok(Some("generators do not generate the monoid".into()));
            }
            let pres = toric_ideal_minimal_generators(&gens)?;
            if pres.max_degree() > 2 * d {
                return Ok(Some(format!(
                    "binomial of degree {} > 2d",
                    pres.max_degree()
                )));
            }
            if d > 0 && num_bigint::BigUint::from(pres.len()) > binomial_count_bound(d, v) {
                return Ok(Some(format!(
                    "{} binomials exceed the count bound",
                    pres.len()
                )));
            }
            if d == 0 && !pres.is_empty() {
                return Ok(Some("relations on a unimodular simplex".into()));
            }
            for b in &pres.minimal_generators {
                let img = |m: &[u32]| -> Point {
                    let mut out = vec![0i64; p.dim() + 1];
                    for (e, g) in m.iter().zip(&gens.generators) {
                        for (o, x) in out.iter_mut().zip(g) {
                            *o += *e as i64 * x;
                        }
                    }
                    out
                };
                if img(&b.plus) != img(&b.minus)
                    || b.plus.iter().zip(&b.minus).any(|(a, c)| *a > 0 && *c > 0)
                {
                    return Ok(Some(format!("{b:?} is not a valid binomial")));
                }
            }
            let other = toric_ideal_with(&gens, Representative::LexLargest)?;
            if other.per_degree_counts != pres.per_degree_counts {
                return Ok(Some("per-degree counts depend on representatives".into()));
            }
            for (sdeg, nfibers, connected) in fiber_census(&gens, &pres, 2 * d + 2) {
                if nfibers as u64 != count_in_dilate(p, sdeg) || !connected {
                    return Ok(Some(format!("fiber census fails in degree {sdeg}")));
                }
            }
            Ok(None)
        });
    }
    s.finish()
}

fn suite_detectors(corpus: &BTreeMap<String, LatticePolytope>, seed: u64) -> SuiteResult {
    let mut s = SuiteResult::default();
    let mut cases: Vec<(String, LatticePolytope)> = Vec::new();
    for (name, p) in corpus {
        cases.push((name.clone(), p.clone()));
        cases.push((format!("pyramid over {name}"), pyramid(p)));
    }
    let members: Vec<(&String, &LatticePolytope)> = corpus.iter().collect();
    for j in 0..DETECTOR_IMAGES {
        let (name, p) = members[j as usize % members.len()];
        let g = random_unimodular_map(p.dim(), map_seed(seed, usize::MAX >> 8, j), 6);
        match apply_map(p, &g) {
            Ok(q) => cases.push((format!("image {j} of {name}"), q)),
            Err(e) => s.check(false, || format!("image {j} of {name}: {e}")),
        }
    }
    for (name, p) in &cases {
        s.try_check(name, || {
            let c = compare_pyramid_detectors(p)?;
            Ok(fail_if(!c.agree, || {
                format!("geometric {:?}, algebraic {:?}", c.geometric, c.algebraic)
            }))
        });
    }
    s.finish()
}

fn suite_artinian(corpus: &BTreeMap<String, LatticePolytope>, seed: u64) -> SuiteResult {
    let mut s = SuiteResult::default();
    for (name, p) in corpus {
        s.try_check(name, || {
            let h = hstar(p)?;
            let got = artinian_hilbert_function(p, seed)?;
            Ok(fail_if(got != h.padded(h.degree() + 3), || {
                format!("Hilbert function {got:?} vs h* {h}")
            }))
        });
    }
    s.finish()
}

/// Sorted height vectors with `n` entries and sum in `1..=max_sum`.
pub fn height_vectors(n: usize, max_sum: u64) -> Vec<Vec<u64>> {
    fn rec(n: usize, left: u64, min: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == n {
            if cur.iter().any(|&k| k > 0) {
                out.push(cur.clone());
            }
            return;
        }
        for k in min..=left {
            cur.push(k);
            rec(n, left - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_sum, 0, &mut Vec::new(), &mut out);
    out
}

fn suite_lawrence() -> SuiteResult {
    let mut s = SuiteResult::default();
    for n in 1..=5 {
        for hs in height_vectors(n, 10) {
            s.try_check(&format!("heights {hs:?}"), || {
                lawrence_prism(&hs).map(|_| None)
            });
        }
    }
    for n in 2..=4 {
        s.try_check(&format!("exceptional triangle in dimension {n}"), || {
            let e = exceptional_triangle(n)?;
            let h = hstar(&e)?;
            if h.coefficients() != [1, 3] || normalized_volume(&e)? != 4 {
                return Ok(Some(format!("h* = {h}")));
            }
            for hs in height_vectors(n, 4)
                .into_iter()
                .filter(|h| h.iter().sum::<u64>() == 4)
            {
                if are_equivalent(&e, &lawrence_prism(&hs)?)? {
                    return Ok(Some(format!("equivalent to the prism {hs:?}")));
                }
            }
            Ok(None)
        });
    }
    s.finish()
}

fn suite_classification(tables: &BTreeMap<(u64, usize), ClassificationTable>) -> SuiteResult {
    let mut s = SuiteResult::default();
    for v in 2..=CLASSIFY_VMAX {
        let got = tables.get(&(v, 1)).map_or(0, |t| t.count) as u128;
        let want = c_linear(v as usize, 2);
        s.check(got == want, || {
            format!("C({v},1,2): enumerated {got}, formula {want}")
        });
    }
    for v in 2..=CLASSIFY_VMAX as usize {
        s.check(
            (v..v + 4).all(|n| {
                c_linear(v, n) == c_linear(v, v) && partition_count(n, v) == partition_count(v, v)
            }),
            || format!("C({v},1,n) not constant for n >= {v}"),
        );
    }
    s.check(c_linear(4, 1) == 1, || "C(4,1,1) != 1".into());
    for t in tables.values() {
        for c in &t.classes {
            if c.degree == 0 {
                s.try_check("degree-zero class", || {
                    let core = peel(&c.polytope())?;
                    Ok(fail_if(c.nv != 1 || core.core.dim != 0, || {
                        format!(
                            "{:?} has nv {} and core dimension {}",
                            c.representative, c.nv, core.core.dim
                        )
                    }))
                });
            }
        }
    }
    let list: Vec<ClassificationTable> = tables.values().cloned().collect();
    let rows = census_by_hstar(&list);
    s.check(census_sums_match(&list, &rows), || {
        "census sums differ from table counts".into()
    });
    s.finish()
}

fn suite_scott(tables: &BTreeMap<(u64, usize), ClassificationTable>) -> SuiteResult {
    let mut s = SuiteResult::default();
    let list: Vec<ClassificationTable> = tables.values().cloned().collect();
    let report = scan_scott(&list);
    s.check(report.checked > 0, || "no degree-two polygons".into());
    for v in &report.violations {
        s.check(false, || format!("{v:?} violates h*_1 <= 3 h*_2 + 4"));
    }
    s.try_check("slack-zero witness", || {
        let witness = dilated_triangle(3);
        for rep in &report.tight {
            if are_equivalent(&LatticePolytope::new(2, rep.clone())?, &witness)? {
                return Ok(None);
            }
        }
        Ok(Some(
            "conv{(0,0),(3,0),(0,3)} not among tight classes".into(),
        ))
    });
    s.finish()
}

fn suite_simplices() -> SuiteResult {
    let mut s = SuiteResult::default();
    for v in 1..=4u64 {
        s.try_check(&format!("V = {v}"), || {
            let low = enumerate_simplices(2, v)?;
            let high = enumerate_simplices(3, v)?;
            if low.classes.iter().chain(&high.classes).any(|c| c.nv != v) {
                return Ok(Some("simplex with wrong volume".into()));
            }
            let mut images = std::collections::BTreeSet::new();
            for c in &low.classes {
                let nf = normal_form(&pyramid(&c.polytope()))?;
                if !high.classes.iter().any(|h| h.normal_form == nf) {
                    return Ok(Some(format!(
                        "pyramid over {:?} missing in dimension 3",
                        c.representative
                    )));
                }
                images.insert(nf);
            }
            Ok(fail_if(images.len() != low.count, || {
                "pyramid map is not injective".into()
            }))
        });
    }
    s.finish()
}

fn suite_bounds() -> SuiteResult {
    let mut s = SuiteResult::default();
    for (d, v, want) in [(1u64, 2u64, 12u32), (1, 4, 40), (2, 3, 120)] {
        let b = theorem_bound(d, v);
        s.check(b == want.into(), || {
            format!("bound({d},{v}) = {b}, expected {want}")
        });
        s.check(stabilization_index(d, v) == (want - 1).into(), || {
            format!("stabilization index for ({d},{v}) is not bound - 1")
        });
    }
    s.finish()
}

/// Runs every suite on the polytopes in `dir`; golden h*-vectors are read
/// from `dir/golden/hstar.json`.
pub fn run_verify_all(dir: &Path, seed: u64) -> Result<VerifyReport> {
    let corpus = load_corpus(dir)?;
    if corpus.is_empty() {
        return Err(Error::InvalidInput(format!(
            "no polytope files in {}",
            dir.display()
        )));
    }
    let golden_path = dir.join("golden").join("hstar.json");
    let golden = if golden_path.exists() {
        Some(load_golden(&golden_path)?)
    } else {
        None
    };

    let mut suites = BTreeMap::new();
    suites.insert(
        "golden-hstar".into(),
        suite_golden(&corpus, golden.as_ref()),
    );
    suites.insert("ehrhart".into(), suite_ehrhart(&corpus));
    suites.insert("facet-roundtrip".into(), suite_facets(&corpus));
    suites.insert("equivalence-invariance".into(), suite_agl(&corpus, seed));
    suites.insert("normal-forms-distinct".into(), suite_distinct(&corpus));
    suites.insert("pyramid-identities".into(), suite_pyramid(&corpus));
    suites.insert("reciprocity".into(), suite_reciprocity(&corpus));
    suites.insert("monoid-and-ideal".into(), suite_monoid(&corpus));
    suites.insert("pyramid-detectors".into(), suite_detectors(&corpus, seed));
    suites.insert("artinian".into(), suite_artinian(&corpus, seed));
    suites.insert("lawrence-prisms".into(), suite_lawrence());
    let tables = enumerate_2d(SCOTT_VMAX, None);
    match &tables {
        Ok(t) => {
            suites.insert("classification-2d".into(), suite_classification(t));
            suites.insert("scott-scan".into(), suite_scott(t));
        }
        Err(e) => {
            let mut s = SuiteResult::default();
            s.check(false, || format!("enumeration failed: {e}"));
            suites.insert("classification-2d".into(), s.finish());
        }
    }
    suites.insert("simplex-pyramids".into(), suite_simplices());
    suites.insert("bounds".into(), suite_bounds());

    let passed = suites.values().all(|s: &SuiteResult| s.passed);
    Ok(VerifyReport {
        seed,
        corpus: corpus.keys().cloned().collect(),
        suites,
        passed,
    })
}
