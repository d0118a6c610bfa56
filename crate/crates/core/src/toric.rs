//! Minimal binomial generators of the toric ideal of a graded monoid.
//!
//! Variables `X_i` correspond to the monoid generators `x_i`. For each graded
//! degree `s` we group the monomials of degree `s` into fibers by their image
//! `Σ e_i x_i`, connect monomials that differ by a move from a binomial found
//! in lower degree, and add one binomial per extra connected component. The
//! number of binomials added in each degree does not depend on which
//! representatives are picked. Degrees `2d + 1` and `2d + 2` are checked to
//! need no new binomials.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::ehrhart;
use crate::error::{Error, Result};
use crate::monoid::{minimal_monoid_generators, MonoidGenerators};
use crate::normal_form::are_equivalent;
use crate::polytope::{polytope_in_affine_span, LatticePolytope, Point};
use crate::pyramid::{base_without_apex, geometric_pyramid_apexes};

pub type Monomial = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Binomial {
    pub plus: Monomial,
    pub minus: Monomial,
    pub degree: u64,
}

impl Binomial {
    /// Indices of variables occurring in either monomial.
    pub fn support(&self) -> BTreeSet<usize> {
        self.plus
            .iter()
            .zip(&self.minus)
            .enumerate()
            .filter(|(_, (a, b))| **a > 0 || **b > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn uses(&self, var: usize) -> bool {
        self.plus[var] > 0 || self.minus[var] > 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialIdealPresentation {
    /// Degree of each variable, `deg X_i = deg x_i`.
    pub variable_degrees: Vec<u64>,
    pub minimal_generators: Vec<Binomial>,
    pub per_degree_counts: BTreeMap<u64, usize>,
    /// Largest degree whose fibers were checked for connectivity.
    pub checked_through: u64,
}

impl BinomialIdealPresentation {
    pub fn len(&self) -> usize {
        self.minimal_generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.minimal_generators.is_empty()
    }

    pub fn max_degree(&self) -> u64 {
        self.minimal_generators
            .iter()
            .map(|b| b.degree)
            .max()
            .unwrap_or(0)
    }
}

/// How a fiber component is represented when a new binomial is recorded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Representative {
    #[default]
    LexSmallest,
    LexLargest,
}

fn image(gens: &[Point], m: &Monomial) -> Point {
    let len = gens[0].len();
    let mut out = vec![0i64; len];
    for (e, g) in m.iter().zip(gens) {
        if *e > 0 {
            for (o, x) in out.iter_mut().zip(g) {
                *o += *e as i64 * x;
            }
        }
    }
    out
}

/// All exponent vectors of graded degree exactly `s`.
fn monomials_of_degree(degrees: &[u64], s: u64) -> Vec<Monomial> {
    fn rec(degrees: &[u64], i: usize, left: u64, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if i == degrees.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let d = degrees[i];
        let max = left / d;
        for e in 0..=max {
            cur[i] = e as u32;
            rec(degrees, i + 1, left - e * d, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    let mut cur = vec![0; degrees.len()];
    rec(degrees, 0, s, &mut cur, &mut out);
    out
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Connected components of a fiber under the moves of `binomials`.
fn fiber_components(fiber: &[Monomial], binomials: &[Binomial]) -> Vec<Vec<usize>> {
    let index: BTreeMap<&Monomial, usize> = fiber.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut uf = UnionFind::new(fiber.len());
    for (i, m) in fiber.iter().enumerate() {
        for b in binomials {
            for (from, to) in [(&b.plus, &b.minus), (&b.minus, &b.plus)] {
                if m.iter().zip(from).all(|(x, y)| x >= y) {
                    let moved: Monomial = m
                        .iter()
                        .zip(from)
                        .zip(to)
                        .map(|((x, f), t)| x - f + t)
                        .collect();
                    if let Some(&j) = index.get(&moved) {
                        uf.union(i, j);
                    }
                }
            }
        }
    }
    let mut comps: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..fiber.len() {
        comps.entry(uf.find(i)).or_default().push(i);
    }
    comps.into_values().collect()
}

/// Fibers of degree `s`, keyed by image point, each sorted lexicographically.
fn fibers(gens: &[Point], degrees: &[u64], s: u64) -> BTreeMap<Point, Vec<Monomial>> {
    let mut out: BTreeMap<Point, Vec<Monomial>> = BTreeMap::new();
    for m in monomials_of_degree(degrees, s) {
        out.entry(image(gens, &m)).or_default().push(m);
    }
    for f in out.values_mut() {
        f.sort();
    }
    out
}

pub fn toric_ideal_minimal_generators(
    gens: &MonoidGenerators,
) -> Result<BinomialIdealPresentation> {
    toric_ideal_with(gens, Representative::LexSmallest)
}

/// Minimal binomial generators, searched through degree `2d` with
/// `d = deg h*`.
pub fn toric_ideal_with(
    gens: &MonoidGenerators,
    rep: Representative,
) -> Result<BinomialIdealPresentation> {
    let degrees = gens.degrees();
    let points = &gens.generators;
    let d = gens.hstar_degree as u64;
    let mut binomials: Vec<Binomial> = Vec::new();
    let mut per_degree: BTreeMap<u64, usize> = BTreeMap::new();
    let top = 2 * d;
    for s in 2..=top + 2 {
        let mut added = Vec::new();
        for fiber in fibers(points, &degrees, s).values() {
            if fiber.len() < 2 {
                continue;
            }
            let mut comps = fiber_components(fiber, &binomials);
            if comps.len() < 2 {
                continue;
            }
            if s > top {
                return Err(Error::InternalInconsistency(format!(
                    "fiber of degree {s} is disconnected; binomial generators must have degree <= {top}"
                )));
            }
            let pick = |c: &Vec<usize>| -> Monomial {
                match rep {
                    Representative::LexSmallest => fiber[*c.iter().min().unwrap()].clone(),
                    Representative::LexLargest => fiber[*c.iter().max().unwrap()].clone(),
                }
            };
            let mut reps: Vec<Monomial> = comps.iter_mut().map(|c| pick(c)).collect();
            reps.sort();
            if rep == Representative::LexLargest {
                reps.reverse();
            }
            for other in &reps[1..] {
                let b = Binomial {
                    plus: reps[0].clone(),
                    minus: other.clone(),
                    degree: s,
                };
                if b.plus.iter().zip(&b.minus).any(|(a, c)| *a > 0 && *c > 0) {
                    return Err(Error::InternalInconsistency(format!(
                        "new binomial {b:?} has overlapping supports"
                    )));
                }
                added.push(b);
            }
        }
        if !added.is_empty() {
            per_degree.insert(s, added.len());
            binomials.extend(added);
        }
    }
    Ok(BinomialIdealPresentation {
        variable_degrees: degrees,
        minimal_generators: binomials,
        per_degree_counts: per_degree,
        checked_through: top + 2,
    })
}

/// For every degree `s <= max_s`, the number of distinct images of degree-`s`
/// monomials and whether every fiber is connected by the binomials.
pub fn fiber_census(
    gens: &MonoidGenerators,
    pres: &BinomialIdealPresentation,
    max_s: u64,
) -> Vec<(u64, usize, bool)> {
    (1..=max_s)
        .map(|s| {
            let fs = fibers(&gens.generators, &pres.variable_degrees, s);
            let connected = fs
                .values()
                .all(|f| fiber_components(f, &pres.minimal_generators).len() <= 1);
            (s, fs.len(), connected)
        })
        .collect()
}

/// Degree-one variables that occur in no minimal binomial.
pub fn algebraic_pyramid_apexes(pres: &BinomialIdealPresentation) -> Vec<usize> {
    (0..pres.variable_degrees.len())
        .filter(|&i| pres.variable_degrees[i] == 1)
        .filter(|&i| !pres.minimal_generators.iter().any(|b| b.uses(i)))
        .collect()
}

/// Outcome of comparing the geometric and algebraic pyramid tests.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetectorComparison {
    pub geometric: Vec<Point>,
    pub algebraic: Vec<Point>,
    pub bases_equivalent: bool,
    pub agree: bool,
}

pub fn compare_pyramid_detectors(p: &LatticePolytope) -> Result<DetectorComparison> {
    let geo_idx = geometric_pyramid_apexes(p);
    let gens = minimal_monoid_generators(p)?;
    let pres = toric_ideal_minimal_generators(&gens)?;
    let alg_idx = algebraic_pyramid_apexes(&pres);
    let n = p.dim();
    let geometric: Vec<Point> = geo_idx.iter().map(|&i| p.vertices()[i].clone()).collect();
    let algebraic: Vec<Point> = alg_idx
        .iter()
        .map(|&i| gens.generators[i][..n].to_vec())
        .collect();

    let mut bases_equivalent = true;
    if let (Some(&g), Some(&a)) = (geo_idx.first(), alg_idx.first()) {
        let geo_base = base_without_apex(p, g)?;
        let apex = &gens.generators[a][..n];
        let rest: Vec<Point> = gens
            .generators
            .iter()
            .filter(|x| x[n] == 1 && &x[..n] != apex)
            .map(|x| x[..n].to_vec())
            .collect();
        let alg_base = polytope_in_affine_span(&rest)?;
        bases_equivalent = alg_base.dim() + 1 == n
            && geo_base.dim() == alg_base.dim()
            && are_equivalent(&geo_base, &alg_base)?;
    }
    let agree = geometric.is_empty() == algebraic.is_empty() && bases_equivalent;
    Ok(DetectorComparison {
        geometric,
        algebraic,
        bases_equivalent,
        agree,
    })
}

pub fn pyramid_detectors_agree(p: &LatticePolytope) -> Result<bool> {
    Ok(compare_pyramid_detectors(p)?.agree)
}

/// `4d · C(2d + V - 1, 2d)`.
pub fn theorem_bound(d: u64, v: u64) -> BigUint {
    binomial_count_bound(d, v) * BigUint::from(4 * d)
}

/// `theorem_bound(d, V) - 1`: past this dimension every polytope with these
/// invariants is an iterated pyramid over one of this dimension. Zero when
/// the bound is zero.
pub fn stabilization_index(d: u64, v: u64) -> BigUint {
    let b = theorem_bound(d, v);
    if b == BigUint::ZERO {
        b
    } else {
        b - 1u32
    }
}

/// `C(2d + V - 1, 2d)`, and zero for `V = 0`.
pub fn binomial_count_bound(d: u64, v: u64) -> BigUint {
    if v == 0 {
        return BigUint::ZERO;
    }
    big_binomial(2 * d + v - 1, 2 * d)
}

pub fn big_binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut r = BigUint::from(1u32);
    for i in 0..k {
        r = r * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    r
}

/// The quantitative bounds on generators and binomials, checked on one polytope.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub nv: u64,
    pub dim: usize,
    pub degree: usize,
    pub generator_count: usize,
    pub generator_max_degree: u64,
    pub binomial_count: usize,
    pub binomial_max_degree: u64,
    pub binomial_count_bound: String,
    pub holds: bool,
}

pub fn bound_report(p: &LatticePolytope) -> Result<BoundReport> {
    let h = ehrhart::hstar(p)?;
    let gens = minimal_monoid_generators(p)?;
    let pres = toric_ideal_minimal_generators(&gens)?;
    let d = h.degree() as u64;
    let v = h.sum();
    let count_bound = if d == 0 {
        BigUint::from(0u32)
    } else {
        binomial_count_bound(d, v)
    };
    let holds = gens.len() as u64 <= v + p.dim() as u64
        && gens.max_degree() <= d.max(1)
        && pres.max_degree() <= 2 * d
        && BigUint::from(pres.len()) <= count_bound.clone().max(BigUint::from(0u32))
        && (d > 0 || pres.is_empty());
    Ok(BoundReport {
        nv: v,
        dim: p.dim(),
        degree: h.degree(),
        generator_count: gens.len(),
        generator_max_degree: gens.max_degree(),
        binomial_count: pres.len(),
        binomial_max_degree: pres.max_degree(),
        binomial_count_bound: count_bound.to_string(),
        holds,
    })
}
