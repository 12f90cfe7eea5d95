//! Hilbert bases of pointed cones, semigroup membership and lattice points.

use crate::error::{Error, Result};
use crate::int::{Int, IntVec, dot, is_zero_vec, vec_sub};
use crate::linalg::{IntMatrix, Sublattice, snf};
use crate::polyhedra::{ConeRep, Inequality, Polyhedron, cone_from_generators, placing_triangulation};
use crate::rational::{Rational, ceil, floor, from_int};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeSet, HashMap, HashSet};

#[derive(Clone, Debug, Serialize)]
pub struct HilbertBasis {
    pub cone: ConeRep,
    pub elements: Vec<IntVec>,
}

/// A pointed cone expressed in coordinates of its saturated lattice.
struct Reduced {
    lat: Sublattice,
    gens: Vec<IntVec>,
    facets: Vec<IntVec>,
    grading: IntVec,
}

fn reduce(gens: &[IntVec], dim: usize) -> Result<(ConeRep, Reduced)> {
    let gens: Vec<IntVec> = gens.iter().filter(|g| !is_zero_vec(g)).cloned().collect();
    if gens.is_empty() {
        return Err(Error::Degenerate);
    }
    let cone = cone_from_generators(&gens, dim)?;
    if !cone.is_pointed() {
        return Err(Error::Lineality);
    }
    let lat = Sublattice::of(&gens, dim);
    let local: Vec<IntVec> = gens.iter().map(|g| lat.coords_unchecked(g)).collect();
    let r = lat.rank;
    let local_cone = cone_from_generators(&local, r)?;
    let mut grading = vec![Int::zero(); r];
    for c in &local_cone.facet_normals {
        for (g, x) in grading.iter_mut().zip(c) {
            *g += x;
        }
    }
    Ok((cone, Reduced { lat, gens: local, facets: local_cone.facet_normals, grading }))
}

/// Lattice points of the half-open fundamental parallelepiped of a simplicial cone.
fn parallelepiped_points(cols: &[&IntVec]) -> Vec<IntVec> {
    let r = cols.len();
    let m = IntMatrix::from_columns(&cols.iter().map(|c| (*c).clone()).collect::<Vec<_>>());
    let det = m.det();
    let vol = det.abs();
    if vol.is_one() {
        return vec![];
    }
    let adj = m.adjugate();
    let s = snf(&m).expect("nonsingular simplex");
    let bounds: Vec<i64> = s.diag.iter().map(|d| d.to_i64().expect("simplex volume fits in i64")).collect();
    let mut out = Vec::new();
    let mut y = vec![0i64; r];
    loop {
        if y.iter().any(|&v| v != 0) {
            let yv: IntVec = y.iter().map(|&v| Int::from(v)).collect();
            let x = s.left_inverse.mul_vec(&yv);
            let mut mu = adj.mul_vec(&x);
            for v in mu.iter_mut() {
                if det.is_negative() {
                    *v = -&*v;
                }
                *v = v.mod_floor(&vol);
            }
            let p: IntVec = m.mul_vec(&mu).into_iter().map(|v| &v / &vol).collect();
            out.push(p);
        }
        let mut k = 0;
        loop {
            if k == r {
                return out;
            }
            y[k] += 1;
            if y[k] < bounds[k] {
                break;
            }
            y[k] = 0;
            k += 1;
        }
    }
}

fn facet_values(facets: &[IntVec], x: &[Int]) -> IntVec {
    facets.iter().map(|c| dot(c, x)).collect()
}

fn dominates(a: &[Int], b: &[Int]) -> bool {
    a.iter().zip(b).all(|(x, y)| x >= y)
}

/// The unique minimal integral Hilbert basis of the pointed cone generated by `gens`.
pub fn hilbert_basis(gens: &[IntVec]) -> Result<HilbertBasis> {
    let dim = gens.first().map(|g| g.len()).ok_or(Error::Degenerate)?;
    let (cone, red) = reduce(gens, dim)?;
    let simplices = placing_triangulation(&red.gens)?;
    let mut cand: HashSet<IntVec> = red.gens.iter().cloned().collect();
    let found: Vec<Vec<IntVec>> = simplices
        .par_iter()
        .map(|s| {
            let cols: Vec<&IntVec> = s.iter().map(|&i| &red.gens[i]).collect();
            parallelepiped_points(&cols)
        })
        .collect();
    for pts in found {
        cand.extend(pts);
    }
    let elements = reduce_candidates(cand.into_iter().collect(), &red.facets, &red.grading);
    let mut out: Vec<IntVec> = elements.iter().map(|y| red.lat.lift(y)).collect();
    out.sort();
    Ok(HilbertBasis { cone, elements: out })
}

/// Keeps the candidates that are not a cone point plus another candidate.
fn reduce_candidates(cands: Vec<IntVec>, facets: &[IntVec], grading: &[Int]) -> Vec<IntVec> {
    let mut items: Vec<(Int, IntVec, IntVec)> = cands
        .into_iter()
        .filter(|c| !is_zero_vec(c))
        .map(|c| (dot(grading, &c), facet_values(facets, &c), c))
        .collect();
    items.sort();
    items.dedup_by(|a, b| a.2 == b.2);
    let mut basis: Vec<(Int, IntVec, IntVec)> = Vec::new();
    for item in items {
        let reducible = basis.iter().any(|h| h.0 < item.0 && dominates(&item.1, &h.1));
        if !reducible {
            basis.push(item);
        }
    }
    basis.into_iter().map(|b| b.2).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct HilbertVerdict {
    pub verdict: bool,
    /// A lattice point of the cone outside the generated semigroup, least by (degree, lex).
    pub certificate: Option<IntVec>,
    pub basis: Vec<IntVec>,
}

/// True iff `N vectors = Z^n ∩ R_+ vectors`, i.e. the Hilbert basis of the cone lies in `vectors`.
pub fn is_hilbert_basis(vectors: &[IntVec]) -> Result<HilbertVerdict> {
    let hb = hilbert_basis(vectors)?;
    let have: HashSet<&IntVec> = vectors.iter().collect();
    let grading = ambient_grading(&hb.cone);
    let mut missing: Vec<(Int, IntVec)> = hb.elements.iter().filter(|h| !have.contains(h)).map(|h| (dot(&grading, h), h.clone())).collect();
    missing.sort();
    Ok(HilbertVerdict { verdict: missing.is_empty(), certificate: missing.into_iter().next().map(|m| m.1), basis: hb.elements })
}

/// A grading positive on the pointed cone: the sum of its facet normals.
pub fn ambient_grading(cone: &ConeRep) -> IntVec {
    let mut g = vec![Int::zero(); cone.dim];
    for c in &cone.facet_normals {
        for (a, b) in g.iter_mut().zip(c) {
            *a += b;
        }
    }
    if cone.facet_normals.is_empty() {
        // a ray: use the ray itself
        if let Some(r) = cone.generators.first() {
            g = r.clone();
        }
    }
    g
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComboWitness {
    /// Coefficient per generator index.
    pub coefficients: Vec<u64>,
}

/// Depth-first search for a nonnegative integer combination of `gens` equal to `target`.
pub fn semigroup_member(gens: &[IntVec], target: &[Int]) -> Result<Option<ComboWitness>> {
    let nz: Vec<usize> = (0..gens.len()).filter(|&i| !is_zero_vec(&gens[i])).collect();
    if is_zero_vec(target) {
        return Ok(Some(ComboWitness { coefficients: vec![0; gens.len()] }));
    }
    if nz.is_empty() {
        return Ok(None);
    }
    let dim = target.len();
    let cone = cone_from_generators(&nz.iter().map(|&i| gens[i].clone()).collect::<Vec<_>>(), dim)?;
    if !cone.contains(target) {
        return Ok(None);
    }
    if !cone.is_pointed() {
        return Err(Error::Lineality);
    }
    let grading = ambient_grading(&cone);
    let mut order: Vec<usize> = nz.clone();
    order.sort_by(|&a, &b| dot(&grading, &gens[b]).cmp(&dot(&grading, &gens[a])).then(a.cmp(&b)));
    let facets = &cone.facet_normals;
    let gv: Vec<IntVec> = order.iter().map(|&i| facet_values(facets, &gens[i])).collect();
    let mut failed: HashSet<(IntVec, usize)> = HashSet::new();
    let mut path: Vec<usize> = Vec::new();
    let tv = facet_values(facets, target);
    let ok = dfs(target, &tv, 0, &order, gens, &gv, facets, &cone.equations, &mut failed, &mut path);
    if !ok {
        return Ok(None);
    }
    let mut coefficients = vec![0u64; gens.len()];
    for k in path {
        coefficients[order[k]] += 1;
    }
    Ok(Some(ComboWitness { coefficients }))
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    rem: &[Int],
    vals: &[Int],
    start: usize,
    order: &[usize],
    gens: &[IntVec],
    gv: &[IntVec],
    facets: &[IntVec],
    eqs: &[IntVec],
    failed: &mut HashSet<(IntVec, usize)>,
    path: &mut Vec<usize>,
) -> bool {
    if is_zero_vec(rem) {
        return true;
    }
    let key = (rem.to_vec(), start);
    if failed.contains(&key) {
        return false;
    }
    for k in start..order.len() {
        if !dominates(vals, &gv[k]) {
            continue;
        }
        let next = vec_sub(rem, &gens[order[k]]);
        let nv = vec_sub(vals, &gv[k]);
        path.push(k);
        if dfs(&next, &nv, k, order, gens, gv, facets, eqs, failed, path) {
            return true;
        }
        path.pop();
    }
    failed.insert(key);
    false
}

/// Integer points of `k P`, lexicographically sorted.
pub fn lattice_points(p: &Polyhedron, k: u64) -> Result<Vec<IntVec>> {
    if p.is_empty() {
        return Ok(vec![]);
    }
    if !p.is_bounded() {
        return Err(Error::Unbounded);
    }
    let kk = Int::from(k);
    let (lo, hi) = bounding_box(&p.vertices, &kk);
    let ineqs: Vec<Inequality> = p.inequalities.iter().map(|q| Inequality { normal: q.normal.clone(), offset: &q.offset * &kk }).collect();
    let mut out = Vec::new();
    box_scan(&lo, &hi, &mut |x| {
        if ineqs.iter().all(|q| dot(&q.normal, x) >= q.offset) {
            out.push(x.to_vec());
        }
    });
    Ok(out)
}

fn bounding_box(vertices: &[Vec<Rational>], k: &Int) -> (IntVec, IntVec) {
    let d = vertices[0].len();
    let kr = from_int(k);
    let mut lo: Vec<Option<Int>> = vec![None; d];
    let mut hi: Vec<Option<Int>> = vec![None; d];
    for v in vertices {
        for i in 0..d {
            let x = &v[i] * &kr;
            let f = floor(&x);
            let c = ceil(&x);
            if lo[i].as_ref().is_none_or(|l| f < *l) {
                lo[i] = Some(f);
            }
            if hi[i].as_ref().is_none_or(|h| c > *h) {
                hi[i] = Some(c);
            }
        }
    }
    (lo.into_iter().map(|x| x.unwrap()).collect(), hi.into_iter().map(|x| x.unwrap()).collect())
}

/// Calls `f` on every integer point of the box `[lo, hi]` in lexicographic order.
pub fn box_scan(lo: &[Int], hi: &[Int], f: &mut dyn FnMut(&[Int])) {
    let d = lo.len();
    if lo.iter().zip(hi).any(|(a, b)| a > b) {
        return;
    }
    let mut x = lo.to_vec();
    loop {
        f(&x);
        let mut k = d;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if x[k] < hi[k] {
                x[k] += &Int::one();
                for j in k + 1..d {
                    x[j] = lo[j].clone();
                }
                break;
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdpFailure {
    pub k: u64,
    pub point: IntVec,
}

/// Bounded check of the integer decomposition property for dilations 2..=k_max.
pub fn idp_check(p: &Polyhedron, k_max: u64) -> Result<Option<IdpFailure>> {
    if p.is_empty() {
        return Ok(None);
    }
    let d = p.dim;
    // window: the box of the vertices, widened by one unit per unbounded direction
    let unbounded: Vec<bool> = (0..d).map(|i| p.rays.iter().chain(&p.lineality).any(|r| !r[i].is_zero())).collect();
    let (vlo, vhi) = bounding_box(&p.vertices, &Int::one());
    let window_hi = |k: u64| -> IntVec { (0..d).map(|i| if unbounded[i] { &vhi[i] * &Int::from(k) + Int::one() } else { &vhi[i] * &Int::from(k) }).collect() };
    let window_lo = |k: u64| -> IntVec {
        (0..d)
            .map(|i| {
                let neg_dir = p.rays.iter().any(|r| r[i].is_negative()) || p.lineality.iter().any(|r| !r[i].is_zero());
                if neg_dir { &vlo[i] * &Int::from(k) - Int::one() } else { &vlo[i] * &Int::from(k) }
            })
            .collect()
    };
    let mut base = Vec::new();
    box_scan(&window_lo(1), &window_hi(k_max), &mut |x| {
        if p.inequalities.iter().all(|q| dot(&q.normal, x) >= q.offset) {
            base.push(x.to_vec());
        }
    });
    let mut memo: HashMap<(IntVec, u64), bool> = HashMap::new();
    for k in 2..=k_max {
        let kk = Int::from(k);
        let ineqs: Vec<Inequality> = p.inequalities.iter().map(|q| Inequality { normal: q.normal.clone(), offset: &q.offset * &kk }).collect();
        let mut failure = None;
        box_scan(&window_lo(k), &window_hi(k), &mut |x| {
            if failure.is_some() || !ineqs.iter().all(|q| dot(&q.normal, x) >= q.offset) {
                return;
            }
            if !splits(x, k, &base, p, &mut memo) {
                failure = Some(IdpFailure { k, point: x.to_vec() });
            }
        });
        if failure.is_some() {
            return Ok(failure);
        }
    }
    Ok(None)
}

fn splits(x: &[Int], k: u64, base: &[IntVec], p: &Polyhedron, memo: &mut HashMap<(IntVec, u64), bool>) -> bool {
    let in_p = |y: &[Int]| p.inequalities.iter().all(|q| dot(&q.normal, y) >= q.offset);
    if k == 1 {
        return in_p(x);
    }
    let key = (x.to_vec(), k);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let km1 = Int::from(k - 1);
    let mut ok = false;
    for b in base {
        let rest = vec_sub(x, b);
        let in_dilate = p.inequalities.iter().all(|q| dot(&q.normal, &rest) >= &q.offset * &km1);
        if in_dilate && splits(&rest, k - 1, base, p, memo) {
            ok = true;
            break;
        }
    }
    memo.insert(key, ok);
    ok
}

/// Minimal lattice points of the relative interior of a cone whose lattice points form a normal semigroup.
///
/// A point is strict on the facets listed in `strict` (all facets when `None`). Minimal means
/// not of the form (interior point) + (nonzero cone lattice point). Only points with
/// `<degree, x> <= b_max` are considered.
pub fn minimal_semigroup_elements(cone: &ConeRep, strict: Option<&[usize]>, degree: &[Int], b_max: &Int) -> Result<Vec<IntVec>> {
    let pts = interior_points(cone, strict, degree, b_max)?;
    let facets = &cone.facet_normals;
    let mut items: Vec<(Int, IntVec, IntVec)> = pts.into_iter().map(|x| (dot(degree, &x), facet_values(facets, &x), x)).collect();
    items.sort();
    let mut minimal: Vec<(Int, IntVec, IntVec)> = Vec::new();
    for it in items {
        if !minimal.iter().any(|m| m.2 != it.2 && dominates(&it.1, &m.1)) {
            minimal.push(it);
        }
    }
    Ok(minimal.into_iter().map(|m| m.2).collect())
}

/// Lattice points of the cone strict on the chosen facets with degree at most `b_max`.
pub fn interior_points(cone: &ConeRep, strict: Option<&[usize]>, degree: &[Int], b_max: &Int) -> Result<Vec<IntVec>> {
    let hb = hilbert_basis(&cone.generators)?;
    for h in &hb.elements {
        if !dot(degree, h).is_positive() {
            return Err(Error::Precondition("degree must be positive on the cone".into()));
        }
    }
    let all: Vec<usize> = (0..cone.facet_normals.len()).collect();
    let strict = strict.unwrap_or(&all);
    let mut seen: BTreeSet<IntVec> = BTreeSet::new();
    let mut frontier: Vec<IntVec> = vec![vec![Int::zero(); cone.dim]];
    let mut visited: HashSet<IntVec> = HashSet::new();
    while let Some(x) = frontier.pop() {
        for h in &hb.elements {
            let y: IntVec = x.iter().zip(h).map(|(a, b)| a + b).collect();
            if dot(degree, &y) > *b_max || !visited.insert(y.clone()) {
                continue;
            }
            if strict.iter().all(|&j| dot(&cone.facet_normals[j], &y).is_positive()) {
                seen.insert(y.clone());
            }
            frontier.push(y);
        }
    }
    Ok(seen.into_iter().collect())
}
