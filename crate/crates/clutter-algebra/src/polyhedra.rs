//! Rational polyhedra and cones: double description, facets, triangulations.

use crate::error::{Error, Result};
use crate::int::{Int, IntVec, dot, is_zero_vec, make_primitive};
use crate::linalg::{IntMatrix, Sublattice, delta_r};
use crate::rational::{Rational, clear_denominators, fmt_rat, from_int, parse_rat};
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::HashMap;

/// Cap on intermediate ray and simplex counts, from `CLUTTER_ALGEBRA_MAX_CELLS`.
pub fn max_cells() -> usize {
    std::env::var("CLUTTER_ALGEBRA_MAX_CELLS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(200_000)
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(n: usize) -> BitSet {
        BitSet(vec![0; n.div_ceil(64).max(1)])
    }
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, o: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn is_superset(&self, o: &BitSet) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & b == *b)
    }
}

/// Generators of `{x : <a, x> >= 0 for all a}`: a lineality basis and the extreme rays.
#[derive(Clone, Debug)]
pub struct DdCone {
    pub dim: usize,
    pub lineality: Vec<IntVec>,
    pub rays: Vec<IntVec>,
}

/// Double description of the cone cut out by homogeneous inequalities.
pub fn double_description(ineqs: &[IntVec], dim: usize) -> Result<DdCone> {
    for a in ineqs {
        if a.len() != dim {
            return Err(Error::Dimension(format!("inequality of length {} in dimension {dim}", a.len())));
        }
    }
    let cap = max_cells();
    let m = ineqs.len();
    let mut lin: Vec<IntVec> = IntMatrix::identity(dim).row_vecs();
    let mut rays: Vec<(IntVec, BitSet)> = Vec::new();
    let mut done = vec![false; m];
    for _ in 0..m {
        let pick = (0..m).find(|&k| !done[k] && lin.iter().any(|l| !dot(&ineqs[k], l).is_zero()));
        let k = match pick {
            Some(k) => k,
            None => {
                let mut best: Option<(usize, usize)> = None;
                for k in (0..m).filter(|&k| !done[k]) {
                    let (mut p, mut n) = (0usize, 0usize);
                    for (r, _) in &rays {
                        match dot(&ineqs[k], r).signum() {
                            1 => p += 1,
                            -1 => n += 1,
                            _ => {}
                        }
                    }
                    let cost = if n == 0 { 0 } else { p * n + 1 };
                    if best.is_none_or(|b| cost < b.1) {
                        best = Some((k, cost));
                    }
                }
                best.expect("remaining inequality").0
            }
        };
        done[k] = true;
        let a = &ineqs[k];
        if let Some(li) = lin.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l = lin.swap_remove(li);
            let mut al = dot(a, &l);
            if al.is_negative() {
                l = l.iter().map(|x| -x).collect();
                al = -al;
            }
            for v in lin.iter_mut() {
                let av = dot(a, v);
                if !av.is_zero() {
                    *v = v.iter().zip(&l).map(|(x, y)| &al * x - &av * y).collect();
                    make_primitive(v);
                }
            }
            for (r, z) in rays.iter_mut() {
                let ar = dot(a, r);
                if !ar.is_zero() {
                    *r = r.iter().zip(&l).map(|(x, y)| &al * x - &ar * y).collect();
                    make_primitive(r);
                }
                z.insert(k);
            }
            let mut z = BitSet::new(m);
            for j in 0..m {
                if done[j] && j != k {
                    z.insert(j);
                }
            }
            make_primitive(&mut l);
            rays.push((l, z));
            continue;
        }
        let vals: Vec<Int> = rays.iter().map(|(r, _)| dot(a, r)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        if neg.is_empty() {
            for (i, (_, z)) in rays.iter_mut().enumerate() {
                if vals[i].is_zero() {
                    z.insert(k);
                }
            }
            continue;
        }
        let need = dim.saturating_sub(lin.len() + 2);
        let mut fresh: Vec<(IntVec, BitSet)> = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let inter = rays[p].1.and(&rays[n].1);
                if inter.count() < need {
                    continue;
                }
                let adjacent = (0..rays.len()).all(|o| o == p || o == n || !rays[o].1.is_superset(&inter));
                if !adjacent {
                    continue;
                }
                let ap = &vals[p];
                let an = -&vals[n];
                let mut v: IntVec = rays[n].0.iter().zip(&rays[p].0).map(|(x, y)| ap * x + &an * y).collect();
                make_primitive(&mut v);
                let mut z = inter;
                z.insert(k);
                fresh.push((v, z));
            }
        }
        let mut next: Vec<(IntVec, BitSet)> = Vec::with_capacity(pos.len() + fresh.len());
        for (i, (r, mut z)) in std::mem::take(&mut rays).into_iter().enumerate() {
            if vals[i].is_negative() {
                continue;
            }
            if vals[i].is_zero() {
                z.insert(k);
            }
            next.push((r, z));
        }
        next.extend(fresh);
        if next.len() > cap {
            return Err(Error::OverCap(format!("double description exceeded {cap} rays")));
        }
        rays = next;
    }
    let mut out: Vec<IntVec> = rays.into_iter().map(|(r, _)| r).collect();
    out.sort();
    out.dedup();
    Ok(DdCone { dim, lineality: lin, rays: out })
}

/// Orthogonal projection of `c` onto the complement of span(eqs), made primitive.
fn project_out(c: &[Int], eqs: &[IntVec]) -> IntVec {
    if eqs.is_empty() {
        let mut v = c.to_vec();
        make_primitive(&mut v);
        return v;
    }
    let k = eqs.len();
    let mut gram = IntMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            gram.set(i, j, dot(&eqs[i], &eqs[j]));
        }
    }
    let det = gram.det();
    let adj = gram.adjugate();
    let ec: IntVec = eqs.iter().map(|e| dot(e, c)).collect();
    let coef = adj.mul_vec(&ec);
    let mut out: IntVec = c.iter().map(|x| x * &det).collect();
    for (e, w) in eqs.iter().zip(&coef) {
        for (o, v) in out.iter_mut().zip(e) {
            *o -= w * v;
        }
    }
    if det.is_negative() {
        out = out.iter().map(|x| -x).collect();
    }
    make_primitive(&mut out);
    out
}

/// A cone with both descriptions; facets are irredundant.
#[derive(Clone, Debug, Serialize)]
pub struct ConeRep {
    pub dim: usize,
    /// Primitive extreme rays.
    pub generators: Vec<IntVec>,
    /// Primitive facet normals `c` with `<c, x> >= 0` on the cone, lexicographically sorted.
    pub facet_normals: Vec<IntVec>,
    /// Basis of the orthogonal complement of the linear span.
    pub equations: Vec<IntVec>,
    /// Basis of the lineality space.
    pub lineality: Vec<IntVec>,
}

impl ConeRep {
    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn contains(&self, x: &[Int]) -> bool {
        self.equations.iter().all(|e| dot(e, x).is_zero()) && self.facet_normals.iter().all(|c| !dot(c, x).is_negative())
    }

    pub fn contains_rational(&self, x: &[Rational]) -> bool {
        let (v, _) = clear_denominators(x);
        self.contains(&v)
    }

    /// Relative interior: strict on every facet.
    pub fn in_relative_interior(&self, x: &[Int]) -> bool {
        self.equations.iter().all(|e| dot(e, x).is_zero()) && self.facet_normals.iter().all(|c| dot(c, x).is_positive())
    }

    pub fn linear_dim(&self) -> usize {
        self.dim - self.equations.len()
    }
}

/// Irreducible representation of the cone generated by `gens`.
pub fn cone_from_generators(gens: &[IntVec], dim: usize) -> Result<ConeRep> {
    let gens: Vec<IntVec> = gens.iter().filter(|g| !is_zero_vec(g)).cloned().collect();
    let dual = double_description(&gens, dim)?;
    let equations = dual.lineality.clone();
    let mut facets: Vec<IntVec> = dual.rays.iter().map(|c| project_out(c, &equations)).collect();
    facets.sort();
    facets.dedup();
    let primal = double_description(&facets_and_equations(&facets, &equations), dim)?;
    Ok(ConeRep { dim, generators: primal.rays, facet_normals: facets, equations, lineality: primal.lineality })
}

fn facets_and_equations(facets: &[IntVec], eqs: &[IntVec]) -> Vec<IntVec> {
    let mut all = facets.to_vec();
    for e in eqs {
        all.push(e.clone());
        all.push(e.iter().map(|x| -x).collect());
    }
    all
}

/// Irreducible representation of `{x : <c, x> >= 0}`.
pub fn cone_from_halfspaces(normals: &[IntVec], dim: usize) -> Result<ConeRep> {
    let primal = double_description(normals, dim)?;
    let mut gens = primal.rays.clone();
    for l in &primal.lineality {
        gens.push(l.clone());
        gens.push(l.iter().map(|x| -x).collect());
    }
    let mut rep = cone_from_generators(&gens, dim)?;
    rep.generators = primal.rays;
    rep.lineality = primal.lineality;
    Ok(rep)
}

/// Facet normals of the cone generated by `gens`, unique up to order.
pub fn cone_irreducible_rep(gens: &[IntVec]) -> Result<ConeRep> {
    let dim = gens.first().map(|g| g.len()).ok_or(Error::Degenerate)?;
    if gens.iter().all(|g| is_zero_vec(g)) {
        return Err(Error::Degenerate);
    }
    cone_from_generators(gens, dim)
}

#[derive(Clone, Debug, Serialize)]
pub struct Inequality {
    pub normal: IntVec,
    pub offset: Int,
}

/// A rational polyhedron `{x : <normal, x> >= offset}` with its generators.
#[derive(Clone, Debug)]
pub struct Polyhedron {
    pub dim: usize,
    pub inequalities: Vec<Inequality>,
    pub vertices: Vec<Vec<Rational>>,
    pub rays: Vec<IntVec>,
    pub lineality: Vec<IntVec>,
}

impl Polyhedron {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty() && self.lineality.is_empty() && self.rays.is_empty()
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    /// Builds the polyhedron from `<normal, x> >= offset` inequalities.
    pub fn from_inequalities(dim: usize, ineqs: Vec<Inequality>) -> Result<Polyhedron> {
        let mut hom: Vec<IntVec> = ineqs
            .iter()
            .map(|q| {
                let mut v = q.normal.clone();
                v.push(-&q.offset);
                v
            })
            .collect();
        let mut t = vec![Int::zero(); dim + 1];
        t[dim] = Int::one();
        hom.push(t);
        let dd = double_description(&hom, dim + 1)?;
        let mut vertices = Vec::new();
        let mut rays = Vec::new();
        for r in &dd.rays {
            let h = &r[dim];
            if h.is_zero() {
                rays.push(r[..dim].to_vec());
            } else {
                vertices.push(r[..dim].iter().map(|x| Rational::new(x.clone(), h.clone())).collect::<Vec<_>>());
            }
        }
        let lineality: Vec<IntVec> = dd.lineality.iter().map(|l| l[..dim].to_vec()).collect();
        if vertices.is_empty() {
            return Ok(Polyhedron { dim, inequalities: ineqs, vertices: vec![], rays: vec![], lineality: vec![] });
        }
        vertices.sort();
        rays.sort();
        Ok(Polyhedron { dim, inequalities: ineqs, vertices, rays, lineality })
    }

    /// Builds the polyhedron from vertices, rays and lineality.
    pub fn from_generators(dim: usize, vertices: Vec<Vec<Rational>>, rays: Vec<IntVec>, lineality: Vec<IntVec>) -> Result<Polyhedron> {
        let mut gens = Vec::new();
        for v in &vertices {
            let (mut x, den) = clear_denominators(v);
            x.push(den);
            gens.push(x);
        }
        for r in &rays {
            let mut x = r.clone();
            x.push(Int::zero());
            gens.push(x);
        }
        for l in &lineality {
            let mut x = l.clone();
            x.push(Int::zero());
            gens.push(x.clone());
            gens.push(x.iter().map(|y| -y).collect());
        }
        let mut inequalities = Vec::new();
        if !gens.is_empty() {
            let cone = cone_from_generators(&gens, dim + 1)?;
            for c in &cone.facet_normals {
                if c[..dim].iter().all(|x| x.is_zero()) {
                    continue;
                }
                inequalities.push(Inequality { normal: c[..dim].to_vec(), offset: -&c[dim] });
            }
            for e in &cone.equations {
                inequalities.push(Inequality { normal: e[..dim].to_vec(), offset: -&e[dim] });
                inequalities.push(Inequality { normal: e[..dim].iter().map(|x| -x).collect(), offset: e[dim].clone() });
            }
        }
        if vertices.is_empty() {
            return Ok(Polyhedron { dim, inequalities, vertices, rays, lineality });
        }
        // Redundant input points and rays are dropped by reading the generators back off the facets.
        Polyhedron::from_inequalities(dim, inequalities)
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.inequalities.iter().all(|q| eval(q, x) >= from_int(&q.offset))
    }

    /// Inequalities tight on the whole polyhedron.
    pub fn implicit_equalities(&self) -> Vec<bool> {
        self.inequalities
            .iter()
            .map(|q| {
                self.vertices.iter().all(|v| eval(q, v) == from_int(&q.offset))
                    && self.rays.iter().chain(&self.lineality).all(|r| dot(&q.normal, r).is_zero())
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let ineqs: Vec<Vec<String>> = self
            .inequalities
            .iter()
            .map(|q| q.normal.iter().chain(std::iter::once(&q.offset)).map(|x| x.to_string()).collect())
            .collect();
        let verts: Vec<Vec<String>> = self.vertices.iter().map(|v| v.iter().map(fmt_rat).collect()).collect();
        let rays: Vec<Vec<String>> = self.rays.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        serde_json::json!({"inequalities": ineqs, "vertices": verts, "rays": rays})
    }

    /// Reads the polyhedron JSON format; whichever description is present is completed.
    pub fn from_json(value: &serde_json::Value) -> Result<Polyhedron> {
        let parse_int = |s: &serde_json::Value| -> Result<Int> {
            match s {
                serde_json::Value::Number(n) => n.as_i64().map(Int::from).ok_or_else(|| Error::Parse(format!("bad integer {n}"))),
                serde_json::Value::String(t) => t.parse().map_err(|_| Error::Parse(format!("bad integer {t}"))),
                _ => Err(Error::Parse("expected integer".into())),
            }
        };
        let rows = |key: &str| -> Vec<serde_json::Value> { value.get(key).and_then(|v| v.as_array()).cloned().unwrap_or_default() };
        let ineq_rows = rows("inequalities");
        if !ineq_rows.is_empty() {
            let mut ineqs = Vec::new();
            let mut dim = None;
            for row in &ineq_rows {
                let vals: Vec<Int> = row.as_array().ok_or_else(|| Error::Parse("inequality must be an array".into()))?.iter().map(parse_int).collect::<Result<_>>()?;
                if vals.len() < 2 {
                    return Err(Error::Parse("inequality needs a normal and an offset".into()));
                }
                let d = vals.len() - 1;
                if *dim.get_or_insert(d) != d {
                    return Err(Error::Parse("ragged inequalities".into()));
                }
                ineqs.push(Inequality { normal: vals[..d].to_vec(), offset: vals[d].clone() });
            }
            return Polyhedron::from_inequalities(dim.unwrap_or(0), ineqs);
        }
        let mut vertices = Vec::new();
        for row in rows("vertices") {
            let v: Vec<Rational> = row
                .as_array()
                .ok_or_else(|| Error::Parse("vertex must be an array".into()))?
                .iter()
                .map(|s| match s {
                    serde_json::Value::String(t) => parse_rat(t).ok_or_else(|| Error::Parse(format!("bad rational {t}"))),
                    serde_json::Value::Number(n) => n.as_i64().map(|x| from_int(&Int::from(x))).ok_or_else(|| Error::Parse(format!("bad rational {n}"))),
                    _ => Err(Error::Parse("expected rational".into())),
                })
                .collect::<Result<_>>()?;
            vertices.push(v);
        }
        let mut rays = Vec::new();
        for row in rows("rays") {
            rays.push(row.as_array().ok_or_else(|| Error::Parse("ray must be an array".into()))?.iter().map(parse_int).collect::<Result<IntVec>>()?);
        }
        let dim = vertices.first().map(|v| v.len()).or_else(|| rays.first().map(|r| r.len())).ok_or_else(|| Error::Parse("empty polyhedron description".into()))?;
        Polyhedron::from_generators(dim, vertices, rays, vec![])
    }
}

fn eval(q: &Inequality, x: &[Rational]) -> Rational {
    q.normal.iter().zip(x).fold(Rational::zero(), |acc, (a, b)| acc + from_int(a) * b)
}

/// Completes either description of a polyhedron.
pub enum Description {
    Inequalities(usize, Vec<Inequality>),
    Generators { dim: usize, vertices: Vec<Vec<Rational>>, rays: Vec<IntVec> },
}

pub fn dual_description(input: Description) -> Result<Polyhedron> {
    match input {
        Description::Inequalities(dim, ineqs) => Polyhedron::from_inequalities(dim, ineqs),
        Description::Generators { dim, vertices, rays } => Polyhedron::from_generators(dim, vertices, rays, vec![]),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict<C> {
    pub verdict: bool,
    pub certificate: Option<C>,
}

/// True iff every vertex is integral; otherwise returns the lexicographically first fractional vertex.
pub fn is_integral(p: &Polyhedron) -> Verdict<Vec<Rational>> {
    if !p.lineality.is_empty() {
        return Verdict { verdict: true, certificate: None };
    }
    match p.vertices.iter().find(|v| v.iter().any(|x| !x.denom().is_one())) {
        Some(v) => Verdict { verdict: false, certificate: Some(v.clone()) },
        None => Verdict { verdict: true, certificate: None },
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MembershipMode {
    Closure,
    RelativeInterior,
}

pub fn membership(p: &Polyhedron, x: &[Rational], mode: MembershipMode) -> Result<bool> {
    if x.len() != p.dim {
        return Err(Error::Dimension(format!("point of length {} in dimension {}", x.len(), p.dim)));
    }
    if !p.contains(x) {
        return Ok(false);
    }
    if mode == MembershipMode::Closure {
        return Ok(true);
    }
    let implicit = p.implicit_equalities();
    Ok(p.inequalities.iter().zip(implicit).all(|(q, imp)| imp || eval(q, x) > from_int(&q.offset)))
}

/// Set covering polyhedron `{x >= 0 : xA >= 1}`.
pub fn covering_polyhedron(a: &IntMatrix) -> Result<Polyhedron> {
    let n = a.rows;
    let mut ineqs = Vec::new();
    for i in 0..n {
        let mut e = vec![Int::zero(); n];
        e[i] = Int::one();
        ineqs.push(Inequality { normal: e, offset: Int::zero() });
    }
    for col in a.columns() {
        ineqs.push(Inequality { normal: col, offset: Int::one() });
    }
    Polyhedron::from_inequalities(n, ineqs)
}

/// Packing polyhedron `{x >= 0 : xA <= 1}`.
pub fn packing_polyhedron(a: &IntMatrix) -> Result<Polyhedron> {
    let n = a.rows;
    let mut ineqs = Vec::new();
    for i in 0..n {
        let mut e = vec![Int::zero(); n];
        e[i] = Int::one();
        ineqs.push(Inequality { normal: e, offset: Int::zero() });
    }
    for col in a.columns() {
        ineqs.push(Inequality { normal: col.iter().map(|x| -x).collect(), offset: -Int::one() });
    }
    Polyhedron::from_inequalities(n, ineqs)
}

/// Normal vector of the hyperplane through `face` (r-1 vectors in Z^r), primitive.
pub fn hyperplane_normal(face: &[&IntVec], r: usize) -> IntVec {
    let mut n = vec![Int::zero(); r];
    if r == 1 {
        n[0] = Int::one();
        return n;
    }
    let cols: Vec<usize> = (0..face.len()).collect();
    let rows_all: Vec<IntVec> = face.iter().map(|v| (*v).clone()).collect();
    let m = IntMatrix::from_rows(&rows_all);
    for (k, nk) in n.iter_mut().enumerate() {
        let keep: Vec<usize> = (0..r).filter(|&c| c != k).collect();
        let d = m.submatrix(&cols, &keep).det();
        *nk = if k % 2 == 0 { d } else { -d };
    }
    make_primitive(&mut n);
    n
}

/// Placing triangulation of a full-dimensional pointed cone; returns index sets into `gens`.
pub fn placing_triangulation(gens: &[IntVec]) -> Result<Vec<Vec<usize>>> {
    let r = gens.first().map(|g| g.len()).ok_or(Error::Degenerate)?;
    let cap = max_cells();
    let mut basis: Vec<usize> = Vec::new();
    let mut rows: Vec<IntVec> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if is_zero_vec(g) {
            continue;
        }
        rows.push(g.clone());
        if IntMatrix::from_rows(&rows).rank() == rows.len() {
            basis.push(i);
            if basis.len() == r {
                break;
            }
        } else {
            rows.pop();
        }
    }
    if basis.len() < r {
        return Err(Error::Degenerate);
    }
    let mut simplices: Vec<Vec<usize>> = vec![basis.clone()];
    // boundary faces: sorted index set -> inward normal
    let mut boundary: HashMap<Vec<usize>, IntVec> = HashMap::new();
    let add_faces = |simplex: &[usize], boundary: &mut HashMap<Vec<usize>, IntVec>| {
        for skip in 0..simplex.len() {
            let face: Vec<usize> = simplex.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &v)| v).collect();
            let mut key = face.clone();
            key.sort();
            if boundary.remove(&key).is_some() {
                continue;
            }
            let vs: Vec<&IntVec> = face.iter().map(|&i| &gens[i]).collect();
            let mut n = hyperplane_normal(&vs, r);
            if dot(&n, &gens[simplex[skip]]).is_negative() {
                n = n.iter().map(|x| -x).collect();
            }
            boundary.insert(key, n);
        }
    };
    add_faces(&basis, &mut boundary);
    for (i, g) in gens.iter().enumerate() {
        if basis.contains(&i) || is_zero_vec(g) {
            continue;
        }
        let visible: Vec<Vec<usize>> = boundary.iter().filter(|(_, n)| dot(n, g).is_negative()).map(|(f, _)| f.clone()).collect();
        if visible.is_empty() {
            continue;
        }
        let mut visible = visible;
        visible.sort();
        for face in visible {
            let mut s = face.clone();
            s.push(i);
            add_faces(&s, &mut boundary);
            simplices.push(s);
        }
        if simplices.len() > cap {
            return Err(Error::OverCap(format!("triangulation exceeded {cap} simplices")));
        }
    }
    for s in simplices.iter_mut() {
        s.sort();
    }
    simplices.sort();
    Ok(simplices)
}

#[derive(Clone, Debug, Serialize)]
pub struct Triangulation {
    pub simplices: Vec<Vec<usize>>,
    pub weights: Vec<String>,
    /// Lower cells that needed refinement by lexicographic pulling.
    pub pulled_cells: usize,
}

/// Regular triangulation from the lower facets of the lifted cone; non-simplicial cells are pulled.
pub fn lifted_triangulation(points: &[IntVec], weights: &[Rational]) -> Result<Triangulation> {
    if points.len() != weights.len() {
        return Err(Error::Dimension(format!("{} points, {} weights", points.len(), weights.len())));
    }
    if points.is_empty() || points.iter().any(|p| is_zero_vec(p)) {
        return Err(Error::Degenerate);
    }
    let d = points[0].len();
    let lat = Sublattice::of(points, d);
    if !lat.is_full() {
        return Err(Error::Degenerate);
    }
    let (w, _) = clear_denominators(weights);
    let mut lifted: Vec<IntVec> = points
        .iter()
        .zip(&w)
        .map(|(p, wi)| {
            let mut v = p.clone();
            v.push(wi.clone());
            v
        })
        .collect();
    let mut up = vec![Int::zero(); d + 1];
    up[d] = Int::one();
    lifted.push(up);
    let cone = cone_from_generators(&lifted, d + 1)?;
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for c in &cone.facet_normals {
        if !c[d].is_positive() {
            continue;
        }
        let cell: Vec<usize> = (0..points.len()).filter(|&i| dot(c, &lifted[i]).is_zero()).collect();
        cells.push(cell);
    }
    cells.sort();
    let mut simplices = Vec::new();
    let mut pulled = 0;
    for cell in cells {
        let rank = IntMatrix::from_rows(&cell.iter().map(|&i| points[i].clone()).collect::<Vec<_>>()).rank();
        if cell.len() == rank {
            simplices.push(cell);
        } else {
            pulled += 1;
            pull(points, &cell, rank, &mut simplices)?;
        }
    }
    for s in simplices.iter_mut() {
        s.sort();
    }
    simplices.sort();
    simplices.dedup();
    Ok(Triangulation { simplices, weights: weights.iter().map(fmt_rat).collect(), pulled_cells: pulled })
}

fn pull(points: &[IntVec], cell: &[usize], rank: usize, out: &mut Vec<Vec<usize>>) -> Result<()> {
    if cell.len() == rank {
        out.push(cell.to_vec());
        return Ok(());
    }
    let apex = cell[0];
    let gens: Vec<IntVec> = cell.iter().map(|&i| points[i].clone()).collect();
    let cone = cone_from_generators(&gens, points[0].len())?;
    for c in &cone.facet_normals {
        if dot(c, &points[apex]).is_zero() {
            continue;
        }
        let face: Vec<usize> = cell.iter().copied().filter(|&i| dot(c, &points[i]).is_zero()).collect();
        let frank = IntMatrix::from_rows(&face.iter().map(|&i| points[i].clone()).collect::<Vec<_>>()).rank();
        let mut sub = Vec::new();
        pull(points, &face, frank, &mut sub)?;
        for mut s in sub {
            s.push(apex);
            out.push(s);
        }
    }
    if out.len() > max_cells() {
        return Err(Error::OverCap("pulling triangulation too large".into()));
    }
    Ok(())
}

/// Whether the simplex generates the same lattice as the whole configuration.
pub fn is_unimodular_simplex(points: &[IntVec], simplex: &[usize]) -> Result<bool> {
    let sub: Vec<IntVec> = simplex.iter().map(|&i| points[i].clone()).collect();
    let m = IntMatrix::from_columns(&sub);
    let r = m.rank();
    if r != simplex.len() {
        return Err(Error::Precondition("simplex is linearly dependent".into()));
    }
    let all = IntMatrix::from_columns(points);
    if all.rank() != r {
        return Ok(false);
    }
    Ok(delta_r(&m, r)? == delta_r(&all, r)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int::ivec;

    #[test]
    fn quadrant_facets() {
        let c = cone_irreducible_rep(&[ivec(&[1, 0]), ivec(&[0, 1])]).unwrap();
        assert_eq!(c.facet_normals, vec![ivec(&[0, 1]), ivec(&[1, 0])]);
    }

    #[test]
    fn lineality_detected() {
        let c = cone_from_halfspaces(&[ivec(&[1, 0, 0])], 3).unwrap();
        assert_eq!(c.lineality.len(), 2);
        assert_eq!(c.generators, vec![ivec(&[1, 0, 0])]);
    }

    #[test]
    fn lower_dimensional_cone() {
        let c = cone_irreducible_rep(&[ivec(&[1, 0, 1]), ivec(&[0, 1, 1])]).unwrap();
        assert_eq!(c.equations.len(), 1);
        assert_eq!(c.facet_normals.len(), 2);
        assert!(c.contains(&ivec(&[1, 1, 2])));
        assert!(!c.contains(&ivec(&[1, 1, 1])));
    }

    #[test]
    fn triangle_covering_vertices() {
        let a = IntMatrix::from_i64_rows(&[vec![1, 0, 1], vec![1, 1, 0], vec![0, 1, 1]]);
        let q = covering_polyhedron(&a).unwrap();
        assert_eq!(q.vertices.len(), 4);
        assert_eq!(q.rays.len(), 3);
    }
}
