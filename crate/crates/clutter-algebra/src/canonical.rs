//! a-invariants, canonical modules, Gorenstein and complete intersection tests for the
//! subrings generated by the vectors below the columns of a nonnegative matrix.

use crate::clutter::{Clutter, Mask};
use crate::error::{Error, Result};
use crate::graphs;
use crate::int::{Int, IntVec, dot, vec_gcd};
use crate::linalg::IntMatrix;
use crate::polyhedra::{ConeRep, cone_from_generators, cone_from_halfspaces, is_integral, packing_polyhedron};
use crate::rational::{Rational, ceil};
use crate::rounding;
use crate::semigroup::{box_scan, is_hilbert_basis, minimal_semigroup_elements};
use crate::symbolic::MonomialGen;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

/// A componentwise-maximal vertex `ell` of `P = {x >= 0 : xA <= 1}` with the least `d > 0`
/// making `(-d * ell, d)` integral and primitive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaximalVertexDatum {
    #[serde(serialize_with = "crate::rational::serialize_rats")]
    pub ell: Vec<Rational>,
    pub d: Int,
    #[serde(serialize_with = "crate::rational::serialize_rat")]
    pub norm: Rational,
}

impl MaximalVertexDatum {
    /// The primitive normal `(-d * ell, d)`.
    pub fn normal(&self) -> IntVec {
        let mut v: IntVec = self.ell.iter().map(|x| -(x * Rational::from_integer(self.d.clone())).to_integer()).collect();
        v.push(self.d.clone());
        v
    }
}

fn check_matrix(a: &IntMatrix) -> Result<()> {
    if !a.is_nonnegative() {
        return Err(Error::Precondition("matrix must be nonnegative".into()));
    }
    if (0..a.rows).any(|i| a.row(i).iter().all(|x| x.is_zero())) || a.columns().iter().any(|c| c.iter().all(|x| x.is_zero())) {
        return Err(Error::Precondition("matrix must have nonzero rows and columns".into()));
    }
    Ok(())
}

pub fn maximal_vertices(a: &IntMatrix) -> Result<Vec<MaximalVertexDatum>> {
    check_matrix(a)?;
    let p = packing_polyhedron(a)?;
    let verts = &p.vertices;
    let dominated = |x: &Vec<Rational>| verts.iter().any(|y| y != x && x.iter().zip(y).all(|(s, t)| s <= t));
    let mut out = Vec::new();
    for l in verts.iter().filter(|x| !dominated(x)) {
        let den = l.iter().fold(Int::one(), |d, x| d.lcm(x.denom()));
        let mut v: IntVec = l.iter().map(|x| -(x.numer() * &(&den / x.denom()))).collect();
        v.push(den.clone());
        let g = vec_gcd(&v);
        let d = &den / &g;
        let datum = MaximalVertexDatum { ell: l.clone(), d, norm: l.iter().cloned().fold(Rational::zero(), |s, x| s + x) };
        debug_assert!(vec_gcd(&datum.normal()).is_one());
        out.push(datum);
    }
    Ok(out)
}

/// The vectors `(w, 1)` for all `w` below some column.
fn subring_generators(a: &IntMatrix, cap: usize) -> Result<Vec<IntVec>> {
    let ws = rounding::vectors_below_columns(a, cap)?.ok_or_else(|| Error::OverCap(format!("more than {cap} vectors below the columns")))?;
    Ok(ws
        .into_iter()
        .map(|mut w| {
            w.push(Int::one());
            w
        })
        .collect())
}

fn require_rounding(a: &IntMatrix) -> Result<()> {
    match rounding::irp_le(a) {
        Ok(v) if v.verdict => Ok(()),
        Ok(_) => Err(Error::Precondition("x >= 0, xA <= 1 lacks the integer rounding property, so the subring is not normal and the vertex formula does not apply".into())),
        Err(e) => Err(e),
    }
}

/// `-max_i ceil(1/d_i + |ell_i|)`.
fn closed_form(data: &[MaximalVertexDatum]) -> Int {
    -data.iter().map(|m| ceil(&(Rational::new(Int::one(), m.d.clone()) + &m.norm))).max().unwrap_or_else(Int::one)
}

/// Least t-degree of a lattice point in the interior of the cone over the subring generators,
/// by scanning degree slices (facets computed from the generators).
fn least_interior_degree(gens: &[IntVec], limit: u64) -> Result<Option<Int>> {
    let n = gens[0].len() - 1;
    let cone = cone_from_generators(gens, n + 1)?;
    let top: Int = gens.iter().flat_map(|g| g[..n].iter()).max().cloned().unwrap_or_else(Int::one);
    for b in 1..=limit {
        let hi: IntVec = vec![&top * &Int::from(b); n];
        let lo: IntVec = vec![Int::one(); n];
        let mut found = false;
        box_scan(&lo, &hi, &mut |x| {
            if found {
                return;
            }
            let mut y = x.to_vec();
            y.push(Int::from(b));
            found = cone.in_relative_interior(&y);
        });
        if found {
            return Ok(Some(Int::from(b)));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, Serialize)]
pub struct AInvariant {
    pub value: Int,
    /// The least interior degree found by scanning, when the scan ran.
    pub scanned: Option<Int>,
}

/// Largest number of lattice points a degree-slice scan may visit.
pub const SCAN_LIMIT: f64 = 2.0e6;

/// The a-invariant of `S = K[x^{w_1} t, ..., x^{w_r} t]` from the maximal vertices of `P`,
/// compared with a scan for the least interior degree.
pub fn a_invariant_s(a: &IntMatrix) -> Result<AInvariant> {
    check_matrix(a)?;
    require_rounding(a)?;
    let data = maximal_vertices(a)?;
    let value = closed_form(&data);
    let gens = subring_generators(a, rounding::DEFAULT_SUBRING_CAP)?;
    let n = a.rows;
    let bmax = (-&value).to_u64().unwrap_or(0);
    let top = a.columns().iter().flatten().max().and_then(|x| x.to_f64()).unwrap_or(1.0);
    let scanned = if (top * bmax as f64).powi(n as i32) <= SCAN_LIMIT {
        let s = least_interior_degree(&gens, bmax)?;
        if s != Some(-&value) {
            return Err(Error::CrossCheck(format!("a-invariant {value} but least interior degree {s:?}")));
        }
        s
    } else {
        None
    };
    Ok(AInvariant { value, scanned })
}

#[derive(Clone, Debug, Serialize)]
pub struct CanonicalModule {
    /// Rows `(-d_i ell_i, d_i)` and `e_j`: interior points have value at least 1 on each.
    pub halfspace_system: Vec<IntVec>,
    pub generators: Vec<MonomialGen>,
    pub a_invariant: Int,
    pub b_max: Int,
}

impl CanonicalModule {
    pub fn render(&self, names: &[String]) -> Vec<String> {
        self.generators.iter().map(|g| g.render(names)).collect()
    }
}

fn t_degree(n: usize) -> IntVec {
    let mut d = vec![Int::zero(); n + 1];
    d[n] = Int::one();
    d
}

fn module_from_system(system: Vec<IntVec>, n: usize, a_invariant: Int, b_max: Int) -> Result<CanonicalModule> {
    let cone = cone_from_halfspaces(&system, n + 1)?;
    let pts = minimal_semigroup_elements(&cone, None, &t_degree(n), &b_max)?;
    for p in &pts {
        debug_assert!(system.iter().all(|c| dot(c, p) >= Int::one()));
    }
    let mut generators: Vec<MonomialGen> = pts
        .iter()
        .map(|p| MonomialGen::new(p[..n].iter().map(|x| x.to_u32().expect("small exponent")).collect(), p[n].to_u32().expect("small degree")))
        .collect();
    generators.sort();
    if let Some(g) = generators.first() {
        let least = -Int::from(g.b as i64);
        if least != a_invariant {
            return Err(Error::CrossCheck(format!("least generator degree {} but a-invariant {a_invariant}", g.b)));
        }
    }
    Ok(CanonicalModule { halfspace_system: system, generators, a_invariant, b_max })
}

fn rounding_system(n: usize, data: &[MaximalVertexDatum]) -> Vec<IntVec> {
    let mut rows: Vec<IntVec> = data.iter().map(|m| m.normal()).collect();
    for i in 0..n {
        let mut e = vec![Int::zero(); n + 1];
        e[i] = Int::one();
        rows.push(e);
    }
    rows
}

/// Minimal generators of the canonical module of `S` up to t-degree `b_max`.
pub fn canonical_module_gens(a: &IntMatrix, b_max: Option<Int>) -> Result<CanonicalModule> {
    check_matrix(a)?;
    require_rounding(a)?;
    let data = maximal_vertices(a)?;
    let av = closed_form(&data);
    let n = a.rows;
    let b_max = b_max.unwrap_or_else(|| default_window(&av, n));
    module_from_system(rounding_system(n, &data), n, av, b_max)
}

/// Degree window `-a(S) + n + 1` for generator scans.
pub fn default_window(a_invariant: &Int, n: usize) -> Int {
    -a_invariant + Int::from(n + 1)
}

#[derive(Clone, Debug, Serialize)]
pub struct GorensteinVerdict {
    pub verdict: bool,
    /// "integral-polytope", "vertex-equality" or "principal-module".
    pub rung: String,
    pub rationale: String,
    pub a_invariant: Int,
}

/// Largest row count for which the principal-module rung is also run to confirm the others.
pub const CONFIRM_ROWS: usize = 6;

/// Gorenstein property of `S`: exact when `P` is integral or every maximal vertex attains
/// `-a(S) = 1/d_i + |ell_i|`; otherwise decided by principality of the canonical module within
/// the degree window `-a(S) + n + 1`.
pub fn is_gorenstein_s(a: &IntMatrix) -> Result<GorensteinVerdict> {
    check_matrix(a)?;
    require_rounding(a)?;
    let data = maximal_vertices(a)?;
    let av = closed_form(&data);
    let n = a.rows;
    let minus_a = Rational::from_integer(-&av);
    let integral = is_integral(&packing_polyhedron(a)?).verdict;
    let principal = || -> Result<(bool, usize, Int)> {
        let w = default_window(&av, n);
        let m = module_from_system(rounding_system(n, &data), n, av.clone(), w.clone())?;
        Ok((m.generators.len() == 1, m.generators.len(), w))
    };
    let (verdict, rung, rationale) = if integral {
        let bad = data.iter().find(|m| Rational::from_integer(-&av) != &m.norm + Rational::one());
        let v = bad.is_none();
        let why = match bad {
            None => format!("P integral and a(S) = -(|l| + 1) = {av} for every maximal vertex"),
            Some(m) => format!("P integral and a maximal vertex has |l| = {} while a(S) = {av}", m.norm),
        };
        (v, "integral-polytope", why)
    } else if data.iter().all(|m| minus_a == Rational::new(Int::one(), m.d.clone()) + &m.norm) {
        (true, "vertex-equality", format!("-a(S) = {} equals 1/d + |l| for every maximal vertex", -&av))
    } else {
        let (p, count, w) = principal()?;
        (p, "principal-module", format!("{count} minimal generator(s) of the canonical module up to t-degree {w}"))
    };
    if rung != "principal-module" && n <= CONFIRM_ROWS {
        let (p, _, _) = principal()?;
        if p != verdict {
            return Err(Error::CrossCheck(format!("Gorenstein by {rung} = {verdict} but principal module = {p}")));
        }
    }
    if verdict {
        let c0 = data.iter().map(|m| m.norm.clone()).max().unwrap_or_else(Rational::zero);
        if c0.is_integer() {
            for m in data.iter().filter(|m| m.ell.iter().all(|x| x.is_integer())) {
                if m.norm != c0 {
                    return Err(Error::CrossCheck(format!("Gorenstein but integral maximal vertex with |l| = {} < {c0}", m.norm)));
                }
            }
        }
    }
    Ok(GorensteinVerdict { verdict, rung: rung.into(), rationale, a_invariant: av })
}

/// The pair (Gorenstein, `-a(S) = 1/d_i + |ell_i|` for all i) for the incidence matrix of a graph.
pub fn gorenstein_vertex_pair(a: &IntMatrix) -> Result<(bool, bool)> {
    let g = is_gorenstein_s(a)?;
    let data = maximal_vertices(a)?;
    let minus_a = Rational::from_integer(-&g.a_invariant);
    let cond = data.iter().all(|m| minus_a == Rational::new(Int::one(), m.d.clone()) + &m.norm);
    Ok((g.verdict, cond))
}

// ---------------------------------------------------------------------------
// general homogeneous subrings

#[derive(Clone, Debug, Serialize)]
pub struct GeneralCanonical {
    /// Primitive facet normals `c_i` (value at least 1 on interior points) and equations (value 0).
    pub facet_normals: Vec<IntVec>,
    pub equations: Vec<IntVec>,
    pub generators: Vec<IntVec>,
    pub a_invariant: Int,
    /// Generators were searched up to this grading value.
    pub degree_window: Int,
}

/// Canonical module and a-invariant of a normal homogeneous subring `K[x^{v_1}, ..., x^{v_q}]`
/// graded by `<x0, v_i> = 1`.
pub fn canonical_module_general(gens: &[IntVec], x0: &[Rational]) -> Result<GeneralCanonical> {
    let n = gens.first().map(|g| g.len()).ok_or(Error::Precondition("no generators".into()))?;
    if x0.len() != n || gens.iter().any(|g| g.len() != n) {
        return Err(Error::Dimension("grading and generators must have the same length".into()));
    }
    let deg = |v: &[Int]| -> Rational { v.iter().zip(x0).map(|(a, b)| Rational::from_integer(a.clone()) * b).fold(Rational::zero(), |s, x| s + x) };
    if let Some(g) = gens.iter().find(|g| !deg(g).is_one()) {
        return Err(Error::Precondition(format!("grading gives degree {} to a generator {:?}", deg(g), g)));
    }
    let hv = is_hilbert_basis(gens)?;
    if !hv.verdict {
        return Err(Error::Precondition(format!("subring is not normal: {:?} is not in the semigroup", hv.certificate)));
    }
    let cone: ConeRep = cone_from_generators(gens, n)?;
    let den = x0.iter().fold(Int::one(), |d, x| d.lcm(x.denom()));
    let degree: IntVec = x0.iter().map(|x| x.numer() * &(&den / x.denom())).collect();
    let window = Int::from(cone.linear_dim());
    let pts = minimal_semigroup_elements(&cone, None, &degree, &(&window * &den))?;
    let least = pts.iter().map(|p| dot(&degree, p)).min().ok_or_else(|| Error::OverCap("no interior point inside the degree window".into()))?;
    if !(&least % &den).is_zero() {
        return Err(Error::CrossCheck("interior point of non-integral degree".into()));
    }
    Ok(GeneralCanonical {
        facet_normals: cone.facet_normals.clone(),
        equations: cone.equations.clone(),
        generators: pts,
        a_invariant: -(least / den),
        degree_window: window,
    })
}

// ---------------------------------------------------------------------------
// perfect graphs

#[derive(Clone, Debug, Serialize)]
pub struct PerfectCanonical {
    pub module: CanonicalModule,
    pub maximal_independent_sets: Vec<Vec<String>>,
    /// `{(-a_i, 1)} ∪ {e_j}` is a Hilbert basis of the dual cone.
    pub dual_hilbert_basis: bool,
}

fn maximal_independent_masks(adj: &[Mask]) -> Vec<Mask> {
    graphs::maximal_clique_masks(&graphs::complement_adj(adj))
}

/// Canonical module of the clique subring of a perfect graph, built from maximal independent sets.
pub fn perfect_graph_canonical(g: &Clutter) -> Result<PerfectCanonical> {
    let pv = graphs::is_perfect(g, graphs::DEFAULT_PERFECT_CAP)?;
    if !pv.verdict {
        return Err(Error::Precondition(format!("graph is not perfect: {:?}", pv.hole)));
    }
    let adj = graphs::adjacency(g)?;
    let n = g.n();
    let ind = maximal_independent_masks(&adj);
    let mut system: Vec<IntVec> = ind
        .iter()
        .map(|&m| {
            let mut v: IntVec = (0..n).map(|i| if m >> i & 1 == 1 { -Int::one() } else { Int::zero() }).collect();
            v.push(Int::one());
            v
        })
        .collect();
    for i in 0..n {
        let mut e = vec![Int::zero(); n + 1];
        e[i] = Int::one();
        system.push(e);
    }
    let av = -Int::from(ind.iter().map(|m| m.count_ones() as i64).max().unwrap_or(0) + 1);
    let cl = graphs::clique_clutter(g)?;
    let a = cl.incidence_matrix();
    let other = a_invariant_s(&a)?;
    if other.value != av {
        return Err(Error::CrossCheck(format!("a-invariant {av} from independent sets but {} from maximal vertices", other.value)));
    }
    // dual cone check
    let gens = subring_generators(&a, rounding::DEFAULT_SUBRING_CAP)?;
    let cone = cone_from_generators(&gens, n + 1)?;
    let gamma_cone = cone_from_generators(&system, n + 1)?;
    let dual_ok = gens.iter().all(|x| system.iter().all(|c| !dot(c, x).is_negative())) && cone.facet_normals.iter().all(|c| gamma_cone.contains(c));
    let hb = is_hilbert_basis(&system)?.verdict;
    if !(dual_ok && hb) {
        return Err(Error::CrossCheck("independent-set system is not a Hilbert basis of the dual cone".into()));
    }
    let module = module_from_system(system, n, av.clone(), default_window(&av, n))?;
    Ok(PerfectCanonical { module, maximal_independent_sets: ind.iter().map(|&m| g.set_names(m)).collect(), dual_hilbert_basis: true })
}

// ---------------------------------------------------------------------------
// complete intersections

#[derive(Clone, Debug, Serialize)]
pub struct CompleteIntersection {
    pub verdict: bool,
    pub bipartite: bool,
    pub primitive_cycles: usize,
    /// `q - n + 1`.
    pub cycle_rank: i64,
}

/// `K[x^{v_1} t, ..., x^{v_q} t, t]` of a connected graph is a complete intersection iff the
/// graph is bipartite with exactly `q - n + 1` primitive cycles.
pub fn complete_intersection_bipartite(g: &Clutter) -> Result<CompleteIntersection> {
    let adj = graphs::adjacency(g)?;
    if !graphs::is_connected_mask(&adj, g.vertex_mask()) {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    let bip = graphs::is_bipartite(g)?.verdict;
    let cycles = graphs::primitive_cycle_count(g, graphs::DEFAULT_CYCLE_CAP)?;
    let rank = g.q() as i64 - g.n() as i64 + 1;
    Ok(CompleteIntersection { verdict: bip && cycles as i64 == rank, bipartite: bip, primitive_cycles: cycles, cycle_rank: rank })
}

/// Degree-slice oracle for the least interior t-degree, exposed for tests.
pub fn least_interior_degree_of(a: &IntMatrix, limit: u64) -> Result<Option<Int>> {
    least_interior_degree(&subring_generators(a, rounding::DEFAULT_SUBRING_CAP)?, limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn k2() -> IntMatrix {
        Clutter::from_edges1(2, &[&[1, 2]]).unwrap().incidence_matrix()
    }

    fn p3() -> IntMatrix {
        graphs::path(3).incidence_matrix()
    }

    #[test]
    fn vertices_and_d() {
        let m = maximal_vertices(&k2()).unwrap();
        assert_eq!(m.len(), 2);
        assert!(m.iter().all(|v| v.d == Int::one()));
        let c3 = graphs::cycle(3).incidence_matrix();
        let m = maximal_vertices(&c3).unwrap();
        let half = m.iter().find(|v| v.ell == vec![rat(1, 2); 3]).unwrap();
        assert_eq!(half.d, Int::from(2));
    }

    #[test]
    fn k2_and_p3() {
        assert_eq!(a_invariant_s(&k2()).unwrap().value, Int::from(-2));
        assert_eq!(a_invariant_s(&p3()).unwrap().value, Int::from(-3));
        let m = canonical_module_gens(&k2(), None).unwrap();
        assert_eq!(m.generators, vec![MonomialGen::new(vec![1, 1], 2)]);
        assert!(canonical_module_gens(&p3(), None).unwrap().generators.len() >= 2);
        assert!(is_gorenstein_s(&k2()).unwrap().verdict);
        assert!(!is_gorenstein_s(&p3()).unwrap().verdict);
    }

    #[test]
    fn complete_intersections() {
        assert!(complete_intersection_bipartite(&graphs::path(4)).unwrap().verdict);
        assert!(complete_intersection_bipartite(&graphs::cycle(4)).unwrap().verdict);
        assert!(!complete_intersection_bipartite(&graphs::complete_bipartite(3, 3)).unwrap().verdict);
    }

    #[test]
    fn general_module() {
        let gens = vec![crate::int::ivec(&[1, 0]), crate::int::ivec(&[0, 1])];
        let r = canonical_module_general(&gens, &[rat(1, 1), rat(1, 1)]).unwrap();
        assert_eq!(r.generators, vec![crate::int::ivec(&[1, 1])]);
        assert_eq!(r.a_invariant, Int::from(-2));
    }
}
