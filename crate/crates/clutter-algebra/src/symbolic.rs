//! Symbolic Rees algebras, algebras of covers and irreducible b-covers.

use crate::clutter::{self, Clutter, Mask, members};
use crate::error::{Error, Result};
use crate::graphs;
use crate::int::{Int, IntVec};
use crate::polyhedra::{ConeRep, cone_from_generators, cone_from_halfspaces};
use crate::semigroup::hilbert_basis;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

/// The monomial `x^a t^b`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MonomialGen {
    pub b: u32,
    pub a: Vec<u32>,
}

impl MonomialGen {
    pub fn new(a: Vec<u32>, b: u32) -> MonomialGen {
        MonomialGen { b, a }
    }

    fn from_vec(v: &[Int]) -> MonomialGen {
        let n = v.len() - 1;
        let u = |x: &Int| x.to_u32().expect("nonnegative small exponent");
        MonomialGen { a: v[..n].iter().map(u).collect(), b: u(&v[n]) }
    }

    pub fn to_vec(&self) -> IntVec {
        self.a.iter().chain(std::iter::once(&self.b)).map(|&x| Int::from(x as i64)).collect()
    }

    /// Renders as `x1*x2^2*t^3`.
    pub fn render(&self, names: &[String]) -> String {
        let x = clutter::monomial_string(&self.a, names);
        match (x.as_str(), self.b) {
            (_, 0) => x,
            ("1", 1) => "t".into(),
            ("1", b) => format!("t^{b}"),
            (_, 1) => format!("{x}*t"),
            (_, b) => format!("{x}*t^{b}"),
        }
    }
}

/// Parses `x1^2*x3*t^2` against a list of vertex names.
pub fn parse_monomial(s: &str, names: &[String]) -> Result<MonomialGen> {
    let mut a = vec![0u32; names.len()];
    let mut b = 0;
    for factor in s.trim().split('*').map(str::trim).filter(|f| !f.is_empty() && *f != "1") {
        let (base, exp) = match factor.split_once('^') {
            Some((x, e)) => (x.trim(), e.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in {factor}")))?),
            None => (factor, 1),
        };
        if base == "t" {
            b += exp;
        } else {
            let i = names.iter().position(|n| n == base).ok_or_else(|| Error::Parse(format!("unknown variable {base}")))?;
            a[i] += exp;
        }
    }
    Ok(MonomialGen { a, b })
}

fn sorted(mut v: Vec<MonomialGen>) -> Vec<MonomialGen> {
    v.sort();
    v.dedup();
    v
}

pub const DEFAULT_SYMBOLIC_CAP: usize = 10;

fn unit(n: usize, i: usize) -> IntVec {
    let mut e = vec![Int::zero(); n];
    e[i] = Int::one();
    e
}

/// `{(a, b) : a >= 0, b >= 0, <a, u_k> >= b}` over the minimal vertex covers `u_k`.
pub fn simis_cone(c: &Clutter) -> Result<ConeRep> {
    let n = c.n();
    let mut normals: Vec<IntVec> = (0..=n).map(|i| unit(n + 1, i)).collect();
    for u in clutter::transversals(&c.edges) {
        let mut row = c.char_vec(u);
        row.push(Int::from(-1));
        normals.push(row);
    }
    cone_from_halfspaces(&normals, n + 1)
}

/// `{(a, b) : a >= 0, b >= 0, <a, v_i> >= b}` over the edges `v_i`.
pub fn cover_cone(c: &Clutter) -> Result<ConeRep> {
    let n = c.n();
    let mut normals: Vec<IntVec> = (0..=n).map(|i| unit(n + 1, i)).collect();
    for &e in &c.edges {
        let mut row = c.char_vec(e);
        row.push(Int::from(-1));
        normals.push(row);
    }
    cone_from_halfspaces(&normals, n + 1)
}

fn basis_monomials(cone: &ConeRep) -> Result<Vec<MonomialGen>> {
    let hb = hilbert_basis(&cone.generators)?;
    Ok(sorted(hb.elements.iter().map(|v| MonomialGen::from_vec(v)).collect()))
}

fn check_cap(c: &Clutter, cap: usize) -> Result<()> {
    if c.n() > cap {
        return Err(Error::OverCap(format!("{} vertices exceeds cap {cap}", c.n())));
    }
    Ok(())
}

/// Minimal algebra generators of the symbolic Rees algebra of `I(C)`.
pub fn symbolic_rees_generators(c: &Clutter) -> Result<Vec<MonomialGen>> {
    symbolic_rees_generators_capped(c, DEFAULT_SYMBOLIC_CAP)
}

pub fn symbolic_rees_generators_capped(c: &Clutter, cap: usize) -> Result<Vec<MonomialGen>> {
    check_cap(c, cap)?;
    basis_monomials(&simis_cone(c)?)
}

/// Minimal algebra generators of the algebra of covers, i.e. the irreducible b-covers.
pub fn cover_algebra_generators(c: &Clutter) -> Result<Vec<MonomialGen>> {
    cover_algebra_generators_capped(c, DEFAULT_SYMBOLIC_CAP)
}

pub fn cover_algebra_generators_capped(c: &Clutter, cap: usize) -> Result<Vec<MonomialGen>> {
    check_cap(c, cap)?;
    let out = basis_monomials(&cover_cone(c)?)?;
    if c.is_uniform() == Some(2) {
        debug_assert!(out.iter().all(|m| m.b <= 2 && m.a.iter().all(|&x| x <= 2)));
    }
    Ok(out)
}

/// Irreducible b-covers of a graph from their combinatorial description.
pub fn graph_irreducible_covers(g: &Clutter) -> Result<Vec<MonomialGen>> {
    let adj = graphs::adjacency(g)?;
    let n = g.n();
    let full = g.vertex_mask();
    let mut out = Vec::new();
    for i in 0..n {
        let mut a = vec![0; n];
        a[i] = 1;
        out.push(MonomialGen::new(a, 0));
    }
    for u in clutter::transversals(&g.edges) {
        out.push(MonomialGen::new((0..n).map(|i| (u >> i & 1) as u32).collect(), 1));
    }
    if !graphs::bipartite_mask(&adj, full) {
        out.push(MonomialGen::new(vec![1; n], 2));
        for a in graphs::independent_sets(&adj) {
            let nb = members(a).iter().fold(0 as Mask, |m, &v| m | adj[v]);
            let rest = full & !(a | nb);
            let nb_is_cover = g.edges.iter().all(|e| e & nb != 0);
            if nb_is_cover || rest == 0 {
                continue;
            }
            let no_isolated = members(rest).iter().all(|&v| adj[v] & rest != 0);
            if !no_isolated || graphs::bipartite_mask(&adj, rest) {
                continue;
            }
            let v: Vec<u32> = (0..n).map(|i| if a >> i & 1 == 1 { 0 } else if nb >> i & 1 == 1 { 2 } else { 1 }).collect();
            out.push(MonomialGen::new(v, 2));
        }
    }
    let out = sorted(out);
    #[cfg(debug_assertions)]
    if n <= 6 {
        debug_assert_eq!(out, cover_algebra_generators(g)?);
    }
    Ok(out)
}

/// Covers read off the facets `(a, -d)`, `d >= 1`, of the Rees cone of `I(C)`.
pub fn rees_cone_facet_covers(c: &Clutter) -> Result<Vec<MonomialGen>> {
    let cone = rees_cone(c)?;
    let n = c.n();
    let mut out = Vec::new();
    for f in &cone.facet_normals {
        if f[n].is_negative() {
            let mut v: IntVec = f[..n].to_vec();
            v.push(-&f[n]);
            out.push(MonomialGen::from_vec(&v));
        }
    }
    Ok(sorted(out))
}

/// The cone over `e_i` and `(v_j, 1)`.
pub fn rees_cone(c: &Clutter) -> Result<ConeRep> {
    let n = c.n();
    let mut gens: Vec<IntVec> = (0..n).map(|i| unit(n + 1, i)).collect();
    for mut v in c.edge_vectors() {
        v.push(Int::one());
        gens.push(v);
    }
    cone_from_generators(&gens, n + 1)
}

/// The Rees cone of the ideal of covers: `e_i` and `(u_k, 1)`.
pub fn cover_ideal_rees_cone(c: &Clutter) -> Result<ConeRep> {
    let n = c.n();
    let mut gens: Vec<IntVec> = (0..n).map(|i| unit(n + 1, i)).collect();
    for u in clutter::transversals(&c.edges) {
        let mut v = c.char_vec(u);
        v.push(Int::one());
        gens.push(v);
    }
    cone_from_generators(&gens, n + 1)
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverDecomposition {
    pub parts: Vec<(Vec<u32>, u32)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IrreducibleCoverVerdict {
    pub verdict: bool,
    pub decomposition: Option<CoverDecomposition>,
}

/// Largest `b` for which `a` is a b-cover: `min <a, v_i>`.
pub fn cover_degree(c: &Clutter, a: &[u32]) -> u32 {
    c.edges.iter().map(|&e| members(e).iter().map(|&i| a[i]).sum::<u32>()).min().unwrap_or(0)
}

/// Searches for `a = c + d` with `c` an i-cover, `d` a j-cover and `i + j = b`.
pub fn is_irreducible_cover(cl: &Clutter, a: &[u32], b: u32) -> Result<IrreducibleCoverVerdict> {
    if a.len() != cl.n() {
        return Err(Error::Dimension("cover length".into()));
    }
    if a.iter().all(|&x| x == 0) || cover_degree(cl, a) < b {
        return Err(Error::Precondition("not a cover".into()));
    }
    let n = a.len();
    let mut c = vec![0u32; n];
    loop {
        let mut k = 0;
        loop {
            if k == n {
                return Ok(IrreducibleCoverVerdict { verdict: true, decomposition: None });
            }
            c[k] += 1;
            if c[k] <= a[k] {
                break;
            }
            c[k] = 0;
            k += 1;
        }
        if c == a {
            continue;
        }
        let d: Vec<u32> = a.iter().zip(&c).map(|(x, y)| x - y).collect();
        let i = cover_degree(cl, &c).min(b);
        let j = b - i;
        if cover_degree(cl, &d) >= j {
            return Ok(IrreducibleCoverVerdict { verdict: false, decomposition: Some(CoverDecomposition { parts: vec![(c.clone(), i), (d, j)] }) });
        }
    }
}

/// Lifts a facet `(a, -b)` of the Rees cone of the cover ideal of `G` to a generator for the cone over `G`.
pub fn cone_generator_lift(g: &Clutter, a: &[u32], b: u32) -> Result<(Clutter, MonomialGen)> {
    if a.len() != g.n() {
        return Err(Error::Dimension("facet length".into()));
    }
    if a.iter().any(|&x| x == 0) {
        return Err(Error::Precondition("hypothesis requires a_i >= 1".into()));
    }
    let cone = cover_ideal_rees_cone(g)?;
    let mut normal: IntVec = a.iter().map(|&x| Int::from(x as i64)).collect();
    normal.push(Int::from(-(b as i64)));
    if !cone.facet_normals.contains(&normal) {
        return Err(Error::Precondition("not a facet of the Rees cone of the cover ideal".into()));
    }
    let h = graphs::cone_over(g)?;
    Ok((h, lift_once(a, b)))
}

fn lift_once(a: &[u32], b: u32) -> MonomialGen {
    let s: u32 = a.iter().sum();
    let mut v = a.to_vec();
    v.push(s - b);
    MonomialGen::new(v, s)
}

/// Iterates the lift `r` times; the graph returned is the r-fold cone.
pub fn cone_lift_iterate(g: &Clutter, a: &[u32], b: u32, r: usize) -> Result<(Clutter, MonomialGen)> {
    if r == 0 {
        return Err(Error::Precondition("r must be positive".into()));
    }
    let (mut h, mut m) = cone_generator_lift(g, a, b)?;
    for _ in 1..r {
        m = lift_once(&m.a, m.b);
        h = graphs::cone_over(&h)?;
    }
    Ok((h, m))
}

#[derive(Clone, Debug, Serialize)]
pub struct CliqueCheck {
    /// Generators equal the clique monomials.
    pub verdict: bool,
    pub perfect: bool,
    pub extra: Vec<MonomialGen>,
}

/// `x^a t^r` with `a` the indicator of a clique on `r + 1` vertices.
pub fn clique_monomials(g: &Clutter) -> Result<Vec<MonomialGen>> {
    let adj = graphs::adjacency(g)?;
    let n = g.n();
    let mut out = Vec::new();
    fn go(adj: &[Mask], n: usize, from: usize, cur: Mask, out: &mut Vec<MonomialGen>) {
        if cur != 0 {
            out.push(MonomialGen::new((0..n).map(|i| (cur >> i & 1) as u32).collect(), cur.count_ones() - 1));
        }
        for v in from..n {
            if adj[v] & cur == cur {
                go(adj, n, v + 1, cur | 1 << v, out);
            }
        }
    }
    go(&adj, n, 0, 0, &mut out);
    Ok(sorted(out))
}

pub fn clique_generators_check(g: &Clutter, cap: usize) -> Result<CliqueCheck> {
    check_cap(g, cap)?;
    let gens = symbolic_rees_generators_capped(g, cap)?;
    let cliques = clique_monomials(g)?;
    debug_assert!(cliques.iter().all(|c| gens.contains(c)));
    let extra: Vec<MonomialGen> = gens.iter().filter(|m| !cliques.contains(m)).cloned().collect();
    let perfect = graphs::is_perfect(g, usize::MAX)?.verdict;
    let verdict = extra.is_empty();
    if verdict != perfect {
        return Err(Error::Precondition("clique generators disagree with the perfection test".into()));
    }
    Ok(CliqueCheck { verdict, perfect, extra })
}
