//! Clutters, covers, minors and the combinatorial invariants built on them.

use crate::error::{Error, Result};
use crate::int::{Int, IntVec};
use crate::linalg::IntMatrix;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

pub type Mask = u64;

pub const MAX_VERTICES: usize = 64;

pub fn mask_of(items: &[usize]) -> Mask {
    items.iter().fold(0, |m, &i| m | (1 << i))
}

pub fn members(mut m: Mask) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        let i = m.trailing_zeros() as usize;
        out.push(i);
        m &= m - 1;
    }
    out
}

/// Removes repeated edges and edges containing another edge; sorts.
pub fn minimalize(edges: &[Mask]) -> Vec<Mask> {
    let mut es: Vec<Mask> = edges.to_vec();
    es.sort_by_key(|e| (e.count_ones(), *e));
    es.dedup();
    let mut out: Vec<Mask> = Vec::new();
    for e in es {
        if !out.iter().any(|f| f & e == *f) {
            out.push(e);
        }
    }
    out.sort_by(|a, b| cmp_sets(*a, *b));
    out
}

/// Orders vertex sets by their sorted index lists.
pub fn cmp_sets(a: Mask, b: Mask) -> std::cmp::Ordering {
    members(a).cmp(&members(b))
}

/// A clutter: named vertices and an antichain of vertex subsets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Clutter {
    pub vertices: Vec<String>,
    pub edges: Vec<Mask>,
}

impl Clutter {
    /// Validates the Sperner condition; isolated vertices are rejected unless allowed.
    pub fn new(vertices: Vec<String>, edges: Vec<Mask>, allow_isolated: bool) -> Result<Clutter> {
        let n = vertices.len();
        if n > MAX_VERTICES {
            return Err(Error::OverCap(format!("{n} vertices exceeds {MAX_VERTICES}")));
        }
        if edges.is_empty() {
            return Err(Error::InvalidClutter("no edges".into()));
        }
        let full = if n == 64 { Mask::MAX } else { (1u64 << n) - 1 };
        for (i, e) in edges.iter().enumerate() {
            if *e == 0 {
                return Err(Error::InvalidClutter("empty edge".into()));
            }
            if e & !full != 0 {
                return Err(Error::InvalidClutter("edge uses an unknown vertex".into()));
            }
            for (j, f) in edges.iter().enumerate() {
                if i != j && e & f == *e {
                    return Err(Error::InvalidClutter(if e == f { "repeated edge".into() } else { "an edge contains another edge".into() }));
                }
            }
        }
        let used = edges.iter().fold(0, |a, e| a | e);
        if !allow_isolated && used != full {
            let iso = members(full & !used).into_iter().map(|i| vertices[i].clone()).collect::<Vec<_>>();
            return Err(Error::InvalidClutter(format!("isolated vertices: {}", iso.join(" "))));
        }
        Ok(Clutter { vertices, edges })
    }

    /// Builds a clutter on `x1..xn` from index lists (0-based).
    pub fn from_edges(n: usize, edges: &[Vec<usize>]) -> Result<Clutter> {
        let names = (1..=n).map(|i| format!("x{i}")).collect();
        Clutter::new(names, edges.iter().map(|e| mask_of(e)).collect(), false)
    }

    /// Like `from_edges` with 1-based indices.
    pub fn from_edges1(n: usize, edges: &[&[usize]]) -> Result<Clutter> {
        let e: Vec<Vec<usize>> = edges.iter().map(|e| e.iter().map(|&i| i - 1).collect()).collect();
        Clutter::from_edges(n, &e)
    }

    /// Clutter whose edges are the supports of the columns of a binary matrix.
    pub fn from_incidence(a: &IntMatrix) -> Result<Clutter> {
        if !a.is_binary() {
            return Err(Error::Precondition("matrix is not binary".into()));
        }
        let edges: Vec<Mask> = a.columns().iter().map(|c| mask_of(&(0..c.len()).filter(|&i| c[i].is_one()).collect::<Vec<_>>())).collect();
        let names = (1..=a.rows).map(|i| format!("x{i}")).collect();
        Clutter::new(names, edges, true)
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn q(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_mask(&self) -> Mask {
        if self.n() == 64 { Mask::MAX } else { (1u64 << self.n()) - 1 }
    }

    pub fn edge_sets(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|&e| members(e)).collect()
    }

    pub fn is_uniform(&self) -> Option<usize> {
        let d = self.edges.first()?.count_ones();
        self.edges.iter().all(|e| e.count_ones() == d).then_some(d as usize)
    }

    pub fn isolated(&self) -> Mask {
        self.vertex_mask() & !self.edges.iter().fold(0, |a, e| a | e)
    }

    pub fn char_vec(&self, m: Mask) -> IntVec {
        (0..self.n()).map(|i| if m >> i & 1 == 1 { Int::one() } else { Int::zero() }).collect()
    }

    /// Incidence matrix: rows are vertices, columns are edges.
    pub fn incidence_matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(&self.edges.iter().map(|&e| self.char_vec(e)).collect::<Vec<_>>())
    }

    pub fn edge_vectors(&self) -> Vec<IntVec> {
        self.edges.iter().map(|&e| self.char_vec(e)).collect()
    }

    pub fn set_names(&self, m: Mask) -> Vec<String> {
        members(m).into_iter().map(|i| self.vertices[i].clone()).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    /// Parses the clutter text format.
    pub fn parse(text: &str) -> Result<Clutter> {
        let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty clutter file".into()))?;
        let rest = header.strip_prefix("vertices:").ok_or_else(|| Error::Parse("first line must be 'vertices: ...'".into()))?;
        let vertices: Vec<String> = rest.split_whitespace().map(String::from).collect();
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(Error::Parse(format!("repeated vertex {v}")));
            }
        }
        let mut edges = Vec::new();
        for line in lines {
            let mut m: Mask = 0;
            for name in line.split_whitespace() {
                let i = vertices.iter().position(|v| v == name).ok_or_else(|| Error::Parse(format!("unknown vertex {name}")))?;
                m |= 1 << i;
            }
            edges.push(m);
        }
        Clutter::new(vertices, edges, false)
    }
}

impl fmt::Display for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices: {}", self.vertices.join(" "))?;
        for &e in &self.edges {
            writeln!(f, "{}", self.set_names(e).join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverSet {
    pub covers: Vec<Vec<String>>,
    pub vectors: Vec<IntVec>,
    #[serde(skip)]
    pub masks: Vec<Mask>,
}

/// Minimal transversals of a family of sets, by incremental products.
pub fn transversals(edges: &[Mask]) -> Vec<Mask> {
    let mut t: Vec<Mask> = vec![0];
    for &e in edges {
        let mut next = Vec::new();
        for &c in &t {
            if c & e != 0 {
                next.push(c);
            } else {
                for v in members(e) {
                    next.push(c | 1 << v);
                }
            }
        }
        t = minimalize(&next);
    }
    t
}

pub fn minimal_vertex_covers(c: &Clutter) -> CoverSet {
    let masks = transversals(&c.edges);
    CoverSet { covers: masks.iter().map(|&m| c.set_names(m)).collect(), vectors: masks.iter().map(|&m| c.char_vec(m)).collect(), masks }
}

/// The clutter of minimal vertex covers.
pub fn blocker(c: &Clutter) -> Clutter {
    Clutter { vertices: c.vertices.clone(), edges: transversals(&c.edges) }
}

/// Complements of the edges, with the complemented incidence matrix.
pub fn dual_star(c: &Clutter) -> Result<(Clutter, IntMatrix)> {
    let full = c.vertex_mask();
    let edges: Vec<Mask> = c.edges.iter().map(|e| full & !e).collect();
    if edges.contains(&0) {
        return Err(Error::InvalidClutter("an edge is the whole vertex set, its complement is empty".into()));
    }
    let d = Clutter { vertices: c.vertices.clone(), edges };
    let m = d.incidence_matrix();
    Ok((d, m))
}

/// Result of deleting and contracting vertices.
#[derive(Clone, Debug)]
pub struct Minor {
    pub clutter: Clutter,
    /// Contraction produced an empty edge, so the minor ideal is the whole ring.
    pub is_unit: bool,
}

/// Deletes (sets to 0) and contracts (sets to 1) vertices, re-minimalizing the edges.
pub fn minor_masks(c: &Clutter, delete: Mask, contract: Mask) -> (Vec<Mask>, bool) {
    let mut out = Vec::new();
    for &e in &c.edges {
        if e & delete != 0 {
            continue;
        }
        let f = e & !contract;
        if f == 0 {
            return (vec![0], true);
        }
        out.push(f);
    }
    (minimalize(&out), false)
}

pub fn minor(c: &Clutter, delete: &[String], contract: &[String]) -> Result<Minor> {
    let idx = |names: &[String]| -> Result<Mask> {
        names.iter().try_fold(0, |m, n| c.index_of(n).map(|i| m | 1 << i).ok_or_else(|| Error::Precondition(format!("unknown vertex {n}"))))
    };
    let d = idx(delete)?;
    let k = idx(contract)?;
    if d & k != 0 {
        return Err(Error::Precondition("delete and contract sets overlap".into()));
    }
    Ok(minor_by_mask(c, d, k))
}

pub fn minor_by_mask(c: &Clutter, delete: Mask, contract: Mask) -> Minor {
    let (edges, unit) = minor_masks(c, delete, contract);
    let keep: Vec<usize> = members(c.vertex_mask() & !(delete | contract));
    let remap: HashMap<usize, usize> = keep.iter().enumerate().map(|(j, &i)| (i, j)).collect();
    let vertices = keep.iter().map(|&i| c.vertices[i].clone()).collect();
    let edges = if unit { vec![0] } else { edges.iter().map(|&e| members(e).iter().fold(0, |m, i| m | 1 << remap[i])).collect() };
    Minor { clutter: Clutter { vertices, edges }, is_unit: unit }
}

/// The parallelization `C^w`: copies of `x_i` are named `x_i^2, ..., x_i^{w_i}`.
pub fn parallelization(c: &Clutter, w: &[u32]) -> Result<Clutter> {
    if w.len() != c.n() {
        return Err(Error::Dimension(format!("weight of length {} for {} vertices", w.len(), c.n())));
    }
    let mut names = Vec::new();
    let mut copies: Vec<Vec<usize>> = vec![Vec::new(); c.n()];
    for i in 0..c.n() {
        for k in 1..=w[i] {
            copies[i].push(names.len());
            names.push(if k == 1 { c.vertices[i].clone() } else { format!("{}^{k}", c.vertices[i]) });
        }
    }
    if names.len() > MAX_VERTICES {
        return Err(Error::OverCap(format!("parallelization has {} vertices", names.len())));
    }
    let mut edges = Vec::new();
    for &e in &c.edges {
        let vs = members(e);
        if vs.iter().any(|&v| w[v] == 0) {
            continue;
        }
        let mut acc: Vec<Mask> = vec![0];
        for v in vs {
            acc = acc.iter().flat_map(|&m| copies[v].iter().map(move |&j| m | 1 << j)).collect();
        }
        edges.extend(acc);
    }
    Ok(Clutter { vertices: names, edges })
}

/// Minimum size of a set meeting every edge.
pub fn min_hitting_set(edges: &[Mask]) -> u32 {
    fn go(edges: &[Mask], chosen: Mask, size: u32, best: &mut u32) {
        if size >= *best {
            return;
        }
        let Some(&e) = edges.iter().find(|&&e| e & chosen == 0) else {
            *best = size;
            return;
        };
        // lower bound: greedily packed disjoint unhit edges
        let mut used = chosen;
        let mut lb = 0;
        for &f in edges {
            if f & chosen == 0 && f & used == 0 {
                used |= f;
                lb += 1;
            }
        }
        if size + lb >= *best {
            return;
        }
        for v in members(e) {
            go(edges, chosen | 1 << v, size + 1, best);
        }
    }
    if edges.is_empty() {
        return 0;
    }
    let mut best = u32::MAX;
    go(edges, 0, 0, &mut best);
    best
}

/// Maximum number of pairwise disjoint edges.
pub fn max_matching(edges: &[Mask]) -> u32 {
    fn go(edges: &[Mask], from: usize, used: Mask, size: u32, best: &mut u32) {
        if size > *best {
            *best = size;
        }
        let avail = edges[from..].iter().filter(|&&e| e & used == 0).count() as u32;
        if size + avail <= *best {
            return;
        }
        for i in from..edges.len() {
            if edges[i] & used == 0 {
                go(edges, i + 1, used | edges[i], size + 1, best);
            }
        }
    }
    let mut best = 0;
    go(edges, 0, 0, 0, &mut best);
    best
}

pub fn alpha0(c: &Clutter) -> u32 {
    min_hitting_set(&c.edges)
}

pub fn beta1(c: &Clutter) -> u32 {
    max_matching(&c.edges)
}

pub fn koenig(c: &Clutter) -> bool {
    alpha0(c) == beta1(c)
}

fn koenig_masks(edges: &[Mask]) -> bool {
    min_hitting_set(edges) == max_matching(edges)
}

#[derive(Clone, Debug, Serialize)]
pub struct FailingMinor {
    pub delete: Vec<String>,
    pub contract: Vec<String>,
    pub minor: Vec<Vec<String>>,
    pub alpha0: u32,
    pub beta1: u32,
}

pub const DEFAULT_PACKING_CAP: usize = 12;

/// Packing property: every minor satisfies the König property.
pub fn packing_property(c: &Clutter, cap: usize) -> Result<Option<FailingMinor>> {
    let n = c.n();
    if n > cap {
        return Err(Error::OverCap(format!("packing check on {n} vertices exceeds cap {cap}")));
    }
    let mut seen: HashMap<Vec<Mask>, bool> = HashMap::new();
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let (mut d, mut k, mut x) = (0 as Mask, 0 as Mask, code);
        for i in 0..n {
            match x % 3 {
                1 => d |= 1 << i,
                2 => k |= 1 << i,
                _ => {}
            }
            x /= 3;
        }
        let (edges, unit) = minor_masks(c, d, k);
        if unit {
            continue;
        }
        let ok = *seen.entry(edges.clone()).or_insert_with(|| koenig_masks(&edges));
        if !ok {
            return Ok(Some(FailingMinor {
                delete: c.set_names(d),
                contract: c.set_names(k),
                minor: edges.iter().map(|&e| c.set_names(e)).collect(),
                alpha0: min_hitting_set(&edges),
                beta1: max_matching(&edges),
            }));
        }
    }
    Ok(None)
}

/// Pairwise disjoint edges covering every vertex.
pub fn perfect_matching(c: &Clutter) -> Option<Vec<Vec<String>>> {
    fn go(edges: &[Mask], full: Mask, used: Mask, acc: &mut Vec<Mask>) -> bool {
        if used == full {
            return true;
        }
        let v = (!used & full).trailing_zeros();
        for &e in edges {
            if e >> v & 1 == 1 && e & used == 0 {
                acc.push(e);
                if go(edges, full, used | e, acc) {
                    return true;
                }
                acc.pop();
            }
        }
        false
    }
    let mut acc = Vec::new();
    go(&c.edges, c.vertex_mask(), 0, &mut acc).then(|| acc.iter().map(|&e| c.set_names(e)).collect())
}

/// `min { <w, u> : u a minimal vertex cover }`, equal to `alpha0(C^w)`.
pub fn alpha0_parallelization(c: &Clutter, w: &[u32]) -> u64 {
    let covers = transversals(&c.edges);
    let v = covers.iter().map(|&m| members(m).iter().map(|&i| w[i] as u64).sum::<u64>()).min().unwrap_or(0);
    #[cfg(debug_assertions)]
    if w.iter().map(|&x| x as usize).sum::<usize>() <= 20 {
        if let Ok(p) = parallelization(c, w) {
            debug_assert_eq!(v, min_hitting_set(&p.edges) as u64);
        }
    }
    v
}

pub const DEFAULT_WEIGHT_CAP: u32 = 5;

/// `max { |y| : Ay <= w, y in N^q }` by bounded enumeration.
pub fn beta1_parallelization_bound(c: &Clutter, w: &[u32], cap: u32) -> Result<u64> {
    if w.len() != c.n() {
        return Err(Error::Dimension("weight length".into()));
    }
    if w.iter().any(|&x| x > cap) {
        return Err(Error::OverCap(format!("weight entries exceed {cap}")));
    }
    fn go(edges: &[Mask], i: usize, rem: &mut Vec<u32>, size: u64, best: &mut u64) {
        if i == edges.len() {
            *best = (*best).max(size);
            return;
        }
        let vs = members(edges[i]);
        let maxk = vs.iter().map(|&v| rem[v]).min().unwrap_or(0);
        for k in (0..=maxk).rev() {
            for &v in &vs {
                rem[v] -= k;
            }
            go(edges, i + 1, rem, size + k as u64, best);
            for &v in &vs {
                rem[v] += k;
            }
        }
    }
    let mut rem = w.to_vec();
    let mut best = 0;
    go(&c.edges, 0, &mut rem, 0, &mut best);
    #[cfg(debug_assertions)]
    if w.iter().map(|&x| x as usize).sum::<usize>() <= 20 {
        if let Ok(p) = parallelization(c, w) {
            debug_assert!(max_matching(&p.edges) as u64 <= best);
        }
    }
    Ok(best)
}

/// Minimal generators of a monomial ideal as exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialIdeal {
    pub generators: Vec<Vec<u32>>,
}

impl MonomialIdeal {
    pub fn minimal(mut gens: Vec<Vec<u32>>) -> MonomialIdeal {
        gens.sort();
        gens.dedup();
        let keep: Vec<Vec<u32>> = gens.iter().filter(|g| !gens.iter().any(|h| h != *g && divides(h, g))).cloned().collect();
        let mut keep = keep;
        keep.sort_by(|a, b| a.iter().sum::<u32>().cmp(&b.iter().sum::<u32>()).then(b.cmp(a)));
        MonomialIdeal { generators: keep }
    }

    pub fn contains(&self, m: &[u32]) -> bool {
        self.generators.iter().any(|g| divides(g, m))
    }

    /// Generator lines like `x1^2*x3`.
    pub fn render(&self, names: &[String]) -> Vec<String> {
        self.generators.iter().map(|g| monomial_string(g, names)).collect()
    }
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn monomial_string(a: &[u32], names: &[String]) -> String {
    let parts: Vec<String> = a
        .iter()
        .enumerate()
        .filter(|(_, e)| **e > 0)
        .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{e}", names[i]) })
        .collect();
    if parts.is_empty() { "1".into() } else { parts.join("*") }
}

/// `I^{(i)}`: exponents `a` with `<a, u> >= i` for every minimal vertex cover `u`.
pub fn symbolic_power(c: &Clutter, i: u32) -> Result<MonomialIdeal> {
    if i == 0 {
        return Err(Error::Precondition("symbolic power index must be positive".into()));
    }
    let covers: Vec<Vec<usize>> = transversals(&c.edges).into_iter().map(members).collect();
    let n = c.n();
    let inside = |a: &[u32]| covers.iter().all(|u| u.iter().map(|&j| a[j]).sum::<u32>() >= i);
    let mut gens = Vec::new();
    let mut a = vec![0u32; n];
    loop {
        if inside(&a) && (0..n).all(|j| a[j] == 0 || { a[j] -= 1; let r = !inside(&a); a[j] += 1; r }) {
            gens.push(a.clone());
        }
        let mut k = 0;
        loop {
            if k == n {
                return Ok(MonomialIdeal::minimal(gens));
            }
            a[k] += 1;
            if a[k] <= i {
                break;
            }
            a[k] = 0;
            k += 1;
        }
    }
}

/// `I^i`: products of `i` edge monomials, minimalized.
pub fn ordinary_power(c: &Clutter, i: u32) -> MonomialIdeal {
    let vecs: Vec<Vec<u32>> = c.edges.iter().map(|&e| (0..c.n()).map(|j| (e >> j & 1) as u32).collect()).collect();
    let mut cur: Vec<Vec<u32>> = vec![vec![0; c.n()]];
    for _ in 0..i {
        let mut next = Vec::new();
        for m in &cur {
            for v in &vecs {
                next.push(m.iter().zip(v).map(|(a, b)| a + b).collect());
            }
        }
        cur = MonomialIdeal::minimal(next).generators;
    }
    MonomialIdeal::minimal(cur)
}

/// Adds the whisker edges `{x_i, y_i1, ..., y_i(d-1)}` to a d-uniform clutter.
pub fn whisker_extension(c: &Clutter) -> Result<Clutter> {
    let d = c.is_uniform().ok_or_else(|| Error::Precondition("clutter is not uniform".into()))?;
    let n = c.n();
    let total = n + n * (d - 1);
    if total > MAX_VERTICES {
        return Err(Error::OverCap(format!("whisker extension has {total} vertices")));
    }
    let mut names = c.vertices.clone();
    let mut edges = c.edges.clone();
    for i in 0..n {
        let mut e: Mask = 1 << i;
        for j in 1..d {
            e |= 1 << names.len();
            names.push(format!("y{}_{}", i + 1, j));
        }
        edges.push(e);
    }
    Ok(Clutter { vertices: names, edges })
}

#[derive(Clone, Debug, Serialize)]
pub struct Hole {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

pub const DEFAULT_BALANCE_CAP: usize = 64;

/// Balancedness via a search for chordless cycles of length 2 mod 4 in the row–column graph.
pub fn is_balanced(m: &IntMatrix, cap: usize) -> Result<Option<Hole>> {
    if !m.is_binary() {
        return Err(Error::Precondition("matrix is not binary".into()));
    }
    let nv = m.rows + m.cols;
    if nv > cap.min(MAX_VERTICES) {
        return Err(Error::OverCap(format!("{nv} rows+cols exceeds cap {}", cap.min(MAX_VERTICES))));
    }
    let mut adj = vec![0 as Mask; nv];
    for i in 0..m.rows {
        for j in 0..m.cols {
            if m.get(i, j).is_one() {
                adj[i] |= 1 << (m.rows + j);
                adj[m.rows + j] |= 1 << i;
            }
        }
    }
    let cycle = find_chordless_cycle(&adj, &|len| len >= 6 && len % 4 == 2);
    Ok(cycle.map(|cyc| {
        let mut rows: Vec<usize> = cyc.iter().copied().filter(|&v| v < m.rows).collect();
        let mut cols: Vec<usize> = cyc.iter().copied().filter(|&v| v >= m.rows).map(|v| v - m.rows).collect();
        rows.sort();
        cols.sort();
        Hole { rows, cols }
    }))
}

/// Finds a chordless cycle (as a vertex sequence) whose length satisfies `want`.
pub fn find_chordless_cycle(adj: &[Mask], want: &dyn Fn(usize) -> bool) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_chordless_cycle(adj, &mut |cyc| {
        if want(cyc.len()) {
            found = Some(cyc.to_vec());
            true
        } else {
            false
        }
    });
    found
}

/// Visits every chordless cycle of length >= 4 once (smallest vertex first); stops when `f` returns true.
pub fn for_each_chordless_cycle(adj: &[Mask], f: &mut dyn FnMut(&[usize]) -> bool) {
    let n = adj.len();
    fn extend(adj: &[Mask], path: &mut Vec<usize>, inpath: Mask, start: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let last = *path.last().unwrap();
        let second = path[1];
        let higher = !((1u64 << start) | ((1u64 << start) - 1));
        let interior = inpath & !(1 << start) & !(1 << last);
        for v in members(adj[last] & higher & !inpath) {
            // v must not touch interior path vertices
            if adj[v] & interior != 0 {
                continue;
            }
            let closes = adj[v] >> start & 1 == 1;
            if closes {
                if path.len() >= 3 && v > second {
                    path.push(v);
                    let stop = f(path);
                    path.pop();
                    if stop {
                        return true;
                    }
                }
                continue;
            }
            path.push(v);
            if extend(adj, path, inpath | 1 << v, start, f) {
                return true;
            }
            path.pop();
        }
        false
    }
    for s in 0..n {
        for u in members(adj[s]) {
            if u <= s {
                continue;
            }
            let mut path = vec![s, u];
            if extend(adj, &mut path, (1 << s) | (1 << u), s, f) {
                return;
            }
        }
    }
}

/// Every vertex deletion lowers the covering number.
pub fn vertex_critical(c: &Clutter) -> bool {
    let a = alpha0(c);
    (0..c.n()).all(|i| {
        let (edges, _) = minor_masks(c, 1 << i, 0);
        min_hitting_set(&edges) < a
    })
}

/// Splits the vertex set into `d` disjoint minimal covers, each meeting every edge once.
pub fn disjoint_cover_partition(c: &Clutter, allow_non_uniform: bool) -> Result<Option<Vec<Vec<String>>>> {
    let d = match c.is_uniform() {
        Some(d) => d,
        None if allow_non_uniform => c.edges.iter().map(|e| e.count_ones() as usize).max().unwrap_or(0),
        None => return Err(Error::Precondition("clutter is not uniform".into())),
    };
    let mut edges = c.edges.clone();
    let mut remaining = c.vertex_mask();
    let mut parts = Vec::new();
    for _ in 0..d {
        let covers = transversals(&edges);
        let exact = covers.into_iter().find(|&u| edges.iter().all(|e| (e & u).count_ones() == 1));
        let Some(u) = exact else { return Ok(None) };
        parts.push(u);
        remaining &= !u;
        edges = minimalize(&edges.iter().map(|e| e & !u).filter(|&e| e != 0).collect::<Vec<_>>());
        if edges.is_empty() {
            break;
        }
    }
    if remaining != 0 || parts.len() != d {
        return Ok(None);
    }
    Ok(Some(parts.iter().map(|&p| c.set_names(p)).collect()))
}
