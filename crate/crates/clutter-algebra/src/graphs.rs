//! Graphs, posets and their clique clutters.

use crate::clutter::{self, Clutter, Mask, mask_of, members, min_hitting_set};
use crate::error::{Error, Result};
use crate::int::{Int, IntVec};
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::BTreeSet;

/// Adjacency masks of a clutter whose edges all have two vertices.
pub fn adjacency(g: &Clutter) -> Result<Vec<Mask>> {
    let mut adj = vec![0; g.n()];
    for &e in &g.edges {
        if e.count_ones() != 2 {
            return Err(Error::Precondition("not a graph: every edge must have two vertices".into()));
        }
        let v = members(e);
        adj[v[0]] |= 1 << v[1];
        adj[v[1]] |= 1 << v[0];
    }
    Ok(adj)
}

/// Builds a graph on `x1..xn` from 0-based edge pairs.
pub fn graph(n: usize, edges: &[(usize, usize)]) -> Result<Clutter> {
    Clutter::from_edges(n, &edges.iter().map(|&(a, b)| vec![a, b]).collect::<Vec<_>>())
}

pub fn cycle(n: usize) -> Clutter {
    graph(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).expect("cycle")
}

pub fn path(n: usize) -> Clutter {
    graph(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).expect("path")
}

pub fn complete(n: usize) -> Clutter {
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            e.push((i, j));
        }
    }
    graph(n, &e).expect("complete graph")
}

pub fn complete_bipartite(a: usize, b: usize) -> Clutter {
    let mut e = Vec::new();
    for i in 0..a {
        for j in 0..b {
            e.push((i, a + j));
        }
    }
    graph(a + b, &e).expect("complete bipartite graph")
}

/// Edges of the subgraph induced on `s`.
pub fn induced_edges(adj: &[Mask], s: Mask) -> Vec<Mask> {
    let mut out = Vec::new();
    for i in members(s) {
        for j in members(adj[i] & s) {
            if i < j {
                out.push((1 << i) | (1 << j));
            }
        }
    }
    out
}

pub fn alpha0_induced(adj: &[Mask], s: Mask) -> u32 {
    min_hitting_set(&induced_edges(adj, s))
}

pub fn is_connected_mask(adj: &[Mask], s: Mask) -> bool {
    if s == 0 {
        return true;
    }
    let mut seen = 1 << s.trailing_zeros();
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in members(frontier) {
            next |= adj[v] & s;
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == s
}

pub fn complement_adj(adj: &[Mask]) -> Vec<Mask> {
    let n = adj.len();
    let full: Mask = if n == 64 { Mask::MAX } else { (1 << n) - 1 };
    (0..n).map(|i| full & !adj[i] & !(1 << i)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct BipartiteVerdict {
    pub verdict: bool,
    /// Sides of a 2-colouring when bipartite.
    pub parts: Option<(Vec<String>, Vec<String>)>,
    /// Vertices of an odd cycle, in order, when not bipartite.
    pub odd_cycle: Option<Vec<String>>,
}

pub fn is_bipartite(g: &Clutter) -> Result<BipartiteVerdict> {
    let adj = adjacency(g)?;
    let n = g.n();
    let mut color = vec![-1i8; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for s in 0..n {
        if color[s] >= 0 {
            continue;
        }
        color[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in members(adj[u]) {
                if color[v] < 0 {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if color[v] == color[u] {
                    let (mut a, mut b) = (u, v);
                    let (mut pa, mut pb) = (vec![a], vec![b]);
                    while depth[a] > depth[b] {
                        a = parent[a];
                        pa.push(a);
                    }
                    while depth[b] > depth[a] {
                        b = parent[b];
                        pb.push(b);
                    }
                    while a != b {
                        a = parent[a];
                        b = parent[b];
                        pa.push(a);
                        pb.push(b);
                    }
                    pb.pop();
                    pb.reverse();
                    pa.extend(pb);
                    return Ok(BipartiteVerdict { verdict: false, parts: None, odd_cycle: Some(pa.iter().map(|&i| g.vertices[i].clone()).collect()) });
                }
            }
        }
    }
    let side = |c: i8| (0..n).filter(|&i| color[i] == c).map(|i| g.vertices[i].clone()).collect();
    Ok(BipartiteVerdict { verdict: true, parts: Some((side(0), side(1))), odd_cycle: None })
}

pub fn bipartite_mask(adj: &[Mask], s: Mask) -> bool {
    let mut color: u64 = 0;
    let mut seen: u64 = 0;
    for r in members(s) {
        if seen >> r & 1 == 1 {
            continue;
        }
        seen |= 1 << r;
        let mut stack = vec![r];
        while let Some(u) = stack.pop() {
            for v in members(adj[u] & s) {
                let want = (color >> u & 1) ^ 1;
                if seen >> v & 1 == 0 {
                    seen |= 1 << v;
                    color |= want << v;
                    stack.push(v);
                } else if color >> v & 1 != want {
                    return false;
                }
            }
        }
    }
    true
}

/// Vertex sets of all chordless cycles, triangles included.
pub fn chordless_cycles(adj: &[Mask]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n = adj.len();
    for a in 0..n {
        for b in members(adj[a]) {
            if b <= a {
                continue;
            }
            for c in members(adj[a] & adj[b]) {
                if c > b {
                    out.push(vec![a, b, c]);
                }
            }
        }
    }
    clutter::for_each_chordless_cycle(adj, &mut |c| {
        out.push(c.to_vec());
        false
    });
    out
}

pub const DEFAULT_CYCLE_CAP: usize = 14;

#[derive(Clone, Debug, Serialize)]
pub struct OddCyclePairVerdict {
    pub verdict: bool,
    /// Two vertex-disjoint odd cycles with no edge between them.
    pub certificate: Option<(Vec<String>, Vec<String>)>,
}

/// Whether any two vertex-disjoint odd cycles induce a connected subgraph.
pub fn odd_cycle_pair_criterion(g: &Clutter, cap: usize) -> Result<OddCyclePairVerdict> {
    if g.n() > cap {
        return Err(Error::OverCap(format!("{} vertices exceeds cap {cap}", g.n())));
    }
    let adj = adjacency(g)?;
    // every odd cycle contains a chordless odd cycle on a subset of its vertices
    let odd: Vec<Mask> = chordless_cycles(&adj).into_iter().filter(|c| c.len() % 2 == 1).map(|c| mask_of(&c)).collect();
    for (i, &c1) in odd.iter().enumerate() {
        let nb1 = members(c1).iter().fold(0, |m, &v| m | adj[v]);
        for &c2 in &odd[i + 1..] {
            if c1 & c2 == 0 && nb1 & c2 == 0 {
                return Ok(OddCyclePairVerdict { verdict: false, certificate: Some((g.set_names(c1), g.set_names(c2))) });
            }
        }
    }
    Ok(OddCyclePairVerdict { verdict: true, certificate: None })
}

/// Maximal cliques by Bron–Kerbosch with pivoting.
pub fn maximal_clique_masks(adj: &[Mask]) -> Vec<Mask> {
    fn bk(adj: &[Mask], r: Mask, p: Mask, x: Mask, out: &mut Vec<Mask>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        let pivot = members(p | x).into_iter().max_by_key(|&u| (adj[u] & p).count_ones()).unwrap();
        let mut p = p;
        let mut x = x;
        for v in members(p & !adj[pivot]) {
            bk(adj, r | 1 << v, p & adj[v], x & adj[v], out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let n = adj.len();
    let full = if n == 64 { Mask::MAX } else { (1 << n) - 1 };
    let mut out = Vec::new();
    bk(adj, 0, full, 0, &mut out);
    out.sort_by(|a, b| clutter::cmp_sets(*a, *b));
    out
}

pub fn maximal_cliques(g: &Clutter) -> Result<Vec<Vec<String>>> {
    let adj = adjacency(g)?;
    Ok(maximal_clique_masks(&adj).into_iter().map(|m| g.set_names(m)).collect())
}

/// The clutter of maximal cliques.
pub fn clique_clutter(g: &Clutter) -> Result<Clutter> {
    let adj = adjacency(g)?;
    Ok(Clutter { vertices: g.vertices.clone(), edges: maximal_clique_masks(&adj) })
}

pub const DEFAULT_PERFECT_CAP: usize = 12;

#[derive(Clone, Debug, Serialize)]
pub struct PerfectVerdict {
    pub verdict: bool,
    /// An induced odd hole, or the vertex set of an induced odd antihole.
    pub hole: Option<Vec<String>>,
    pub antihole: bool,
}

fn odd_hole(adj: &[Mask]) -> Option<Vec<usize>> {
    clutter::find_chordless_cycle(adj, &|l| l >= 5 && l % 2 == 1)
}

/// Perfection via a search for odd holes and odd antiholes.
pub fn is_perfect_adj(adj: &[Mask]) -> (Option<Vec<usize>>, bool) {
    if let Some(h) = odd_hole(adj) {
        return (Some(h), false);
    }
    if let Some(h) = odd_hole(&complement_adj(adj)) {
        return (Some(h), true);
    }
    (None, false)
}

pub fn is_perfect(g: &Clutter, cap: usize) -> Result<PerfectVerdict> {
    if g.n() > cap {
        return Err(Error::OverCap(format!("{} vertices exceeds cap {cap}", g.n())));
    }
    let adj = adjacency(g)?;
    let (h, anti) = is_perfect_adj(&adj);
    Ok(PerfectVerdict { verdict: h.is_none(), hole: h.map(|h| h.iter().map(|&i| g.vertices[i].clone()).collect()), antihole: anti })
}

/// A finite poset stored by its cover relations and strict order closure.
#[derive(Clone, Debug, Serialize)]
pub struct Poset {
    pub elements: Vec<String>,
    pub relations: Vec<(usize, usize)>,
    /// `above[i]` holds every `j` with `i < j`.
    #[serde(skip)]
    pub above: Vec<Mask>,
}

impl Poset {
    pub fn new(elements: Vec<String>, relations: Vec<(usize, usize)>) -> Result<Poset> {
        let n = elements.len();
        if n > clutter::MAX_VERTICES {
            return Err(Error::OverCap(format!("{n} elements")));
        }
        let mut above = vec![0 as Mask; n];
        for &(a, b) in &relations {
            if a == b {
                return Err(Error::Parse(format!("{} < {} is not strict", elements[a], elements[b])));
            }
            above[a] |= 1 << b;
        }
        loop {
            let mut changed = false;
            for i in 0..n {
                let mut m = above[i];
                for j in members(above[i]) {
                    m |= above[j];
                }
                if m != above[i] {
                    above[i] = m;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if (0..n).any(|i| above[i] >> i & 1 == 1) {
            return Err(Error::Parse("order relation has a cycle".into()));
        }
        Ok(Poset { elements, relations, above })
    }

    /// One relation `a < b` per line; elements are named by first appearance.
    pub fn parse(text: &str) -> Result<Poset> {
        let mut elements: Vec<String> = Vec::new();
        let mut rel = Vec::new();
        let idx = |s: &str, el: &mut Vec<String>| match el.iter().position(|e| e == s) {
            Some(i) => i,
            None => {
                el.push(s.to_string());
                el.len() - 1
            }
        };
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (a, b) = line.split_once('<').ok_or_else(|| Error::Parse(format!("expected 'a < b', got '{line}'")))?;
            let (a, b) = (a.trim(), b.trim());
            if a.is_empty() || b.is_empty() || a.contains(char::is_whitespace) || b.contains(char::is_whitespace) {
                return Err(Error::Parse(format!("expected 'a < b', got '{line}'")));
            }
            let i = idx(a, &mut elements);
            let j = idx(b, &mut elements);
            rel.push((i, j));
        }
        Poset::new(elements, rel)
    }

    pub fn chain(n: usize) -> Poset {
        Poset::new((1..=n).map(|i| format!("p{i}")).collect(), (1..n).map(|i| (i - 1, i)).collect()).unwrap()
    }

    pub fn antichain(n: usize) -> Poset {
        Poset::new((1..=n).map(|i| format!("p{i}")).collect(), vec![]).unwrap()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        self.above[i] >> j & 1 == 1
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.less(i, j) || self.less(j, i)
    }

    fn names(&self, m: Mask) -> Vec<String> {
        members(m).into_iter().map(|i| self.elements[i].clone()).collect()
    }
}

/// Graph on the poset elements joining comparable pairs.
pub fn comparability_graph(p: &Poset) -> Result<Clutter> {
    let mut edges = Vec::new();
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p.comparable(i, j) {
                edges.push((1 << i) | (1 << j));
            }
        }
    }
    Clutter::new(p.elements.clone(), edges, true)
}

/// Maximal chains of the poset, i.e. the clique clutter of its comparability graph.
/// Defined for antichains too, where the comparability graph has no edges.
pub fn maximal_chain_clutter(p: &Poset) -> Result<Clutter> {
    let n = p.len();
    if n == 0 {
        return Err(Error::InvalidClutter("empty poset".into()));
    }
    let covers: Vec<Mask> = (0..n)
        .map(|i| {
            let up = p.above[i];
            let far = members(up).into_iter().fold(0 as Mask, |m, k| m | p.above[k]);
            up & !far
        })
        .collect();
    let below_some = p.above.iter().fold(0 as Mask, |m, a| m | a);
    fn go(covers: &[Mask], i: usize, cur: Mask, out: &mut Vec<Mask>) {
        if covers[i] == 0 {
            out.push(cur);
            return;
        }
        for j in members(covers[i]) {
            go(covers, j, cur | 1 << j, out);
        }
    }
    let mut chains = Vec::new();
    for i in (0..n).filter(|&i| below_some >> i & 1 == 0) {
        go(&covers, i, 1 << i, &mut chains);
    }
    chains.sort_by(|a, b| clutter::cmp_sets(*a, *b));
    Clutter::new(p.elements.clone(), chains, false)
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainCover {
    pub antichain: Vec<String>,
    pub chains: Vec<Vec<String>>,
}

/// Maximum matching in the strict-order bipartite graph; returns `mate_right[j] = i`.
fn order_matching(p: &Poset) -> Vec<Option<usize>> {
    let n = p.len();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    fn augment(p: &Poset, u: usize, seen: &mut Vec<bool>, mate: &mut Vec<Option<usize>>) -> bool {
        for v in members(p.above[u]) {
            if !seen[v] {
                seen[v] = true;
                if mate[v].is_none() || augment(p, mate[v].unwrap(), seen, mate) {
                    mate[v] = Some(u);
                    return true;
                }
            }
        }
        false
    }
    for u in 0..n {
        let mut seen = vec![false; n];
        augment(p, u, &mut seen, &mut mate);
    }
    mate
}

/// Maximum antichain and a partition into that many chains.
pub fn dilworth(p: &Poset) -> ChainCover {
    let n = p.len();
    let mate_r = order_matching(p);
    let mut mate_l: Vec<Option<usize>> = vec![None; n];
    for (v, m) in mate_r.iter().enumerate() {
        if let Some(u) = m {
            mate_l[*u] = Some(v);
        }
    }
    let mut chains = Vec::new();
    for s in 0..n {
        if mate_r[s].is_some() {
            continue;
        }
        let mut c = vec![s];
        let mut cur = s;
        while let Some(nx) = mate_l[cur] {
            c.push(nx);
            cur = nx;
        }
        chains.push(c);
    }
    // König: alternating reachability from unmatched left vertices
    let mut zl = vec![false; n];
    let mut zr = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&u| mate_l[u].is_none()).collect();
    for &u in &stack {
        zl[u] = true;
    }
    while let Some(u) = stack.pop() {
        for v in members(p.above[u]) {
            if !zr[v] && mate_l[u] != Some(v) {
                zr[v] = true;
                if let Some(w) = mate_r[v] {
                    if !zl[w] {
                        zl[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
    }
    // cover = (L \ Z) ∪ (R ∩ Z); antichain = elements in neither side of the cover
    let anti: Vec<usize> = (0..n).filter(|&i| zl[i] && !zr[i]).collect();
    assert_eq!(anti.len(), chains.len(), "antichain size must equal chain count");
    debug_assert!(anti.iter().all(|&a| anti.iter().all(|&b| !p.less(a, b))));
    ChainCover { antichain: p.names(mask_of(&anti)), chains: chains.iter().map(|c| c.iter().map(|&i| p.elements[i].clone()).collect()).collect() }
}

#[derive(Clone, Debug, Serialize)]
pub struct AntichainCover {
    pub chain: Vec<String>,
    pub antichains: Vec<Vec<String>>,
}

/// Longest chain and the partition into antichains by height.
pub fn mirsky(p: &Poset) -> AntichainCover {
    let n = p.len();
    let mut height = vec![0usize; n];
    let mut pred = vec![usize::MAX; n];
    let below = |j: usize| (0..n).filter(|&i| p.less(i, j)).count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&j| below(j));
    for &j in &order {
        for i in 0..n {
            if p.less(i, j) && height[i] + 1 > height[j] {
                height[j] = height[i] + 1;
                pred[j] = i;
            }
        }
    }
    let h = height.iter().copied().max().map(|x| x + 1).unwrap_or(0);
    let mut chain = Vec::new();
    if let Some(t) = (0..n).max_by_key(|&i| (height[i], std::cmp::Reverse(i))) {
        let mut cur = t;
        chain.push(cur);
        while pred[cur] != usize::MAX {
            cur = pred[cur];
            chain.push(cur);
        }
        chain.reverse();
    }
    let antichains: Vec<Vec<String>> = (0..h).map(|k| (0..n).filter(|&i| height[i] == k).map(|i| p.elements[i].clone()).collect()).collect();
    assert_eq!(chain.len(), antichains.len(), "chain length must equal antichain count");
    AntichainCover { chain: chain.iter().map(|&i| p.elements[i].clone()).collect(), antichains }
}

/// Edges `{x1_{i1}, ..., xd_{id}}` with `i1 <= ... <= id`, on vertices `x{k}_{i}`.
pub fn complete_admissible_clutter(d: usize, g: usize) -> Result<Clutter> {
    if d < 2 || g < 2 {
        return Err(Error::Precondition("requires d >= 2 and g >= 2".into()));
    }
    if d * g > clutter::MAX_VERTICES {
        return Err(Error::OverCap(format!("{} vertices", d * g)));
    }
    let names: Vec<String> = (1..=d).flat_map(|k| (1..=g).map(move |i| format!("x{k}_{i}"))).collect();
    let mut edges = Vec::new();
    fn go(d: usize, g: usize, k: usize, lo: usize, m: Mask, out: &mut Vec<Mask>) {
        if k == d {
            out.push(m);
            return;
        }
        for i in lo..g {
            go(d, g, k + 1, i, m | 1 << (k * g + i), out);
        }
    }
    go(d, g, 0, 0, 0, &mut edges);
    Clutter::new(names, edges, false)
}

pub const DEFAULT_IRREDUCIBLE_CAP: usize = 14;

#[derive(Clone, Debug, Serialize)]
pub struct IrreducibleVerdict {
    pub verdict: bool,
    /// Vertex partition with additive covering numbers.
    pub split: Option<(Vec<String>, Vec<String>)>,
}

/// First split `(s, rest)` of `s_all` with `alpha0` additive, if any.
pub fn reducing_split(adj: &[Mask], s_all: Mask) -> Option<(Mask, Mask)> {
    let a = alpha0_induced(adj, s_all);
    let vs = members(s_all);
    if vs.len() < 2 {
        return None;
    }
    let first = 1u64 << vs[0];
    let rest: Vec<usize> = vs[1..].to_vec();
    // the first vertex is fixed in H1
    for code in 0..(1u64 << rest.len()) {
        let mut h1 = first;
        for (k, &v) in rest.iter().enumerate() {
            if code >> k & 1 == 1 {
                h1 |= 1 << v;
            }
        }
        let h2 = s_all & !h1;
        if h2 == 0 {
            continue;
        }
        if alpha0_induced(adj, h1) + alpha0_induced(adj, h2) == a {
            return Some((h1, h2));
        }
    }
    None
}

pub fn is_irreducible_graph(g: &Clutter, cap: usize) -> Result<IrreducibleVerdict> {
    if g.n() > cap {
        return Err(Error::OverCap(format!("{} vertices exceeds cap {cap}", g.n())));
    }
    let adj = adjacency(g)?;
    Ok(match reducing_split(&adj, g.vertex_mask()) {
        Some((a, b)) => IrreducibleVerdict { verdict: false, split: Some((g.set_names(a), g.set_names(b))) },
        None => IrreducibleVerdict { verdict: true, split: None },
    })
}

pub const DEFAULT_SUBGRAPH_CAP: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct InducedSubgraph {
    pub vertices: Vec<String>,
    pub alpha0: u32,
    #[serde(skip)]
    pub mask: Mask,
}

/// Irreducible induced subgraphs by direct test of every vertex subset.
pub fn irreducible_subgraphs_direct(g: &Clutter) -> Result<Vec<InducedSubgraph>> {
    let adj = adjacency(g)?;
    let n = g.n();
    let mut out = Vec::new();
    for s in 1..(1u64 << n) {
        if !is_connected_mask(&adj, s) {
            continue;
        }
        if reducing_split(&adj, s).is_none() {
            out.push(InducedSubgraph { vertices: g.set_names(s), alpha0: alpha0_induced(&adj, s), mask: s });
        }
    }
    out.sort_by(|a, b| clutter::cmp_sets(a.mask, b.mask));
    Ok(out)
}

/// Irreducible induced subgraphs read off the binary elements of the symbolic Hilbert basis.
pub fn irreducible_subgraphs_from_basis(g: &Clutter) -> Result<Vec<InducedSubgraph>> {
    let gens = crate::symbolic::symbolic_rees_generators(g)?;
    let mut out = Vec::new();
    for m in gens {
        if m.a.iter().all(|x| *x <= 1) && m.a.iter().any(|x| *x == 1) {
            let s = mask_of(&(0..m.a.len()).filter(|&i| m.a[i] == 1).collect::<Vec<_>>());
            out.push(InducedSubgraph { vertices: g.set_names(s), alpha0: m.b, mask: s });
        }
    }
    out.sort_by(|a, b| clutter::cmp_sets(a.mask, b.mask));
    Ok(out)
}

/// Both methods, which must agree.
pub fn irreducible_induced_subgraphs(g: &Clutter, cap: usize) -> Result<Vec<InducedSubgraph>> {
    if g.n() > cap {
        return Err(Error::OverCap(format!("{} vertices exceeds cap {cap}", g.n())));
    }
    let direct = irreducible_subgraphs_direct(g)?;
    let basis = irreducible_subgraphs_from_basis(g)?;
    if direct != basis {
        return Err(Error::Precondition("irreducible subgraph methods disagree".into()));
    }
    Ok(direct)
}

pub fn independent_sets(adj: &[Mask]) -> Vec<Mask> {
    let n = adj.len();
    let mut out = Vec::new();
    fn go(adj: &[Mask], n: usize, i: usize, cur: Mask, banned: Mask, out: &mut Vec<Mask>) {
        if i == n {
            if cur != 0 {
                out.push(cur);
            }
            return;
        }
        go(adj, n, i + 1, cur, banned, out);
        if banned >> i & 1 == 0 {
            go(adj, n, i + 1, cur | 1 << i, banned | adj[i], out);
        }
    }
    go(adj, n, 0, 0, 0, &mut out);
    out
}

/// Halfspace normals `<normal, a> >= 0` describing the edge cone.
pub fn edge_cone_h_rep(g: &Clutter, irredundant: bool, cap: usize) -> Result<Vec<IntVec>> {
    if g.n() > cap {
        return Err(Error::OverCap(format!("{} vertices exceeds cap {cap}", g.n())));
    }
    let adj = adjacency(g)?;
    if !is_connected_mask(&adj, g.vertex_mask()) {
        return Err(Error::Precondition("graph is not connected".into()));
    }
    let n = g.n();
    let mut rows: BTreeSet<IntVec> = BTreeSet::new();
    for i in 0..n {
        let mut e = vec![Int::zero(); n];
        e[i] = Int::one();
        rows.insert(e);
    }
    for a in independent_sets(&adj) {
        let nb = members(a).iter().fold(0, |m, &v| m | adj[v]);
        let row: IntVec = (0..n).map(|i| Int::from((nb >> i & 1) as i64 - (a >> i & 1) as i64)).collect();
        rows.insert(row);
    }
    let rows: Vec<IntVec> = rows.into_iter().collect();
    if !irredundant {
        return Ok(rows);
    }
    let cone = crate::polyhedra::cone_from_halfspaces(&rows, n)?;
    let mut out = cone.facet_normals.clone();
    for e in &cone.equations {
        out.push(e.clone());
        out.push(e.iter().map(|x| -x).collect());
    }
    Ok(out)
}

/// Adds a vertex adjacent to every vertex.
pub fn cone_over(g: &Clutter) -> Result<Clutter> {
    adjacency(g)?;
    let n = g.n();
    if n + 1 > clutter::MAX_VERTICES {
        return Err(Error::OverCap("cone vertex count".into()));
    }
    let fresh = format!("x{}", n + 1);
    let name = if g.index_of(&fresh).is_none() { fresh } else { "v".to_string() };
    let mut names = g.vertices.clone();
    names.push(name);
    let mut edges = g.edges.clone();
    for i in 0..n {
        edges.push((1 << i) | (1 << n));
    }
    Clutter::new(names, edges, false)
}

pub fn unmixed(c: &Clutter) -> bool {
    let covers = clutter::transversals(&c.edges);
    covers.windows(2).all(|w| w[0].count_ones() == w[1].count_ones())
}

/// Number of chordless cycles, triangles included.
pub fn primitive_cycle_count(g: &Clutter, cap: usize) -> Result<usize> {
    if g.n() > cap {
        return Err(Error::OverCap(format!("{} vertices exceeds cap {cap}", g.n())));
    }
    Ok(chordless_cycles(&adjacency(g)?).len())
}

#[derive(Clone, Debug, Serialize)]
pub struct DualCheck {
    /// The Alexander dual of the complement equals the complemented edge ideal.
    pub verdict: bool,
    pub triangle_free: bool,
    pub complement_dual: Vec<Vec<String>>,
    pub complemented_edges: Vec<Vec<String>>,
}

pub fn triangle_free_dual_check(g: &Clutter) -> Result<DualCheck> {
    let adj = adjacency(g)?;
    let comp = complement_adj(&adj);
    let comp_edges = induced_edges(&comp, g.vertex_mask());
    let dual = clutter::transversals(&comp_edges);
    let star = clutter::minimalize(&g.edges.iter().map(|e| g.vertex_mask() & !e).collect::<Vec<_>>());
    let triangle_free = !(0..g.n()).any(|a| members(adj[a]).iter().any(|&b| adj[a] & adj[b] != 0));
    let verdict = dual == star;
    Ok(DualCheck {
        verdict,
        triangle_free,
        complement_dual: dual.iter().map(|&m| g.set_names(m)).collect(),
        complemented_edges: star.iter().map(|&m| g.set_names(m)).collect(),
    })
}

/// Labelled graphs up to isomorphism, by canonical relabelling.
pub mod enumerate {
    use super::*;
    use rayon::prelude::*;
    use std::collections::HashSet;

    /// Canonical form of a family of vertex sets under all relabellings.
    pub fn canonical(n: usize, sets: &[Mask]) -> Vec<Mask> {
        // refine by degree signature before permuting
        let deg: Vec<(usize, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut sizes: Vec<u32> = sets.iter().filter(|&&e| e >> v & 1 == 1).map(|e| e.count_ones()).collect();
                sizes.sort();
                (sizes.len(), sizes)
            })
            .collect();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut keys: Vec<&(usize, Vec<u32>)> = deg.iter().collect();
        keys.sort();
        keys.dedup();
        for k in keys {
            classes.push((0..n).filter(|&v| &deg[v] == k).collect());
        }
        let mut best: Option<Vec<Mask>> = None;
        let mut perm = vec![0usize; n];
        fn rec(classes: &[Vec<usize>], ci: usize, pos: usize, used: Mask, perm: &mut Vec<usize>, sets: &[Mask], best: &mut Option<Vec<Mask>>) {
            if ci == classes.len() {
                let mut img: Vec<Mask> = sets.iter().map(|&e| members(e).iter().fold(0, |m, &v| m | 1 << perm[v])).collect();
                img.sort();
                if best.as_ref().is_none_or(|b| img < *b) {
                    *best = Some(img);
                }
                return;
            }
            let class = &classes[ci];
            let base: usize = classes[..ci].iter().map(|c| c.len()).sum();
            let k = pos - base;
            if k == class.len() {
                rec(classes, ci + 1, pos, used, perm, sets, best);
                return;
            }
            let v = class[k];
            for t in base..base + class.len() {
                if used >> t & 1 == 0 {
                    perm[v] = t;
                    rec(classes, ci, pos + 1, used | 1 << t, perm, sets, best);
                }
            }
        }
        rec(&classes, 0, 0, 0, &mut perm, sets, &mut best);
        best.unwrap_or_default()
    }

    /// All graphs on exactly `n` vertices up to isomorphism (isolated vertices allowed).
    pub fn graphs(n: usize) -> Vec<Vec<Mask>> {
        if n == 0 {
            return vec![vec![]];
        }
        let smaller = graphs(n - 1);
        let cands: Vec<Vec<Mask>> = smaller
            .par_iter()
            .flat_map_iter(|g| {
                (0..(1u64 << (n - 1))).map(move |nb| {
                    let mut e = g.clone();
                    for v in members(nb) {
                        e.push((1 << v) | (1 << (n - 1)));
                    }
                    canonical(n, &e)
                })
            })
            .collect();
        let set: HashSet<Vec<Mask>> = cands.into_iter().collect();
        let mut out: Vec<Vec<Mask>> = set.into_iter().collect();
        out.sort();
        out
    }

    /// Graphs on `n` vertices with no isolated vertex, as clutters.
    pub fn graph_clutters(n: usize, connected_only: bool) -> Vec<Clutter> {
        graphs(n)
            .into_iter()
            .filter_map(|e| {
                let c = Clutter::new((1..=n).map(|i| format!("x{i}")).collect(), e, false).ok()?;
                if connected_only {
                    let adj = adjacency(&c).ok()?;
                    if !is_connected_mask(&adj, c.vertex_mask()) {
                        return None;
                    }
                }
                Some(c)
            })
            .collect()
    }

    /// Clutters on exactly `n` vertices with at most `max_edges` edges and no isolated vertex.
    pub fn clutters(n: usize, max_edges: usize) -> Vec<Clutter> {
        let full: Mask = (1 << n) - 1;
        let mut level: Vec<Vec<Mask>> = vec![vec![]];
        let mut all: Vec<Vec<Mask>> = Vec::new();
        for _ in 0..max_edges {
            let next: HashSet<Vec<Mask>> = level
                .par_iter()
                .flat_map_iter(|c| {
                    let c = c.clone();
                    (1..=full).filter_map(move |e| {
                        if c.iter().any(|&f| f & e == f || f & e == e) {
                            return None;
                        }
                        let mut d = c.clone();
                        d.push(e);
                        Some(canonical(n, &d))
                    })
                })
                .collect();
            level = next.into_iter().collect();
            level.sort();
            all.extend(level.iter().cloned());
        }
        all.into_iter()
            .filter(|e| e.iter().fold(0, |a, b| a | b) == full)
            .map(|e| {
                let mut e = e;
                e.sort_by(|a, b| clutter::cmp_sets(*a, *b));
                Clutter { vertices: (1..=n).map(|i| format!("x{i}")).collect(), edges: e }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bipartite_and_cycles() {
        assert!(is_bipartite(&path(3)).unwrap().verdict);
        let c5 = is_bipartite(&cycle(5)).unwrap();
        assert!(!c5.verdict);
        assert_eq!(c5.odd_cycle.unwrap().len(), 5);
        assert_eq!(primitive_cycle_count(&cycle(4), 14).unwrap(), 1);
        assert_eq!(primitive_cycle_count(&complete_bipartite(3, 3), 14).unwrap(), 9);
    }

    #[test]
    fn graph_counts() {
        // unlabelled graphs on 1..=5 vertices
        let counts: Vec<usize> = (1..=5).map(|n| enumerate::graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn posets() {
        let p = Poset::parse("1 < 2\n1 < 3\n2 < 6\n3 < 6\n").unwrap();
        assert_eq!(comparability_graph(&p).unwrap().q(), 5);
        let d = dilworth(&p);
        assert_eq!(d.antichain, vec!["2".to_string(), "3".to_string()]);
        assert_eq!(d.chains.len(), 2);
        assert_eq!(mirsky(&p).chain.len(), 3);
    }
}
