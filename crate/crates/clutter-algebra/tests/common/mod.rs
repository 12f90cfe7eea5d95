//! Brute-force oracles written against plain machine integers, sharing no code with the library.
#![allow(dead_code)]

use std::collections::BTreeSet;

use clutter_algebra::{Clutter, Int, Rational};
use num_rational::Ratio;
use num_traits::{Signed, Zero};

pub type Q = Ratio<i128>;

pub fn ints(v: &[Int]) -> Vec<i64> {
    v.iter().map(|x| x.to_i64().unwrap()).collect()
}

pub fn big(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn to_q(r: &Rational) -> Q {
    Q::new(r.numer().to_i64().unwrap() as i128, r.denom().to_i64().unwrap() as i128)
}

pub fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Cofactor expansion along the first row.
pub fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut s = 0;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let sub: Vec<Vec<i128>> = m[1..].iter().map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| *x).collect()).collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        s += sign * m[0][j] * det(&sub);
    }
    s
}

/// Gcd of all r x r minors; zero when every minor vanishes.
pub fn minor_gcd(m: &[Vec<i64>], r: usize) -> i128 {
    let rows = m.len();
    let cols = m[0].len();
    let mut g = 0;
    for rs in combinations(rows, r) {
        for cs in combinations(cols, r) {
            let sub: Vec<Vec<i128>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j] as i128).collect()).collect();
            g = gcd(g, det(&sub));
        }
    }
    g
}

/// Unique solution of a square system by Gauss-Jordan elimination.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a.iter().zip(b).map(|(r, x)| r.iter().cloned().chain(std::iter::once(*x)).collect()).collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, p);
        let piv = m[c][c];
        for x in m[c].iter_mut() {
            *x /= piv;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c];
                for k in 0..=n {
                    let v = m[c][k];
                    m[r][k] -= f * v;
                }
            }
        }
    }
    Some(m.iter().map(|r| r[n]).collect())
}

/// Vertices of `{x : <a, x> >= b}` as feasible basic solutions.
pub fn basic_solutions(ineqs: &[(Vec<i64>, i64)], dim: usize) -> BTreeSet<Vec<Q>> {
    let mut out = BTreeSet::new();
    for pick in combinations(ineqs.len(), dim) {
        let a: Vec<Vec<Q>> = pick.iter().map(|&i| ineqs[i].0.iter().map(|&x| Q::from(x as i128)).collect()).collect();
        let b: Vec<Q> = pick.iter().map(|&i| Q::from(ineqs[i].1 as i128)).collect();
        if let Some(x) = solve(&a, &b) {
            let ok = ineqs.iter().all(|(n, o)| n.iter().zip(&x).map(|(p, q)| Q::from(*p as i128) * q).sum::<Q>() >= Q::from(*o as i128));
            if ok {
                out.insert(x);
            }
        }
    }
    out
}

/// Membership in the cone over `gens` by Caratheodory over nonsingular square subsets.
/// Assumes the generators span the ambient space.
pub fn in_cone(gens: &[Vec<i64>], p: &[i64]) -> bool {
    let d = p.len();
    if p.iter().all(|&x| x == 0) {
        return true;
    }
    for pick in combinations(gens.len(), d) {
        let a: Vec<Vec<Q>> = (0..d).map(|i| pick.iter().map(|&j| Q::from(gens[j][i] as i128)).collect()).collect();
        let b: Vec<Q> = p.iter().map(|&x| Q::from(x as i128)).collect();
        if let Some(l) = solve(&a, &b) {
            if l.iter().all(|x| !x.is_negative()) {
                return true;
            }
        }
    }
    false
}

pub fn full_rank(gens: &[Vec<i64>]) -> bool {
    let d = gens[0].len();
    combinations(gens.len(), d).iter().any(|pick| det(&pick.iter().map(|&j| gens[j].iter().map(|&x| x as i128).collect()).collect::<Vec<_>>()) != 0)
}

/// Irreducible lattice points of a cone inside the nonnegative box `[0, bound]^d`.
pub fn box_hilbert_basis(gens: &[Vec<i64>], bound: i64) -> BTreeSet<Vec<i64>> {
    let d = gens[0].len();
    let mut pts: Vec<Vec<i64>> = Vec::new();
    let mut cur = vec![0i64; d];
    loop {
        if cur.iter().any(|&x| x != 0) && in_cone(gens, &cur) {
            pts.push(cur.clone());
        }
        let mut k = 0;
        loop {
            if k == d {
                let set: BTreeSet<Vec<i64>> = pts.iter().cloned().collect();
                return pts
                    .iter()
                    .filter(|p| {
                        !pts.iter().any(|u| {
                            u != *p && u.iter().zip(p.iter()).all(|(a, b)| a <= b) && set.contains(&p.iter().zip(u).map(|(a, b)| a - b).collect::<Vec<_>>())
                        })
                    })
                    .cloned()
                    .collect();
            }
            cur[k] += 1;
            if cur[k] <= bound {
                break;
            }
            cur[k] = 0;
            k += 1;
        }
    }
}

/// Whether `target` is a nonnegative integer combination of nonnegative `gens`.
pub fn bounded_member(gens: &[Vec<i64>], target: &[i64]) -> bool {
    if target.iter().all(|&x| x == 0) {
        return true;
    }
    if target.iter().any(|&x| x < 0) {
        return false;
    }
    gens.iter().enumerate().any(|(i, g)| {
        g.iter().any(|&x| x != 0) && {
            let rest: Vec<i64> = target.iter().zip(g).map(|(a, b)| a - b).collect();
            bounded_member(&gens[i..], &rest)
        }
    })
}

pub fn subsets_of(m: u64) -> impl Iterator<Item = u64> {
    let mut s = Some(m);
    std::iter::from_fn(move || {
        let cur = s?;
        s = if cur == 0 { None } else { Some((cur - 1) & m) };
        Some(cur)
    })
}

/// Minimal vertex covers by scanning every subset.
pub fn brute_covers(n: usize, edges: &[u64]) -> BTreeSet<u64> {
    let hits = |s: u64| edges.iter().all(|e| e & s != 0);
    (0..1u64 << n).filter(|&s| hits(s) && (0..n).all(|i| s >> i & 1 == 0 || !hits(s & !(1 << i)))).collect()
}

pub fn brute_alpha0(n: usize, edges: &[u64]) -> u32 {
    (0..1u64 << n).filter(|&s| edges.iter().all(|e| e & s != 0)).map(|s| s.count_ones()).min().unwrap()
}

pub fn brute_beta1(edges: &[u64]) -> u32 {
    fn go(edges: &[u64], used: u64) -> u32 {
        match edges.split_first() {
            None => 0,
            Some((&e, rest)) => {
                let skip = go(rest, used);
                if e & used == 0 { skip.max(1 + go(rest, used | e)) } else { skip }
            }
        }
    }
    go(edges, 0)
}

pub fn minimal_sets(sets: &[u64]) -> BTreeSet<u64> {
    sets.iter().copied().filter(|&s| !sets.iter().any(|&t| t != s && t & s == t)).collect()
}

/// Clutter from arbitrary nonempty masks: keeps minimal sets, drops unused vertices.
pub fn clutter_from_masks(masks: &[u64]) -> Clutter {
    let edges: Vec<u64> = minimal_sets(masks).into_iter().collect();
    let used = edges.iter().fold(0, |a, e| a | e);
    let keep: Vec<usize> = (0..64).filter(|i| used >> i & 1 == 1).collect();
    let edges = edges.iter().map(|&e| keep.iter().enumerate().filter(|(_, i)| e >> **i & 1 == 1).fold(0u64, |m, (j, _)| m | 1 << j)).collect();
    let names = (1..=keep.len()).map(|i| format!("x{i}")).collect();
    Clutter::new(names, edges, false).unwrap()
}

/// Graph on the vertices touched by `pairs`.
pub fn graph_from_pairs(pairs: &[(usize, usize)]) -> Option<Clutter> {
    let masks: Vec<u64> = pairs.iter().filter(|(a, b)| a != b).map(|&(a, b)| 1 << a | 1 << b).collect();
    if masks.is_empty() { None } else { Some(clutter_from_masks(&masks)) }
}

pub fn neighbours(c: &Clutter) -> Vec<u64> {
    let mut adj = vec![0u64; c.n()];
    for &e in &c.edges {
        let v: Vec<usize> = (0..c.n()).filter(|i| e >> i & 1 == 1).collect();
        adj[v[0]] |= 1 << v[1];
        adj[v[1]] |= 1 << v[0];
    }
    adj
}

pub fn connected(c: &Clutter) -> bool {
    let adj = neighbours(c);
    let mut seen = 1u64;
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        for u in 0..c.n() {
            if adj[v] >> u & 1 == 1 && seen >> u & 1 == 0 {
                seen |= 1 << u;
                stack.push(u);
            }
        }
    }
    seen.count_ones() as usize == c.n()
}

/// Two-colouring by breadth-first search.
pub fn two_colourable(c: &Clutter) -> bool {
    let adj = neighbours(c);
    let mut colour = vec![-1i8; c.n()];
    for s in 0..c.n() {
        if colour[s] >= 0 {
            continue;
        }
        colour[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for u in 0..c.n() {
                if adj[v] >> u & 1 == 1 {
                    if colour[u] < 0 {
                        colour[u] = 1 - colour[v];
                        queue.push_back(u);
                    } else if colour[u] == colour[v] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn has_perfect_matching(c: &Clutter) -> bool {
    fn go(edges: &[u64], left: u64) -> bool {
        if left == 0 {
            return true;
        }
        let v = left.trailing_zeros();
        edges.iter().any(|&e| e >> v & 1 == 1 && e & left == e && go(edges, left & !e))
    }
    go(&c.edges, c.vertex_mask())
}
