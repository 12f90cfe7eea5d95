//! Normality of monomial ideals, integer rounding of the covering, packing and equality systems,
//! max-flow min-cut, and the reports tying them together.

use crate::clutter::{self, Clutter, Mask, members};
use crate::error::{Error, Result};
use crate::int::{Int, IntVec, is_zero_vec};
use crate::linalg::{IntMatrix, delta_r, lattice_quotient};
use crate::polyhedra::{Inequality, Polyhedron, covering_polyhedron, is_integral, packing_polyhedron};
use crate::rational::Rational;
use crate::semigroup::is_hilbert_basis;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{Value, json};
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

/// Default right-hand-side box `[0, 3]^n` for the LP/IP falsifiers.
pub const DEFAULT_BOX: u32 = 3;
/// Largest number of right-hand sides a falsifier visits; the box shrinks to fit.
pub const DEFAULT_BOX_LIMIT: usize = 60_000;
/// Largest number of vectors `w <= v_i` for the subring route of the packing system.
pub const DEFAULT_SUBRING_CAP: usize = 200;
pub const DEFAULT_MINOR_CAP: usize = 10;

// ---------------------------------------------------------------------------
// reports

/// One verdict of a report. `None` means the clause was not evaluated (over a cap).
#[derive(Clone, Debug, Serialize)]
pub struct Clause {
    pub verdict: Option<bool>,
    pub method: String,
    pub certificate: Value,
}

/// Named verdicts plus the cross-checks that were run on them.
#[derive(Clone, Debug, Default, Serialize)]
pub struct PropertyReport {
    pub verdicts: BTreeMap<String, Clause>,
    pub cross_checks: Vec<String>,
}

impl PropertyReport {
    fn put(&mut self, name: &str, verdict: Option<bool>, method: &str, certificate: Value) {
        self.verdicts.insert(name.into(), Clause { verdict, method: method.into(), certificate });
    }

    /// The common value of all evaluated verdicts, if they agree.
    pub fn common_verdict(&self) -> Option<bool> {
        let vals: BTreeSet<bool> = self.verdicts.values().filter_map(|c| c.verdict).collect();
        if vals.len() == 1 { vals.into_iter().next() } else { None }
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.verdicts.get(name).and_then(|c| c.verdict)
    }

    /// `{"name": {"verdict": .., "certificate": ..}, .., "cross_checks": [..]}`
    pub fn to_json(&self) -> Value {
        let mut m = serde_json::Map::new();
        for (k, c) in &self.verdicts {
            m.insert(k.clone(), json!({"verdict": c.verdict, "method": c.method, "certificate": c.certificate}));
        }
        m.insert("cross_checks".into(), json!(self.cross_checks));
        Value::Object(m)
    }
}

fn cross(ok: bool, what: impl Into<String>) -> Result<()> {
    if ok { Ok(()) } else { Err(Error::CrossCheck(what.into())) }
}

// ---------------------------------------------------------------------------
// normality

/// Verdict for the normality of `R[It]`; the witness is `(a, b)` with `x^a t^b` in the
/// integral closure of `I^b` but not in `I^b`.
#[derive(Clone, Debug, Serialize)]
pub struct NormalityVerdict {
    pub verdict: bool,
    pub witness: Option<IntVec>,
}

/// The Rees generators `e_1, ..., e_n, (v_1, 1), ..., (v_q, 1)`.
pub fn rees_generators(gens: &[IntVec]) -> Result<Vec<IntVec>> {
    let n = gens.first().map(|g| g.len()).ok_or(Error::Precondition("no generators".into()))?;
    let mut out = Vec::new();
    for i in 0..n {
        let mut e = vec![Int::zero(); n + 1];
        e[i] = Int::one();
        out.push(e);
    }
    for g in gens {
        if g.len() != n {
            return Err(Error::Dimension("generators of different lengths".into()));
        }
        if is_zero_vec(g) || g.iter().any(|x| x.is_negative()) {
            return Err(Error::Precondition("generators must be nonzero and nonnegative".into()));
        }
        let mut v = g.clone();
        v.push(Int::one());
        out.push(v);
    }
    Ok(out)
}

/// Normality of the ideal generated by `x^{g}` for the given exponent vectors.
pub fn is_normal_ideal(gens: &[IntVec]) -> Result<NormalityVerdict> {
    let hv = is_hilbert_basis(&rees_generators(gens)?)?;
    Ok(NormalityVerdict { verdict: hv.verdict, witness: hv.certificate })
}

pub fn is_normal_edge_ideal(c: &Clutter) -> Result<NormalityVerdict> {
    is_normal_ideal(&c.edge_vectors())
}

/// Normality of the ideal of a family of vertex sets, on the vertices they use.
fn normal_masks(edges: &[Mask]) -> Result<bool> {
    let support: Vec<usize> = members(edges.iter().fold(0, |m, e| m | e));
    if edges.is_empty() {
        return Ok(true);
    }
    let gens: Vec<IntVec> =
        edges.iter().map(|&e| support.iter().map(|&i| if e >> i & 1 == 1 { Int::one() } else { Int::zero() }).collect()).collect();
    Ok(is_normal_ideal(&gens)?.verdict)
}

// ---------------------------------------------------------------------------
// small-integer helpers for the falsifiers

fn small_columns(a: &IntMatrix) -> Result<Vec<Vec<i64>>> {
    a.columns()
        .iter()
        .map(|c| c.iter().map(|x| x.to_i64().filter(|v| *v >= 0).ok_or(Error::Precondition("matrix must be nonnegative and small".into()))).collect())
        .collect()
}

/// Vertices as (numerator vector, common denominator).
fn scaled_vertices(p: &Polyhedron) -> Result<Vec<(Vec<i64>, i64)>> {
    p.vertices
        .iter()
        .map(|v| {
            let den = v.iter().fold(Int::one(), |d, x| d.lcm(x.denom()));
            let num: Option<Vec<i64>> = v.iter().map(|x| (x.numer() * &(&den / x.denom())).to_i64()).collect();
            match (num, den.to_i64()) {
                (Some(n), Some(d)) => Ok((n, d)),
                _ => Err(Error::OverCap("vertex entries exceed 64 bits".into())),
            }
        })
        .collect()
}

fn sdot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn rat_string(num: i64, den: i64) -> String {
    let r = Rational::new(Int::from(num), Int::from(den));
    r.to_string()
}

/// Right-hand sides in `[0, b]^n` (the largest `b` not above `box_max` whose box fits `limit`),
/// nonzero, sorted by total then lexicographically.
fn box_points(n: usize, box_max: u32, limit: usize) -> (u32, Vec<Vec<i64>>) {
    let mut b = box_max.max(1);
    while b > 1 && (b as f64 + 1.0).powi(n as i32) > limit as f64 {
        b -= 1;
    }
    let mut pts = Vec::new();
    let mut x = vec![0i64; n];
    'outer: loop {
        if x.iter().any(|&v| v > 0) {
            pts.push(x.clone());
            if pts.len() >= limit {
                break;
            }
        }
        for k in 0..n {
            x[k] += 1;
            if x[k] <= b as i64 {
                continue 'outer;
            }
            x[k] = 0;
        }
        break;
    }
    pts.sort_by(|p, q| p.iter().sum::<i64>().cmp(&q.iter().sum::<i64>()).then(p.cmp(q)));
    (b, pts)
}

/// Outcome of a bounded search over right-hand sides.
#[derive(Clone, Debug, Serialize)]
pub struct FalsifierOutcome {
    pub box_max: u32,
    pub checked: usize,
    pub violation: Option<RoundingViolation>,
}

/// A right-hand side where the rounded LP optimum and the IP optimum differ.
#[derive(Clone, Debug, Serialize)]
pub struct RoundingViolation {
    pub rhs: Vec<i64>,
    pub lp: String,
    pub rounded_lp: i64,
    /// `None` when the integer program is infeasible.
    pub ip: Option<i64>,
}

fn run_box<F>(n: usize, box_max: u32, limit: usize, test: F) -> FalsifierOutcome
where
    F: Fn(&[i64]) -> Option<RoundingViolation> + Sync,
{
    let (b, pts) = box_points(n, box_max, limit);
    let violation = pts.par_iter().find_map_first(|w| test(w));
    FalsifierOutcome { box_max: b, checked: pts.len(), violation }
}

// covering: max{|y| : Ay <= w, y in N^q} against floor(min{<w,x> : x in Q(A)})

fn pack_columns(cols: &[Vec<i64>], w: &[i64], target: i64) -> i64 {
    fn go(cols: &[Vec<i64>], min_tail: &[i64], j: usize, rem: &mut [i64], size: i64, best: &mut i64, target: i64) {
        if *best >= target {
            return;
        }
        if size > *best {
            *best = size;
        }
        if j == cols.len() {
            return;
        }
        let total: i64 = rem.iter().sum();
        if size + total / min_tail[j] <= *best {
            return;
        }
        let c = &cols[j];
        let kmax = c.iter().zip(rem.iter()).filter(|(a, _)| **a > 0).map(|(a, r)| r / a).min().unwrap_or(0);
        for k in (0..=kmax).rev() {
            for (r, a) in rem.iter_mut().zip(c) {
                *r -= k * a;
            }
            go(cols, min_tail, j + 1, rem, size + k, best, target);
            for (r, a) in rem.iter_mut().zip(c) {
                *r += k * a;
            }
            if *best >= target {
                return;
            }
        }
    }
    let mut min_tail = vec![i64::MAX; cols.len() + 1];
    for j in (0..cols.len()).rev() {
        min_tail[j] = min_tail[j + 1].min(cols[j].iter().sum::<i64>());
    }
    let mut rem = w.to_vec();
    let mut best = 0;
    go(cols, &min_tail, 0, &mut rem, 0, &mut best, target);
    best
}

/// Bounded LP/IP search for a violation of integer rounding of `xA >= 1, x >= 0`.
pub fn covering_falsifier(a: &IntMatrix, box_max: u32, limit: usize) -> Result<FalsifierOutcome> {
    let cols = small_columns(a)?;
    if cols.iter().any(|c| c.iter().all(|&x| x == 0)) {
        return Err(Error::Precondition("zero column: the covering system is infeasible".into()));
    }
    let verts = scaled_vertices(&covering_polyhedron(a)?)?;
    Ok(run_box(a.rows, box_max, limit, |w| {
        let (num, den) = verts.iter().map(|(l, d)| (sdot(l, w), *d)).min_by(|x, y| (x.0 as i128 * y.1 as i128).cmp(&(y.0 as i128 * x.1 as i128)))?;
        let floor = num.div_euclid(den);
        let ip = pack_columns(&cols, w, floor);
        (ip < floor).then(|| RoundingViolation { rhs: w.to_vec(), lp: rat_string(num, den), rounded_lp: floor, ip: Some(pack_columns(&cols, w, i64::MAX)) })
    }))
}

// packing: min{|y| : Ay >= a, y in N^q} against ceil(max{<a,x> : x in P})

fn cover_with(cols: &[Vec<i64>], rem: &[i64], k: i64, failed: &mut HashSet<(Vec<i64>, i64)>) -> bool {
    let Some(i) = rem.iter().position(|&r| r > 0) else { return true };
    if k == 0 || failed.contains(&(rem.to_vec(), k)) {
        return false;
    }
    for c in cols.iter().filter(|c| c[i] > 0) {
        let next: Vec<i64> = rem.iter().zip(c).map(|(r, a)| (r - a).max(0)).collect();
        if cover_with(cols, &next, k - 1, failed) {
            return true;
        }
    }
    failed.insert((rem.to_vec(), k));
    false
}

/// Bounded LP/IP search for a violation of integer rounding of `x >= 0, xA <= 1`.
pub fn packing_falsifier(a: &IntMatrix, box_max: u32, limit: usize) -> Result<FalsifierOutcome> {
    let cols = small_columns(a)?;
    let p = packing_polyhedron(a)?;
    let verts = scaled_vertices(&p)?;
    let free: Vec<bool> = (0..a.rows).map(|i| cols.iter().all(|c| c[i] == 0)).collect();
    Ok(run_box(a.rows, box_max, limit, |w| {
        if w.iter().zip(&free).any(|(x, f)| *x > 0 && *f) {
            return None;
        }
        let (num, den) = verts.iter().map(|(l, d)| (sdot(l, w), *d)).max_by(|x, y| (x.0 as i128 * y.1 as i128).cmp(&(y.0 as i128 * x.1 as i128)))?;
        let ceil = -(-num).div_euclid(den);
        let mut failed = HashSet::new();
        if cover_with(&cols, w, ceil, &mut failed) {
            return None;
        }
        let ip = (ceil + 1..).find(|&k| cover_with(&cols, w, k, &mut failed));
        Some(RoundingViolation { rhs: w.to_vec(), lp: rat_string(num, den), rounded_lp: ceil, ip })
    }))
}

// equality: min{|y| : Ay = a, y in N^q} against ceil(max{<a,x> : xA <= 1})

fn exact_with(cols: &[Vec<i64>], rem: &[i64], k: i64, failed: &mut HashSet<(Vec<i64>, i64)>) -> bool {
    let Some(i) = rem.iter().position(|&r| r > 0) else { return true };
    if k == 0 || failed.contains(&(rem.to_vec(), k)) {
        return false;
    }
    for c in cols.iter().filter(|c| c[i] > 0 && c.iter().zip(rem).all(|(a, r)| a <= r)) {
        let next: Vec<i64> = rem.iter().zip(c).map(|(r, a)| r - a).collect();
        if exact_with(cols, &next, k - 1, failed) {
            return true;
        }
    }
    failed.insert((rem.to_vec(), k));
    false
}

/// Bounded LP/IP search for a violation of integer rounding of `xA <= 1` (x free).
pub fn equality_falsifier(a: &IntMatrix, box_max: u32, limit: usize) -> Result<FalsifierOutcome> {
    let cols = small_columns(a)?;
    let ineqs: Vec<Inequality> = a.columns().iter().map(|c| Inequality { normal: c.iter().map(|x| -x).collect(), offset: -Int::one() }).collect();
    let p = Polyhedron::from_inequalities(a.rows, ineqs)?;
    let verts = scaled_vertices(&p)?;
    let small = |v: &IntVec| -> Result<Vec<i64>> { v.iter().map(|x| x.to_i64().ok_or(Error::OverCap("ray entries exceed 64 bits".into()))).collect() };
    let rays: Vec<Vec<i64>> = p.rays.iter().map(small).collect::<Result<_>>()?;
    let lin: Vec<Vec<i64>> = p.lineality.iter().map(small).collect::<Result<_>>()?;
    let cols: Vec<Vec<i64>> = cols.into_iter().filter(|c| c.iter().any(|&x| x != 0)).collect();
    Ok(run_box(a.rows, box_max, limit, |w| {
        if lin.iter().any(|l| sdot(l, w) != 0) || rays.iter().any(|r| sdot(r, w) > 0) {
            return None;
        }
        let (num, den) = verts.iter().map(|(l, d)| (sdot(l, w), *d)).max_by(|x, y| (x.0 as i128 * y.1 as i128).cmp(&(y.0 as i128 * x.1 as i128)))?;
        let ceil = -(-num).div_euclid(den);
        let mut failed = HashSet::new();
        if exact_with(&cols, w, ceil, &mut failed) {
            return None;
        }
        let total: i64 = w.iter().sum();
        let ip = (ceil + 1..=total.max(ceil + 1)).find(|&k| exact_with(&cols, w, k, &mut failed));
        Some(RoundingViolation { rhs: w.to_vec(), lp: rat_string(num, den), rounded_lp: ceil, ip })
    }))
}

// ---------------------------------------------------------------------------
// the three rounding systems

/// Verdict of a rounding check with its semigroup certificate and the bounded falsifier run.
#[derive(Clone, Debug, Serialize)]
pub struct RoundingVerdict {
    pub verdict: bool,
    pub method: String,
    /// Lattice point of the relevant cone outside the generated semigroup.
    pub witness: Option<IntVec>,
    pub falsifier: FalsifierOutcome,
    pub cross_checks: Vec<String>,
}

#[derive(Clone, Copy, Debug)]
pub struct RoundingOptions {
    pub box_max: u32,
    pub box_limit: usize,
    pub subring_cap: usize,
}

impl Default for RoundingOptions {
    fn default() -> Self {
        RoundingOptions { box_max: DEFAULT_BOX, box_limit: DEFAULT_BOX_LIMIT, subring_cap: DEFAULT_SUBRING_CAP }
    }
}

fn check_matrix(a: &IntMatrix) -> Result<()> {
    if a.rows == 0 || a.cols == 0 {
        return Err(Error::Dimension("empty matrix".into()));
    }
    if !a.is_nonnegative() {
        return Err(Error::Precondition("matrix must be nonnegative".into()));
    }
    Ok(())
}

/// Integer rounding of `xA >= 1, x >= 0`: normality of the Rees algebra of the column ideal.
pub fn irp_ge(a: &IntMatrix) -> Result<RoundingVerdict> {
    irp_ge_with(a, RoundingOptions::default())
}

pub fn irp_ge_with(a: &IntMatrix, opt: RoundingOptions) -> Result<RoundingVerdict> {
    check_matrix(a)?;
    let nv = is_normal_ideal(&a.columns())?;
    let f = covering_falsifier(a, opt.box_max, opt.box_limit)?;
    if nv.verdict {
        cross(f.violation.is_none(), format!("Rees algebra normal but covering rounding fails at {:?}", f.violation.as_ref().map(|v| &v.rhs)))?;
    }
    Ok(RoundingVerdict {
        verdict: nv.verdict,
        method: "Rees algebra normality".into(),
        witness: nv.witness,
        falsifier: f,
        cross_checks: vec!["bounded LP/IP search".into()],
    })
}

/// All `alpha` in N^n with `alpha <= v_i` for some column `v_i`, sorted; `None` past the cap.
pub fn vectors_below_columns(a: &IntMatrix, cap: usize) -> Result<Option<Vec<IntVec>>> {
    let cols = small_columns(a)?;
    let mut out: BTreeSet<Vec<i64>> = BTreeSet::new();
    for c in &cols {
        let size: f64 = c.iter().map(|&x| x as f64 + 1.0).product();
        if size > cap as f64 {
            return Ok(None);
        }
        let mut x = vec![0i64; c.len()];
        'outer: loop {
            out.insert(x.clone());
            if out.len() > cap {
                return Ok(None);
            }
            for k in 0..x.len() {
                x[k] += 1;
                if x[k] <= c[k] {
                    continue 'outer;
                }
                x[k] = 0;
            }
            break;
        }
    }
    Ok(Some(out.into_iter().map(|v| v.into_iter().map(Int::from).collect()).collect()))
}

/// Normality of `K[x^{w_1} t, ..., x^{w_r} t]` for the vectors below the columns.
/// `Ok(None)` when there are more than `cap` such vectors.
pub fn subring_below_columns_normal(a: &IntMatrix, cap: usize) -> Result<Option<NormalityVerdict>> {
    let Some(ws) = vectors_below_columns(a, cap)? else { return Ok(None) };
    let lifted: Vec<IntVec> = ws
        .into_iter()
        .map(|mut w| {
            w.push(Int::one());
            w
        })
        .collect();
    let hv = is_hilbert_basis(&lifted)?;
    Ok(Some(NormalityVerdict { verdict: hv.verdict, witness: hv.certificate }))
}

/// Integer rounding of `x >= 0, xA <= 1`.
///
/// Decided by normality of the subring generated by the vectors below the columns; past the
/// cap a violation found by the bounded search decides false, otherwise the call is over cap.
/// Binary matrices are also checked against the covering system of the complemented matrix.
pub fn irp_le(a: &IntMatrix) -> Result<RoundingVerdict> {
    irp_le_with(a, RoundingOptions::default())
}

pub fn irp_le_with(a: &IntMatrix, opt: RoundingOptions) -> Result<RoundingVerdict> {
    check_matrix(a)?;
    let f = packing_falsifier(a, opt.box_max, opt.box_limit)?;
    let mut checks = vec!["bounded LP/IP search".to_string()];
    let (verdict, method, witness) = match subring_below_columns_normal(a, opt.subring_cap)? {
        Some(nv) => (nv.verdict, "normality of the subring of vectors below the columns", nv.witness),
        None => match &f.violation {
            Some(_) => (false, "bounded LP/IP search", None),
            None => return Err(Error::OverCap(format!("more than {} vectors below the columns and no violation in the box", opt.subring_cap))),
        },
    };
    if verdict {
        cross(f.violation.is_none(), format!("packing subring normal but rounding fails at {:?}", f.violation.as_ref().map(|v| &v.rhs)))?;
    }
    if let (true, Ok(star)) = (a.is_binary(), complement_matrix(a)) {
        let nv = is_normal_ideal(&star.columns())?;
        cross(nv.verdict == verdict, format!("packing rounding {verdict} but Rees algebra of the complements normal = {}", nv.verdict))?;
        checks.push("Rees algebra of the complemented columns".into());
    }
    Ok(RoundingVerdict { verdict, method: method.into(), witness, falsifier: f, cross_checks: checks })
}

/// `1 - A` for a binary matrix; errors if a column becomes zero.
pub fn complement_matrix(a: &IntMatrix) -> Result<IntMatrix> {
    if !a.is_binary() {
        return Err(Error::Precondition("binary matrix required".into()));
    }
    let cols: Vec<IntVec> = a.columns().iter().map(|c| c.iter().map(|x| Int::one() - x).collect()).collect();
    if cols.iter().any(|c| is_zero_vec(c)) {
        return Err(Error::Precondition("a column is all ones, its complement is zero".into()));
    }
    Ok(IntMatrix::from_columns(&cols))
}

/// Integer rounding of `xA <= 1`: normality of `K[x^{v_1} t, ..., x^{v_q} t, t]`.
/// For uniform columns it is also checked as normality of the column semigroup plus a
/// torsion-free quotient `Z^n / ZA`.
pub fn irp_eq(a: &IntMatrix) -> Result<RoundingVerdict> {
    irp_eq_with(a, RoundingOptions::default())
}

pub fn irp_eq_with(a: &IntMatrix, opt: RoundingOptions) -> Result<RoundingVerdict> {
    check_matrix(a)?;
    let n = a.rows;
    let mut gens: Vec<IntVec> = a
        .columns()
        .into_iter()
        .map(|mut c| {
            c.push(Int::one());
            c
        })
        .collect();
    let mut t = vec![Int::zero(); n + 1];
    t[n] = Int::one();
    gens.push(t);
    let hv = is_hilbert_basis(&gens)?;
    let f = equality_falsifier(a, opt.box_max, opt.box_limit)?;
    if hv.verdict {
        cross(f.violation.is_none(), format!("equality subring normal but rounding fails at {:?}", f.violation.as_ref().map(|v| &v.rhs)))?;
    }
    let mut checks = vec!["bounded LP/IP search".to_string()];
    let sums: BTreeSet<Int> = a.columns().iter().map(|c| c.iter().sum()).collect();
    if sums.len() == 1 {
        let cols_hb = is_hilbert_basis(&a.columns())?.verdict;
        let tf = lattice_quotient(a)?.is_torsion_free();
        cross(cols_hb == hv.verdict, format!("equality rounding {} but columns form a Hilbert basis = {cols_hb} (torsion free = {tf})", hv.verdict))?;
        checks.push("uniform columns: column semigroup normal with torsion-free quotient".into());
    }
    Ok(RoundingVerdict { verdict: hv.verdict, method: "normality of the subring with t adjoined".into(), witness: hv.certificate, falsifier: f, cross_checks: checks })
}

// ---------------------------------------------------------------------------
// max-flow min-cut

#[derive(Clone, Debug, Serialize)]
pub struct MfmcVerdict {
    pub verdict: bool,
    pub integral: bool,
    pub normal: bool,
    pub fractional_vertex: Option<Vec<String>>,
    pub gap: Option<IntVec>,
    /// Number of weights `w` with entries at most 2 where `beta1(C^w) = alpha0(C^w)` was compared.
    pub weights_checked: usize,
    /// A weight where the two numbers differ.
    pub weight_violation: Option<Vec<u32>>,
}

/// Max-flow min-cut: the covering polyhedron is integral and the Rees algebra is normal.
pub fn mfmc(c: &Clutter) -> Result<MfmcVerdict> {
    let a = c.incidence_matrix();
    let q = covering_polyhedron(&a)?;
    let iv = is_integral(&q);
    let nv = is_normal_edge_ideal(c)?;
    let verdict = iv.verdict && nv.verdict;
    let n = c.n();
    let b = if 3f64.powi(n as i32) <= DEFAULT_BOX_LIMIT as f64 { 2 } else { 1 };
    let (_, pts) = box_points(n, b, DEFAULT_BOX_LIMIT);
    let bad = pts.par_iter().find_map_first(|w| {
        let w: Vec<u32> = w.iter().map(|&x| x as u32).collect();
        let a0 = clutter::alpha0_parallelization(c, &w);
        let b1 = clutter::beta1_parallelization_bound(c, &w, 2).ok()?;
        (a0 != b1).then_some(w)
    });
    if verdict {
        cross(bad.is_none(), format!("max-flow min-cut holds but beta1 != alpha0 at weight {bad:?}"))?;
    }
    Ok(MfmcVerdict {
        verdict,
        integral: iv.verdict,
        normal: nv.verdict,
        fractional_vertex: iv.certificate.map(|v| v.iter().map(|x| x.to_string()).collect()),
        gap: nv.witness,
        weights_checked: pts.len(),
        weight_violation: bad,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TorsionFreeVerdict {
    pub verdict: bool,
    /// `I^i = I^{(i)}` for `i = 1, 2, ...` as far as compared.
    pub powers_equal: Vec<bool>,
    /// `(i, a)`: `x^a` in the i-th symbolic power but not the ordinary power.
    pub witness: Option<(u32, Vec<u32>)>,
}

/// Largest vertex count for which symbolic and ordinary powers are compared.
pub const POWER_COMPARE_VERTICES: usize = 8;

/// Normally torsion-free edge ideal, decided as max-flow min-cut and compared with
/// symbolic versus ordinary powers up to the third.
pub fn normally_torsion_free(c: &Clutter) -> Result<TorsionFreeVerdict> {
    let m = mfmc(c)?;
    let mut powers_equal = Vec::new();
    let mut witness = None;
    if c.n() <= POWER_COMPARE_VERTICES {
        for i in 1..=3 {
            let ord = clutter::ordinary_power(c, i);
            let sym = clutter::symbolic_power(c, i)?;
            let eq = ord == sym;
            if !eq && witness.is_none() {
                witness = sym.generators.iter().find(|g| !ord.contains(g)).map(|g| (i, g.clone()));
            }
            powers_equal.push(eq);
        }
        if m.verdict {
            cross(powers_equal.iter().all(|&e| e), format!("max-flow min-cut holds but powers differ: {witness:?}"))?;
        }
    }
    Ok(TorsionFreeVerdict { verdict: m.verdict, powers_equal, witness })
}

// ---------------------------------------------------------------------------
// duality between a clutter and its complemented clutter

#[derive(Clone, Copy, Debug)]
pub struct DualityOptions {
    pub rounding: RoundingOptions,
}

impl Default for DualityOptions {
    fn default() -> Self {
        DualityOptions { rounding: RoundingOptions::default() }
    }
}

pub const CLAUSE_REES: &str = "rees-algebra-normal";
pub const CLAUSE_SUBRING: &str = "complement-subring-normal";
pub const CLAUSE_SHIFTED: &str = "shifted-generators-hilbert-basis";
pub const CLAUSE_COVERING: &str = "covering-system-rounding";
pub const CLAUSE_PACKING: &str = "complement-packing-rounding";

fn witness_json(w: &Option<IntVec>) -> Value {
    match w {
        Some(v) => json!({"lattice_point": v.iter().map(|x| x.to_string()).collect::<Vec<_>>()}),
        None => Value::Null,
    }
}

fn falsifier_json(f: &FalsifierOutcome) -> Value {
    json!({"box": f.box_max, "checked": f.checked, "violation": f.violation})
}

/// Five equivalent conditions for a clutter `C` with incidence matrix `A` and complemented
/// matrix `A*` (columns `1 - v_i`):
///
/// - the Rees algebra of `I(C)` is normal;
/// - the subring generated by `x^w t`, `w` below some column of `A*`, is normal;
/// - `{-e_i} ∪ {(1 - v_j, 1)}` is a Hilbert basis;
/// - `xA >= 1, x >= 0` has integer rounding (bounded LP/IP search);
/// - `x >= 0, xA* <= 1` has integer rounding (bounded LP/IP search).
///
/// The first three are exact; the last two are searches over a box of right-hand sides and
/// read true when no violation is found. A disagreement is a cross-check error.
pub fn duality_report(c: &Clutter, opt: DualityOptions) -> Result<PropertyReport> {
    let a = c.incidence_matrix();
    let star = complement_matrix(&a)?;
    let n = c.n();
    let ro = opt.rounding;
    let mut rep = PropertyReport::default();

    let ((rees, subring), (shifted, (cov, pack))) = rayon::join(
        || rayon::join(|| is_normal_ideal(&a.columns()), || subring_below_columns_normal(&star, ro.subring_cap)),
        || {
            rayon::join(
                || {
                    let mut gamma: Vec<IntVec> = (0..n)
                        .map(|i| {
                            let mut e = vec![Int::zero(); n + 1];
                            e[i] = -Int::one();
                            e
                        })
                        .collect();
                    for col in star.columns() {
                        let mut v = col;
                        v.push(Int::one());
                        gamma.push(v);
                    }
                    is_hilbert_basis(&gamma)
                },
                || rayon::join(|| covering_falsifier(&a, ro.box_max, ro.box_limit), || packing_falsifier(&star, ro.box_max, ro.box_limit)),
            )
        },
    );
    let (rees, subring, shifted, cov, pack) = (rees?, subring?, shifted?, cov?, pack?);

    rep.put(CLAUSE_REES, Some(rees.verdict), "Hilbert basis of the Rees cone", witness_json(&rees.witness));
    match &subring {
        Some(s) => rep.put(CLAUSE_SUBRING, Some(s.verdict), "Hilbert basis of the subring cone", witness_json(&s.witness)),
        None => rep.put(CLAUSE_SUBRING, None, "not evaluated: too many vectors below the complemented columns", Value::Null),
    }
    rep.put(CLAUSE_SHIFTED, Some(shifted.verdict), "Hilbert basis of the shifted cone", witness_json(&shifted.certificate));
    rep.put(CLAUSE_COVERING, Some(cov.violation.is_none()), "bounded LP/IP search", falsifier_json(&cov));
    rep.put(CLAUSE_PACKING, Some(pack.violation.is_none()), "bounded LP/IP search", falsifier_json(&pack));

    let exact: Vec<(&str, bool)> = [CLAUSE_REES, CLAUSE_SUBRING, CLAUSE_SHIFTED].iter().filter_map(|k| rep.get(k).map(|v| (*k, v))).collect();
    for w in exact.windows(2) {
        cross(w[0].1 == w[1].1, format!("{} = {} but {} = {}", w[0].0, w[0].1, w[1].0, w[1].1))?;
    }
    rep.cross_checks.push("exact clauses agree".into());
    if rees.verdict {
        cross(cov.violation.is_none(), format!("Rees algebra normal but covering rounding fails: {:?}", cov.violation))?;
        cross(pack.violation.is_none(), format!("Rees algebra normal but complement packing rounding fails: {:?}", pack.violation))?;
        rep.cross_checks.push("no rounding violation in the box".into());
    } else {
        rep.cross_checks.push(format!(
            "rounding searches found violations: covering {}, packing {}",
            cov.violation.is_some(),
            pack.violation.is_some()
        ));
    }
    Ok(rep)
}

// ---------------------------------------------------------------------------
// consequences for uniform clutters

#[derive(Clone, Debug, Serialize)]
pub struct UniformConsequences {
    pub uniform: Option<usize>,
    pub mfmc: bool,
    pub rank: usize,
    pub delta_r: String,
    pub columns_hilbert_basis: bool,
    pub perfect_matching: bool,
    pub alpha0: u32,
    /// The three implications were asserted (uniform clutter with max-flow min-cut).
    pub asserted: bool,
}

/// For a d-uniform clutter with max-flow min-cut: `Delta_r(A) = 1`, the columns form a
/// Hilbert basis, and a perfect matching exists iff `n = d * alpha0`. Non-uniform clutters
/// get the raw values only.
pub fn uniform_mfmc_consequences(c: &Clutter) -> Result<UniformConsequences> {
    let a = c.incidence_matrix();
    let m = mfmc(c)?;
    let rank = a.rank();
    let d = delta_r(&a, rank)?;
    let hb = is_hilbert_basis(&a.columns())?.verdict;
    let pm = clutter::perfect_matching(c).is_some();
    let a0 = clutter::alpha0(c);
    let uniform = c.is_uniform();
    let asserted = uniform.is_some() && m.verdict;
    if let (Some(k), true) = (uniform, m.verdict) {
        cross(d.is_one(), format!("uniform max-flow min-cut clutter with Delta_r = {d}"))?;
        cross(hb, "uniform max-flow min-cut clutter whose columns are not a Hilbert basis")?;
        cross(pm == (c.n() == k * a0 as usize), format!("perfect matching {pm} but n = {}, d * alpha0 = {}", c.n(), k * a0 as usize))?;
    }
    Ok(UniformConsequences { uniform, mfmc: m.verdict, rank, delta_r: d.to_string(), columns_hilbert_basis: hb, perfect_matching: pm, alpha0: a0, asserted })
}

/// `Delta_r` of the incidence matrix with a row of ones appended, `r` its rank.
pub fn stacked_delta(c: &Clutter) -> Result<Int> {
    let a = c.incidence_matrix();
    let ones = vec![Int::one(); a.cols];
    let b = a.with_row(&ones);
    delta_r(&b, b.rank())
}

// ---------------------------------------------------------------------------
// minors and parallelizations

#[derive(Clone, Debug, Serialize)]
pub struct MinimalNonNormal {
    pub verdict: bool,
    pub normal: bool,
    /// A proper minor that is not normal, as (deleted, contracted) vertex names.
    pub non_normal_minor: Option<(Vec<String>, Vec<String>)>,
}

/// Not normal while every proper minor is normal. Minors that are the unit ideal are skipped.
pub fn is_minimally_non_normal(c: &Clutter, cap: usize) -> Result<MinimalNonNormal> {
    let n = c.n();
    if n > cap {
        return Err(Error::OverCap(format!("{n} vertices exceed the minor cap {cap}")));
    }
    let normal = is_normal_edge_ideal(c)?.verdict;
    if normal {
        return Ok(MinimalNonNormal { verdict: false, normal, non_normal_minor: None });
    }
    let mut pairs = Vec::new();
    let mut code = vec![0u8; n];
    loop {
        let mut k = 0;
        loop {
            if k == n {
                break;
            }
            code[k] += 1;
            if code[k] < 3 {
                break;
            }
            code[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
        let del: Mask = (0..n).filter(|&i| code[i] == 1).fold(0, |m, i| m | 1 << i);
        let con: Mask = (0..n).filter(|&i| code[i] == 2).fold(0, |m, i| m | 1 << i);
        pairs.push((del, con));
    }
    let mut memo: HashMap<Vec<Mask>, bool> = HashMap::new();
    for (del, con) in pairs {
        let (edges, unit) = clutter::minor_masks(c, del, con);
        if unit {
            continue;
        }
        let ok = match memo.get(&edges) {
            Some(&v) => v,
            None => {
                let v = normal_masks(&edges)?;
                memo.insert(edges.clone(), v);
                v
            }
        };
        if !ok {
            return Ok(MinimalNonNormal { verdict: false, normal, non_normal_minor: Some((c.set_names(del), c.set_names(con))) });
        }
    }
    Ok(MinimalNonNormal { verdict: true, normal, non_normal_minor: None })
}

/// `(normal(C), normal(C^w))`; if the first holds the second must hold.
pub fn parallelization_preserves_normality_test(c: &Clutter, w: &[u32]) -> Result<(bool, bool)> {
    if w.iter().any(|&x| x > 3) {
        return Err(Error::OverCap("weight entries exceed 3".into()));
    }
    let premise = is_normal_edge_ideal(c)?.verdict;
    let p = clutter::parallelization(c, w)?;
    let conclusion = if p.edges.is_empty() { true } else { normal_masks(&p.edges)? };
    if premise {
        cross(conclusion, format!("normal clutter with a non-normal parallelization at {w:?}"))?;
    }
    Ok((premise, conclusion))
}
