use std::path::Path;

use clutter_algebra::canonical::gorenstein_vertex_pair;
use clutter_algebra::clutter::{alpha0, packing_property, perfect_matching};
use clutter_algebra::graphs::enumerate;
use clutter_algebra::polyhedra::{is_unimodular_simplex, lifted_triangulation};
use clutter_algebra::rational::rat;
use clutter_algebra::rounding::{irp_le, mfmc, stacked_delta};
use clutter_algebra::semigroup::is_hilbert_basis;
use clutter_algebra::{Clutter, Error, Int, IntVec, Result};
use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Conjecture {
    /// Packing property implies max-flow min-cut.
    PackingMfmc,
    /// Uniform with packing: K[Pt] equals the Ehrhart ring of P.
    PackingEhrhart,
    /// Uniform with packing: the lifted edge vectors span a saturated lattice (delta_r = 1).
    PackingFreeQuotient,
    /// Uniform with max-flow min-cut: the edge cone has a unimodular regular triangulation.
    MfmcUnimodularTriangulation,
    /// Connected graphs whose packing system rounds: Gorenstein iff every maximal vertex has -a = 1/d + |l|.
    GorensteinVertexEquality,
}

pub struct SweepConfig {
    pub conjecture: Conjecture,
    pub max_vertices: usize,
    pub max_edges: usize,
    pub uniform_only: bool,
    pub minor_cap: usize,
    pub triangulation_tries: usize,
    pub seed: u64,
}

/// Evaluation of one instance.
struct Row {
    clutter: Clutter,
    premise: bool,
    /// `None` when the conclusion was not evaluated or left open.
    conclusion: Option<bool>,
    note: Value,
}

fn instances(cfg: &SweepConfig, graphs_only: bool, connected: bool) -> Vec<Clutter> {
    let mut out = Vec::new();
    for n in 1..=cfg.max_vertices {
        let cs = if graphs_only { enumerate::graph_clutters(n, connected) } else { enumerate::clutters(n, cfg.max_edges) };
        out.extend(cs.into_iter().filter(|c| c.q() <= cfg.max_edges || graphs_only));
    }
    if cfg.uniform_only {
        out.retain(|c| c.is_uniform().is_some());
    }
    out
}

fn lifted(c: &Clutter) -> Vec<IntVec> {
    c.edge_vectors()
        .into_iter()
        .map(|mut v| {
            v.push(Int::from(1));
            v
        })
        .collect()
}

fn has_packing(c: &Clutter, cap: usize) -> Result<bool> {
    Ok(packing_property(c, cap)?.is_none())
}

fn evaluate(cfg: &SweepConfig, c: &Clutter) -> Result<Row> {
    let row = |premise, conclusion, note| Row { clutter: c.clone(), premise, conclusion, note };
    match cfg.conjecture {
        Conjecture::PackingMfmc => {
            let p = has_packing(c, cfg.minor_cap)?;
            let m = if p { Some(mfmc(c)?.verdict) } else { None };
            Ok(row(p, m, Value::Null))
        }
        Conjecture::PackingEhrhart => {
            let p = c.is_uniform().is_some() && has_packing(c, cfg.minor_cap)?;
            if !p {
                return Ok(row(false, None, Value::Null));
            }
            let hb = is_hilbert_basis(&lifted(c))?.verdict;
            let d = stacked_delta(c)?;
            Ok(row(true, Some(hb && d == Int::from(1)), json!({"lifted_hilbert_basis": hb, "delta": d.to_string()})))
        }
        Conjecture::PackingFreeQuotient => {
            let p = c.is_uniform().is_some() && has_packing(c, cfg.minor_cap)?;
            if !p {
                return Ok(row(false, None, Value::Null));
            }
            let d = stacked_delta(c)?;
            let known = perfect_matching(c).is_some() && alpha0(c) == 2;
            if known && d != Int::from(1) {
                return Err(Error::CrossCheck(format!("delta {d} on a packing clutter with a perfect matching and alpha0 = 2")));
            }
            Ok(row(true, Some(d == Int::from(1)), json!({"delta": d.to_string(), "perfect_matching_alpha0_two": known})))
        }
        Conjecture::MfmcUnimodularTriangulation => {
            let p = c.is_uniform().is_some() && mfmc(c)?.verdict;
            if !p {
                return Ok(row(false, None, Value::Null));
            }
            let pts = c.edge_vectors();
            let mut rng = rand::rngs::StdRng::seed_from_u64(cfg.seed ^ hash_edges(c));
            for k in 0..cfg.triangulation_tries {
                let w: Vec<_> = (0..pts.len())
                    .map(|i| if k == 0 { rat((i * i) as i64, 1) } else { rat(rng.gen_range(0..1000), 1) })
                    .collect();
                let t = lifted_triangulation(&pts, &w)?;
                let mut ok = true;
                for s in &t.simplices {
                    if !is_unimodular_simplex(&pts, s)? {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    return Ok(row(true, Some(true), json!({"weights": t.weights, "simplices": t.simplices})));
                }
            }
            // no unimodular one among the weights tried: open, not a violation
            Ok(row(true, None, json!({"tries": cfg.triangulation_tries})))
        }
        Conjecture::GorensteinVertexEquality => {
            let a = c.incidence_matrix();
            let p = irp_le(&a)?.verdict;
            if !p {
                return Ok(row(false, None, Value::Null));
            }
            let (gor, eq) = gorenstein_vertex_pair(&a)?;
            Ok(row(true, Some(gor == eq), json!({"gorenstein": gor, "vertex_equality": eq})))
        }
    }
}

fn hash_edges(c: &Clutter) -> u64 {
    c.edges.iter().fold(0xcbf29ce484222325u64, |h, &e| (h ^ e).wrapping_mul(0x100000001b3))
}

/// Runs the sweep; violators are written to `violators_dir` as clutter files when given.
pub fn run(cfg: &SweepConfig, violators_dir: Option<&Path>) -> Result<Value> {
    let (graphs_only, connected) = match cfg.conjecture {
        Conjecture::GorensteinVertexEquality => (true, true),
        _ => (false, false),
    };
    let cs = instances(cfg, graphs_only, connected);
    let rows: Vec<Result<Row>> = cs.par_iter().map(|c| evaluate(cfg, c)).collect();
    let mut premise = 0;
    let mut open = 0;
    let mut over_cap = 0;
    let mut violators: Vec<String> = Vec::new();
    let mut log: Vec<Value> = Vec::new();
    for r in rows {
        let r = match r {
            Ok(r) => r,
            Err(Error::OverCap(_)) => {
                over_cap += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        if !r.premise {
            continue;
        }
        premise += 1;
        match r.conclusion {
            Some(false) => violators.push(r.clutter.to_string()),
            None => open += 1,
            Some(true) => {}
        }
        if cfg.conjecture == Conjecture::GorensteinVertexEquality {
            log.push(json!({"graph": r.clutter.to_string(), "pair": r.note}));
        }
    }
    if let Some(dir) = violators_dir {
        std::fs::create_dir_all(dir).map_err(|e| Error::Precondition(e.to_string()))?;
        for (i, v) in violators.iter().enumerate() {
            std::fs::write(dir.join(format!("violator-{:04}.clt", i + 1)), v).map_err(|e| Error::Precondition(e.to_string()))?;
        }
    }
    Ok(json!({
        "conjecture": cfg.conjecture.to_possible_value().map(|v| v.get_name().to_string()),
        "max_vertices": cfg.max_vertices,
        "max_edges": cfg.max_edges,
        "uniform_only": cfg.uniform_only,
        "instances": cs.len(),
        "premise_holds": premise,
        "open": open,
        "over_cap": over_cap,
        "violators": violators,
        "log": log,
    }))
}
