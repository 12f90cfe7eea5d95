use clutter_algebra::canonical::{self, a_invariant_s, canonical_module_gens, is_gorenstein_s};
use clutter_algebra::clutter::{self, alpha0, beta1, blocker, minimal_vertex_covers, minor, packing_property, perfect_matching};
use clutter_algebra::graphs::{self, Poset};
use clutter_algebra::int::fmt_vec;
use clutter_algebra::linalg::{delta_r, snf};
use clutter_algebra::rounding::{self, DualityOptions, RoundingOptions};
use clutter_algebra::semigroup::hilbert_basis;
use clutter_algebra::symbolic::{self, parse_monomial, MonomialGen};
use clutter_algebra::{Clutter, Error, Int, IntMatrix, IntVec, Result};
use serde_json::{json, Value};

use crate::report::{Report, Status};

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).unwrap_or(Value::Null)
}

/// Reads a clutter file, or a binary matrix whose columns are the edges.
pub fn load_clutter(text: &str) -> Result<Clutter> {
    if first_line(text).is_some_and(|l| l.starts_with("vertices:")) {
        Clutter::parse(text)
    } else {
        let m = IntMatrix::parse(text)?;
        let c = Clutter::from_incidence(&m)?;
        if c.isolated() != 0 {
            return Err(Error::InvalidClutter("a row of the matrix is zero".into()));
        }
        Ok(c)
    }
}

/// Reads a matrix file, or a clutter file taken as its incidence matrix.
pub fn load_matrix(text: &str) -> Result<IntMatrix> {
    if first_line(text).is_some_and(|l| l.starts_with("vertices:")) {
        Ok(Clutter::parse(text)?.incidence_matrix())
    } else {
        IntMatrix::parse(text)
    }
}

fn first_line(text: &str) -> Option<&str> {
    text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty())
}

fn monomial_of(v: &IntVec, names: &[String]) -> String {
    let n = names.len();
    let u: Vec<u32> = v[..n].iter().map(|x| x.to_i64().unwrap_or(0) as u32).collect();
    let b = v.get(n).map(|x| x.to_i64().unwrap_or(0) as u32).unwrap_or(0);
    MonomialGen::new(u, b).render(names)
}

fn clutter_text(vertices: &[String], edges: &[Vec<String>]) -> String {
    let mut s = format!("vertices: {}\n", vertices.join(" "));
    for e in edges {
        s.push_str(&e.join(" "));
        s.push('\n');
    }
    s
}

fn render_gens(gens: &[MonomialGen], names: &[String]) -> Vec<String> {
    gens.iter().map(|g| g.render(names)).collect()
}

pub fn covers(c: &Clutter) -> Result<Report> {
    let cs = minimal_vertex_covers(c);
    Ok(Report::new("minimal-vertex-covers", Status::Done, "transversal enumeration")
        .line(format!("# {} minimal vertex covers", cs.covers.len()))
        .lines(cs.covers.iter().map(|s| s.join(" ")))
        .json(to_json(&cs.covers)))
}

pub fn blocker_cmd(c: &Clutter) -> Result<Report> {
    let b = blocker(c);
    Ok(Report::new("blocker", Status::Done, "clutter of minimal vertex covers")
        .line(b.to_string().trim_end().to_string())
        .json(json!({"vertices": b.vertices, "edges": b.edges.iter().map(|&e| b.set_names(e)).collect::<Vec<_>>()})))
}

pub fn minors(c: &Clutter, delete: &[String], contract: &[String]) -> Result<Report> {
    let m = minor(c, delete, contract)?;
    let r = Report::new("minor", Status::Done, "deletion removes edges through a vertex, contraction removes the vertex from every edge");
    if m.is_unit {
        return Ok(r.line("# an edge became empty: the minor is the unit ideal").json(json!({"unit": true})));
    }
    let edges: Vec<Vec<String>> = m.clutter.edges.iter().map(|&e| m.clutter.set_names(e)).collect();
    let keep: Vec<String> = m.clutter.vertices.clone();
    Ok(r.line(clutter_text(&keep, &edges).trim_end().to_string()).json(json!({"unit": false, "vertices": keep, "edges": edges})))
}

pub fn alpha_beta(c: &Clutter) -> Result<Report> {
    let (a, b) = (alpha0(c), beta1(c));
    Ok(Report::new("covering-and-matching-numbers", Status::Done, "exact minimum cover and maximum matching")
        .line(format!("alpha0 {a}"))
        .line(format!("beta1 {b}"))
        .json(json!({"alpha0": a, "beta1": b})))
}

pub fn koenig(c: &Clutter) -> Result<Report> {
    let (a, b) = (alpha0(c), beta1(c));
    let r = Report::new("koenig", Status::of(a == b), "covering number equals matching number")
        .line(format!("alpha0 {a}"))
        .line(format!("beta1 {b}"))
        .json(json!({"alpha0": a, "beta1": b}));
    Ok(if a == b { r } else { r.certificate(format!("alpha0 {a}\nbeta1 {b}")) })
}

pub fn packing(c: &Clutter, cap: usize) -> Result<Report> {
    let f = packing_property(c, cap)?;
    let r = Report::new("packing", Status::of(f.is_none()), "every minor satisfies the Konig property");
    Ok(match f {
        None => r,
        Some(m) => {
            let keep: Vec<String> = c.vertices.iter().filter(|v| !m.delete.contains(v) && !m.contract.contains(v)).cloned().collect();
            r.line(format!("delete: {}", m.delete.join(" ")))
                .line(format!("contract: {}", m.contract.join(" ")))
                .line(format!("alpha0 {} beta1 {}", m.alpha0, m.beta1))
                .certificate(clutter_text(&keep, &m.minor))
                .json(to_json(&m))
        }
    })
}

pub fn matching(c: &Clutter) -> Result<Report> {
    let m = perfect_matching(c);
    let r = Report::new("perfect-matching", Status::of(m.is_some()), "exact search for disjoint edges covering every vertex");
    Ok(match m {
        Some(edges) => r.lines(edges.iter().map(|e| e.join(" "))).json(to_json(&edges)),
        None => r.line(format!("# no perfect matching; beta1 {}", beta1(c))),
    })
}

pub fn balanced(m: &IntMatrix, cap: usize) -> Result<Report> {
    let h = clutter::is_balanced(m, cap)?;
    let r = Report::new("balanced", Status::of(h.is_none()), "no odd square submatrix with exactly two ones per row and column");
    Ok(match h {
        None => r,
        Some(h) => {
            let rows: Vec<usize> = h.rows.iter().map(|i| i + 1).collect();
            let cols: Vec<usize> = h.cols.iter().map(|j| j + 1).collect();
            let sub = m.submatrix(&h.rows, &h.cols);
            r.line(format!("rows {rows:?} columns {cols:?}")).certificate(sub.to_string()).json(json!({"rows": rows, "cols": cols}))
        }
    })
}

pub fn snf_cmd(m: &IntMatrix) -> Result<Report> {
    let s = snf(m)?;
    let d: Vec<String> = s.diag.iter().map(|x| x.to_string()).collect();
    let identity = s.diag.iter().all(|x| x.abs() == Int::from(1));
    Ok(Report::new("smith-normal-form", Status::Done, "unimodular row and column reduction")
        .line(format!("rank {}", s.rank))
        .line(format!("invariant factors {}", d.join(" ")))
        .line(format!("# diagonalizes to an identity: {identity}"))
        .json(json!({"rank": s.rank, "invariant_factors": d, "identity": identity})))
}

pub fn delta(m: &IntMatrix, r: Option<usize>) -> Result<Report> {
    let r = r.unwrap_or_else(|| m.rank());
    let d = delta_r(m, r)?;
    Ok(Report::new("delta", Status::Done, "gcd of the nonzero r x r minors, from the Smith normal form")
        .line(format!("r {r}"))
        .line(format!("delta {d}"))
        .json(json!({"r": r, "delta": d.to_string()})))
}

pub fn normal(c: &Clutter) -> Result<Report> {
    let v = rounding::is_normal_edge_ideal(c)?;
    let r = Report::new("normal", Status::of(v.verdict), "Rees algebra is normal iff the Rees generators form a Hilbert basis")
        .json(to_json(&v));
    Ok(match &v.witness {
        None => r,
        Some(w) => {
            let mono = monomial_of(w, &c.vertices);
            r.line(format!("# {mono} lies in the integral closure but not in the Rees algebra")).certificate(mono)
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum System {
    Ge,
    Le,
    Eq,
}

pub fn irp(m: &IntMatrix, system: System, opt: RoundingOptions) -> Result<Report> {
    let (name, basis, v) = match system {
        System::Ge => ("rounding-covering-system", "xA >= 1 rounds iff the Rees generators form a Hilbert basis", rounding::irp_ge_with(m, opt)?),
        System::Le => (
            "rounding-packing-system",
            "x >= 0, xA <= 1 rounds iff the lifted vectors below the columns form a Hilbert basis",
            rounding::irp_le_with(m, opt)?,
        ),
        System::Eq => ("rounding-equality-system", "xA <= 1 rounds iff the lifted columns and (0, 1) form a Hilbert basis", rounding::irp_eq_with(m, opt)?),
    };
    let mut r = Report::new(name, Status::of(v.verdict), basis).line(format!("# method: {}", v.method)).json(to_json(&v));
    if let Some(w) = &v.witness {
        r = r.line(format!("# Hilbert basis gap {}", fmt_vec(w)));
    }
    let f = &v.falsifier;
    r = r.line(format!("# box search: {} right-hand sides up to {}", f.checked, f.box_max));
    if let Some(x) = &f.violation {
        let ip = x.ip.map(|i| i.to_string()).unwrap_or_else(|| "infeasible".into());
        let rhs: Vec<String> = x.rhs.iter().map(|i| i.to_string()).collect();
        r = r
            .line(format!("# LP {} rounds to {}, IP {ip}", x.lp, x.rounded_lp))
            .certificate(format!("1 {}\n{}", rhs.len(), rhs.join(" ")));
    }
    Ok(r.checks(v.cross_checks.clone()))
}

pub fn mfmc(c: &Clutter) -> Result<Report> {
    let v = rounding::mfmc(c)?;
    let mut r = Report::new("max-flow-min-cut", Status::of(v.verdict), "Q(A) integral and the Rees algebra normal")
        .line(format!("integral {}", v.integral))
        .line(format!("normal {}", v.normal))
        .line(format!("# weightings checked {}", v.weights_checked))
        .json(to_json(&v));
    if let Some(x) = &v.fractional_vertex {
        r = r.line(format!("# fractional vertex of Q(A): {}", x.join(" ")));
    }
    if let Some(g) = &v.gap {
        r = r.line(format!("# {} in the integral closure only", monomial_of(g, &c.vertices)));
    }
    if let Some(w) = &v.weight_violation {
        let ws: Vec<String> = w.iter().map(|x| x.to_string()).collect();
        r = r.certificate(format!("1 {}\n{}", ws.len(), ws.join(" ")));
    } else if let Some(g) = &v.gap {
        r = r.certificate(monomial_of(g, &c.vertices));
    }
    Ok(r)
}

pub fn ntf(c: &Clutter) -> Result<Report> {
    let v = rounding::normally_torsion_free(c)?;
    let mut r = Report::new("normally-torsion-free", Status::of(v.verdict), "equivalent to max-flow min-cut; symbolic and ordinary powers compared")
        .json(to_json(&v));
    for (i, eq) in v.powers_equal.iter().enumerate() {
        r = r.line(format!("# power {}: symbolic equals ordinary {eq}", i + 1));
    }
    if let Some((i, a)) = &v.witness {
        let m = clutter::monomial_string(a, &c.vertices);
        r = r.line(format!("# {m} lies in the symbolic power {i} but not the ordinary one")).certificate(m);
    }
    Ok(r)
}

pub fn duality(c: &Clutter, opt: RoundingOptions) -> Result<Report> {
    let rep = rounding::duality_report(c, DualityOptions { rounding: opt })?;
    let status = match rep.common_verdict() {
        Some(v) => Status::of(v),
        None => Status::Done,
    };
    let mut r = Report::new("duality", status, "five equivalent conditions, each decided by its own route");
    for (k, cl) in &rep.verdicts {
        let v = cl.verdict.map(|b| b.to_string()).unwrap_or_else(|| "not evaluated".into());
        r = r.line(format!("{k}: {v}  # {}", cl.method));
    }
    Ok(r.json(rep.to_json()).checks(rep.cross_checks.clone()))
}

pub fn uniform_consequences(c: &Clutter) -> Result<Report> {
    let u = rounding::uniform_mfmc_consequences(c)?;
    Ok(Report::new("uniform-mfmc-consequences", Status::Done, "a uniform clutter with max-flow min-cut has delta_r = 1, Hilbert basis columns, and a perfect matching iff n = d alpha0")
        .line(format!("uniform {}", u.uniform.map(|d| d.to_string()).unwrap_or_else(|| "no".into())))
        .line(format!("mfmc {}", u.mfmc))
        .line(format!("rank {}", u.rank))
        .line(format!("delta_r {}", u.delta_r))
        .line(format!("columns-hilbert-basis {}", u.columns_hilbert_basis))
        .line(format!("perfect-matching {}", u.perfect_matching))
        .line(format!("alpha0 {}", u.alpha0))
        .line(format!("# implications asserted {}", u.asserted))
        .json(to_json(&u)))
}

pub fn a_invariant(m: &IntMatrix) -> Result<Report> {
    let a = a_invariant_s(m)?;
    let verts = canonical::maximal_vertices(m)?;
    let mut r = Report::new("a-invariant", Status::Done, "minus the largest ceil(1/d + |l|) over the maximal vertices l of P")
        .line(format!("a {}", a.value))
        .json(json!({"a": a.value.to_string(), "scanned": a.scanned.as_ref().map(|s| s.to_string()), "maximal_vertices": to_json(&verts)}));
    if let Some(s) = &a.scanned {
        r = r.line(format!("# degree scan agrees: {s}"));
    }
    Ok(r)
}

pub fn canonical_cmd(c_text: &str, window: Option<i64>, perfect_graph: bool) -> Result<Report> {
    if perfect_graph {
        let g = load_clutter(c_text)?;
        let p = canonical::perfect_graph_canonical(&g)?;
                return Ok(Report::new("canonical-module", Status::Done, "interior lattice points of the cone over the maximal independent sets")
            .line(format!("a {}", p.module.a_invariant))
            .lines(p.module.render(&g.vertices))
            .line(format!("# dual cone Hilbert basis {}", p.dual_hilbert_basis))
            .json(to_json(&p)));
    }
    let m = load_matrix(c_text)?;
    let cm = canonical_module_gens(&m, window.map(Int::from))?;
    let names: Vec<String> = (1..=m.rows).map(|i| format!("x{i}")).collect();
    Ok(Report::new("canonical-module", Status::Done, "interior lattice points of the defining cone, minimal ones listed")
        .line(format!("a {}", cm.a_invariant))
        .line(format!("# searched up to t-degree {}", cm.b_max))
        .lines(cm.render(&names))
        .json(to_json(&cm)))
}

pub fn gorenstein(m: &IntMatrix) -> Result<Report> {
    let g = is_gorenstein_s(m)?;
    Ok(Report::new("gorenstein", Status::of(g.verdict), &format!("decided at rung {}", g.rung))
        .line(format!("a {}", g.a_invariant))
        .line(format!("# {}", g.rationale))
        .json(to_json(&g)))
}

pub fn ci_bipartite(g: &Clutter) -> Result<Report> {
    let v = canonical::complete_intersection_bipartite(g)?;
    Ok(Report::new("complete-intersection", Status::of(v.verdict), "bipartite with as many chordless cycles as the cycle rank")
        .line(format!("bipartite {}", v.bipartite))
        .line(format!("chordless cycles {}", v.primitive_cycles))
        .line(format!("cycle rank {}", v.cycle_rank))
        .json(to_json(&v)))
}

pub fn edge_cone(g: &Clutter, redundant: bool, cap: usize) -> Result<Report> {
    let normals = graphs::edge_cone_h_rep(g, !redundant, cap)?;
    Ok(Report::new("edge-cone", Status::Done, "halfspaces <normal, a> >= 0 from vertices and independent sets")
        .lines(normals.iter().map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")))
        .json(json!(normals.iter().map(|v| fmt_vec(v)).collect::<Vec<_>>())))
}

pub fn symbolic_gens(c: &Clutter, cap: usize) -> Result<Report> {
    let g = symbolic::symbolic_rees_generators_capped(c, cap)?;
    Ok(Report::new("symbolic-rees-generators", Status::Done, "Hilbert basis of the cone cut out by the minimal vertex covers")
        .line(format!("# {} generators", g.len()))
        .lines(render_gens(&g, &c.vertices))
        .json(json!(render_gens(&g, &c.vertices))))
}

pub fn cover_gens(c: &Clutter, cap: usize) -> Result<Report> {
    let g = symbolic::cover_algebra_generators_capped(c, cap)?;
    Ok(Report::new("irreducible-covers", Status::Done, "Hilbert basis of the cone cut out by the edges")
        .line(format!("# {} generators", g.len()))
        .lines(render_gens(&g, &c.vertices))
        .json(json!(render_gens(&g, &c.vertices))))
}

pub fn irreducible_subgraphs(g: &Clutter, cap: usize) -> Result<Report> {
    let s = graphs::irreducible_induced_subgraphs(g, cap)?;
    Ok(Report::new("irreducible-induced-subgraphs", Status::Done, "binary symbolic generators, checked against a direct search")
        .line(format!("# {} subgraphs, listed with their covering numbers", s.len()))
        .lines(s.iter().map(|h| format!("{}  # alpha0 {}", h.vertices.join(" "), h.alpha0)))
        .json(to_json(&s)))
}

pub fn irreducible_graph(g: &Clutter, cap: usize) -> Result<Report> {
    let v = graphs::is_irreducible_graph(g, cap)?;
    let r = Report::new("irreducible-graph", Status::of(v.verdict), "no split of the vertices with additive covering numbers").json(to_json(&v));
    Ok(match &v.split {
        None => r,
        Some((a, b)) => r.certificate(format!("{}\n{}", a.join(" "), b.join(" "))),
    })
}

pub fn cone_lift(g: &Clutter, cover: &str, times: usize) -> Result<Report> {
    let m = parse_monomial(cover, &g.vertices)?;
    let (h, lifted) = symbolic::cone_lift_iterate(g, &m.a, m.b, times)?;
    Ok(Report::new("cone-lift", Status::Done, "a facet of the cover Rees cone lifts to a symbolic generator of the cone graph")
        .line(format!("generator {}", lifted.render(&h.vertices)))
        .certificate(h.to_string())
        .json(json!({"graph": h.to_string(), "generator": lifted.render(&h.vertices)})))
}

pub fn poset(p: &Poset) -> Result<Report> {
    let g = graphs::comparability_graph(p)?;
    let cl = graphs::clique_clutter(&g)?;
    let d = graphs::dilworth(p);
    let m = graphs::mirsky(p);
    Ok(Report::new("poset", Status::Done, "largest antichain equals fewest chains; longest chain equals fewest antichains")
        .line(format!("width {}", d.antichain.len()))
        .line(format!("antichain {}", d.antichain.join(" ")))
        .lines(d.chains.iter().map(|c| format!("chain {}", c.join(" "))))
        .line(format!("height {}", m.chain.len()))
        .line(format!("chain {}", m.chain.join(" ")))
        .lines(m.antichains.iter().map(|c| format!("antichain {}", c.join(" "))))
        .certificate(cl.to_string())
        .json(json!({"dilworth": to_json(&d), "mirsky": to_json(&m), "clique_clutter": cl.to_string()})))
}

pub fn hilbert(m: &IntMatrix) -> Result<Report> {
    let hb = hilbert_basis(&m.columns())?;
    let mut el = hb.elements.clone();
    el.sort();
    Ok(Report::new("hilbert-basis", Status::Done, "normalization of the cone generated by the columns")
        .lines(el.iter().map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")))
        .json(json!(el.iter().map(|v| fmt_vec(v)).collect::<Vec<_>>())))
}
