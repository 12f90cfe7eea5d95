//! Worked examples checked against the brute-force oracles in `common`.

mod common;

use std::collections::BTreeSet;

use clutter_algebra::canonical::{a_invariant_s, canonical_module_gens, is_gorenstein_s, maximal_vertices, perfect_graph_canonical};
use clutter_algebra::clutter::{
    alpha0, alpha0_parallelization, beta1, blocker, dual_star, koenig, minimal_vertex_covers, minor, ordinary_power, packing_property,
    parallelization, perfect_matching, symbolic_power, whisker_extension,
};
use clutter_algebra::graphs::{
    self, comparability_graph, complete_admissible_clutter, dilworth, is_irreducible_graph, primitive_cycle_count, triangle_free_dual_check,
    unmixed, Poset,
};
use clutter_algebra::linalg::{delta_r, snf, solve_integral};
use clutter_algebra::polyhedra::{covering_polyhedron, is_integral};
use clutter_algebra::rounding::{is_normal_ideal, mfmc, normally_torsion_free, rees_generators};
use clutter_algebra::semigroup::{hilbert_basis, semigroup_member};
use clutter_algebra::symbolic::{
    cover_algebra_generators, graph_irreducible_covers, is_irreducible_cover, rees_cone, symbolic_rees_generators, MonomialGen,
};
use clutter_algebra::{Clutter, IntMatrix};
use common::*;

fn q(n: i128, d: i128) -> Q {
    Q::new(n, d)
}

fn vertex_set(c: &Clutter) -> BTreeSet<Vec<Q>> {
    covering_polyhedron(&c.incidence_matrix()).unwrap().vertices.iter().map(|v| v.iter().map(to_q).collect()).collect()
}

fn covering_ineqs(c: &Clutter) -> Vec<(Vec<i64>, i64)> {
    let n = c.n();
    let mut out: Vec<(Vec<i64>, i64)> = (0..n).map(|i| ((0..n).map(|j| (i == j) as i64).collect(), 0)).collect();
    for &e in &c.edges {
        out.push(((0..n).map(|j| (e >> j & 1) as i64).collect(), 1));
    }
    out
}

fn k2() -> Clutter {
    graphs::complete(2)
}

fn gens_set(g: &[MonomialGen]) -> BTreeSet<(Vec<u32>, u32)> {
    g.iter().map(|m| (m.a.clone(), m.b)).collect()
}

#[test]
fn smith_form_of_two_by_two() {
    let a = [vec![2, 4], vec![6, 8]];
    let s = snf(&IntMatrix::from_i64_rows(&a)).unwrap();
    let d1 = minor_gcd(&a, 1);
    let d2 = minor_gcd(&a, 2) / d1;
    assert_eq!(ints(&s.diag), vec![d1 as i64, d2 as i64]);
    assert_eq!(ints(&s.diag), vec![2, 4]);
}

#[test]
fn triangle_incidence_has_no_integral_solution_for_ones() {
    let a = graphs::cycle(3).incidence_matrix();
    let rows: Vec<Vec<Q>> = (0..3).map(|i| ints(&a.row(i)).iter().map(|&x| Q::from(x as i128)).collect()).collect();
    let x = solve(&rows, &[Q::from(1); 3]).unwrap();
    assert!(x.iter().any(|v| !v.is_integer()));
    assert_eq!(solve_integral(&a, &big(&[1, 1, 1])).unwrap(), None);
}

#[test]
fn delta_of_triangle() {
    let a = graphs::cycle(3).incidence_matrix();
    let rows: Vec<Vec<i64>> = (0..3).map(|i| ints(&a.row(i))).collect();
    for r in 1..=3 {
        assert_eq!(delta_r(&a, r).unwrap().to_i64().unwrap() as i128, minor_gcd(&rows, r));
    }
}

#[test]
fn covering_polyhedron_of_an_edge() {
    let c = k2();
    let p = covering_polyhedron(&c.incidence_matrix()).unwrap();
    assert_eq!(vertex_set(&c), basic_solutions(&covering_ineqs(&c), 2));
    assert_eq!(vertex_set(&c), BTreeSet::from([vec![q(1, 1), q(0, 1)], vec![q(0, 1), q(1, 1)]]));
    let rays: BTreeSet<Vec<i64>> = p.rays.iter().map(|r| ints(r)).collect();
    assert_eq!(rays, BTreeSet::from([vec![1, 0], vec![0, 1]]));
}

#[test]
fn covering_polyhedron_of_a_triangle() {
    let c = graphs::cycle(3);
    let oracle = basic_solutions(&covering_ineqs(&c), 3);
    assert_eq!(vertex_set(&c), oracle);
    assert!(oracle.contains(&vec![q(1, 2); 3]));
    assert_eq!(oracle.len(), 4);
    let v = is_integral(&covering_polyhedron(&c.incidence_matrix()).unwrap());
    assert!(!v.verdict);
    assert_eq!(v.certificate.unwrap().iter().map(to_q).collect::<Vec<_>>(), vec![q(1, 2); 3]);
}

#[test]
fn rees_cone_of_an_edge() {
    let cone = rees_cone(&k2()).unwrap();
    let normals: BTreeSet<Vec<i64>> = cone.facet_normals.iter().map(|v| ints(v)).collect();
    let gens = [[1, 0, 0], [0, 1, 0], [1, 1, 1]];
    for nv in &normals {
        let vals: Vec<i64> = gens.iter().map(|g| g.iter().zip(nv).map(|(a, b)| a * b).sum()).collect();
        assert!(vals.iter().all(|&v| v >= 0));
        assert_eq!(vals.iter().filter(|&&v| v == 0).count(), 2, "{nv:?}");
    }
    assert_eq!(normals, BTreeSet::from([vec![0, 0, 1], vec![0, 1, -1], vec![1, 0, -1]]));
}

#[test]
fn hilbert_bases_match_box_scan() {
    for gens in [vec![vec![1, 0], vec![1, 2]], vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1]]] {
        let hb: BTreeSet<Vec<i64>> = hilbert_basis(&gens.iter().map(|g| big(g)).collect::<Vec<_>>()).unwrap().elements.iter().map(|v| ints(v)).collect();
        let bound = gens.iter().flatten().copied().max().unwrap() * gens[0].len() as i64;
        assert_eq!(hb, box_hilbert_basis(&gens, bound), "{gens:?}");
    }
}

#[test]
fn two_triangles_gap_is_outside_the_semigroup() {
    let c = Clutter::from_edges1(6, &[&[1, 2], &[2, 3], &[1, 3], &[4, 5], &[5, 6], &[4, 6]]).unwrap();
    let gens = rees_generators(&c.edge_vectors()).unwrap();
    let target = [1, 1, 1, 1, 1, 1, 3];
    let plain: Vec<Vec<i64>> = gens.iter().map(|g| ints(g)).collect();
    assert!(!bounded_member(&plain, &target));
    assert_eq!(semigroup_member(&gens, &big(&target)).unwrap(), None);
    let v = is_normal_ideal(&c.edge_vectors()).unwrap();
    assert!(!v.verdict);
    assert_eq!(ints(&v.witness.unwrap()), target.to_vec());
}

#[test]
fn squares_ideal_is_not_normal() {
    let v = is_normal_ideal(&[big(&[2, 0]), big(&[0, 2])]).unwrap();
    assert!(!v.verdict);
    assert_eq!(ints(&v.witness.unwrap()), vec![1, 1, 1]);
    assert!(is_normal_ideal(&k2().edge_vectors()).unwrap().verdict);
}

#[test]
fn pentagon_covers_and_numbers() {
    let c5 = graphs::cycle(5);
    let got: BTreeSet<u64> = minimal_vertex_covers(&c5).masks.into_iter().collect();
    let oracle = brute_covers(5, &c5.edges);
    assert_eq!(got, oracle);
    assert_eq!(oracle.len(), 5);
    assert!(oracle.iter().all(|m| m.count_ones() == 3));
    assert_eq!(alpha0(&c5), brute_alpha0(5, &c5.edges));
    assert_eq!(beta1(&c5), brute_beta1(&c5.edges));
    assert_eq!((alpha0(&c5), beta1(&c5)), (3, 2));
    assert!(perfect_matching(&c5).is_none());
}

#[test]
fn blocker_of_an_edge_and_a_triangle() {
    assert_eq!(blocker(&k2()).edges, vec![0b01, 0b10]);
    let c3 = graphs::cycle(3);
    let b: BTreeSet<u64> = blocker(&c3).edges.into_iter().collect();
    assert_eq!(b, brute_covers(3, &c3.edges));
}

#[test]
fn triangle_complements_are_singletons() {
    let (d, a) = dual_star(&graphs::cycle(3)).unwrap();
    assert!(d.edges.iter().all(|e| e.count_ones() == 1));
    assert_eq!(a.columns().len(), 3);
}

#[test]
fn contracting_a_triangle_vertex() {
    let c3 = graphs::cycle(3);
    let mi = minor(&c3, &[], &["x1".into()]).unwrap();
    assert!(!mi.is_unit);
    let names: BTreeSet<Vec<String>> = mi.clutter.edges.iter().map(|&e| mi.clutter.set_names(e)).collect();
    assert_eq!(names, BTreeSet::from([vec!["x2".to_string()], vec!["x3".to_string()]]));
}

#[test]
fn triangle_parallelization() {
    let p = parallelization(&graphs::cycle(3), &[2, 1, 1]).unwrap();
    assert_eq!(p.n(), 4);
    assert_eq!(p.q(), 5);
    let e = k2();
    assert_eq!(alpha0_parallelization(&e, &[3, 3]), 3);
    let k33 = parallelization(&e, &[3, 3]).unwrap();
    assert_eq!(brute_alpha0(6, &k33.edges), 3);
}

#[test]
fn packing_examples() {
    assert!(packing_property(&graphs::path(3), 12).unwrap().is_none());
    let f = packing_property(&graphs::cycle(3), 12).unwrap().unwrap();
    assert_eq!((f.minor.len(), f.alpha0, f.beta1), (3, 2, 1));
    assert!(!koenig(&graphs::cycle(3)));
}

#[test]
fn symbolic_and_ordinary_powers_of_small_cycles() {
    let c3 = graphs::cycle(3);
    let s2 = symbolic_power(&c3, 2).unwrap();
    assert!(s2.contains(&[1, 1, 1]));
    assert!(!ordinary_power(&c3, 2).contains(&[1, 1, 1]));
    assert_eq!(ordinary_power(&c3, 2).generators.len(), 6);
    assert!(symbolic_power(&graphs::cycle(5), 3).unwrap().contains(&[1; 5]));
}

#[test]
fn whiskers_on_a_triangle() {
    let w = whisker_extension(&graphs::cycle(3)).unwrap();
    assert_eq!((w.n(), w.q()), (6, 6));
    assert!(mfmc(&whisker_extension(&graphs::path(3)).unwrap()).unwrap().verdict);
}

#[test]
fn divisibility_poset() {
    let p = Poset::parse("1 < 2\n1 < 3\n2 < 6\n3 < 6\n").unwrap();
    assert_eq!(comparability_graph(&p).unwrap().q(), 5);
    let d = dilworth(&p);
    let mut a = d.antichain.clone();
    a.sort();
    assert_eq!(a, vec!["2".to_string(), "3".to_string()]);
    assert_eq!(d.chains.len(), 2);
}

#[test]
fn admissible_clutter_sizes() {
    let c = complete_admissible_clutter(2, 2).unwrap();
    assert_eq!((c.n(), c.q()), (4, 3));
    assert_eq!(complete_admissible_clutter(2, 3).unwrap().q(), 6);
}

#[test]
fn path_on_four_vertices_splits() {
    let v = is_irreducible_graph(&graphs::path(4), 14).unwrap();
    assert!(!v.verdict);
    assert!(is_irreducible_graph(&graphs::cycle(5), 14).unwrap().verdict);
}

#[test]
fn cycle_counts_and_unmixedness() {
    assert!(!unmixed(&graphs::path(3)));
    assert_eq!(primitive_cycle_count(&graphs::cycle(4), 14).unwrap(), 1);
    assert_eq!(primitive_cycle_count(&graphs::complete_bipartite(3, 3), 14).unwrap(), 9);
    assert!(triangle_free_dual_check(&graphs::cycle(4)).unwrap().verdict);
}

#[test]
fn triangle_is_neither_mfmc_nor_torsion_free() {
    let v = mfmc(&graphs::cycle(3)).unwrap();
    assert!(!v.verdict);
    assert_eq!(v.fractional_vertex.unwrap(), vec!["1/2"; 3]);
    let t = normally_torsion_free(&graphs::cycle(3)).unwrap();
    assert!(!t.verdict);
    assert_eq!(t.witness.unwrap(), (2, vec![1, 1, 1]));
}

#[test]
fn maximal_vertex_data() {
    let p3 = graphs::path(3).incidence_matrix();
    let mv = maximal_vertices(&p3).unwrap();
    let ells: BTreeSet<Vec<Q>> = mv.iter().map(|d| d.ell.iter().map(to_q).collect()).collect();
    assert_eq!(ells, BTreeSet::from([vec![q(0, 1), q(1, 1), q(0, 1)], vec![q(1, 1), q(0, 1), q(1, 1)]]));
    assert!(mv.iter().all(|d| d.d.to_i64() == Some(1)));
    let c3 = maximal_vertices(&graphs::cycle(3).incidence_matrix()).unwrap();
    let half = c3.iter().find(|d| d.ell.iter().map(to_q).all(|x| x == q(1, 2))).unwrap();
    assert_eq!(half.d.to_i64(), Some(2));
}

#[test]
fn edge_and_path_canonical_data() {
    let e = k2().incidence_matrix();
    let p3 = graphs::path(3).incidence_matrix();
    assert_eq!(a_invariant_s(&e).unwrap().value.to_i64(), Some(-2));
    assert_eq!(a_invariant_s(&p3).unwrap().value.to_i64(), Some(-3));
    let w = canonical_module_gens(&e, None).unwrap();
    assert_eq!(gens_set(&w.generators), BTreeSet::from([(vec![1, 1], 2)]));
    assert!(canonical_module_gens(&p3, None).unwrap().generators.len() >= 2);
    assert!(is_gorenstein_s(&e).unwrap().verdict);
    assert!(!is_gorenstein_s(&p3).unwrap().verdict);
}

#[test]
fn perfect_graph_canonical_data() {
    assert_eq!(perfect_graph_canonical(&graphs::complete(3)).unwrap().module.a_invariant.to_i64(), Some(-2));
    assert_eq!(perfect_graph_canonical(&graphs::cycle(4)).unwrap().module.a_invariant.to_i64(), Some(-3));
}

#[test]
fn pentagon_symbolic_generators() {
    let c5 = graphs::cycle(5);
    let mut expected: BTreeSet<(Vec<u32>, u32)> = (0..5).map(|i| ((0..5).map(|j| (i == j) as u32).collect(), 0)).collect();
    for &e in &c5.edges {
        expected.insert(((0..5).map(|j| (e >> j & 1) as u32).collect(), 1));
    }
    expected.insert((vec![1; 5], 3));
    assert_eq!(gens_set(&symbolic_rees_generators(&c5).unwrap()), expected);
}

#[test]
fn cover_algebra_generator_counts() {
    assert_eq!(cover_algebra_generators(&graphs::cycle(5)).unwrap().len(), 11);
    assert_eq!(cover_algebra_generators(&graphs::complete(3)).unwrap().len(), 7);
    assert_eq!(graph_irreducible_covers(&graphs::path(3)).unwrap().len(), 5);
}

#[test]
fn irreducible_cover_examples() {
    assert!(is_irreducible_cover(&graphs::cycle(5), &[1; 5], 2).unwrap().verdict);
    assert!(!is_irreducible_cover(&k2(), &[1, 1], 2).unwrap().verdict);
    assert!(is_irreducible_cover(&k2(), &[1, 0], 0).unwrap().verdict);
}
