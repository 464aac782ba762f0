use std::collections::{BTreeSet, VecDeque};

use nonrep::graphs::{build_biclique_product, build_box, build_rook, tensor_component};
use nonrep::{Adjacency, Graph, LatticeRegion};

fn edge_set(g: &Graph) -> BTreeSet<(Vec<i64>, Vec<i64>)> {
    g.edges()
        .map(|(u, v)| (g.payload(u).to_vec(), g.payload(v).to_vec()))
        .collect()
}

/// Adjacency from the coordinate rule alone.
fn oracle_adjacent(a: &[i64], b: &[i64], adjacency: Adjacency) -> bool {
    let diffs: Vec<i64> = a.iter().zip(b).map(|(x, y)| (x - y).abs()).collect();
    let moved = diffs.iter().filter(|&&d| d == 1).count();
    let far = diffs.iter().any(|&d| d > 1);
    if far || moved == 0 {
        return false;
    }
    match adjacency {
        Adjacency::Cartesian => moved == 1,
        Adjacency::Tensor => moved == a.len(),
        Adjacency::Strong => moved == 1 || moved == a.len(),
    }
}

fn components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.vertex_count()];
    let mut out = Vec::new();
    for s in 0..g.vertex_count() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbor_slice(u) {
                let v = v as usize;
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                    queue.push_back(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn boxes() -> Vec<LatticeRegion> {
    let mut out = Vec::new();
    for dim in 1..=3 {
        for side in 1..=5 {
            out.push(LatticeRegion::cube(dim, 0, side - 1).unwrap());
        }
    }
    out.push("-2:1,3:5".parse().unwrap());
    out.push("0:0,0:4,-1:1".parse().unwrap());
    out
}

#[test]
fn adjacency_matches_coordinate_rule_and_is_symmetric() {
    for region in boxes() {
        for adjacency in [Adjacency::Cartesian, Adjacency::Tensor, Adjacency::Strong] {
            let g = build_box(&region, adjacency);
            assert_eq!(g.vertex_count(), region.vertex_count());
            let mut degree_sum = 0;
            for u in 0..g.vertex_count() {
                degree_sum += g.degree(u);
                for v in 0..g.vertex_count() {
                    let expect = oracle_adjacent(g.payload(u), g.payload(v), adjacency);
                    assert_eq!(g.is_adjacent(u, v), expect, "{region} {adjacency}");
                    assert_eq!(g.is_adjacent(u, v), g.is_adjacent(v, u));
                }
            }
            assert_eq!(degree_sum, 2 * g.edge_count());
        }
    }
}

#[test]
fn strong_is_cartesian_union_tensor() {
    for region in boxes() {
        let cart = edge_set(&build_box(&region, Adjacency::Cartesian));
        let tensor = edge_set(&build_box(&region, Adjacency::Tensor));
        let strong = edge_set(&build_box(&region, Adjacency::Strong));
        let union: BTreeSet<_> = cart.union(&tensor).cloned().collect();
        assert_eq!(strong, union, "{region}");
        if region.dim() > 1 {
            assert!(cart.is_disjoint(&tensor));
        }
    }
}

#[test]
fn tensor_boxes_split_into_parity_classes() {
    for dim in 1..=4usize {
        for side in 3..=4 {
            let region = LatticeRegion::cube(dim, 0, side - 1).unwrap();
            let g = build_box(&region, Adjacency::Tensor);
            let comps = components(&g);
            assert_eq!(comps.len(), 1 << (dim - 1), "dim {dim} side {side}");
            for comp in comps {
                let base = g.payload(comp[0]).to_vec();
                let c = tensor_component(&g, &base).unwrap();
                let mut expect: Vec<_> = comp.iter().map(|&v| g.payload(v).to_vec()).collect();
                let mut got: Vec<_> = (0..c.vertex_count())
                    .map(|v| c.payload(v).to_vec())
                    .collect();
                expect.sort();
                got.sort();
                assert_eq!(got, expect);
                assert_eq!(components(&c).len(), 1);
            }
        }
    }
}

#[test]
fn rook_and_biclique_degrees() {
    for n in 2..=6 {
        let g = build_rook(n).unwrap();
        assert_eq!(g.vertex_count(), n * n);
        assert!((0..g.vertex_count()).all(|v| g.degree(v) == 2 * (n - 1)));
        for u in 0..g.vertex_count() {
            for v in 0..g.vertex_count() {
                let (a, b) = (g.payload(u), g.payload(v));
                let expect = u != v && (a[0] == b[0] || a[1] == b[1]);
                assert_eq!(g.is_adjacent(u, v), expect);
            }
        }
    }
    for n in 1..=4i64 {
        let g = build_biclique_product(n as usize).unwrap();
        let side = |x: i64| x < n;
        for u in 0..g.vertex_count() {
            assert_eq!(g.degree(u), 2 * n as usize);
            for v in 0..g.vertex_count() {
                let (a, b) = (g.payload(u), g.payload(v));
                let expect = (a[0] == b[0] && side(a[1]) != side(b[1]))
                    || (a[1] == b[1] && side(a[0]) != side(b[0]));
                assert_eq!(g.is_adjacent(u, v), expect);
            }
        }
    }
}

#[test]
fn induced_subgraph_keeps_payloads() {
    let g = build_box(&"0:2,0:2".parse().unwrap(), Adjacency::Cartesian);
    let keep = [0, 1, 4, 8];
    let h = g.induced(&keep).unwrap();
    assert_eq!(h.vertex_count(), 4);
    for (i, &v) in keep.iter().enumerate() {
        assert_eq!(h.payload(i), g.payload(v));
    }
    assert_eq!(h.edge_count(), 2);
}
