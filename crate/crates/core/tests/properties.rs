use mengerian::clutter::minimalize;
use mengerian::graph::{canonical_form, encode_graph6, parse_graph6};
use mengerian::ideal::{edge_ideal, in_symbolic_power, symbolic_power, symbolic_power_degree_sum};
use mengerian::linalg::{is_ideal, is_totally_unimodular, is_totally_unimodular_ghouila_houri};
use mengerian::{build_path_hypergraph, Clutter, ExactMatrix, Graph, Minor, PathHypergraphSpec};
use proptest::prelude::*;

fn clutter_strategy(max_n: usize, max_m: usize) -> impl Strategy<Value = Clutter> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(1u64..(1 << n), 1..=max_m).prop_map(move |edges| {
            minimalize(n, &edges)
                .unwrap()
                .into_clutter()
                .expect("no empty edge")
        })
    })
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut b = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[b] {
                        edges.push((i, j));
                    }
                    b += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn with_cost(max_n: usize, max_m: usize, cmax: u32) -> impl Strategy<Value = (Clutter, Vec<u32>)> {
    clutter_strategy(max_n, max_m).prop_flat_map(move |c| {
        let n = c.n();
        (Just(c), prop::collection::vec(0..=cmax, n))
    })
}

/// Fisher-Yates driven by a 64-bit LCG.
fn shuffled(n: usize, mut s: u64) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        s = s
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        p.swap(i, (s >> 33) as usize % (i + 1));
    }
    p
}

fn h(g: &Graph, t: usize) -> Clutter {
    build_path_hypergraph(g, PathHypergraphSpec::new(t).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn weak_duality((c, cost) in with_cost(7, 6, 3)) {
        prop_assert!(c.nu() <= c.tau());
        prop_assert!(c.max_integer_packing(&cost).unwrap() <= c.weighted_cover_min(&cost).unwrap());
    }

    #[test]
    fn duplication_matches_weighted_numbers((c, cost) in with_cost(5, 4, 2)) {
        let d = c.duplicate(&cost).unwrap();
        prop_assert_eq!(d.tau() as u64, c.weighted_cover_min(&cost).unwrap());
        prop_assert_eq!(d.nu() as u64, c.max_integer_packing(&cost).unwrap());
    }

    #[test]
    fn unit_duplication_is_identity(c in clutter_strategy(7, 6)) {
        let d = c.duplicate(&vec![1; c.n()]).unwrap();
        prop_assert_eq!(d.edge_masks(), c.edge_masks());
    }

    #[test]
    fn minor_order_is_immaterial(
        (c, code, order) in clutter_strategy(6, 6).prop_flat_map(|c| {
            let n = c.n();
            (Just(c), prop::collection::vec(0u8..3, n), any::<u64>().prop_map(move |s| shuffled(n, s)))
        })
    ) {
        let (mut del, mut con) = (0u64, 0u64);
        for (v, &k) in code.iter().enumerate() {
            match k {
                1 => del |= 1 << v,
                2 => con |= 1 << v,
                _ => {}
            }
        }
        let direct = c.minor(del, con).unwrap();
        let mut cur = Minor::Clutter(c.clone());
        for &v in &order {
            let Minor::Clutter(now) = &cur else { break };
            let Some(idx) = now.labels().iter().position(|l| l.original == v) else { continue };
            cur = match code[v] {
                1 => Minor::Clutter(now.delete(idx).unwrap()),
                2 => now.contract(idx).unwrap(),
                _ => cur,
            };
        }
        prop_assert_eq!(direct, cur);
    }

    #[test]
    fn powers_sit_inside_symbolic_powers(c in clutter_strategy(6, 5), k in 1usize..=3) {
        let covers = c.minimal_covers();
        let p = edge_ideal(&c).power(k).unwrap();
        prop_assert!(p.gens().iter().all(|g| in_symbolic_power(g, &covers, k)));
    }

    #[test]
    fn power_products_nest(c in clutter_strategy(6, 4), j in 1usize..=2, k in 1usize..=2) {
        let i = edge_ideal(&c);
        let prod = i.power(j).unwrap().product(&i.power(k).unwrap()).unwrap();
        let whole = i.power(j + k).unwrap();
        prop_assert!(prod.gens().iter().all(|g| whole.contains(g)));
    }

    #[test]
    fn symbolic_routes_agree(c in clutter_strategy(6, 5), k in 1usize..=3) {
        prop_assert_eq!(symbolic_power(&c, k).unwrap(), symbolic_power_degree_sum(&c, k).unwrap());
    }

    #[test]
    fn tu_implies_ideal(c in clutter_strategy(6, 6)) {
        if is_totally_unimodular(&c.incidence_matrix()).unwrap().is_unimodular() {
            prop_assert!(is_ideal(&c).unwrap().is_ideal());
        }
    }

    #[test]
    fn tu_scan_matches_ghouila_houri(rows in prop::collection::vec(prop::collection::vec(-1i64..=1, 5), 1..=5)) {
        let m = ExactMatrix::from_int_rows(5, &rows);
        prop_assert_eq!(
            is_totally_unimodular(&m).unwrap().is_unimodular(),
            is_totally_unimodular_ghouila_houri(&m).unwrap()
        );
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph_strategy(7), seed in any::<u64>()) {
        let perm = shuffled(g.n(), seed);
        prop_assert_eq!(canonical_form(&g.relabel(&perm).unwrap()).unwrap(), canonical_form(&g).unwrap());
    }

    #[test]
    fn path_hypergraph_is_equivariant(g in graph_strategy(7), t in 1usize..=4) {
        let perm: Vec<usize> = (0..g.n()).rev().collect();
        let lhs = h(&g.relabel(&perm).unwrap(), t);
        let rhs = h(&g, t).permute(&perm).unwrap();
        prop_assert_eq!(lhs.edge_masks(), rhs.edge_masks());
        prop_assert!(lhs.uniformity().is_none_or(|u| u == t + 1));
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(9)) {
        let text = encode_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }
}
