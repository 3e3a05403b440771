use mengerian::classify::{decide_mengerian_with, Caps, DecideOptions};
use mengerian::clutter::MfmcProbe;
use mengerian::graph::{make_family, parse_edge_list};
use mengerian::ideal::is_normally_torsion_free;
use mengerian::{
    build_path_hypergraph, classify_mengerian, cross_check, decide_mengerian_exact,
    enumerate_connected, is_path_with_double_stars, is_star_plus_edge, Graph, MethodTrace,
    PathHypergraphSpec, SurveyOptions,
};
use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn all_up_to_six() -> Vec<Graph> {
    (1..=6)
        .flat_map(|n| enumerate_connected(n).unwrap())
        .collect()
}

#[test]
fn shortcuts_agree_with_forced_power_equality() {
    let graphs = all_up_to_six();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let sample: Vec<&Graph> = graphs
        .iter()
        .filter(|g| g.n() >= 4)
        .collect::<Vec<_>>()
        .choose_multiple(&mut rng, 20)
        .copied()
        .collect();
    assert_eq!(sample.len(), 20);
    let caps = Caps {
        max_power: 8,
        ..Default::default()
    };
    let opts = DecideOptions {
        caps,
        force_power_equality: true,
    };
    for g in sample {
        let r = decide_mengerian_with(g, 3, &opts).unwrap();
        if let Some(ntf) = &r.checks.ntf {
            assert_eq!(ntf.holds, r.mengerian, "{}", r.graph.graph6);
        } else {
            assert_eq!(r.trace, MethodTrace::Empty);
        }
    }
}

#[test]
fn ntf_never_contradicts_a_refuted_probe() {
    let tree = parse_edge_list("1 2\n1 6\n3 6\n3 4\n5 6").unwrap();
    let graphs = [
        make_family("cycle", &[5]).unwrap(),
        make_family("cycle", &[6]).unwrap(),
        make_family("path", &[6]).unwrap(),
        make_family("star_plus_edge", &[4]).unwrap(),
        make_family("complete", &[5]).unwrap(),
        tree,
    ];
    for g in &graphs {
        let c = build_path_hypergraph(g, PathHypergraphSpec::new(3).unwrap());
        let probe = c.mengerian_bounded(2).unwrap();
        let ntf = is_normally_torsion_free(&c).unwrap();
        if matches!(probe, MfmcProbe::Refuted { .. }) {
            assert!(!ntf.holds(), "{g:?}");
        }
    }
    let c5 = build_path_hypergraph(&graphs[0], PathHypergraphSpec::new(3).unwrap());
    assert!(matches!(
        c5.mengerian_bounded(1).unwrap(),
        MfmcProbe::Refuted { .. }
    ));
}

#[test]
fn tu_classes_take_the_shortcut() {
    let mut graphs = vec![
        make_family("path", &[7]).unwrap(),
        make_family("star", &[5]).unwrap(),
    ];
    graphs.push(make_family("double_star", &[2, 3]).unwrap());
    for k in 2..=6 {
        graphs.push(make_family("star_plus_edge", &[k]).unwrap());
    }
    for g in graphs.iter().filter(|g| g.n() > 4) {
        let r = decide_mengerian_exact(g, 3).unwrap();
        assert!(
            matches!(r.trace, MethodTrace::TuShortcut | MethodTrace::Empty),
            "{g:?}"
        );
        assert!(r.mengerian);
    }
}

#[test]
fn predicates_ignore_labels() {
    for g in all_up_to_six() {
        let perm: Vec<usize> = (0..g.n()).rev().collect();
        let h = g.relabel(&perm).unwrap();
        assert_eq!(is_path_with_double_stars(&g), is_path_with_double_stars(&h));
        assert_eq!(is_star_plus_edge(&g), is_star_plus_edge(&h));
        assert_eq!(
            classify_mengerian(&g).unwrap(),
            classify_mengerian(&h).unwrap()
        );
    }
}

#[test]
fn five_vertex_mengerian_classes() {
    let five = enumerate_connected(5).unwrap();
    let yes: Vec<&Graph> = five
        .iter()
        .filter(|g| decide_mengerian_exact(g, 3).unwrap().mengerian)
        .collect();
    assert_eq!(yes.len(), 4);
    // P5, K_{1,4}, spider(2,1,1), star plus an edge, up to isomorphism
    let expected = [
        make_family("path", &[5]).unwrap(),
        make_family("star", &[4]).unwrap(),
        make_family("spider", &[2, 1, 1]).unwrap(),
        make_family("star_plus_edge", &[4]).unwrap(),
    ];
    for e in &expected {
        let canon = mengerian::graph::canonical_form(e).unwrap();
        assert!(
            yes.iter()
                .any(|g| mengerian::graph::canonical_form(g).unwrap() == canon),
            "{e:?}"
        );
    }
}

#[test]
fn four_path_dichotomy_up_to_five() {
    let r = cross_check(&SurveyOptions {
        n_max: 5,
        t: 4,
        ..Default::default()
    })
    .unwrap();
    assert!(r.dichotomy_exceptions.is_empty());
    assert!(r
        .entries
        .iter()
        .all(|e| e.report.as_ref().unwrap().classifier.is_none()));
    assert_eq!(r.counters.incomplete, 0);
}
