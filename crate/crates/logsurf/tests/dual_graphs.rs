use logsurf::graph::{
    eps_lt_bound_check, is_exceptional_sing, DualGraph, Grade, SingMarker, TypeTag,
};
use logsurf::hj::{hj_expand, wblowup_discrepancy, wblowup_strict_mult, CyclicQuot, WeightedBlowup};
use logsurf::Rat;
use num_integer::Integer;

fn classify_text(text: &str) -> logsurf::graph::SingClass {
    DualGraph::parse(text).unwrap().classify(None).unwrap()
}

// central -p vertex with one tail per entry list; tails are chains walking
// away from the center
fn star(p: u64, tails: &[&[u64]]) -> String {
    let mut out = format!("v c b={}\n", p);
    for (t, tail) in tails.iter().enumerate() {
        let mut prev = "c".to_string();
        for (i, b) in tail.iter().enumerate() {
            let id = format!("t{}x{}", t, i);
            out.push_str(&format!("v {} b={}\n", id, b));
            out.push_str(&format!("e {} {}\n", prev, id));
            prev = id;
        }
    }
    out
}

fn cycle_text(bs: &[u64]) -> String {
    let mut out = String::new();
    for (i, b) in bs.iter().enumerate() {
        out.push_str(&format!("v w{} b={}\n", i, b));
    }
    for i in 0..bs.len() {
        out.push_str(&format!("e w{} w{}\n", i, (i + 1) % bs.len()));
    }
    out
}

#[test]
fn chain_graphs_are_a_type() {
    for bs in [vec![2], vec![3], vec![2, 2, 2], vec![3, 2], vec![5, 2, 3]] {
        let mut text = String::new();
        for (i, b) in bs.iter().enumerate() {
            text.push_str(&format!("v v{} b={}\n", i, b));
            if i > 0 {
                text.push_str(&format!("e v{} v{}\n", i - 1, i));
            }
        }
        let c = classify_text(&text);
        assert_eq!(c.type_tag, Some(TypeTag::A(bs.len())));
        assert!(!is_exceptional_sing(&c).unwrap());
        let canonical = bs.iter().all(|&b| b == 2);
        assert_eq!(c.grade == Grade::Canonical, canonical, "{:?}", bs);
    }
}

#[test]
fn fork_fixtures_classify_to_their_types() {
    // (graph, expected tag, expected exceptionality)
    let cases: Vec<(String, TypeTag, bool)> = vec![
        // two (-2) leaves plus one long tail
        (star(2, &[&[2], &[2], &[3]]), TypeTag::D(4), false),
        (star(2, &[&[2], &[2], &[2]]), TypeTag::D(4), false),
        (star(3, &[&[2], &[2], &[2, 2]]), TypeTag::D(5), false),
        // tail pairs resolving quotients of orders (3,3), (3,4), (3,5)
        (star(2, &[&[2], &[3], &[3]]), TypeTag::E6, true),
        (star(2, &[&[2], &[2, 2], &[2, 2]]), TypeTag::E6, true),
        (star(2, &[&[2], &[3], &[4]]), TypeTag::E7, true),
        (star(2, &[&[2], &[2, 2], &[2, 2, 2]]), TypeTag::E7, true),
        (star(2, &[&[2], &[3], &[5]]), TypeTag::E8, true),
        (star(2, &[&[2], &[2, 2], &[2, 2, 2, 2]]), TypeTag::E8, true),
        (star(3, &[&[2], &[3], &[5]]), TypeTag::E8, true),
    ];
    for (text, tag, exceptional) in cases {
        let c = classify_text(&text);
        assert_eq!(c.type_tag, Some(tag.clone()), "graph:\n{}", text);
        assert_eq!(is_exceptional_sing(&c).unwrap(), exceptional, "tag {:?}", tag);
        assert!(matches!(c.grade, Grade::Terminal | Grade::Canonical | Grade::Klt));
    }
}

#[test]
fn lc_graphs_carry_small_index() {
    // strictly lc shapes; expected (tag, index)
    let cases: Vec<(String, TypeTag, u64)> = vec![
        ("v e b=2 g=1\n".to_string(), TypeTag::Ell, 1),
        ("v n b=3 sing=node\n".to_string(), TypeTag::ACusp(1), 1),
        (cycle_text(&[2, 2, 3]), TypeTag::ACusp(3), 1),
        (cycle_text(&[3, 2, 2, 2, 3]), TypeTag::ACusp(5), 1),
        (star(3, &[&[2], &[2], &[2], &[2]]), TypeTag::DTilde(4), 2),
        (star(2, &[&[3], &[3], &[3]]), TypeTag::ETilde6, 3),
        (star(3, &[&[2, 2], &[2, 2], &[2, 2]]), TypeTag::ETilde6, 3),
        (star(2, &[&[2], &[4], &[4]]), TypeTag::ETilde7, 4),
        (star(2, &[&[2], &[3], &[6]]), TypeTag::ETilde8, 6),
        (star(2, &[&[2], &[3], &[2, 2, 2, 2, 2]]), TypeTag::ETilde8, 6),
    ];
    for (text, tag, index) in cases {
        let c = classify_text(&text);
        assert_eq!(c.type_tag, Some(tag.clone()), "graph:\n{}", text);
        assert_eq!(c.grade, Grade::Lc, "tag {:?}", tag);
        assert_eq!(c.index, Some(index), "tag {:?}", tag);
        assert!([1, 2, 3, 4, 6].contains(&index));
        let exceptional =
            matches!(tag, TypeTag::Ell | TypeTag::DTilde(4) | TypeTag::ETilde6 | TypeTag::ETilde7 | TypeTag::ETilde8);
        assert_eq!(is_exceptional_sing(&c).unwrap(), exceptional, "tag {:?}", tag);
    }
}

#[test]
fn dtilde5_fixture_shape() {
    // two degree-3 vertices each carrying two (-2) leaves
    let text = "\
v a b=3
v b b=2
v l1 b=2
v l2 b=2
v l3 b=2
v l4 b=2
e a b
e a l1
e a l2
e b l3
e b l4
";
    let c = classify_text(text);
    assert_eq!(c.type_tag, Some(TypeTag::DTilde(5)));
    assert_eq!(c.grade, Grade::Lc);
    assert_eq!(c.index, Some(2));
    assert!(!is_exceptional_sing(&c).unwrap());
}

#[test]
fn grade_matches_discrepancy_thresholds() {
    // the grade must be recomputable from the raw solver output
    let texts = [
        star(2, &[&[2u64][..], &[3], &[5]]),
        star(2, &[&[2], &[3], &[6]]),
        star(5, &[&[2], &[2], &[2]]),
        "v a b=7\n".to_string(),
        "v a b=2\nv b b=2\ne a b\n".to_string(),
        "v a b=2\nc a d=1/2\n".to_string(),
        "v a b=2\nc a d=1\n".to_string(),
        "v a b=3\nc a d=1 m=2\n".to_string(),
    ];
    for text in texts {
        let g = DualGraph::parse(&text).unwrap();
        let data = g.discrepancies().unwrap();
        let amin_exc = data.min().unwrap().clone();
        let mut amin = amin_exc.clone();
        for (_, d, _) in g.attachments() {
            let neg = -d;
            if neg < amin {
                amin = neg;
            }
        }
        let c = g.classify(None).unwrap();
        let one = Rat::one();
        match c.grade {
            Grade::Terminal => assert!(amin > Rat::zero()),
            Grade::Canonical => assert!(!amin.is_negative()),
            Grade::Klt => assert!(amin > -&one),
            // reduced boundary allowed; only exceptional discrepancies stay above -1
            Grade::Plt => assert!(amin == -&one && amin_exc > -&one),
            Grade::Lc => assert!(amin >= -&one),
            Grade::NotLc => assert!(amin < -&one),
        }
        assert_eq!(c.eps_grade, Some(&one + &amin), "graph:\n{}", text);
    }
}

#[test]
fn boundary_attachment_shifts_discrepancy() {
    // one transverse coefficient-1 branch on the (m,1) chain subtracts the
    // blowup multiplicity from the bare discrepancy
    for m in 2..=25u64 {
        let text = format!("v a b={}\nc a d=1\n", m);
        let g = DualGraph::parse(&text).unwrap();
        let got = g.discrepancies().unwrap().get("a").unwrap().clone();
        let wb = WeightedBlowup::new(m, vec![1, 1]).unwrap();
        let want = wblowup_discrepancy(&wb) - wblowup_strict_mult(&wb, 0).unwrap();
        assert_eq!(got, want, "m={}", m);
    }
}

#[test]
fn reduced_ends_force_index_one() {
    // coefficient-1 attachments on both chain ends: the whole chain sits at
    // discrepancy -1
    for (m, q) in [(5u64, 2u64), (7, 3), (12, 5), (9, 1)] {
        if m.gcd(&q) != 1 {
            continue;
        }
        let chain = hj_expand(&CyclicQuot::new(m, q).unwrap());
        let k = chain.entries.len();
        let mut text = String::new();
        for (i, b) in chain.entries.iter().enumerate() {
            text.push_str(&format!("v v{} b={}\n", i, b));
            if i > 0 {
                text.push_str(&format!("e v{} v{}\n", i - 1, i));
            }
        }
        text.push_str("c v0 d=1\n");
        text.push_str(&format!("c v{} d=1\n", k - 1));
        let g = DualGraph::parse(&text).unwrap();
        let data = g.discrepancies().unwrap();
        for (id, a) in data.iter() {
            assert_eq!(a, &Rat::int(-1), "m={} q={} at {}", m, q, id);
        }
        let c = g.classify(None).unwrap();
        assert_eq!(c.grade, Grade::Lc);
        assert_eq!(c.index, Some(1));
    }
}

#[test]
fn fork_eps_inequality() {
    let e6 = DualGraph::parse(&star(2, &[&[2], &[3], &[3]])).unwrap();
    assert!(eps_lt_bound_check(&e6, &Rat::new(1, 7)).unwrap());
    let wide = DualGraph::parse(&star(14, &[&[2], &[3], &[3]])).unwrap();
    assert!(!eps_lt_bound_check(&wide, &Rat::new(1, 7)).unwrap());
    // a chain is not a fork
    let chain = DualGraph::parse("v a b=2\n").unwrap();
    assert!(eps_lt_bound_check(&chain, &Rat::new(1, 7)).is_err());
}

#[test]
fn contractibility_examples() {
    assert!(DualGraph::parse("v a b=3\nv b b=2\ne a b\n").unwrap().is_contractible());
    assert!(!DualGraph::parse(&cycle_text(&[2, 2, 2, 2])).unwrap().is_contractible());
    assert!(DualGraph::parse(&cycle_text(&[2, 2, 2, 3])).unwrap().is_contractible());
    // the affine E6 diagram is only semidefinite
    assert!(!DualGraph::parse(&star(2, &[&[2, 2], &[2, 2], &[2, 2]])).unwrap().is_contractible());
}

#[test]
fn non_minimal_graphs_get_a_note() {
    let c = classify_text("v a b=1\n");
    assert_eq!(c.type_tag, None);
    assert!(c.notes.iter().any(|n| n.contains("minimal")));
}

#[test]
fn parse_reports_line_numbers() {
    let err = DualGraph::parse("v a b=2\nv b\n").unwrap_err();
    match err {
        logsurf::Error::Parse { line, .. } => assert_eq!(line, 2),
        other => panic!("expected parse error, got {:?}", other),
    }
    assert!(DualGraph::parse("# comment only\n").unwrap().is_empty());
}

#[test]
fn programmatic_and_text_construction_agree() {
    let mut g = DualGraph::new();
    g.add_vertex("c", 2, 0, SingMarker::Smooth).unwrap();
    g.add_vertex("l", 2, 0, SingMarker::Smooth).unwrap();
    g.add_vertex("t", 3, 0, SingMarker::Smooth).unwrap();
    g.add_vertex("u", 5, 0, SingMarker::Smooth).unwrap();
    g.add_edge("c", "l", 1).unwrap();
    g.add_edge("c", "t", 1).unwrap();
    g.add_edge("c", "u", 1).unwrap();
    let parsed = DualGraph::parse(&star(2, &[&[2], &[3], &[5]])).unwrap();
    assert_eq!(g.intersection_matrix(), parsed.intersection_matrix());
    let a = g.classify(None).unwrap();
    let b = parsed.classify(None).unwrap();
    assert_eq!(a.type_tag, b.type_tag);
    assert_eq!(a.eps_grade, b.eps_grade);
}
