use itertools::Itertools;
use proptest::prelude::*;

use polyface::constructions::{lemma1_project, lemma1_system, theorem1_project, theorem1_system};
use polyface::geometry::{adjacent, is_face_subset};
use polyface::{
    bqp_vertices, extract_face, lop_vertices, stable_vertices, CoordLayout, FaceSystem, Graph, Vertex01, VertexSet,
};

fn random_set() -> impl Strategy<Value = VertexSet> {
    (2usize..=4)
        .prop_flat_map(|d| (Just(d), proptest::collection::vec(proptest::collection::vec(any::<bool>(), d), 2..=8)))
        .prop_map(|(d, raw)| {
            let vs = raw.iter().map(|b| Vertex01::from_bits(b)).collect();
            VertexSet::new(CoordLayout::stable(d), vs).unwrap()
        })
        .prop_filter("need two vertices", |s| s.len() >= 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn adjacency_is_symmetric_and_matches_edge_faces(set in random_set()) {
        for (u, v) in set.iter().tuple_combinations() {
            let uv = adjacent(u, v, &set).unwrap();
            prop_assert_eq!(uv, adjacent(v, u, &set).unwrap());
            let edge = is_face_subset(&[u.clone(), v.clone()], &set).unwrap();
            prop_assert_eq!(uv, edge.is_face, "{} {}", u, v);
        }
    }

    #[test]
    fn certificates_are_tight_exactly_on_the_subset(set in random_set(), mask in any::<u16>()) {
        let subset: Vec<Vertex01> = set
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, v)| v.clone())
            .collect();
        prop_assume!(!subset.is_empty());
        let check = is_face_subset(&subset, &set).unwrap();
        if let Some(cert) = &check.certificate {
            prop_assert!(check.is_face);
            prop_assert!(cert.certifies(&subset, &set));
            for v in &set {
                let tight = cert.eval(v) == cert.rhs;
                prop_assert_eq!(tight, subset.contains(v));
                prop_assert!(cert.eval(v) <= cert.rhs);
            }
        } else {
            prop_assert!(!check.is_face);
        }
    }
}

#[test]
fn whole_set_and_singletons_of_vertices_are_faces() {
    let set = bqp_vertices(2).unwrap();
    assert!(is_face_subset(set.vertices(), &set).unwrap().is_face);
    for v in &set {
        assert!(is_face_subset(std::slice::from_ref(v), &set).unwrap().is_face);
    }
}

#[test]
fn face_extraction_is_order_independent() {
    let lop = lop_vertices(6).unwrap();
    let fs = theorem1_system(3).unwrap();
    let whole = extract_face(&lop, &fs).unwrap().face;

    let eqs = fs.equalities();
    for split in 0..=eqs.len() {
        let first = FaceSystem::new(fs.layout().clone(), eqs[..split].to_vec(), "a").unwrap();
        let second = FaceSystem::new(fs.layout().clone(), eqs[split..].to_vec(), "b").unwrap();
        let step = extract_face(&lop, &first).unwrap().face;
        let step = extract_face(&step, &second).unwrap().face;
        assert_eq!(step.vertices(), whole.vertices());
        assert_eq!(first.union(&second).unwrap().len(), fs.len());
    }

    let mut reversed = eqs.to_vec();
    reversed.reverse();
    let rev = FaceSystem::new(fs.layout().clone(), reversed, "rev").unwrap();
    assert_eq!(extract_face(&lop, &rev).unwrap().face.vertices(), whole.vertices());
}

#[test]
fn theorem1_face_maps_onto_bqp_for_small_n() {
    for n in 1..=4 {
        let lop = lop_vertices(2 * n).unwrap();
        let face = extract_face(&lop, &theorem1_system(n).unwrap()).unwrap().face;
        let map = theorem1_project(n).unwrap();
        let bqp = bqp_vertices(n).unwrap();
        let mut images: Vec<Vertex01> = face.iter().map(|y| map.apply_vertex_01(y).unwrap().unwrap()).collect();
        images.sort();
        assert_eq!(images.len(), face.len());
        assert!(images.windows(2).all(|w| w[0] < w[1]), "n={n}: not injective");
        assert_eq!(images, bqp.vertices(), "n={n}");
    }
}

#[test]
fn lemma1_images_are_stable_sets_for_all_small_graphs() {
    for n in 1..=3 {
        let lop = lop_vertices(2 * n).unwrap();
        let map = lemma1_project(n).unwrap();
        for g in Graph::all_labeled(n) {
            let face = extract_face(&lop, &lemma1_system(&g).unwrap()).unwrap().face;
            let mut images: Vec<Vertex01> = face.iter().map(|y| map.apply_vertex_01(y).unwrap().unwrap()).collect();
            images.sort();
            images.dedup();
            assert_eq!(images, stable_vertices(&g).vertices(), "graph {:?}", g.edges());
        }
    }
}

#[test]
fn long_diagonal_through_a_triangle_is_not_an_edge() {
    // the midpoint of 000-111 is outside conv{100,010,001} but the segment
    // still crosses that triangle
    let vs = ["000", "100", "010", "001", "111"].map(|s| s.parse::<Vertex01>().unwrap());
    let set = VertexSet::new(CoordLayout::stable(3), vs.to_vec()).unwrap();
    assert!(!adjacent(&vs[0], &vs[4], &set).unwrap());
    assert!(!is_face_subset(&[vs[0].clone(), vs[4].clone()], &set).unwrap().is_face);
    assert!(adjacent(&vs[0], &vs[1], &set).unwrap());
}
