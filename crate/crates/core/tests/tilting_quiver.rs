use reptilt::fixtures::*;
use reptilt::tilting::{complement_fan, TiltingRecord};
use reptilt::tiltquiver::*;
use reptilt::Q;

#[test]
fn kronecker_exploration_is_partial() {
    let alg = algebra(kronecker(), 1);
    let g = explore_from_regular::<Q>(&alg, Limits { max_vertices: 50, max_radius: usize::MAX })
        .unwrap();
    assert_eq!(g.vertices.len(), 50);
    assert!(g.truncated);
    assert!(!g.exhausted);
    assert!(g.arrows.iter().all(|a| a.witness.is_exact()));
}

#[test]
fn example1_neighbourhood_is_a_chain() {
    let ex = example1::<Q>().unwrap();
    let fan = complement_fan(&ex.almost_complete, None).unwrap();
    let records: Vec<TiltingRecord<Q>> = fan
        .complements
        .iter()
        .map(|(x, _)| {
            TiltingRecord::from_pieces(ex.almost_complete.with(x.clone()).unwrap()).unwrap()
        })
        .collect();
    let middle = mutate_all(&records[1]).unwrap();
    let exchanged: Vec<&Mutation<Q>> = middle
        .iter()
        .filter(|mu| {
            reptilt::krull::is_isomorphic(
                &records[1].pieces.modules()[mu.summand],
                &fan.complements[1].0,
            )
            .unwrap()
        })
        .collect();
    assert_eq!(exchanged.len(), 2);
    // 0 -> X_0 -> E -> X_1 -> 0 and 0 -> X_1 -> E' -> X_2 -> 0
    let incoming = exchanged.iter().find(|mu| !mu.outgoing).unwrap();
    let outgoing = exchanged.iter().find(|mu| mu.outgoing).unwrap();
    assert_eq!(incoming.witness.left.dim_grid(), fan.complements[0].0.dim_grid());
    assert_eq!(outgoing.witness.right.dim_grid(), fan.complements[2].0.dim_grid());
    let ends = mutate_all(&records[0]).unwrap();
    assert!(ends
        .iter()
        .any(|mu| mu.outgoing && mu.witness.right.dim_grid() == fan.complements[1].0.dim_grid()));
}

#[test]
fn mutation_is_involutive() {
    let alg = algebra(linear_a(3), 1);
    let g = explore_from_regular::<Q>(&alg, Limits::default()).unwrap();
    for a in &g.arrows {
        let back = mutate_all(&g.vertices[a.to].record).unwrap();
        let hits = back
            .iter()
            .filter(|mu| !mu.outgoing)
            .any(|mu| g.find(&mu.neighbor).unwrap() == Some(a.from));
        assert!(hits);
    }
}

#[test]
fn one_vertex_dot_is_stable() {
    let alg = algebra(single_vertex(), 1);
    let g = explore_from_regular::<Q>(&alg, Limits::default()).unwrap();
    let dot = g.to_dot();
    let expected = "digraph tilting_quiver {\n  v0 [label=\"{1:1}@L0\\n{1:1}@L0 {1:1}@L1\\npd 0\"];\n  v1 [label=\"{1:1}@L1\\n{1:1}@L0 {1:1}@L1\\npd 1\"];\n  v0 -> v1 [label=\"{1:1}@L0 {1:1}@L1\"];\n}\n";
    assert_eq!(dot, expected);
    assert_eq!(explore_from_regular::<Q>(&alg, Limits::default()).unwrap().to_dot(), dot);
}

#[test]
fn json_round_trip_on_a2() {
    let alg = algebra(linear_a(2), 2);
    let g = explore_from_regular::<Q>(&alg, Limits::default()).unwrap();
    let e = g.export();
    assert_eq!(GraphExport::from_json(&e.to_json()).unwrap(), e);
    assert_eq!(e.vertices.len(), 22);
}
