use reptilt::fixtures::*;
use reptilt::homological::{ext_all, injective_envelope, is_projective, pd};
use reptilt::krull::is_isomorphic;
use reptilt::module::{direct_sum, DimGrid, Structural};
use reptilt::tilting::*;
use reptilt::tiltquiver::Limits;
use reptilt::Q;

fn chain(fan: &ComplementFan<Q>) -> Vec<(DimGrid, usize)> {
    fan.complements.iter().map(|(x, d)| (x.dim_grid(), *d)).collect()
}

fn expected_chain(ex: &Example<Q>) -> Vec<(DimGrid, usize)> {
    ex.complements.iter().map(|c| (c.dims.clone(), c.pd)).collect()
}

#[test]
fn example1_fan() {
    let ex = example1::<Q>().unwrap();
    let fan = complement_fan(&ex.almost_complete, None).unwrap();
    assert_eq!(chain(&fan), expected_chain(&ex));
    assert!(fan.exchanges.iter().all(ExchangeSequence::is_exact));
    let (report, _) = classify_duplicated(&ex.almost_complete, None).unwrap();
    assert!(report.consistent());
    assert_eq!(report.fan_size, 3);
}

#[test]
fn example2_fan_and_envelope() {
    let ex = example2::<Q>().unwrap();
    let fan = complement_fan(&ex.almost_complete, None).unwrap();
    assert_eq!(chain(&fan), expected_chain(&ex));
    let (env, _) = injective_envelope(&fan.complements[2].0);
    assert!(!is_projective(env.module()));
    let i = Structural::injective::<Q>(&ex.algebra, 0, 1).unwrap();
    assert!(is_isomorphic(env.module(), &direct_sum(&[&i, &i, &i]).unwrap()).unwrap());
    let (report, _) = classify_duplicated(&ex.almost_complete, None).unwrap();
    assert!(report.consistent() && report.has_pd3_complement);
}

#[test]
fn example3_fans() {
    for ex in [example3_1::<Q>().unwrap(), example3_2i::<Q>().unwrap()] {
        let fan = complement_fan(&ex.almost_complete, None).unwrap();
        assert_eq!(chain(&fan), expected_chain(&ex), "{}", ex.name);
        let (report, _) = classify_duplicated(&ex.almost_complete, None).unwrap();
        assert!(report.consistent(), "{}", ex.name);
    }
}

#[test]
fn simple_1_prime_is_not_a_complement_in_case_2i() {
    let ex = example3_2i::<Q>().unwrap();
    let s1 = Structural::simple::<Q>(&ex.algebra, 0, 1).unwrap();
    let s2 = Structural::simple::<Q>(&ex.algebra, 1, 0).unwrap();
    assert_eq!(pd(&s1).unwrap(), 2);
    assert_eq!(ext_all(&s1, &s2).unwrap().get(1), Some(&2));
    assert!(!is_complement(&ex.almost_complete, &s1).unwrap());
}

#[test]
fn case_2ii_is_located_by_mutation() {
    let fan =
        example3_2ii_search::<Q>(Limits { max_vertices: 200, max_radius: 6 }).unwrap().unwrap();
    assert_eq!(fan.pds(), [1, 2, 2]);
    assert_eq!(fan.almost_complete.pd(), 2);
    let alg = fan.almost_complete.algebra().clone();
    let s1 = Structural::simple::<Q>(&alg, 0, 1).unwrap();
    assert!(fan.complements.iter().any(|(x, _)| is_isomorphic(x, &s1).unwrap()));
    let wide = &example3_2ii_complements()[2];
    assert!(fan.complements.iter().any(|(x, d)| x.dim_grid() == wide.dims && *d == wide.pd));
}

#[test]
fn stated_2ii_summand_shape_splits() {
    // every element from level one to vertex 1 of level zero passes through
    // vertex 2 of level zero, which the stated shape leaves empty
    let alg = algebra(kronecker(), 1);
    let (one, two) = (alg.vertex(0, 0), alg.vertex(1, 0));
    let basis = alg.basis();
    let crossing: Vec<usize> = (0..basis.len())
        .filter(|&b| basis[b].target == one && alg.split_vertex(basis[b].source).1 == 1)
        .collect();
    assert!(!crossing.is_empty());
    for b in crossing {
        let through = (0..basis.len()).any(|u| {
            basis[u].source == two
                && basis[u].target == one
                && (0..basis.len()).any(|v| {
                    basis[v].source == basis[b].source
                        && basis[v].target == two
                        && alg.mul(u, v) == Some(b)
                })
        });
        assert!(through);
    }
    assert_eq!(example3_2ii_summand_dims().0[0][1], 0);
}
