//! Exit criteria. Each criterion prints one PASS/FAIL line; the process exits
//! non-zero when any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::Oracle;
use reptilt::algebra::ReplicatedAlgebra;
use reptilt::approx::is_faithful;
use reptilt::arknit::enumerate_indecomposables;
use reptilt::fixtures::*;
use reptilt::homological::{injective_envelope, is_projective, minimal_resolution, pd};
use reptilt::krull::{decompose, is_isomorphic};
use reptilt::linalg::Mat;
use reptilt::module::{direct_sum, DimGrid, RModule, Structural};
use reptilt::tilting::*;
use reptilt::tiltquiver::{explore_from_regular, Limits};
use reptilt::{Field, Result, Q};

type Outcome = Result<(bool, String)>;

fn render(alg: &ReplicatedAlgebra, g: &DimGrid) -> String {
    g.render(alg.quiver().vertices())
}

/// Fan of an example against its expected chain, in order.
fn check_example(ex: &Example<Q>) -> Result<(bool, String, ComplementFan<Q>)> {
    let fan = complement_fan(&ex.almost_complete, None)?;
    let got: Vec<(DimGrid, usize)> =
        fan.complements.iter().map(|(x, d)| (x.dim_grid(), *d)).collect();
    let want: Vec<(DimGrid, usize)> =
        ex.complements.iter().map(|c| (c.dims.clone(), c.pd)).collect();
    let shown: Vec<String> =
        got.iter().map(|(g, d)| format!("{} (pd {d})", render(&ex.algebra, g))).collect();
    Ok((got == want, format!("{}: [{}]", ex.name, shown.join("; ")), fan))
}

fn criterion_1() -> Outcome {
    let (ok, msg, fan) = check_example(&example1::<Q>()?)?;
    Ok((ok && fan.len() == 3 && fan.pds() == [1, 1, 2], msg))
}

fn criterion_2() -> Outcome {
    let ex = example2::<Q>()?;
    let (ok, msg, fan) = check_example(&ex)?;
    let x2 = &fan.complements[2].0;
    let (env, _) = injective_envelope(x2);
    let i = Structural::injective::<Q>(&ex.algebra, 0, 1)?;
    let cube = direct_sum(&[&i, &i, &i])?;
    let iso = is_isomorphic(env.module(), &cube)?;
    let non_projective = !is_projective(env.module());
    Ok((
        ok && fan.pds() == [0, 1, 2, 3] && iso && non_projective,
        format!("{msg}; E(X_2) = I(1,1)^3: {iso}; E(X_2) not projective: {non_projective}"),
    ))
}

fn criterion_3() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (ex, pds) in [(example3_1::<Q>()?, [1, 2, 3]), (example3_2i::<Q>()?, [1, 1, 2])] {
        let fan = complement_fan(&ex.almost_complete, None)?;
        let pass = fan.len() == 3 && fan.pds() == pds;
        ok &= pass;
        parts.push(format!("{} pds {:?} {}", ex.name, fan.pds(), verdict(pass)));
    }
    let no_pd3 =
        complement_fan(&example3_2i::<Q>()?.almost_complete, None)?.pds().iter().all(|&d| d != 3);
    ok &= no_pd3;
    parts.push(format!("(2i) no pd-3 complement {}", verdict(no_pd3)));

    match example3_2ii_search::<Q>(Limits { max_vertices: 200, max_radius: 6 })? {
        None => {
            ok = false;
            parts.push("(2ii) mutation search found no candidate".into());
        }
        Some(fan) => {
            let alg = fan.almost_complete.algebra().clone();
            let shape = fan.len() == 3 && fan.pds() == [1, 2, 2];
            let no_pd3 = fan.pds().iter().all(|&d| d != 3);
            let pis = Structural::projective_injectives::<Q>(&alg);
            let mut others = Vec::new();
            for m in fan.almost_complete.modules() {
                if !pis.iter().any(|p| is_isomorphic(p, m).unwrap_or(false)) {
                    others.push(m.dim_grid());
                }
            }
            let wanted = example3_2ii_summand_dims();
            let summand = others.len() == 1 && others[0] == wanted;
            ok &= shape && no_pd3 && summand;
            let got: Vec<String> = others.iter().map(|g| render(&alg, g)).collect();
            parts.push(format!(
                "(2ii) pds {:?} {}; no pd-3 {}; summand {} vs stated {} {}",
                fan.pds(),
                verdict(shape),
                verdict(no_pd3),
                got.join(" + "),
                render(&alg, &wanted),
                verdict(summand)
            ));
        }
    }
    Ok((ok, parts.join("; ")))
}

fn dynkin_fixtures() -> Vec<(&'static str, Arc<ReplicatedAlgebra>)> {
    vec![
        ("A2 m=1", algebra(linear_a(2), 1)),
        ("A3 m=1", algebra(linear_a(3), 1)),
        ("A2 m=2", algebra(linear_a(2), 2)),
    ]
}

fn criterion_4() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, alg) in dynkin_fixtures() {
        let oracle = Oracle::<Q>::new(&alg)?;
        let sets = oracle.cliques(alg.simple_count(), true);
        let mut disagreements = 0;
        for s in &sets {
            let pieces = Pieces::new(&alg, oracle.subset(s))?;
            let delta = pieces.is_self_orthogonal() && pieces.len() == expected_delta(&alg);
            let cores = coresolution_certificate(&pieces)?.holds();
            if delta != cores {
                disagreements += 1;
            }
        }
        ok &= disagreements == 0 && !sets.is_empty();
        parts.push(format!("{name}: {} sets, {disagreements} disagreements", sets.len()));
    }
    Ok((ok, parts.join("; ")))
}

fn criterion_5() -> Outcome {
    let alg = algebra(linear_a(2), 1);
    let oracle = Oracle::<Q>::new(&alg)?;
    let sets = oracle.cliques(alg.simple_count(), false);
    let mut failures = 0;
    for s in sets.iter().filter(|s| !s.is_empty()) {
        let parts = oracle.subset(s);
        let m = direct_sum(&parts.iter().collect::<Vec<_>>())?;
        let rec = complete_partial_tilting(&m)?;
        let contained = parts.iter().all(|p| rec.pieces.contains(p).unwrap_or(false));
        if !(rec.coresolution.holds() && rec.pieces.len() == expected_delta(&alg) && contained) {
            failures += 1;
        }
    }
    Ok((
        failures == 0,
        format!("A2 m=1: {} partial tilting modules, {failures} failures", sets.len() - 1),
    ))
}

fn criterion_6() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, alg) in [("A2 m=1", algebra(linear_a(2), 1)), ("A2 m=2", algebra(linear_a(2), 2))] {
        let m = alg.m();
        let oracle = Oracle::<Q>::new(&alg)?;
        let mut checked = 0;
        let mut failures = 0;
        for s in oracle.cliques(alg.simple_count() - 1, true) {
            let t = Pieces::new(&alg, oracle.subset(&s))?;
            if t.pd() > m || !is_faithful(&t.sum())? {
                continue;
            }
            checked += 1;
            let fan = complement_fan(&t, None)?;
            let low: Vec<usize> = fan.pds().into_iter().filter(|&d| d <= m).collect();
            if low.len() != m + 1 || fan_pattern(&low, t.pd()).is_none() {
                failures += 1;
            }
        }
        ok &= failures == 0 && checked > 0;
        parts.push(format!("{name}: {checked} almost complete modules, {failures} failures"));
    }
    Ok((ok, parts.join("; ")))
}

fn criterion_7() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, alg) in dynkin_fixtures() {
        let g = explore_from_regular::<Q>(&alg, Limits::default())?;
        let oracle = Oracle::<Q>::new(&alg)?;
        let mut keys = BTreeSet::new();
        for s in oracle.cliques(alg.simple_count(), true) {
            let mut key = Vec::new();
            for m in oracle.subset(&s) {
                key.push(g.registry.find(&m)?.unwrap_or(usize::MAX));
            }
            key.sort_unstable();
            keys.insert(key);
        }
        let equal = keys == g.keys();
        let connected = g.pd_le_one_connected();
        ok &= g.exhausted && equal && connected;
        parts.push(format!(
            "{name}: {} vertices, oracle {}, exhausted {}, equal {equal}, pd<=1 connected {connected}",
            g.vertices.len(),
            keys.len(),
            g.exhausted
        ));
    }
    Ok((ok, parts.join("; ")))
}

fn criterion_8() -> Outcome {
    let ex = example3_1::<Q>()?;
    let fan = complement_fan(&ex.almost_complete, None)?;
    let bound = 2 * ex.algebra.m() + 1;
    let witness = fan.pds().contains(&bound);
    let mut ok = witness;
    let mut parts = vec![format!("Kronecker pd {bound} witness {}", verdict(witness))];
    for (name, alg) in dynkin_fixtures() {
        let mut max = 0;
        for x in enumerate_indecomposables::<Q>(&alg)? {
            max = max.max(pd(&x)?);
        }
        let within = max <= 2 * alg.m() + 1;
        ok &= within;
        parts.push(format!("{name}: max pd {max} {}", verdict(within)));
    }
    Ok((ok, parts.join("; ")))
}

fn random_change<F: Field>(rng: &mut ChaCha8Rng, d: usize) -> Mat<F> {
    loop {
        let data: Vec<F> = (0..d * d).map(|_| F::from_i64(rng.gen_range(-3..=3))).collect();
        let m = Mat::from_rows(d, d, data).expect("square");
        if m.is_invertible() {
            return m;
        }
    }
}

fn decompose_idempotent(rng: &mut ChaCha8Rng, inds: &[RModule<Q>]) -> Result<bool> {
    let k = rng.gen_range(1..=3);
    let chosen: Vec<&RModule<Q>> = (0..k).map(|_| &inds[rng.gen_range(0..inds.len())]).collect();
    let sum = direct_sum(&chosen)?;
    let change: Vec<Mat<Q>> = sum.dims().iter().map(|&d| random_change(rng, d)).collect();
    let (m, _) = sum.conjugate(&change)?;
    let d = decompose(&m)?;
    let mut again: Vec<DimGrid> = Vec::new();
    for p in d.expanded() {
        let dp = decompose(p)?;
        if dp.pieces.len() != 1 || dp.pieces[0].1 != 1 || !is_isomorphic(&dp.pieces[0].0, p)? {
            return Ok(false);
        }
        again.push(dp.pieces[0].0.dim_grid());
    }
    let mut want: Vec<DimGrid> = chosen.iter().map(|c| c.dim_grid()).collect();
    want.sort();
    again.sort();
    Ok(again == want)
}

fn criterion_9() -> Outcome {
    let mut parts = Vec::new();
    let bases = [
        ("one vertex", single_vertex()),
        ("A2", linear_a(2)),
        ("A3", linear_a(3)),
        ("Kronecker", kronecker()),
        ("D~4", d4_tilde()),
    ];
    let mut iso_ok = true;
    for (_, q) in &bases {
        for m in [1, 2] {
            let alg = algebra(q.clone(), m);
            for v in 0..alg.n() {
                for i in 0..m {
                    let inj = Structural::injective::<Q>(&alg, v, i)?;
                    let proj = Structural::projective::<Q>(&alg, v, i + 1)?;
                    iso_ok &= is_isomorphic(&inj, &proj)?;
                }
            }
        }
    }
    parts.push(format!("I(v,i) = P(v,i+1) {}", verdict(iso_ok)));

    let mut records = 0;
    let mut pi_ok = true;
    for (_, alg) in dynkin_fixtures() {
        for v in explore_from_regular::<Q>(&alg, Limits::default())?.vertices {
            records += 1;
            pi_ok &= v.record.contains_projective_injectives()?;
        }
    }
    for ex in [example1::<Q>()?, example2::<Q>()?, example3_1::<Q>()?, example3_2i::<Q>()?] {
        for (x, _) in complement_fan(&ex.almost_complete, None)?.complements {
            records += 1;
            let rec = TiltingRecord::from_pieces(ex.almost_complete.with(x)?)?;
            pi_ok &= rec.contains_projective_injectives()?;
        }
    }
    parts.push(format!(
        "{records} tilting modules contain the projective-injectives {}",
        verdict(pi_ok)
    ));

    let mut resolutions = 0;
    let mut radical_ok = true;
    let mut pool: Vec<RModule<Q>> = Vec::new();
    for (_, alg) in dynkin_fixtures() {
        pool.extend(enumerate_indecomposables::<Q>(&alg)?);
    }
    for ex in [example1::<Q>()?, example2::<Q>()?, example3_1::<Q>()?] {
        pool.extend(ex.almost_complete.modules().iter().cloned());
    }
    for x in &pool {
        let r = minimal_resolution(x)?;
        resolutions += 1;
        radical_ok &= r.is_minimal() && r.is_exact(x);
    }
    parts.push(format!("{resolutions} resolutions radical-valued {}", verdict(radical_ok)));

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut inds = enumerate_indecomposables::<Q>(&algebra(linear_a(3), 1))?;
    inds.extend(enumerate_indecomposables::<Q>(&algebra(linear_a(2), 2))?);
    let (a3, a2) = inds.split_at(18);
    let mut idem = 0;
    for k in 0..100 {
        let from = if k % 2 == 0 { a3 } else { a2 };
        if decompose_idempotent(&mut rng, from)? {
            idem += 1;
        }
    }
    parts.push(format!("decompose idempotent on {idem}/100 random modules"));
    Ok((iso_ok && pi_ok && radical_ok && idem == 100, parts.join("; ")))
}

fn verdict(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "MISMATCH"
    }
}

fn main() -> ExitCode {
    let criteria: [(usize, fn() -> Outcome); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    let mut failed = 0;
    for (n, run) in criteria {
        let start = Instant::now();
        let (pass, detail) = match run() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failed += 1;
        }
        println!(
            "criterion {n}: {} ({:.1?}) {detail}",
            if pass { "PASS" } else { "FAIL" },
            start.elapsed()
        );
    }
    println!("{} of 9 criteria pass", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
