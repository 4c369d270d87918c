use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

use serde_json::{json, Value};

use reptilt::algebra::ReplicatedAlgebra;
use reptilt::arknit::{ar_quiver, enumerate_indecomposables};
use reptilt::fixtures::{
    example1, example2, example3_1, example3_2i, example3_2ii_complements, example3_2ii_search,
    example3_2ii_summand_dims, Example,
};
use reptilt::homological::{ext_vanishes, id, injective_coresolution, minimal_resolution, pd};
use reptilt::module::{DimGrid, RModule};
use reptilt::registry::Registry;
use reptilt::tilting::{
    check_tilting, classify_duplicated, complement_fan, fan_pattern, ComplementFan, FanPattern,
    Pieces,
};
use reptilt::tiltquiver::{explore_from_regular, Limits, TiltingQuiverGraph};
use reptilt::{Field, Result};

use crate::expr::ModuleExpr;

/// Exit status and rendered output of a command.
pub struct Outcome {
    pub code: u8,
    pub body: String,
}

impl Outcome {
    fn json(ok: bool, v: Value) -> Outcome {
        let mut body = serde_json::to_string_pretty(&v).expect("report serializes");
        body.push('\n');
        Outcome { code: if ok { 0 } else { 1 }, body }
    }
}

fn labels(alg: &ReplicatedAlgebra) -> Vec<String> {
    alg.quiver().vertices().to_vec()
}

fn grid(alg: &ReplicatedAlgebra, g: &DimGrid) -> String {
    g.render(&labels(alg))
}

fn summand<F: Field>(m: &RModule<F>) -> Result<Value> {
    Ok(json!({ "dims": grid(m.algebra(), &m.dim_grid()), "pd": pd(m)? }))
}

fn summands<F: Field>(p: &Pieces<F>) -> Result<Vec<Value>> {
    p.modules().iter().map(summand).collect()
}

pub fn check<F: Field>(alg: &Arc<ReplicatedAlgebra>, module: &ModuleExpr) -> Result<Outcome> {
    let r = check_tilting(&module.eval::<F>(alg)?)?;
    let coresolution =
        r.coresolution.as_ref().map(|c| json!({ "holds": c.holds(), "lengths": c.lengths }));
    Ok(Outcome::json(
        r.verdict,
        json!({
            "field": F::name(),
            "summands": summands(&r.pieces)?,
            "partial_tilting": r.partial_tilting,
            "delta": r.delta,
            "expected_delta": r.expected_delta,
            "delta_criterion": r.delta_verdict,
            "coresolution": coresolution,
            "verdict": r.verdict,
        }),
    ))
}

fn fan_report<F: Field>(fan: &ComplementFan<F>) -> Result<Value> {
    let alg = fan.almost_complete.algebra();
    let m = alg.m();
    let t = fan.almost_complete.pd();
    let low: Vec<usize> = fan.pds().into_iter().filter(|&d| d <= m).collect();
    let pattern = (t <= m).then(|| fan_pattern(&low, t)).flatten().map(|p| match p {
        FanPattern::Identity => "identity".to_string(),
        FanPattern::Repeat(j) => format!("repeat {j}"),
    });
    let exchanges: Vec<Value> = fan
        .exchanges
        .iter()
        .map(|e| {
            json!({
                "left": grid(alg, &e.left.dim_grid()),
                "middle": grid(alg, &e.middle.dim_grid()),
                "right": grid(alg, &e.right.dim_grid()),
                "exact": e.is_exact(),
            })
        })
        .collect();
    Ok(json!({
        "almost_complete": summands(&fan.almost_complete)?,
        "pd_almost_complete": t,
        "seed": format!("{:?}", fan.seed).to_lowercase(),
        "count": fan.len(),
        "complements": fan.complements.iter().map(|(x, _)| summand(x)).collect::<Result<Vec<_>>>()?,
        "pds": fan.pds(),
        "pattern": pattern,
        "exchanges": exchanges,
    }))
}

pub fn complements<F: Field>(
    alg: &Arc<ReplicatedAlgebra>,
    module: &ModuleExpr,
    seed: Option<&ModuleExpr>,
) -> Result<Outcome> {
    let t = Pieces::of_module(&module.eval::<F>(alg)?)?;
    let seed = seed.map(|s| s.eval::<F>(alg)).transpose()?;
    if alg.m() != 1 {
        let fan = complement_fan(&t, seed.as_ref())?;
        return Ok(Outcome::json(true, fan_report(&fan)?));
    }
    let (report, fan) = classify_duplicated(&t, seed.as_ref())?;
    let mut v = fan_report(&fan)?;
    let checks: Vec<Value> =
        report.checks.iter().map(|(d, ok)| json!({ "check": d, "holds": ok })).collect();
    v["classification"] = json!({
        "pd2_envelope_projective": report.pd2_envelope_projective,
        "has_pd3_complement": report.has_pd3_complement,
        "level0_part_faithful": report.level0_part_faithful,
        "checks": checks,
        "consistent": report.consistent(),
    });
    Ok(Outcome::json(report.consistent(), v))
}

/// Tilting modules counted as maximal self-orthogonal sets of knitted
/// indecomposables.
fn oracle_keys<F: Field>(
    alg: &Arc<ReplicatedAlgebra>,
    reg: &Registry<F>,
) -> Result<BTreeSet<Vec<usize>>> {
    let inds = enumerate_indecomposables::<F>(alg)?;
    let n = inds.len();
    let mut compat = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i..n {
            let ok = ext_vanishes(&inds[i], &inds[j])? && ext_vanishes(&inds[j], &inds[i])?;
            compat[i][j] = ok;
            compat[j][i] = ok;
        }
    }
    let size = alg.simple_count();
    let mut out = BTreeSet::new();
    let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 0)];
    while let Some((set, next)) = stack.pop() {
        if set.len() == size {
            let mut key = set
                .iter()
                .map(|&i| reg.intern(&inds[i]).map(|r| r.0))
                .collect::<Result<Vec<_>>>()?;
            key.sort_unstable();
            out.insert(key);
            continue;
        }
        for (c, row) in compat.iter().enumerate().skip(next) {
            if row[c] && set.iter().all(|&s| row[s]) {
                let mut grown = set.clone();
                grown.push(c);
                stack.push((grown, c + 1));
            }
        }
    }
    Ok(out)
}

pub enum GraphFormat {
    Json,
    Dot,
}

pub fn tilting_quiver<F: Field>(
    alg: &Arc<ReplicatedAlgebra>,
    limits: Limits,
    format: GraphFormat,
) -> Result<Outcome> {
    let g: TiltingQuiverGraph<F> = explore_from_regular(alg, limits)?;
    let oracle = if g.exhausted && alg.quiver().is_dynkin() {
        let keys = oracle_keys(alg, &g.registry)?;
        Some((keys.len(), keys == g.keys()))
    } else {
        None
    };
    let code = if !g.exhausted {
        4
    } else if oracle.is_some_and(|o| !o.1) {
        1
    } else {
        0
    };
    let body = match format {
        GraphFormat::Dot => g.to_dot(),
        GraphFormat::Json => {
            let mut v = serde_json::to_value(g.export()).expect("graph serializes");
            v["vertex_count"] = json!(g.vertices.len());
            v["pd_le_one_connected"] = json!(g.pd_le_one_connected());
            v["oracle"] = match oracle {
                Some((count, matches)) => json!({ "tilting_modules": count, "matches": matches }),
                None => Value::Null,
            };
            let mut s = serde_json::to_string_pretty(&v).expect("graph serializes");
            s.push('\n');
            s
        }
    };
    Ok(Outcome { code, body })
}

pub fn resolve<F: Field>(
    alg: &Arc<ReplicatedAlgebra>,
    module: &ModuleExpr,
    as_json: bool,
) -> Result<Outcome> {
    let m = module.eval::<F>(alg)?;
    let proj = minimal_resolution(&m)?;
    let inj = injective_coresolution(&m)?;
    let p: Vec<String> = proj.terms.iter().map(|t| grid(alg, &t.module().dim_grid())).collect();
    let i: Vec<String> = inj.terms.iter().map(|t| grid(alg, &t.module().dim_grid())).collect();
    let (pd, id) = (pd(&m)?, id(&m)?);
    if as_json {
        return Ok(Outcome::json(
            true,
            json!({
                "module": grid(alg, &m.dim_grid()),
                "pd": pd,
                "id": id,
                "projective": p,
                "injective": i,
            }),
        ));
    }
    let mut body = String::new();
    writeln!(body, "module {}", grid(alg, &m.dim_grid())).unwrap();
    writeln!(body, "pd {pd}\nid {id}").unwrap();
    writeln!(body, "{:<4}{:<40}I^k", "k", "P_k").unwrap();
    for k in 0..p.len().max(i.len()) {
        let cell = |v: &[String]| v.get(k).cloned().unwrap_or_default();
        writeln!(body, "{:<4}{:<40}{}", k, cell(&p), cell(&i)).unwrap();
    }
    Ok(Outcome { code: 0, body })
}

pub fn ar<F: Field>(alg: &Arc<ReplicatedAlgebra>, format: GraphFormat) -> Result<Outcome> {
    let q = ar_quiver::<F>(alg)?;
    let dims: Vec<String> = q.nodes.iter().map(|n| grid(alg, &n.dim_grid())).collect();
    let body = match format {
        GraphFormat::Dot => {
            let mut s = String::from("digraph ar_quiver {\n");
            for (i, d) in dims.iter().enumerate() {
                writeln!(s, "  n{i} [label=\"{d}\"];").unwrap();
            }
            for (&(a, b), &k) in &q.arrows {
                for _ in 0..k {
                    writeln!(s, "  n{a} -> n{b};").unwrap();
                }
            }
            for (i, t) in q.tau.iter().enumerate() {
                if let Some(t) = t {
                    writeln!(s, "  n{i} -> n{t} [style=dashed];").unwrap();
                }
            }
            s.push_str("}\n");
            s
        }
        GraphFormat::Json => {
            let arrows: Vec<Value> = q
                .arrows
                .iter()
                .map(|(&(a, b), &k)| json!({ "from": a, "to": b, "multiplicity": k }))
                .collect();
            let nodes: Vec<Value> = dims
                .iter()
                .enumerate()
                .map(|(i, d)| json!({ "id": i, "dims": d, "tau": q.tau[i] }))
                .collect();
            let mut s = serde_json::to_string_pretty(&json!({ "nodes": nodes, "arrows": arrows }))
                .expect("quiver serializes");
            s.push('\n');
            s
        }
    };
    Ok(Outcome { code: 0, body })
}

struct Suite {
    checks: Vec<Value>,
    notes: Vec<String>,
    ok: bool,
}

impl Suite {
    fn check(&mut self, name: &str, holds: bool, detail: String) {
        self.ok &= holds;
        self.checks.push(json!({ "check": name, "holds": holds, "detail": detail }));
    }
}

fn chain<F: Field>(fan: &ComplementFan<F>) -> Vec<(DimGrid, usize)> {
    fan.complements.iter().map(|(x, d)| (x.dim_grid(), *d)).collect()
}

fn render_chain(alg: &ReplicatedAlgebra, c: &[(DimGrid, usize)]) -> String {
    c.iter().map(|(g, d)| format!("{} (pd {d})", grid(alg, g))).collect::<Vec<_>>().join(", ")
}

fn verify_example<F: Field>(s: &mut Suite, ex: &Example<F>) -> Result<()> {
    let (report, fan) = classify_duplicated(&ex.almost_complete, None)?;
    let got = chain(&fan);
    let want: Vec<(DimGrid, usize)> =
        ex.complements.iter().map(|c| (c.dims.clone(), c.pd)).collect();
    let alg = &ex.algebra;
    let detail = if got == want {
        render_chain(alg, &got)
    } else {
        format!("expected {}; computed {}", render_chain(alg, &want), render_chain(alg, &got))
    };
    s.check(&format!("{}: complements", ex.name), got == want, detail);
    s.check(
        &format!("{}: exchange sequences exact", ex.name),
        fan.exchanges.iter().all(|e| e.is_exact()),
        format!("{} sequences", fan.exchanges.len()),
    );
    let failed: Vec<&str> = report.checks.iter().filter(|c| !c.1).map(|c| c.0.as_str()).collect();
    s.check(
        &format!("{}: classifier cross-checks", ex.name),
        report.consistent(),
        format!("{} checks, failing: {failed:?}", report.checks.len()),
    );
    if ex.name == "example 2" {
        s.check(
            "example 2: injective envelope of the pd-2 complement is not projective",
            report.pd2_envelope_projective == Some(false),
            format!("{:?}", report.pd2_envelope_projective),
        );
    }
    Ok(())
}

pub fn verify_paper<F: Field>() -> Result<Outcome> {
    let mut s = Suite { checks: Vec::new(), notes: Vec::new(), ok: true };
    for ex in [example1::<F>()?, example2::<F>()?, example3_1::<F>()?, example3_2i::<F>()?] {
        verify_example(&mut s, &ex)?;
    }
    s.notes.push(
        "example 3 (2i): printed third complement {1:1}@L1 has Ext^1 with {2:1}@L0; computed {1:3,2:2}@L1"
            .into(),
    );
    let fan = example3_2ii_search::<F>(Limits { max_vertices: 200, max_radius: 6 })?;
    match fan {
        None => {
            s.check("example 3 (2ii): almost complete module located", false, "not found".into())
        }
        Some(fan) => {
            let alg = fan.almost_complete.algebra().clone();
            let got = chain(&fan);
            s.check(
                "example 3 (2ii): almost complete module located",
                true,
                format!("summands {}", render_chain(&alg, &summand_chain(&fan.almost_complete)?)),
            );
            s.check(
                "example 3 (2ii): no pd-3 complement",
                fan.pds().iter().all(|&d| d < 3),
                format!("pds {:?}", fan.pds()),
            );
            let printed = example3_2ii_complements();
            let shared = printed[1..].iter().all(|c| got.contains(&(c.dims.clone(), c.pd)));
            s.check(
                "example 3 (2ii): complements 1' and {1:3,2:2}@L1",
                shared,
                render_chain(&alg, &got),
            );
            let (d0, p0) = (&printed[0].dims, printed[0].pd);
            if got[0] != (d0.clone(), p0) {
                s.notes.push(format!(
                    "example 3 (2ii): printed first complement {} differs from computed {}",
                    grid(&alg, d0),
                    grid(&alg, &got[0].0)
                ));
            }
            let stated = example3_2ii_summand_dims();
            if !fan.almost_complete.modules().iter().any(|x| x.dim_grid() == stated) {
                s.notes.push(format!(
                    "example 3 (2ii): printed summand {} is decomposable; the located summand is used instead",
                    grid(&alg, &stated)
                ));
            }
        }
    }
    s.notes.push("example 3: P_2' has Loewy layers 2'/1'1'/2".into());
    let ok = s.ok;
    Ok(Outcome::json(
        ok,
        json!({ "field": F::name(), "checks": s.checks, "notes": s.notes, "ok": ok }),
    ))
}

fn summand_chain<F: Field>(p: &Pieces<F>) -> Result<Vec<(DimGrid, usize)>> {
    Ok(p.modules().iter().map(|x| x.dim_grid()).zip(p.pds()).collect())
}
