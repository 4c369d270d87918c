//! Module expressions: a small JSON language for describing modules over a
//! replicated algebra by structural constructors or raw matrices.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Deserialize;

use reptilt::algebra::ReplicatedAlgebra;
use reptilt::hereditary::{injective_rep, projective_rep, simple_rep, Quiver, Rep};
use reptilt::homological::{cosyzygy, syzygy};
use reptilt::linalg::Mat;
use reptilt::module::{cokernel, direct_sum, hom_basis, kernel, RMap, RModule, Structural};
use reptilt::{Error, Field, Result};

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    fn value<F: Field>(&self) -> Result<F> {
        match self {
            Scalar::Int(v) => Ok(F::from_i64(*v)),
            Scalar::Text(s) => {
                F::parse(s.trim()).ok_or_else(|| Error::Parse(format!("bad scalar {s:?}")))
            }
        }
    }
}

type Rows = Vec<Vec<Scalar>>;

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct At {
    pub vertex: String,
    #[serde(default)]
    pub level: usize,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum RepExpr {
    Projective(String),
    Injective(String),
    Simple(String),
    Explicit {
        #[serde(default)]
        dims: BTreeMap<String, usize>,
        #[serde(default)]
        maps: BTreeMap<String, Rows>,
    },
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Embed {
    #[serde(default)]
    pub level: usize,
    pub rep: RepExpr,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapExpr {
    pub source: Box<ModuleExpr>,
    pub target: Box<ModuleExpr>,
    /// coefficients over the hom basis from source to target
    pub coeffs: Vec<Scalar>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Literal {
    #[serde(default)]
    pub dims: BTreeMap<String, usize>,
    /// keyed by generator label, e.g. `a@0` or `a*@1`
    #[serde(default)]
    pub actions: BTreeMap<String, Rows>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum ModuleExpr {
    Zero,
    Regular,
    ProjectiveInjectives,
    Proj(At),
    Inj(At),
    Simple(At),
    Embed(Embed),
    Sum(Vec<ModuleExpr>),
    Syzygy(Box<ModuleExpr>),
    Cosyzygy(Box<ModuleExpr>),
    Kernel(MapExpr),
    Cokernel(MapExpr),
    Literal(Literal),
}

impl ModuleExpr {
    pub fn parse(text: &str) -> Result<ModuleExpr> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn eval<F: Field>(&self, alg: &Arc<ReplicatedAlgebra>) -> Result<RModule<F>> {
        let m = match self {
            ModuleExpr::Zero => RModule::zero(alg),
            ModuleExpr::Regular => sum(alg, Structural::projectives(alg))?,
            ModuleExpr::ProjectiveInjectives => sum(alg, Structural::projective_injectives(alg))?,
            ModuleExpr::Proj(at) => {
                Structural::projective(alg, vertex(alg, &at.vertex)?, at.level)?
            }
            ModuleExpr::Inj(at) => Structural::injective(alg, vertex(alg, &at.vertex)?, at.level)?,
            ModuleExpr::Simple(at) => Structural::simple(alg, vertex(alg, &at.vertex)?, at.level)?,
            ModuleExpr::Embed(e) => {
                Structural::embed_level(alg, &e.rep.eval(alg.quiver())?, e.level)?
            }
            ModuleExpr::Sum(parts) => {
                sum(alg, parts.iter().map(|p| p.eval(alg)).collect::<Result<Vec<_>>>()?)?
            }
            ModuleExpr::Syzygy(x) => syzygy(&x.eval::<F>(alg)?),
            ModuleExpr::Cosyzygy(x) => cosyzygy(&x.eval::<F>(alg)?),
            ModuleExpr::Kernel(f) => {
                let (src, _, map) = f.eval(alg)?;
                kernel(&src, &map).0
            }
            ModuleExpr::Cokernel(f) => {
                let (_, tgt, map) = f.eval(alg)?;
                cokernel(&tgt, &map).0
            }
            ModuleExpr::Literal(l) => l.eval(alg)?,
        };
        m.validate()?;
        Ok(m)
    }
}

fn sum<F: Field>(alg: &Arc<ReplicatedAlgebra>, parts: Vec<RModule<F>>) -> Result<RModule<F>> {
    if parts.is_empty() {
        return Ok(RModule::zero(alg));
    }
    direct_sum(&parts.iter().collect::<Vec<_>>())
}

fn vertex(alg: &ReplicatedAlgebra, label: &str) -> Result<usize> {
    alg.quiver().vertex(label)
}

/// Primed labels name the levels: `2''` is vertex 2 at level 2.
fn replicated_vertex(alg: &ReplicatedAlgebra, label: &str) -> Result<usize> {
    (0..alg.vertex_count())
        .find(|&x| alg.vertex_label(x) == label)
        .ok_or_else(|| Error::Parse(format!("unknown vertex {label:?}")))
}

fn matrix<F: Field>(rows: usize, cols: usize, data: &Rows, what: &str) -> Result<Mat<F>> {
    if data.is_empty() && rows * cols == 0 {
        return Ok(Mat::zero(rows, cols));
    }
    if data.len() != rows || data.iter().any(|r| r.len() != cols) {
        return Err(Error::Dimension(format!("{what} must be {rows}x{cols}")));
    }
    let flat = data.iter().flatten().map(Scalar::value).collect::<Result<Vec<F>>>()?;
    Mat::from_rows(rows, cols, flat)
}

impl RepExpr {
    fn eval<F: Field>(&self, q: &Quiver) -> Result<Rep<F>> {
        match self {
            RepExpr::Projective(v) => Ok(projective_rep(q, q.vertex(v)?)),
            RepExpr::Injective(v) => Ok(injective_rep(q, q.vertex(v)?)),
            RepExpr::Simple(v) => Ok(simple_rep(q, q.vertex(v)?)),
            RepExpr::Explicit { dims, maps } => {
                let mut d = vec![0; q.vertex_count()];
                for (label, &k) in dims {
                    d[q.vertex(label)?] = k;
                }
                for name in maps.keys() {
                    q.arrow(name)?;
                }
                let ms = q
                    .arrows()
                    .iter()
                    .map(|a| match maps.get(&a.name) {
                        Some(rows) => matrix(d[a.target], d[a.source], rows, &a.name),
                        None => Ok(Mat::zero(d[a.target], d[a.source])),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Rep::new(q, d, ms)
            }
        }
    }
}

impl MapExpr {
    fn eval<F: Field>(
        &self,
        alg: &Arc<ReplicatedAlgebra>,
    ) -> Result<(RModule<F>, RModule<F>, RMap<F>)> {
        let src = self.source.eval::<F>(alg)?;
        let tgt = self.target.eval::<F>(alg)?;
        let basis = hom_basis(&src, &tgt)?;
        if basis.len() != self.coeffs.len() {
            return Err(Error::Dimension(format!(
                "hom space has dimension {}, got {} coefficients",
                basis.len(),
                self.coeffs.len()
            )));
        }
        let mut map = src.zero_map(&tgt);
        for (b, c) in basis.iter().zip(&self.coeffs) {
            map = map.add(&b.scale(&c.value::<F>()?));
        }
        Ok((src, tgt, map))
    }
}

impl Literal {
    fn eval<F: Field>(&self, alg: &Arc<ReplicatedAlgebra>) -> Result<RModule<F>> {
        let mut dims = vec![0; alg.vertex_count()];
        for (label, &k) in &self.dims {
            dims[replicated_vertex(alg, label)?] = k;
        }
        let labels: Vec<String> =
            (0..alg.generators().len()).map(|g| alg.generator_label(g)).collect();
        if let Some(bad) = self.actions.keys().find(|k| !labels.contains(k)) {
            return Err(Error::Parse(format!("unknown generator {bad:?}")));
        }
        let acts = alg
            .generators()
            .iter()
            .zip(&labels)
            .map(|(g, label)| {
                let (r, c) = (dims[g.target], dims[g.source]);
                match self.actions.get(label) {
                    Some(rows) => matrix(r, c, rows, label),
                    None => Ok(Mat::zero(r, c)),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        RModule::new(alg.clone(), dims, acts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use reptilt::fixtures::{algebra, kronecker};
    use reptilt::krull::is_isomorphic;
    use reptilt::Q;

    fn eval(text: &str) -> Result<RModule<Q>> {
        ModuleExpr::parse(text)?.eval(&algebra(kronecker(), 1))
    }

    #[test]
    fn structural_constructors() {
        let alg = algebra(kronecker(), 1);
        let p = eval(r#"{"proj": {"vertex": "2", "level": 1}}"#).unwrap();
        assert!(is_isomorphic(&p, &Structural::projective(&alg, 1, 1).unwrap()).unwrap());
        assert_eq!(eval(r#""regular""#).unwrap().total_dim(), alg.dim());
        assert!(eval(r#""zero""#).unwrap().is_zero());
    }

    #[test]
    fn embedded_rep_matches_simple() {
        let alg = algebra(kronecker(), 1);
        let s =
            eval(r#"{"embed": {"level": 0, "rep": {"explicit": {"dims": {"2": 1}}}}}"#).unwrap();
        assert!(is_isomorphic(&s, &Structural::simple(&alg, 1, 0).unwrap()).unwrap());
    }

    #[test]
    fn literal_round_trips_a_simple() {
        let s = eval(r#"{"literal": {"dims": {"1'": 1}}}"#).unwrap();
        assert_eq!(s.total_dim(), 1);
        assert!(eval(r#"{"literal": {"dims": {"3": 1}}}"#).is_err());
        assert!(eval(r#"{"literal": {"actions": {"nope": []}}}"#).is_err());
    }

    #[test]
    fn cokernel_of_a_combination() {
        let text = r#"{"cokernel": {"source": {"proj": {"vertex": "1"}},
            "target": {"proj": {"vertex": "2"}}, "coeffs": [1, "0"]}}"#;
        assert_eq!(eval(text).unwrap().total_dim(), 2);
        let bad = r#"{"kernel": {"source": {"proj": {"vertex": "1"}},
            "target": {"proj": {"vertex": "2"}}, "coeffs": [1]}}"#;
        assert!(matches!(eval(bad), Err(Error::Dimension(_))));
    }

    #[test]
    fn bad_shapes_are_rejected() {
        let text = r#"{"embed": {"rep": {"explicit": {"dims": {"1": 1, "2": 1}, "maps": {"a": [[1, 2]]}}}}}"#;
        assert!(matches!(eval(text), Err(Error::Dimension(_))));
        assert!(eval(r#"{"proj": {"vertex": "9"}}"#).is_err());
    }
}
