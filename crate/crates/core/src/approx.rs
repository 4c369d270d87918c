//! Minimal left and right `add(T)`-approximations.

use std::sync::Arc;

use crate::algebra::ReplicatedAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::krull::{decompose, radical_basis, EndAlgebra};
use crate::linalg::{Mat, Subspace};
use crate::module::{hom_basis, DirectSum, RMap, RModule, Structural};

/// `add(T)` given by the indecomposable summands of T, one per class.
#[derive(Clone)]
pub struct AddCategory<F> {
    alg: Arc<ReplicatedAlgebra>,
    summands: Vec<RModule<F>>,
    /// `homs[a][b]` = basis of `Hom(U_a, U_b)`
    homs: Vec<Vec<Vec<RMap<F>>>>,
    /// `rads[a]` = basis of the radical of `End(U_a)`
    rads: Vec<Vec<RMap<F>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone)]
pub struct ApproxResult<F> {
    /// right: `source -> M`; left: `M -> target`
    pub map: RMap<F>,
    pub source: RModule<F>,
    pub target: RModule<F>,
    pub side: Side,
    /// index into the summand list for each copy in the `add(T)` object
    pub profile: Vec<usize>,
}

impl<F: Field> AddCategory<F> {
    pub fn new(alg: &Arc<ReplicatedAlgebra>, summands: Vec<RModule<F>>) -> Result<Self> {
        if summands.iter().any(|s| s.algebra().as_ref() != alg.as_ref()) {
            return Err(Error::AlgebraMismatch);
        }
        let homs = summands
            .iter()
            .map(|a| summands.iter().map(|b| hom_basis(a, b)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let rads = summands.iter().map(radical_basis).collect::<Result<Vec<_>>>()?;
        Ok(AddCategory { alg: alg.clone(), summands, homs, rads })
    }

    pub fn from_module(t: &RModule<F>) -> Result<Self> {
        let d = decompose(t)?;
        Self::new(t.algebra(), d.pieces.into_iter().map(|p| p.0).collect())
    }

    pub fn summands(&self) -> &[RModule<F>] {
        &self.summands
    }

    pub fn algebra(&self) -> &Arc<ReplicatedAlgebra> {
        &self.alg
    }

    /// Basis of the radical maps `U_a -> U_b`.
    fn radical(&self, a: usize, b: usize) -> &[RMap<F>] {
        if a == b {
            &self.rads[a]
        } else {
            &self.homs[a][b]
        }
    }

    fn object(&self, profile: &[usize]) -> DirectSum<F> {
        let parts: Vec<&RModule<F>> = profile.iter().map(|&j| &self.summands[j]).collect();
        DirectSum::new(&self.alg, &parts)
    }
}

/// Members of `cands` that extend a basis of `cands` modulo the span of `rad`.
fn modulo_span<F: Field>(cands: Vec<RMap<F>>, rad: &[RMap<F>]) -> Vec<RMap<F>> {
    let Some(first) = cands.first() else { return cands };
    let ambient = first.flatten().len();
    let mut span = Subspace::span(ambient, &rad.iter().map(RMap::flatten).collect::<Vec<_>>());
    let mut out = Vec::new();
    for c in cands {
        let v = c.flatten();
        if !span.contains(&v) {
            span = span.sum(&Subspace::span(ambient, &[v]));
            out.push(c);
        }
    }
    out
}

/// Span of products `I^k` of a subspace of endomorphisms vanishes eventually.
fn is_nilpotent_span<F: Field>(shape: &RMap<F>, gens: &[RMap<F>], bound: usize) -> bool {
    let ambient = shape.flatten().len();
    let mut power: Vec<RMap<F>> = gens.to_vec();
    for _ in 0..=bound {
        if power.is_empty() {
            return true;
        }
        let prods: Vec<Vec<F>> =
            power.iter().flat_map(|a| gens.iter().map(move |b| a.then(b).flatten())).collect();
        power =
            Subspace::span(ambient, &prods).basis().iter().map(|v| shape.unflatten(v)).collect();
    }
    power.is_empty()
}

/// The endomorphisms `e` of the `add(T)` object with `f ∘ e = 0` (right) or
/// `e ∘ f = 0` (left) are all radical.
fn certify_minimal<F: Field>(obj: &RModule<F>, f: &RMap<F>, side: Side) -> bool {
    let end = EndAlgebra::new(obj);
    if end.basis.is_empty() {
        return true;
    }
    let composites: Vec<Vec<F>> = end
        .basis
        .iter()
        .map(|e| match side {
            Side::Right => e.then(f).flatten(),
            Side::Left => f.then(e).flatten(),
        })
        .collect();
    let rows = composites[0].len();
    let ker = Mat::from_columns(rows, &composites).kernel();
    let id = obj.identity();
    let ideal: Vec<RMap<F>> = ker
        .basis()
        .iter()
        .map(|c| {
            c.iter()
                .zip(&end.basis)
                .filter(|(a, _)| !a.is_zero())
                .fold(obj.zero_map(obj), |acc, (a, e)| acc.add(&e.scale(a)))
        })
        .collect();
    is_nilpotent_span(&id, &ideal, obj.total_dim())
}

/// Minimal right `add(T)`-approximation `C -> M`: per summand, a basis of
/// `Hom(U, M)` modulo the maps factoring radically through `add(T)`.
pub fn right_approximation<F: Field>(
    t: &AddCategory<F>,
    m: &RModule<F>,
) -> Result<ApproxResult<F>> {
    let homs = t.summands.iter().map(|u| hom_basis(u, m)).collect::<Result<Vec<_>>>()?;
    let mut profile = Vec::new();
    let mut maps = Vec::new();
    for (a, cands) in homs.iter().enumerate() {
        let rad: Vec<RMap<F>> = homs
            .iter()
            .enumerate()
            .flat_map(|(b, fs)| {
                let r = t.radical(a, b);
                fs.iter().flat_map(move |f| r.iter().map(move |h| h.then(f)))
            })
            .collect();
        for f in modulo_span(cands.clone(), &rad) {
            profile.push(a);
            maps.push(f);
        }
    }
    let obj = t.object(&profile);
    let map = obj.map_out(m, &maps);
    Ok(ApproxResult { map, source: obj.module, target: m.clone(), side: Side::Right, profile })
}

/// Minimal left `add(T)`-approximation `M -> C`.
pub fn left_approximation<F: Field>(m: &RModule<F>, t: &AddCategory<F>) -> Result<ApproxResult<F>> {
    let homs = t.summands.iter().map(|u| hom_basis(m, u)).collect::<Result<Vec<_>>>()?;
    let mut profile = Vec::new();
    let mut maps = Vec::new();
    for (a, cands) in homs.iter().enumerate() {
        let rad: Vec<RMap<F>> = homs
            .iter()
            .enumerate()
            .flat_map(|(b, gs)| {
                let r = t.radical(b, a);
                gs.iter().flat_map(move |g| r.iter().map(move |h| g.then(h)))
            })
            .collect();
        for g in modulo_span(cands.clone(), &rad) {
            profile.push(a);
            maps.push(g);
        }
    }
    let obj = t.object(&profile);
    let map = obj.map_in(m, &maps);
    Ok(ApproxResult { map, source: m.clone(), target: obj.module, side: Side::Left, profile })
}

impl<F: Field> ApproxResult<F> {
    /// The `add(T)` object of the approximation.
    pub fn object(&self) -> &RModule<F> {
        match self.side {
            Side::Right => &self.source,
            Side::Left => &self.target,
        }
    }

    /// Checks that the endomorphisms of the `add(T)` object killed by the
    /// approximation form a nilpotent ideal.
    pub fn certify_minimal(&self) -> bool {
        certify_minimal(self.object(), &self.map, self.side)
    }

    /// Every map from (right) or to (left) a summand of T factors through.
    pub fn has_approximation_property(&self, t: &AddCategory<F>) -> Result<bool> {
        for u in t.summands() {
            let ok = match self.side {
                Side::Right => {
                    let through: Vec<RMap<F>> =
                        hom_basis(u, &self.source)?.iter().map(|h| h.then(&self.map)).collect();
                    let want = hom_basis(u, &self.target)?;
                    span_dim(&through) == want.len()
                }
                Side::Left => {
                    let through: Vec<RMap<F>> =
                        hom_basis(&self.target, u)?.iter().map(|h| self.map.then(h)).collect();
                    let want = hom_basis(&self.source, u)?;
                    span_dim(&through) == want.len()
                }
            };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn span_dim<F: Field>(maps: &[RMap<F>]) -> usize {
    match maps.first() {
        None => 0,
        Some(f) => {
            Subspace::span(f.flatten().len(), &maps.iter().map(RMap::flatten).collect::<Vec<_>>())
                .dim()
        }
    }
}

pub fn is_generated_by<F: Field>(m: &RModule<F>, t: &AddCategory<F>) -> Result<bool> {
    Ok(right_approximation(t, m)?.map.is_epi())
}

pub fn is_cogenerated_by<F: Field>(m: &RModule<F>, t: &AddCategory<F>) -> Result<bool> {
    Ok(left_approximation(m, t)?.map.is_mono())
}

/// The regular module embeds in a finite power of M, tested on each
/// indecomposable projective.
pub fn is_faithful<F: Field>(m: &RModule<F>) -> Result<bool> {
    let alg = m.algebra();
    if m.is_zero() {
        return Ok(false);
    }
    let t = AddCategory::from_module(m)?;
    for p in Structural::projectives::<F>(alg) {
        if !left_approximation(&p, &t)?.map.is_mono() {
            return Ok(false);
        }
    }
    Ok(true)
}
