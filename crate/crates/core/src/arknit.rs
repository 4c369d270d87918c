//! Auslander–Reiten translates and knitting for representation-finite cases.

use std::collections::{BTreeMap, VecDeque};
use std::sync::Arc;

use crate::algebra::ReplicatedAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homological::{
    injective_envelope, is_injective, is_projective, map_from_projectives, map_to_injectives,
    projective_cover, universal_extension, Summands,
};
use crate::krull::{decompose, is_certified_indecomposable};
use crate::module::{cokernel, kernel, RModule, Structural};
use crate::registry::Registry;

/// `τ⁻ M`: cokernel of `ν⁻` applied to a minimal injective copresentation.
pub fn translate_inverse<F: Field>(m: &RModule<F>) -> Result<RModule<F>> {
    if m.is_zero() {
        return Err(Error::Precondition("τ⁻ of the zero module".into()));
    }
    let alg = m.algebra();
    let (i0, mono) = injective_envelope(m);
    let (c, proj) = cokernel(i0.module(), &mono);
    if c.is_zero() {
        return Err(Error::Precondition("τ⁻ of an injective module".into()));
    }
    let (i1, mono1) = injective_envelope(&c);
    let g = proj.then(&mono1);
    let p0 = Summands::projectives(alg, i0.vertices.clone());
    let p1 = Summands::projectives(alg, i1.vertices.clone());
    let gens: Vec<Vec<_>> = i0
        .vertices
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let mut v = vec![F::zero(); p1.module().dim_at(x)];
            for (j, &y) in i1.vertices.iter().enumerate() {
                let row = i1.generator_coord(j);
                let pb = &Structural::projective_basis(alg, y)[x];
                for (k, u) in Structural::injective_basis(alg, x)[y].iter().enumerate() {
                    let c = &g.comps[y][(row, i0.sum.offsets[i][y] + k)];
                    if c.is_zero() {
                        continue;
                    }
                    let pos = pb.iter().position(|e| e == u).expect("same element");
                    v[p1.sum.offsets[j][x] + pos] = c.clone();
                }
            }
            v
        })
        .collect();
    let f = map_from_projectives(&p0, p1.module(), &gens);
    Ok(cokernel(p1.module(), &f).0)
}

/// `τ M`: kernel of `ν` applied to a minimal projective presentation.
pub fn translate<F: Field>(m: &RModule<F>) -> Result<RModule<F>> {
    if m.is_zero() {
        return Err(Error::Precondition("τ of the zero module".into()));
    }
    let alg = m.algebra();
    let (p0, epi) = projective_cover(m);
    let (k, incl) = kernel(p0.module(), &epi);
    if k.is_zero() {
        return Err(Error::Precondition("τ of a projective module".into()));
    }
    let (p1, epi1) = projective_cover(&k);
    let d = epi1.then(&incl);
    let i0 = Summands::injectives(alg, p0.vertices.clone());
    let i1 = Summands::injectives(alg, p1.vertices.clone());
    let funcs: Vec<Vec<F>> = p0
        .vertices
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let mut phi = vec![F::zero(); i1.module().dim_at(x)];
            for (j, &y) in p1.vertices.iter().enumerate() {
                let w = d.comps[y].column(p1.generator_coord(j));
                let ib = &Structural::injective_basis(alg, y)[x];
                for (kk, b) in Structural::projective_basis(alg, x)[y].iter().enumerate() {
                    let c = &w[p0.sum.offsets[i][y] + kk];
                    if c.is_zero() {
                        continue;
                    }
                    let pos = ib.iter().position(|e| e == b).expect("same element");
                    phi[i1.sum.offsets[j][x] + pos] = c.clone();
                }
            }
            phi
        })
        .collect();
    let g = map_to_injectives(i1.module(), &i0, &funcs);
    Ok(kernel(i1.module(), &g).0)
}

/// Limits for knitting.
#[derive(Clone, Copy, Debug)]
pub struct KnitConfig {
    pub require_dynkin: bool,
    pub max_nodes: usize,
}

impl Default for KnitConfig {
    fn default() -> Self {
        KnitConfig { require_dynkin: true, max_nodes: 5000 }
    }
}

/// All indecomposables, as the closure of the projectives under `τ⁻`.
pub fn enumerate_indecomposables<F: Field>(
    alg: &Arc<ReplicatedAlgebra>,
) -> Result<Vec<RModule<F>>> {
    enumerate_with(alg, &KnitConfig::default())
}

pub fn enumerate_with<F: Field>(
    alg: &Arc<ReplicatedAlgebra>,
    cfg: &KnitConfig,
) -> Result<Vec<RModule<F>>> {
    if cfg.require_dynkin && !alg.quiver().is_dynkin() {
        return Err(Error::NotDynkin("base quiver is not of Dynkin type".into()));
    }
    let reg = Registry::new();
    let mut projectives = Structural::projectives::<F>(alg);
    projectives.sort_by_key(|p| (p.total_dim(), p.dim_grid()));
    let mut queue = VecDeque::new();
    for p in projectives {
        if reg.intern(&p)?.1 {
            queue.push_back(p);
        }
    }
    while let Some(x) = queue.pop_front() {
        if is_injective(&x) {
            continue;
        }
        let y = translate_inverse(&x)?;
        if !is_certified_indecomposable(&y) {
            return Err(Error::Internal(format!("τ⁻ of an indecomposable split: {y:?}")));
        }
        if reg.intern(&y)?.1 {
            if reg.len() > cfg.max_nodes {
                return Err(Error::Internal(format!("knitting exceeded {} nodes", cfg.max_nodes)));
            }
            queue.push_back(y);
        }
    }
    Ok(reg.modules())
}

/// Irreducible-map multiplicities and translation between knitted nodes.
#[derive(Clone)]
pub struct ARQuiver<F> {
    pub nodes: Vec<RModule<F>>,
    /// `(from, to) -> multiplicity`
    pub arrows: BTreeMap<(usize, usize), usize>,
    /// `tau[i] = Some(j)` when node i is not projective and `τ(node i) = node j`
    pub tau: Vec<Option<usize>>,
}

pub fn ar_quiver<F: Field>(alg: &Arc<ReplicatedAlgebra>) -> Result<ARQuiver<F>> {
    let nodes = enumerate_indecomposables::<F>(alg)?;
    let reg = Registry::new();
    for n in &nodes {
        reg.intern(n)?;
    }
    let lookup = |m: &RModule<F>| -> Result<usize> {
        reg.find(m)?
            .ok_or_else(|| Error::Internal(format!("module {m:?} missing from knitted list")))
    };
    let mut arrows = BTreeMap::new();
    let mut tau = vec![None; nodes.len()];
    for (i, n) in nodes.iter().enumerate() {
        let middle = if is_projective(n) {
            n.radical().0
        } else {
            let t = translate(n)?;
            tau[i] = Some(lookup(&t)?);
            let ext = universal_extension(n, &t)?;
            if ext.multiplicity != 1 {
                return Err(Error::Internal(format!(
                    "Ext^1(N, τN) has dimension {} for {n:?}",
                    ext.multiplicity
                )));
            }
            if !(ext.inclusion.is_mono() && ext.projection.is_epi())
                || ext.middle.total_dim() != t.total_dim() + n.total_dim()
            {
                return Err(Error::Internal(format!(
                    "almost split sequence for {n:?} is not exact"
                )));
            }
            ext.middle
        };
        if middle.is_zero() {
            continue;
        }
        for (piece, k) in decompose(&middle)?.pieces {
            *arrows.entry((lookup(&piece)?, i)).or_insert(0) += k;
        }
    }
    Ok(ARQuiver { nodes, arrows, tau })
}

impl<F: Field> ARQuiver<F> {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;
    use crate::hereditary::{self, Quiver};
    use crate::homological::{cosyzygy, sigma, syzygy};
    use crate::krull::is_isomorphic;

    fn alg(q: Quiver, m: usize) -> Arc<ReplicatedAlgebra> {
        Arc::new(ReplicatedAlgebra::new(q, m).unwrap())
    }

    fn a1(m: usize) -> Arc<ReplicatedAlgebra> {
        alg(Quiver::new(&["1"], &[]).unwrap(), m)
    }

    fn a2(m: usize) -> Arc<ReplicatedAlgebra> {
        alg(Quiver::new(&["1", "2"], &[("a", "2", "1")]).unwrap(), m)
    }

    fn a3(m: usize) -> Arc<ReplicatedAlgebra> {
        alg(Quiver::new(&["1", "2", "3"], &[("a", "2", "1"), ("b", "3", "2")]).unwrap(), m)
    }

    #[test]
    fn single_vertex_base() {
        let a = a1(1);
        assert_eq!(enumerate_indecomposables::<Q>(&a).unwrap().len(), 3);
    }

    #[test]
    fn base_translation() {
        let a = a2(1);
        let q = a.quiver();
        let s1 = Structural::embed_level(&a, &hereditary::simple_rep::<Q>(q, 0), 0).unwrap();
        let s2 = Structural::embed_level(&a, &hereditary::simple_rep::<Q>(q, 1), 0).unwrap();
        assert!(is_isomorphic(&translate_inverse(&s1).unwrap(), &s2).unwrap());
        assert!(is_isomorphic(&translate(&s2).unwrap(), &s1).unwrap());
    }

    #[test]
    fn translation_round_trip_and_closure() {
        for a in [a2(1), a3(1), a2(2)] {
            let nodes = enumerate_indecomposables::<Q>(&a).unwrap();
            let reg = Registry::new();
            for n in &nodes {
                reg.intern(n).unwrap();
            }
            for n in &nodes {
                if !is_injective(n) {
                    let t = translate_inverse(n).unwrap();
                    assert!(is_isomorphic(&translate(&t).unwrap(), n).unwrap());
                }
                let mut images = vec![syzygy(n), cosyzygy(n)];
                if !is_projective(n) {
                    images.push(translate(n).unwrap());
                }
                for im in images.iter().filter(|m| !m.is_zero()) {
                    for (p, _) in decompose(im).unwrap().pieces {
                        assert!(reg.find(&p).unwrap().is_some(), "{p:?} missing");
                    }
                }
            }
            for x in 0..a.vertex_count() {
                assert!(reg.find(&Structural::projective_at::<Q>(&a, x)).unwrap().is_some());
                assert!(reg.find(&Structural::injective_at::<Q>(&a, x)).unwrap().is_some());
            }
            for i in 0..=2 * a.m() {
                for s in sigma::<Q>(&a, i).unwrap() {
                    for (p, _) in decompose(&s).unwrap().pieces {
                        assert!(reg.find(&p).unwrap().is_some());
                    }
                }
            }
        }
    }

    #[test]
    fn level_embeddings_appear() {
        let a = a2(1);
        let q = a.quiver();
        let nodes = enumerate_indecomposables::<Q>(&a).unwrap();
        let reg = Registry::new();
        for n in &nodes {
            reg.intern(n).unwrap();
        }
        let base = [
            hereditary::simple_rep::<Q>(q, 0),
            hereditary::simple_rep::<Q>(q, 1),
            hereditary::projective_rep::<Q>(q, 1),
        ];
        let mut ids = Vec::new();
        for i in 0..=1 {
            for r in &base {
                let e = Structural::embed_level(&a, r, i).unwrap();
                ids.push(reg.find(&e).unwrap().expect("embedded indecomposable"));
            }
        }
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 6);
    }

    #[test]
    fn meshes() {
        let a = a3(1);
        let ar = ar_quiver::<Q>(&a).unwrap();
        for (i, t) in ar.tau.iter().enumerate() {
            if let Some(t) = t {
                let into: usize =
                    ar.arrows.iter().filter(|((_, to), _)| *to == i).map(|(_, k)| *k).sum();
                let out_of_t: usize =
                    ar.arrows.iter().filter(|((from, _), _)| from == t).map(|(_, k)| *k).sum();
                assert!(into > 0 && out_of_t > 0);
            }
        }
        assert!(enumerate_indecomposables::<Q>(&alg(
            Quiver::new(&["1", "2"], &[("a", "2", "1"), ("b", "2", "1")]).unwrap(),
            1
        ))
        .is_err());
    }
}
