//! Modules over `A^(m)` and their morphisms.
//!
//! A module stores a vector space per vertex `(v, i)` and a matrix per
//! algebra generator: the arrows of every copy `A_i` (so each level is a
//! representation of the base quiver) and every dual path `p*`, which
//! together make up the connector `DA ⊗_A M_i -> M_{i-1}`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{ElemKind, ReplicatedAlgebra, Vertex};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hereditary::{self, dual_tensor, AMap, Rep};
use crate::linalg::{Mat, Subspace};

/// Dimension vector laid out by level, then base vertex.
#[derive(
    Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize,
)]
pub struct DimGrid(pub Vec<Vec<usize>>);

impl DimGrid {
    pub fn total(&self) -> usize {
        self.0.iter().flatten().sum()
    }

    /// Sparse form: level -> (vertex label -> dim), omitting zeros.
    pub fn sparse(&self, labels: &[String]) -> BTreeMap<usize, BTreeMap<String, usize>> {
        let mut out = BTreeMap::new();
        for (i, row) in self.0.iter().enumerate() {
            let entries: BTreeMap<String, usize> = row
                .iter()
                .enumerate()
                .filter(|(_, &d)| d > 0)
                .map(|(v, &d)| (labels[v].clone(), d))
                .collect();
            if !entries.is_empty() {
                out.insert(i, entries);
            }
        }
        out
    }

    pub fn render(&self, labels: &[String]) -> String {
        let parts: Vec<String> = self
            .sparse(labels)
            .into_iter()
            .map(|(i, e)| {
                let inner: Vec<String> = e.into_iter().map(|(l, d)| format!("{l}:{d}")).collect();
                format!("{{{}}}@L{i}", inner.join(","))
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" ")
        }
    }
}

#[derive(Clone)]
pub struct RModule<F> {
    alg: Arc<ReplicatedAlgebra>,
    dims: Vec<usize>,
    acts: Vec<Mat<F>>,
}

impl<F: Field> PartialEq for RModule<F> {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other) && self.dims == other.dims && self.acts == other.acts
    }
}
impl<F: Field> Eq for RModule<F> {}

impl<F: Field> fmt::Debug for RModule<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RModule({})", self.dim_grid().render(self.alg.quiver().vertices()))
    }
}

/// A morphism of modules, one matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMap<F> {
    pub comps: Vec<Mat<F>>,
}

impl<F: Field> RModule<F> {
    pub fn new(alg: Arc<ReplicatedAlgebra>, dims: Vec<usize>, acts: Vec<Mat<F>>) -> Result<Self> {
        let m = RModule { alg, dims, acts };
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(
        alg: Arc<ReplicatedAlgebra>,
        dims: Vec<usize>,
        acts: Vec<Mat<F>>,
    ) -> Self {
        let m = RModule { alg, dims, acts };
        debug_assert!(m.validate().is_ok(), "{:?}", m.validate());
        m
    }

    pub fn zero(alg: &Arc<ReplicatedAlgebra>) -> Self {
        let dims = vec![0; alg.vertex_count()];
        let acts = alg.generators().iter().map(|_| Mat::zero(0, 0)).collect();
        RModule { alg: alg.clone(), dims, acts }
    }

    /// Checks shapes and every defining relation of the algebra.
    pub fn validate(&self) -> Result<()> {
        let alg = &self.alg;
        if self.dims.len() != alg.vertex_count() || self.acts.len() != alg.generators().len() {
            return Err(Error::InvalidModule("data does not match the algebra".into()));
        }
        for (g, gen) in alg.generators().iter().enumerate() {
            let a = &self.acts[g];
            if a.rows() != self.dims[gen.target] || a.cols() != self.dims[gen.source] {
                return Err(Error::InvalidModule(format!(
                    "generator {} has shape {}x{}",
                    alg.generator_label(g),
                    a.rows(),
                    a.cols()
                )));
            }
        }
        // relations: products involving a dual reduce to a generator or vanish
        for (g2, second) in alg.generators().iter().enumerate() {
            for (g1, first) in alg.generators().iter().enumerate() {
                if first.target != second.source {
                    continue;
                }
                let is_dual = |e: usize| matches!(alg.basis()[e].kind, ElemKind::Dual { .. });
                if !is_dual(first.elem) && !is_dual(second.elem) {
                    continue;
                }
                let lhs = self.acts[g2].mul(&self.acts[g1]);
                let ok = match alg.mul(second.elem, first.elem) {
                    None => lhs.is_zero(),
                    Some(r) => {
                        let rg = alg.generator_of(r).expect("dual products are generators");
                        lhs == self.acts[rg]
                    }
                };
                if !ok {
                    return Err(Error::InvalidModule(format!(
                        "relation {} · {} fails",
                        alg.generator_label(g2),
                        alg.generator_label(g1)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<ReplicatedAlgebra> {
        &self.alg
    }

    pub fn same_algebra(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.alg, &other.alg) || self.alg == other.alg
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, x: Vertex) -> usize {
        self.dims[x]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn action(&self, g: usize) -> &Mat<F> {
        &self.acts[g]
    }

    pub fn actions(&self) -> &[Mat<F>] {
        &self.acts
    }

    /// Matrix by which a basis element of the algebra acts.
    pub fn basis_action(&self, elem: usize) -> Mat<F> {
        let be = self.alg.basis()[elem];
        let mut acc = Mat::identity(self.dims[be.source]);
        for &g in self.alg.factorization(elem) {
            acc = self.acts[g].mul(&acc);
        }
        acc
    }

    /// Actions of all algebra basis elements, indexed like `alg.basis()`.
    pub fn basis_actions(&self) -> Vec<Mat<F>> {
        (0..self.alg.dim()).map(|e| self.basis_action(e)).collect()
    }

    pub fn dim_grid(&self) -> DimGrid {
        let n = self.alg.n();
        DimGrid((0..=self.alg.m()).map(|i| self.dims[i * n..(i + 1) * n].to_vec()).collect())
    }

    /// Smallest and largest levels carrying a nonzero space.
    pub fn support_levels(&self) -> Option<(usize, usize)> {
        let levels: Vec<usize> =
            (0..=self.alg.m()).filter(|&i| self.dim_grid().0[i].iter().any(|&d| d > 0)).collect();
        Some((*levels.first()?, *levels.last()?))
    }

    /// The base representation `M_i`.
    pub fn level(&self, i: usize) -> Rep<F> {
        let alg = &self.alg;
        let n = alg.n();
        let dims = self.dims[i * n..(i + 1) * n].to_vec();
        let maps = (0..alg.quiver().arrows().len())
            .map(|a| self.acts[alg.arrow_generator(i, a).unwrap()].clone())
            .collect();
        Rep { dims, maps }
    }

    /// The connector `φ_i : DA ⊗_A M_i -> M_{i-1}` as a morphism of base
    /// representations, in the canonical quotient basis of `dual_tensor`.
    pub fn connector(&self, i: usize) -> Result<AMap<F>> {
        if i == 0 || i > self.alg.m() {
            return Err(Error::OutOfRange(format!("connector index {i}")));
        }
        let q = self.alg.quiver();
        let mi = self.level(i);
        let dt = dual_tensor(q, &mi);
        let n = self.alg.n();
        let components = (0..n)
            .map(|x| {
                let mut free = Mat::zero(self.dims[(i - 1) * n + x], dt.section[x].rows());
                let mut off = 0;
                for &p in &dt.blocks[x] {
                    let g = self.alg.dual_generator(i, p).unwrap();
                    free.set_block(0, off, &self.acts[g]);
                    off += mi.dims[q.paths()[p].target];
                }
                free.mul(&dt.section[x])
            })
            .collect();
        Ok(AMap { components })
    }

    /// Assembles a module from its levels and connectors `DA ⊗_A M_i -> M_{i-1}`
    /// (given in the canonical `dual_tensor` basis).
    pub fn from_levels(
        alg: &Arc<ReplicatedAlgebra>,
        levels: &[Rep<F>],
        connectors: &[AMap<F>],
    ) -> Result<Self> {
        let m = alg.m();
        let q = alg.quiver();
        let n = alg.n();
        if levels.len() != m + 1 || connectors.len() != m {
            return Err(Error::InvalidModule(format!(
                "need {} levels and {} connectors",
                m + 1,
                m
            )));
        }
        for l in levels {
            l.validate(q)?;
        }
        let dims: Vec<usize> = levels.iter().flat_map(|l| l.dims.iter().copied()).collect();
        let mut acts: Vec<Mat<F>> =
            alg.generators().iter().map(|g| Mat::zero(dims[g.target], dims[g.source])).collect();
        for (i, l) in levels.iter().enumerate() {
            for a in 0..q.arrows().len() {
                acts[alg.arrow_generator(i, a).unwrap()] = l.maps[a].clone();
            }
        }
        for i in 1..=m {
            let dt = dual_tensor(q, &levels[i]);
            let phi = &connectors[i - 1];
            if !phi.is_homomorphism(q, &dt.rep, &levels[i - 1]) {
                return Err(Error::NotHomomorphism(format!("connector {i} is not A-linear")));
            }
            for x in 0..n {
                let full = phi.components[x].mul(&dt.projection[x]);
                let mut off = 0;
                for &p in &dt.blocks[x] {
                    let w = levels[i].dims[q.paths()[p].target];
                    acts[alg.dual_generator(i, p).unwrap()] = full.block(0, off, full.rows(), w);
                    off += w;
                }
            }
        }
        RModule::new(alg.clone(), dims, acts)
    }

    pub fn is_homomorphism(&self, tgt: &RModule<F>, f: &RMap<F>) -> bool {
        f.comps.len() == self.dims.len()
            && f.comps
                .iter()
                .enumerate()
                .all(|(x, c)| c.rows() == tgt.dims[x] && c.cols() == self.dims[x])
            && self.alg.generators().iter().enumerate().all(|(g, gen)| {
                tgt.acts[g].mul(&f.comps[gen.source]) == f.comps[gen.target].mul(&self.acts[g])
            })
    }

    pub fn map(&self, tgt: &RModule<F>, comps: Vec<Mat<F>>) -> Result<RMap<F>> {
        let f = RMap { comps };
        if !self.same_algebra(tgt) {
            return Err(Error::AlgebraMismatch);
        }
        if !self.is_homomorphism(tgt, &f) {
            return Err(Error::NotHomomorphism("components do not commute".into()));
        }
        Ok(f)
    }

    pub fn identity(&self) -> RMap<F> {
        RMap { comps: self.dims.iter().map(|&d| Mat::identity(d)).collect() }
    }

    pub fn zero_map(&self, tgt: &RModule<F>) -> RMap<F> {
        RMap { comps: self.dims.iter().zip(&tgt.dims).map(|(&s, &t)| Mat::zero(t, s)).collect() }
    }

    /// Submodule given invariant subspaces, with its inclusion.
    pub fn submodule(&self, subs: &[Subspace<F>]) -> (RModule<F>, RMap<F>) {
        let bases: Vec<Mat<F>> = subs.iter().map(Subspace::basis_matrix).collect();
        let acts = self
            .alg
            .generators()
            .iter()
            .enumerate()
            .map(|(g, gen)| {
                let img = self.acts[g].mul(&bases[gen.source]);
                img.select_rows(subs[gen.target].pivots())
            })
            .collect();
        let dims = subs.iter().map(Subspace::dim).collect();
        (RModule::new_unchecked(self.alg.clone(), dims, acts), RMap { comps: bases })
    }

    /// Quotient by invariant subspaces, with the projection.
    pub fn quotient(&self, subs: &[Subspace<F>]) -> (RModule<F>, RMap<F>) {
        let qs: Vec<_> = subs.iter().map(Subspace::quotient).collect();
        let acts = self
            .alg
            .generators()
            .iter()
            .enumerate()
            .map(|(g, gen)| {
                qs[gen.target].projection.mul(&self.acts[g]).mul(&qs[gen.source].section)
            })
            .collect();
        let dims = qs.iter().map(|q| q.projection.rows()).collect();
        let proj = RMap { comps: qs.into_iter().map(|q| q.projection).collect() };
        (RModule::new_unchecked(self.alg.clone(), dims, acts), proj)
    }

    /// Sum of the images of all radical generators, per vertex.
    pub fn radical_spaces(&self) -> Vec<Subspace<F>> {
        let mut spaces: Vec<Subspace<F>> = self.dims.iter().map(|&d| Subspace::zero(d)).collect();
        for &g in self.alg.essential_generators() {
            let t = self.alg.generators()[g].target;
            spaces[t] = spaces[t].sum(&self.acts[g].image());
        }
        spaces
    }

    pub fn socle_spaces(&self) -> Vec<Subspace<F>> {
        let mut spaces: Vec<Subspace<F>> = self.dims.iter().map(|&d| Subspace::full(d)).collect();
        for &g in self.alg.essential_generators() {
            let s = self.alg.generators()[g].source;
            spaces[s] = spaces[s].intersect(&self.acts[g].kernel());
        }
        spaces
    }

    pub fn radical(&self) -> (RModule<F>, RMap<F>) {
        self.submodule(&self.radical_spaces())
    }

    pub fn socle(&self) -> (RModule<F>, RMap<F>) {
        self.submodule(&self.socle_spaces())
    }

    pub fn top(&self) -> (RModule<F>, RMap<F>) {
        self.quotient(&self.radical_spaces())
    }

    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_spaces().iter().zip(&self.dims).map(|(r, d)| d - r.dim()).collect()
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        self.socle_spaces().iter().map(Subspace::dim).collect()
    }

    /// Loewy layers (dimension vectors of `rad^k M / rad^{k+1} M`).
    pub fn loewy_layers(&self) -> Vec<DimGrid> {
        let mut layers = Vec::new();
        let mut cur = self.clone();
        while !cur.is_zero() {
            let (rad, _) = cur.radical();
            let top: Vec<usize> = cur.dims.iter().zip(&rad.dims).map(|(a, b)| a - b).collect();
            let n = self.alg.n();
            layers.push(DimGrid(top.chunks(n).map(<[usize]>::to_vec).collect()));
            cur = rad;
        }
        layers
    }

    /// The same module over `A^(t)`, `t >= m`, with zero higher levels.
    pub fn promote(&self, target: &Arc<ReplicatedAlgebra>) -> Result<RModule<F>> {
        if target.quiver() != self.alg.quiver() || target.m() < self.alg.m() {
            return Err(Error::AlgebraMismatch);
        }
        let mut dims = self.dims.clone();
        dims.resize(target.vertex_count(), 0);
        let q = self.alg.quiver();
        let acts = target
            .generators()
            .iter()
            .map(|g| {
                let own = match target.basis()[g.elem].kind {
                    ElemKind::Path { level, path } if level <= self.alg.m() => {
                        self.alg.arrow_generator(level, q.paths()[path].arrows[0])
                    }
                    ElemKind::Dual { level, path } if level <= self.alg.m() => {
                        self.alg.dual_generator(level, path)
                    }
                    _ => None,
                };
                match own {
                    Some(h) => self.acts[h].clone(),
                    None => Mat::zero(dims[g.target], dims[g.source]),
                }
            })
            .collect();
        RModule::new(target.clone(), dims, acts)
    }

    /// Applies a per-vertex change of basis `P_x`, returning `P M P^{-1}`
    /// and the isomorphism `M -> P M P^{-1}`.
    pub fn conjugate(&self, change: &[Mat<F>]) -> Result<(RModule<F>, RMap<F>)> {
        let inverses: Vec<Mat<F>> = change
            .iter()
            .map(|p| p.inverse().ok_or_else(|| Error::Precondition("singular basis change".into())))
            .collect::<Result<_>>()?;
        let acts = self
            .alg
            .generators()
            .iter()
            .enumerate()
            .map(|(g, gen)| change[gen.target].mul(&self.acts[g]).mul(&inverses[gen.source]))
            .collect();
        let m = RModule::new(self.alg.clone(), self.dims.clone(), acts)?;
        Ok((m, RMap { comps: change.to_vec() }))
    }
}

impl<F: Field> RMap<F> {
    /// All entries, component by component, row-major.
    pub fn flatten(&self) -> Vec<F> {
        self.comps.iter().flat_map(|c| c.entries().iter().cloned()).collect()
    }

    /// Inverse of `flatten`, taking component shapes from `self`.
    pub fn unflatten(&self, v: &[F]) -> RMap<F> {
        let mut off = 0;
        let comps = self
            .comps
            .iter()
            .map(|c| {
                let len = c.rows() * c.cols();
                let m = Mat::from_rows(c.rows(), c.cols(), v[off..off + len].to_vec());
                off += len;
                m.expect("shape matches")
            })
            .collect();
        RMap { comps }
    }

    /// `after ∘ self`
    pub fn then(&self, after: &RMap<F>) -> RMap<F> {
        RMap { comps: self.comps.iter().zip(&after.comps).map(|(f, g)| g.mul(f)).collect() }
    }

    pub fn add(&self, other: &RMap<F>) -> RMap<F> {
        RMap { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn scale(&self, s: &F) -> RMap<F> {
        RMap { comps: self.comps.iter().map(|a| a.scale(s)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Mat::is_zero)
    }

    pub fn is_mono(&self) -> bool {
        self.comps.iter().all(|c| c.rank() == c.cols())
    }

    pub fn is_epi(&self) -> bool {
        self.comps.iter().all(|c| c.rank() == c.rows())
    }

    pub fn is_iso(&self) -> bool {
        self.comps.iter().all(|c| c.is_square() && c.rank() == c.rows())
    }

    pub fn rank(&self) -> usize {
        self.comps.iter().map(Mat::rank).sum()
    }

    pub fn inverse(&self) -> Option<RMap<F>> {
        Some(RMap { comps: self.comps.iter().map(Mat::inverse).collect::<Option<_>>()? })
    }

    /// Restriction to a base level.
    pub fn level_map(&self, alg: &ReplicatedAlgebra, i: usize) -> AMap<F> {
        let n = alg.n();
        AMap { components: self.comps[i * n..(i + 1) * n].to_vec() }
    }

    pub fn pow(&self, e: usize) -> RMap<F> {
        RMap { comps: self.comps.iter().map(|c| c.pow(e)).collect() }
    }

    pub fn kernel_spaces(&self) -> Vec<Subspace<F>> {
        self.comps.iter().map(Mat::kernel).collect()
    }

    pub fn image_spaces(&self) -> Vec<Subspace<F>> {
        self.comps.iter().map(Mat::image).collect()
    }
}

pub fn kernel<F: Field>(src: &RModule<F>, f: &RMap<F>) -> (RModule<F>, RMap<F>) {
    src.submodule(&f.kernel_spaces())
}

pub fn image<F: Field>(tgt: &RModule<F>, f: &RMap<F>) -> (RModule<F>, RMap<F>) {
    tgt.submodule(&f.image_spaces())
}

pub fn cokernel<F: Field>(tgt: &RModule<F>, f: &RMap<F>) -> (RModule<F>, RMap<F>) {
    tgt.quotient(&f.image_spaces())
}

/// Direct sum with block offsets per summand and vertex.
#[derive(Clone)]
pub struct DirectSum<F> {
    pub module: RModule<F>,
    /// `offsets[j][x]`: first coordinate of summand j at vertex x
    pub offsets: Vec<Vec<usize>>,
    pub summand_dims: Vec<Vec<usize>>,
}

impl<F: Field> DirectSum<F> {
    pub fn new(alg: &Arc<ReplicatedAlgebra>, parts: &[&RModule<F>]) -> DirectSum<F> {
        let nv = alg.vertex_count();
        let mut offsets = Vec::with_capacity(parts.len());
        let mut dims = vec![0; nv];
        for p in parts {
            offsets.push(dims.clone());
            for x in 0..nv {
                dims[x] += p.dims[x];
            }
        }
        let acts = (0..alg.generators().len())
            .map(|g| Mat::block_diag(&parts.iter().map(|p| p.acts[g].clone()).collect::<Vec<_>>()))
            .collect();
        DirectSum {
            module: RModule { alg: alg.clone(), dims, acts },
            offsets,
            summand_dims: parts.iter().map(|p| p.dims.clone()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.offsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.offsets.is_empty()
    }

    pub fn inclusion(&self, j: usize) -> RMap<F> {
        let comps = (0..self.module.dims.len())
            .map(|x| {
                let mut c = Mat::zero(self.module.dims[x], self.summand_dims[j][x]);
                c.set_block(self.offsets[j][x], 0, &Mat::identity(self.summand_dims[j][x]));
                c
            })
            .collect();
        RMap { comps }
    }

    pub fn projection(&self, j: usize) -> RMap<F> {
        let comps = (0..self.module.dims.len())
            .map(|x| {
                let mut c = Mat::zero(self.summand_dims[j][x], self.module.dims[x]);
                c.set_block(0, self.offsets[j][x], &Mat::identity(self.summand_dims[j][x]));
                c
            })
            .collect();
        RMap { comps }
    }

    /// The map `⊕ X_j -> N` with components `maps[j]`.
    pub fn map_out(&self, tgt: &RModule<F>, maps: &[RMap<F>]) -> RMap<F> {
        let comps = (0..self.module.dims.len())
            .map(|x| {
                let mut c = Mat::zero(tgt.dims[x], self.module.dims[x]);
                for (j, f) in maps.iter().enumerate() {
                    c.set_block(0, self.offsets[j][x], &f.comps[x]);
                }
                c
            })
            .collect();
        RMap { comps }
    }

    /// The map `N -> ⊕ X_j` with components `maps[j]`.
    pub fn map_in(&self, src: &RModule<F>, maps: &[RMap<F>]) -> RMap<F> {
        let comps = (0..self.module.dims.len())
            .map(|x| {
                let mut c = Mat::zero(self.module.dims[x], src.dims[x]);
                for (j, f) in maps.iter().enumerate() {
                    c.set_block(self.offsets[j][x], 0, &f.comps[x]);
                }
                c
            })
            .collect();
        RMap { comps }
    }
}

pub fn direct_sum<F: Field>(parts: &[&RModule<F>]) -> Result<RModule<F>> {
    let Some(first) = parts.first() else {
        return Err(Error::Precondition("empty direct sum needs an algebra".into()));
    };
    if parts.iter().any(|p| !p.same_algebra(first)) {
        return Err(Error::AlgebraMismatch);
    }
    Ok(DirectSum::new(first.algebra(), parts).module)
}

/// Basis of `Hom(M, N)`.
pub fn hom_basis<F: Field>(m: &RModule<F>, n: &RModule<F>) -> Result<Vec<RMap<F>>> {
    if !m.same_algebra(n) {
        return Err(Error::AlgebraMismatch);
    }
    let alg = m.algebra();
    let gens: Vec<_> = alg
        .essential_generators()
        .iter()
        .map(|&g| {
            let gen = alg.generators()[g];
            (gen.source, gen.target, &m.acts[g], &n.acts[g])
        })
        .collect();
    Ok(hereditary::solve_commuting(&m.dims, &n.dims, &gens)
        .into_iter()
        .map(|comps| RMap { comps })
        .collect())
}

pub fn hom_dim<F: Field>(m: &RModule<F>, n: &RModule<F>) -> Result<usize> {
    Ok(hom_basis(m, n)?.len())
}

/// Structural modules of `A^(m)`.
pub struct Structural;

impl Structural {
    fn check(alg: &ReplicatedAlgebra, v: usize, i: usize) -> Result<Vertex> {
        if v >= alg.n() || i > alg.m() {
            return Err(Error::OutOfRange(format!("vertex ({v}, {i})")));
        }
        Ok(alg.vertex(v, i))
    }

    /// Basis of `P(x)` per vertex: algebra elements starting at x.
    pub fn projective_basis(alg: &ReplicatedAlgebra, x: Vertex) -> Vec<Vec<usize>> {
        let mut basis: Vec<Vec<usize>> = vec![Vec::new(); alg.vertex_count()];
        for (e, be) in alg.basis().iter().enumerate() {
            if be.source == x {
                basis[be.target].push(e);
            }
        }
        basis
    }

    /// Basis of `I(x)` per vertex: duals of algebra elements ending at x.
    pub fn injective_basis(alg: &ReplicatedAlgebra, x: Vertex) -> Vec<Vec<usize>> {
        let mut basis: Vec<Vec<usize>> = vec![Vec::new(); alg.vertex_count()];
        for (e, be) in alg.basis().iter().enumerate() {
            if be.target == x {
                basis[be.source].push(e);
            }
        }
        basis
    }

    /// `A^(m) e_x`, basis: algebra basis elements starting at x.
    pub fn projective_at<F: Field>(alg: &Arc<ReplicatedAlgebra>, x: Vertex) -> RModule<F> {
        let basis = Self::projective_basis(alg, x);
        let dims: Vec<usize> = basis.iter().map(Vec::len).collect();
        let acts = alg
            .generators()
            .iter()
            .map(|gen| {
                let mut m = Mat::zero(dims[gen.target], dims[gen.source]);
                for (c, &b) in basis[gen.source].iter().enumerate() {
                    if let Some(r) = alg.mul(gen.elem, b) {
                        let row = basis[gen.target].iter().position(|&e| e == r).unwrap();
                        m[(row, c)] = F::one();
                    }
                }
                m
            })
            .collect();
        RModule::new_unchecked(alg.clone(), dims, acts)
    }

    /// `D(e_x A^(m))`, basis: duals of basis elements ending at x.
    pub fn injective_at<F: Field>(alg: &Arc<ReplicatedAlgebra>, x: Vertex) -> RModule<F> {
        let basis = Self::injective_basis(alg, x);
        let dims: Vec<usize> = basis.iter().map(Vec::len).collect();
        let acts = alg
            .generators()
            .iter()
            .map(|gen| {
                let mut m = Mat::zero(dims[gen.target], dims[gen.source]);
                // g · b^ = sum over u with u·g = b of u^
                for (row, &u) in basis[gen.target].iter().enumerate() {
                    if let Some(b) = alg.mul(u, gen.elem) {
                        let c = basis[gen.source].iter().position(|&e| e == b).unwrap();
                        m[(row, c)] = F::one();
                    }
                }
                m
            })
            .collect();
        RModule::new_unchecked(alg.clone(), dims, acts)
    }

    pub fn simple_at<F: Field>(alg: &Arc<ReplicatedAlgebra>, x: Vertex) -> RModule<F> {
        let dims: Vec<usize> = (0..alg.vertex_count()).map(|y| usize::from(y == x)).collect();
        let acts =
            alg.generators().iter().map(|g| Mat::zero(dims[g.target], dims[g.source])).collect();
        RModule::new_unchecked(alg.clone(), dims, acts)
    }

    pub fn projective<F: Field>(
        alg: &Arc<ReplicatedAlgebra>,
        v: usize,
        i: usize,
    ) -> Result<RModule<F>> {
        Ok(Self::projective_at(alg, Self::check(alg, v, i)?))
    }

    pub fn injective<F: Field>(
        alg: &Arc<ReplicatedAlgebra>,
        v: usize,
        i: usize,
    ) -> Result<RModule<F>> {
        Ok(Self::injective_at(alg, Self::check(alg, v, i)?))
    }

    pub fn simple<F: Field>(
        alg: &Arc<ReplicatedAlgebra>,
        v: usize,
        i: usize,
    ) -> Result<RModule<F>> {
        Ok(Self::simple_at(alg, Self::check(alg, v, i)?))
    }

    /// A base representation placed at level i with zero connectors.
    pub fn embed_level<F: Field>(
        alg: &Arc<ReplicatedAlgebra>,
        rep: &Rep<F>,
        i: usize,
    ) -> Result<RModule<F>> {
        if i > alg.m() {
            return Err(Error::OutOfRange(format!("level {i}")));
        }
        rep.validate(alg.quiver())?;
        let n = alg.n();
        let mut dims = vec![0; alg.vertex_count()];
        dims[i * n..(i + 1) * n].copy_from_slice(&rep.dims);
        let mut acts: Vec<Mat<F>> =
            alg.generators().iter().map(|g| Mat::zero(dims[g.target], dims[g.source])).collect();
        for a in 0..alg.quiver().arrows().len() {
            acts[alg.arrow_generator(i, a).unwrap()] = rep.maps[a].clone();
        }
        RModule::new(alg.clone(), dims, acts)
    }

    /// Indecomposable projectives `P(v, i)` in vertex order.
    pub fn projectives<F: Field>(alg: &Arc<ReplicatedAlgebra>) -> Vec<RModule<F>> {
        (0..alg.vertex_count()).map(|x| Self::projective_at(alg, x)).collect()
    }

    pub fn injectives<F: Field>(alg: &Arc<ReplicatedAlgebra>) -> Vec<RModule<F>> {
        (0..alg.vertex_count()).map(|x| Self::injective_at(alg, x)).collect()
    }

    /// The projective-injectives `P(v, i)` with `i >= 1`.
    pub fn projective_injectives<F: Field>(alg: &Arc<ReplicatedAlgebra>) -> Vec<RModule<F>> {
        (alg.n()..alg.vertex_count()).map(|x| Self::projective_at(alg, x)).collect()
    }

    /// The regular module `⊕ P(v, i)`.
    pub fn regular_module<F: Field>(alg: &Arc<ReplicatedAlgebra>) -> RModule<F> {
        let ps = Self::projectives::<F>(alg);
        DirectSum::new(alg, &ps.iter().collect::<Vec<_>>()).module
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;
    use crate::hereditary::{injective_rep, projective_rep, Quiver};

    fn kron(m: usize) -> Arc<ReplicatedAlgebra> {
        let q = Quiver::new(&["1", "2"], &[("a", "2", "1"), ("b", "2", "1")]).unwrap();
        Arc::new(ReplicatedAlgebra::new(q, m).unwrap())
    }

    fn d4t() -> Arc<ReplicatedAlgebra> {
        let q = Quiver::new(
            &["1", "2", "3", "4", "5"],
            &[("a", "2", "1"), ("b", "3", "1"), ("c", "4", "1"), ("d", "5", "1")],
        )
        .unwrap();
        Arc::new(ReplicatedAlgebra::new(q, 1).unwrap())
    }

    #[test]
    fn projective_loewy_series() {
        let alg = kron(1);
        let p = Structural::projective::<Q>(&alg, 0, 1).unwrap();
        assert_eq!(p.dim_grid(), DimGrid(vec![vec![1, 2], vec![1, 0]]));
        let layers = p.loewy_layers();
        assert_eq!(
            layers,
            vec![
                DimGrid(vec![vec![0, 0], vec![1, 0]]),
                DimGrid(vec![vec![0, 2], vec![0, 0]]),
                DimGrid(vec![vec![1, 0], vec![0, 0]]),
            ]
        );
        let (soc, _) = p.socle();
        assert_eq!(soc.dim_grid(), DimGrid(vec![vec![1, 0], vec![0, 0]]));
        let p2 = Structural::projective::<Q>(&alg, 1, 1).unwrap();
        assert_eq!(p2.dim_grid(), DimGrid(vec![vec![0, 1], vec![2, 1]]));

        let alg = d4t();
        let p = Structural::projective::<Q>(&alg, 0, 1).unwrap();
        assert_eq!(p.dim_grid(), DimGrid(vec![vec![1; 5], vec![1, 0, 0, 0, 0]]));
        assert!(Structural::projective::<Q>(&alg, 0, 2).is_err());
    }

    #[test]
    fn projective_at_level_zero_is_embedded() {
        let alg = kron(1);
        for v in 0..2 {
            let p = Structural::projective::<Q>(&alg, v, 0).unwrap();
            let e =
                Structural::embed_level(&alg, &projective_rep::<Q>(alg.quiver(), v), 0).unwrap();
            assert_eq!(p, e);
        }
    }

    #[test]
    fn injectives() {
        let alg = kron(1);
        let i = Structural::injective::<Q>(&alg, 0, 1).unwrap();
        assert_eq!(i.dim_grid(), DimGrid(vec![vec![0, 0], vec![1, 2]]));
        let e = Structural::embed_level(&alg, &injective_rep::<Q>(alg.quiver(), 0), 1).unwrap();
        assert_eq!(i, e);
        for x in 0..alg.vertex_count() {
            let inj = Structural::injective_at::<Q>(&alg, x);
            assert!(inj.validate().is_ok());
            assert_eq!(inj.socle_dims().iter().sum::<usize>(), 1);
            assert_eq!(inj.socle_dims()[x], 1);
        }
    }

    #[test]
    fn structural_modules_validate() {
        for alg in [kron(1), kron(2), d4t()] {
            for x in 0..alg.vertex_count() {
                let p = Structural::projective_at::<Q>(&alg, x);
                assert!(p.validate().is_ok());
                assert_eq!(p.top_dims().iter().sum::<usize>(), 1);
                assert_eq!(p.top_dims()[x], 1);
            }
            let reg = Structural::regular_module::<Q>(&alg);
            assert_eq!(reg.total_dim(), alg.dim());
        }
    }

    #[test]
    fn connectors_round_trip() {
        let alg = kron(2);
        let p = Structural::projective::<Q>(&alg, 1, 2).unwrap();
        let levels: Vec<_> = (0..=2).map(|i| p.level(i)).collect();
        let conns: Vec<_> = (1..=2).map(|i| p.connector(i).unwrap()).collect();
        let back = RModule::from_levels(&alg, &levels, &conns).unwrap();
        assert_eq!(back, p);
        // the connector composite DA⊗DA⊗M_i -> M_{i-2} vanishes
        let q = alg.quiver();
        let dt2 = dual_tensor(q, &levels[2]);
        let inner = hereditary::dual_tensor_map(q, &dt2.rep, &levels[1], &conns[1]);
        assert!(inner.compose(&conns[0]).components.iter().all(Mat::is_zero));
    }

    #[test]
    fn promotion_pads_levels() {
        let (a1, a3) = (kron(1), kron(3));
        for x in 0..a1.vertex_count() {
            let p = Structural::projective_at::<Q>(&a1, x);
            let big = p.promote(&a3).unwrap();
            assert_eq!(big.total_dim(), p.total_dim());
            assert_eq!(hom_dim(&big, &big).unwrap(), hom_dim(&p, &p).unwrap());
        }
        assert!(Structural::simple_at::<Q>(&a3, 0).promote(&a1).is_err());
    }

    #[test]
    fn invalid_module_rejected() {
        let alg = kron(1);
        let mut p = Structural::projective::<Q>(&alg, 0, 1).unwrap();
        // break the relation a·a* = b·b* by rescaling one dual
        let g = alg.dual_generator(1, alg.quiver().find_path(1, &[0]).unwrap()).unwrap();
        p.acts[g] = p.acts[g].scale(&Q::from_i64(2));
        assert!(p.validate().is_err());
    }

    #[test]
    fn kernel_cokernel_of_cover() {
        let alg = kron(1);
        let p = Structural::projective::<Q>(&alg, 0, 1).unwrap();
        let s = Structural::simple::<Q>(&alg, 0, 1).unwrap();
        let f = hom_basis(&p, &s).unwrap().remove(0);
        assert!(f.is_epi());
        let (k, _) = kernel(&p, &f);
        let (rad, _) = p.radical();
        assert_eq!(k.dim_grid(), rad.dim_grid());
        let z = Structural::simple::<Q>(&alg, 0, 0).unwrap();
        let zero = RModule::zero(&alg);
        let (c, _) = cokernel(&z, &zero.zero_map(&z));
        assert_eq!(c, z);
    }

    #[test]
    fn embedding_is_full() {
        let alg = kron(1);
        let q = alg.quiver();
        let reps: Vec<Rep<Q>> = vec![
            projective_rep(q, 0),
            projective_rep(q, 1),
            injective_rep(q, 0),
            hereditary::simple_rep(q, 1),
        ];
        for m in &reps {
            for n in &reps {
                let base = hereditary::hom_basis(q, m, n).unwrap().len();
                for i in 0..=1 {
                    let em = Structural::embed_level(&alg, m, i).unwrap();
                    let en = Structural::embed_level(&alg, n, i).unwrap();
                    assert_eq!(hom_dim(&em, &en).unwrap(), base);
                }
            }
        }
        let z = Structural::embed_level(&alg, &Rep::<Q>::zero(q), 1).unwrap();
        assert!(z.is_zero());
    }
}
