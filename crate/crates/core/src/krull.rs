//! Endomorphism algebras, Krull–Schmidt decompositions and isomorphism tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Mat, Subspace};
use crate::module::{hom_basis, DimGrid, DirectSum, RMap, RModule};

/// Tunables for the randomized parts of splitting and isomorphism search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KsConfig {
    pub seed: u64,
    pub retries: usize,
}

impl Default for KsConfig {
    fn default() -> Self {
        KsConfig { seed: 0x5eed, retries: 20 }
    }
}

fn random_combination<F: Field>(rng: &mut ChaCha8Rng, basis: &[RMap<F>]) -> Option<RMap<F>> {
    let mut acc: Option<RMap<F>> = None;
    for b in basis {
        let c = F::from_i64(rng.gen_range(-3..=3));
        if c.is_zero() {
            continue;
        }
        let t = b.scale(&c);
        acc = Some(match acc {
            None => t,
            Some(a) => a.add(&t),
        });
    }
    acc
}

/// `End(M)` with a basis of endomorphisms.
#[derive(Clone, Debug)]
pub struct EndAlgebra<F> {
    pub basis: Vec<RMap<F>>,
    ambient: usize,
}

impl<F: Field> EndAlgebra<F> {
    pub fn new(m: &RModule<F>) -> Self {
        let basis = hom_basis(m, m).expect("same algebra");
        let ambient = m.identity().flatten().len();
        EndAlgebra { basis, ambient }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `table[i][j]` = coordinates of `basis[i] ∘ basis[j]` in `basis`.
    pub fn multiplication_table(&self) -> Vec<Vec<Vec<F>>> {
        let to_basis = Mat::from_columns(
            self.ambient,
            &self.basis.iter().map(RMap::flatten).collect::<Vec<_>>(),
        );
        self.basis
            .iter()
            .map(|bi| {
                self.basis
                    .iter()
                    .map(|bj| {
                        let v = bj.then(bi).flatten();
                        to_basis.solve(&v).ok().flatten().expect("End(M) is closed")
                    })
                    .collect()
            })
            .collect()
    }
}

fn is_nilpotent<F: Field>(f: &RMap<F>) -> bool {
    f.comps.iter().all(|c| c.pow(c.rows()).is_zero())
}

/// Fitting powers `f_x^{dim M_x}`, whose kernels and images split M.
fn fitting_split<F: Field>(m: &RModule<F>, f: &RMap<F>) -> Option<[(RModule<F>, RMap<F>); 2]> {
    let powers: Vec<Mat<F>> = f.comps.iter().map(|c| c.pow(c.rows())).collect();
    let ker: Vec<Subspace<F>> = powers.iter().map(Mat::kernel).collect();
    let im: Vec<Subspace<F>> = powers.iter().map(Mat::image).collect();
    let kd: usize = ker.iter().map(Subspace::dim).sum();
    if kd == 0 || kd == m.total_dim() {
        return None;
    }
    Some([m.submodule(&ker), m.submodule(&im)])
}

/// A value `λ` with `f - λ·id` nilpotent, if the vertex traces determine one.
fn eigenvalue<F: Field>(f: &RMap<F>) -> Option<F> {
    let p = F::characteristic();
    for c in &f.comps {
        let d = c.rows();
        if d == 0 {
            continue;
        }
        if p == 0 || !(d as u64).is_multiple_of(p) {
            let lambda = c.trace() * F::from_i64(d as i64).inv()?;
            return Some(lambda);
        }
    }
    if p <= 1 << 16 {
        let c = f.comps.iter().find(|c| c.rows() > 0)?;
        return (0..p as i64)
            .map(F::from_i64)
            .find(|l| c.sub(&Mat::identity(c.rows()).scale(l)).rank() < c.rows());
    }
    None
}

/// Basis of the radical of `End(M)` for an indecomposable `M`, read off as
/// `b - λ(b)·id` over a basis of `End(M)`.
pub fn radical_basis<F: Field>(m: &RModule<F>) -> Result<Vec<RMap<F>>> {
    let end = EndAlgebra::new(m);
    let id = m.identity();
    let mut rad = Vec::with_capacity(end.dim());
    for b in &end.basis {
        let l = eigenvalue(b)
            .ok_or_else(|| Error::Internal("endomorphism without a unique eigenvalue".into()))?;
        rad.push(b.add(&id.scale(&-l)).flatten());
    }
    let ambient = id.flatten().len();
    Ok(Subspace::span(ambient, &rad).basis().iter().map(|v| id.unflatten(v)).collect())
}

/// Outcome of the locality certificate on `End(M)`.
enum Locality<F> {
    /// `End(M) = F·id ⊕ J` with `J` a nilpotent ideal.
    Local,
    /// An endomorphism that is neither nilpotent nor invertible.
    Splits(RMap<F>),
    Unknown,
}

fn certify_local<F: Field>(m: &RModule<F>, end: &EndAlgebra<F>) -> Locality<F> {
    let id = m.identity();
    let mut rad: Vec<RMap<F>> = Vec::new();
    for f in &end.basis {
        if is_nilpotent(f) {
            rad.push(f.clone());
            continue;
        }
        if !f.is_iso() {
            return Locality::Splits(f.clone());
        }
        let Some(l) = eigenvalue(f) else { return Locality::Unknown };
        let n = f.add(&id.scale(&-l));
        if !is_nilpotent(&n) {
            return Locality::Unknown;
        }
        rad.push(n);
    }
    let ambient = id.flatten().len();
    let j = Subspace::span(ambient, &rad.iter().map(RMap::flatten).collect::<Vec<_>>());
    let with_id = j.sum(&Subspace::span(ambient, &[id.flatten()]));
    if with_id.dim() != end.dim() || j.dim() + 1 != end.dim() {
        return Locality::Unknown;
    }
    // J^k spans shrink to zero
    let jb: Vec<RMap<F>> = j.basis().iter().map(|v| id.unflatten(v)).collect();
    let mut power = jb.clone();
    for _ in 0..=m.total_dim() {
        if power.is_empty() {
            return Locality::Local;
        }
        let prods: Vec<Vec<F>> =
            power.iter().flat_map(|a| jb.iter().map(move |b| b.then(a).flatten())).collect();
        let next = Subspace::span(ambient, &prods);
        if !j.contains_subspace(&next) {
            return Locality::Unknown;
        }
        power = next.basis().iter().map(|v| id.unflatten(v)).collect();
    }
    if power.is_empty() {
        Locality::Local
    } else {
        Locality::Unknown
    }
}

/// One indecomposable summand found while splitting, with its inclusion.
struct Piece<F> {
    module: RModule<F>,
    inclusion: RMap<F>,
    certified: bool,
}

fn split_into<F: Field>(
    m: &RModule<F>,
    incl: RMap<F>,
    cfg: &KsConfig,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<Piece<F>>,
) {
    if m.is_zero() {
        return;
    }
    let end = EndAlgebra::new(m);
    let mut split = None;
    for f in &end.basis {
        if let Some(s) = fitting_split(m, f) {
            split = Some(s);
            break;
        }
    }
    let mut certified = false;
    if split.is_none() {
        match certify_local(m, &end) {
            Locality::Local => certified = true,
            Locality::Splits(f) => split = fitting_split(m, &f),
            Locality::Unknown => {
                for _ in 0..cfg.retries {
                    if let Some(f) = random_combination(rng, &end.basis) {
                        if let Some(s) = fitting_split(m, &f) {
                            split = Some(s);
                            break;
                        }
                    }
                }
            }
        }
    }
    match split {
        Some([(a, ia), (b, ib)]) => {
            split_into(&a, ia.then(&incl), cfg, rng, out);
            split_into(&b, ib.then(&incl), cfg, rng, out);
        }
        None => out.push(Piece { module: m.clone(), inclusion: incl, certified }),
    }
}

/// `M ≅ ⊕ pieces[i]^{multiplicity}` with a verified isomorphism.
#[derive(Clone)]
pub struct Decomposition<F> {
    pub pieces: Vec<(RModule<F>, usize)>,
    /// whether each piece carries a locality certificate for its endomorphisms
    pub certified: Vec<bool>,
    /// isomorphism from `⊕ pieces` (in order, copies adjacent) to `M`
    pub witness: RMap<F>,
}

impl<F: Field> std::fmt::Debug for Decomposition<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.pieces.iter()).finish()
    }
}

impl<F: Field> Decomposition<F> {
    pub fn delta(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_certified(&self) -> bool {
        self.certified.iter().all(|&c| c)
    }

    /// Pieces with multiplicity expanded.
    pub fn expanded(&self) -> Vec<&RModule<F>> {
        self.pieces.iter().flat_map(|(p, k)| std::iter::repeat_n(p, *k)).collect()
    }
}

fn order_key<F: Field>(m: &RModule<F>) -> (usize, DimGrid) {
    (m.total_dim(), m.dim_grid())
}

pub fn decompose<F: Field>(m: &RModule<F>) -> Result<Decomposition<F>> {
    decompose_with(m, &KsConfig::default())
}

pub fn decompose_with<F: Field>(m: &RModule<F>, cfg: &KsConfig) -> Result<Decomposition<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut raw = Vec::new();
    split_into(m, m.identity(), cfg, &mut rng, &mut raw);
    // group isomorphic pieces: (representative, certified, inclusions of copies)
    let mut groups: Vec<(RModule<F>, bool, Vec<RMap<F>>)> = Vec::new();
    for p in raw {
        let mut placed = false;
        for g in groups.iter_mut() {
            if let Some(phi) = indecomposable_iso(&g.0, &p.module, cfg)? {
                g.2.push(phi.then(&p.inclusion));
                placed = true;
                break;
            }
        }
        if !placed {
            groups.push((p.module, p.certified, vec![p.inclusion]));
        }
    }
    groups.sort_by_key(|g| order_key(&g.0));
    let alg = m.algebra();
    let copies: Vec<&RModule<F>> =
        groups.iter().flat_map(|g| std::iter::repeat_n(&g.0, g.2.len())).collect();
    let maps: Vec<RMap<F>> = groups.iter().flat_map(|g| g.2.iter().cloned()).collect();
    let witness = if copies.is_empty() {
        m.identity()
    } else {
        DirectSum::new(alg, &copies).map_out(m, &maps)
    };
    if !witness.is_iso() {
        return Err(Error::Internal("decomposition witness is not an isomorphism".into()));
    }
    Ok(Decomposition {
        certified: groups.iter().map(|g| g.1).collect(),
        pieces: groups.into_iter().map(|g| (g.0, g.2.len())).collect(),
        witness,
    })
}

/// An isomorphism `A -> B` between indecomposables, if one exists.
fn indecomposable_iso<F: Field>(
    a: &RModule<F>,
    b: &RModule<F>,
    cfg: &KsConfig,
) -> Result<Option<RMap<F>>> {
    if a.dims() != b.dims() {
        return Ok(None);
    }
    let homs = hom_basis(a, b)?;
    if let Some(f) = homs.iter().find(|f| f.is_iso()) {
        return Ok(Some(f.clone()));
    }
    // with local endomorphism rings an iso exists iff some basis map is one
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x150);
    for _ in 0..cfg.retries {
        if let Some(f) = random_combination(&mut rng, &homs) {
            if f.is_iso() {
                return Ok(Some(f));
            }
        }
    }
    Ok(None)
}

pub fn is_indecomposable<F: Field>(m: &RModule<F>) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    let d = decompose(m)?;
    Ok(d.pieces.len() == 1 && d.pieces[0].1 == 1)
}

/// True when `End(M)` is certified local.
pub fn is_certified_indecomposable<F: Field>(m: &RModule<F>) -> bool {
    !m.is_zero() && matches!(certify_local(m, &EndAlgebra::new(m)), Locality::Local)
}

/// Isomorphism witness `M -> N`, if the modules are isomorphic.
pub fn find_isomorphism<F: Field>(m: &RModule<F>, n: &RModule<F>) -> Result<Option<RMap<F>>> {
    if !m.same_algebra(n) {
        return Err(Error::AlgebraMismatch);
    }
    if m.dims() != n.dims() {
        return Ok(None);
    }
    let cfg = KsConfig::default();
    let homs = hom_basis(m, n)?;
    if let Some(f) = homs.iter().find(|f| f.is_iso()) {
        return Ok(Some(f.clone()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x151);
    for _ in 0..cfg.retries {
        if let Some(f) = random_combination(&mut rng, &homs) {
            if f.is_iso() {
                return Ok(Some(f));
            }
        }
    }
    // fall back to comparing decompositions
    let (dm, dn) = (decompose(m)?, decompose(n)?);
    if dm.pieces.len() != dn.pieces.len() {
        return Ok(None);
    }
    let mut parts = Vec::new();
    let mut used = vec![false; dn.pieces.len()];
    for (p, k) in &dm.pieces {
        let mut hit = None;
        for (j, (q, l)) in dn.pieces.iter().enumerate() {
            if used[j] || k != l {
                continue;
            }
            if let Some(phi) = indecomposable_iso(p, q, &cfg)? {
                hit = Some((j, phi));
                break;
            }
        }
        let Some((j, phi)) = hit else { return Ok(None) };
        used[j] = true;
        parts.push((j, phi, *k));
    }
    // assemble ⊕ p^k -> ⊕ q^k blockwise, then conjugate by the witnesses
    let alg = m.algebra();
    let src = DirectSum::new(alg, &dm.expanded());
    let tgt = DirectSum::new(alg, &dn.expanded());
    let starts_n: Vec<usize> = dn
        .pieces
        .iter()
        .scan(0, |acc, (_, k)| {
            let s = *acc;
            *acc += k;
            Some(s)
        })
        .collect();
    let mut maps = Vec::new();
    for (j, phi, k) in &parts {
        for c in 0..*k {
            maps.push(phi.then(&tgt.inclusion(starts_n[*j] + c)));
        }
    }
    let block = src.map_out(&tgt.module, &maps);
    let inv = dm.witness.inverse().expect("witness is an isomorphism");
    let f = inv.then(&block).then(&dn.witness);
    Ok(f.is_iso().then_some(f))
}

pub fn is_isomorphic<F: Field>(m: &RModule<F>, n: &RModule<F>) -> Result<bool> {
    Ok(find_isomorphism(m, n)?.is_some())
}

/// Number of isomorphism classes of indecomposable summands.
pub fn delta_count<F: Field>(m: &RModule<F>) -> Result<usize> {
    Ok(decompose(m)?.delta())
}

/// One copy of each indecomposable summand.
pub fn basic_part<F: Field>(m: &RModule<F>) -> Result<RModule<F>> {
    let d = decompose(m)?;
    if d.pieces.is_empty() {
        return Ok(m.clone());
    }
    let parts: Vec<&RModule<F>> = d.pieces.iter().map(|p| &p.0).collect();
    Ok(DirectSum::new(m.algebra(), &parts).module)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ReplicatedAlgebra;
    use crate::field::{Fp, Q};
    use crate::hereditary::Quiver;
    use crate::module::{direct_sum, Structural};
    use std::sync::Arc;

    fn kron(m: usize) -> Arc<ReplicatedAlgebra> {
        let q = Quiver::new(&["1", "2"], &[("a", "2", "1"), ("b", "2", "1")]).unwrap();
        Arc::new(ReplicatedAlgebra::new(q, m).unwrap())
    }

    #[test]
    fn regular_module_pieces() {
        let a = kron(1);
        let reg = Structural::regular_module::<Q>(&a);
        let d = decompose(&reg).unwrap();
        assert_eq!(d.pieces.len(), 4);
        assert!(d.pieces.iter().all(|p| p.1 == 1));
        assert!(d.is_certified());
        let keys: Vec<_> = d.pieces.iter().map(|p| order_key(&p.0)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn multiplicities_and_delta() {
        let a = kron(1);
        let p = Structural::projective::<Q>(&a, 0, 1).unwrap();
        let pp = direct_sum(&[&p, &p]).unwrap();
        let d = decompose(&pp).unwrap();
        assert_eq!(d.pieces.len(), 1);
        assert_eq!(d.pieces[0].1, 2);
        assert!(is_isomorphic(&d.pieces[0].0, &p).unwrap());
        assert_eq!(delta_count(&pp).unwrap(), delta_count(&p).unwrap());
        assert!(is_isomorphic(&basic_part(&pp).unwrap(), &p).unwrap());
        assert!(is_indecomposable(&p).unwrap());
        assert!(is_certified_indecomposable(&p));
        assert!(!is_indecomposable(&pp).unwrap());
    }

    #[test]
    fn injective_is_next_projective() {
        for m in 1..=2 {
            let a = kron(m);
            for i in 0..m {
                for v in 0..2 {
                    let inj = Structural::injective::<Q>(&a, v, i).unwrap();
                    let pr = Structural::projective::<Q>(&a, v, i + 1).unwrap();
                    let f = find_isomorphism(&inj, &pr).unwrap().unwrap();
                    assert!(inj.is_homomorphism(&pr, &f) && f.is_iso());
                }
            }
        }
    }

    #[test]
    fn non_isomorphic_with_equal_dims() {
        let a = kron(1);
        let s = Structural::simple::<Q>(&a, 1, 0).unwrap();
        let t = Structural::simple::<Q>(&a, 0, 0).unwrap();
        let st = direct_sum(&[&s, &t]).unwrap();
        // a regular Kronecker module with the same dimension vector
        let q = a.quiver();
        let rep = crate::hereditary::Rep {
            dims: vec![1, 1],
            maps: vec![Mat::from_i64(&[&[1]]), Mat::from_i64(&[&[0]])],
        };
        let r = Structural::embed_level(&a, &rep, 0).unwrap();
        assert!(!is_isomorphic(&st, &r).unwrap());
        assert!(is_indecomposable(&r).unwrap());
        let _ = q;
    }

    #[test]
    fn conjugated_sums_decompose() {
        let a = kron(1);
        let p = Structural::projective::<Fp<5>>(&a, 0, 1).unwrap();
        let s = Structural::simple::<Fp<5>>(&a, 1, 0).unwrap();
        let sum = direct_sum(&[&p, &s, &s]).unwrap();
        let change: Vec<Mat<Fp<5>>> = sum
            .dims()
            .iter()
            .map(|&d| {
                let mut m = Mat::identity(d);
                for r in 0..d {
                    for c in r + 1..d {
                        m[(r, c)] = Fp::from_i64((r + 2 * c) as i64);
                    }
                }
                m
            })
            .collect();
        let (twisted, _) = sum.conjugate(&change).unwrap();
        let d = decompose(&twisted).unwrap();
        assert_eq!(d.pieces.iter().map(|p| p.1).collect::<Vec<_>>(), vec![2, 1]);
        let again = decompose(&d.pieces[1].0).unwrap();
        assert_eq!(again.pieces.len(), 1);
        assert_eq!(again.pieces[0].0, d.pieces[1].0);
        let table = EndAlgebra::new(&twisted).multiplication_table();
        assert_eq!(table.len(), EndAlgebra::new(&twisted).dim());
    }
}
