//! The m-replicated algebra `A^(m)` as an explicit finite dimensional algebra.
//!
//! Vertices are pairs `(v, i)` with `v` a base vertex and `0 <= i <= m`,
//! numbered `i * n + v`. The basis consists of
//! * `Path { level: i, path: p }`: a path of the base quiver inside the copy `A_i`,
//! * `Dual { level: i, path: p }` for `1 <= i <= m`: the dual basis vector
//!   `p*` of `DA`, acting from level `i` down to level `i - 1`; for
//!   `p: x -> y` it goes from `(y, i)` to `(x, i - 1)`.
//!
//! Products of two duals vanish; a path times a dual strips a prefix or a
//! suffix of the dual's path. Every product of basis elements is a basis
//! element or zero.

use std::fmt;

use crate::error::{Error, Result};
use crate::hereditary::Quiver;

pub type Vertex = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ElemKind {
    Path { level: usize, path: usize },
    Dual { level: usize, path: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BasisElem {
    pub kind: ElemKind,
    pub source: Vertex,
    pub target: Vertex,
}

/// An algebra generator: an arrow of some copy `A_i` or a dual path `p*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub elem: usize,
    pub source: Vertex,
    pub target: Vertex,
    /// arrows and duals of maximal paths generate the algebra
    pub essential: bool,
}

#[derive(Clone, Debug)]
pub struct ReplicatedAlgebra {
    quiver: Quiver,
    m: usize,
    basis: Vec<BasisElem>,
    mul: Vec<Option<usize>>,
    gens: Vec<Generator>,
    gen_of_elem: Vec<Option<usize>>,
    essential: Vec<usize>,
    /// generators to apply in order, per basis element (empty for idempotents)
    factor: Vec<Vec<usize>>,
}

impl PartialEq for ReplicatedAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.quiver == other.quiver
    }
}
impl Eq for ReplicatedAlgebra {}

impl ReplicatedAlgebra {
    pub fn new(quiver: Quiver, m: usize) -> Result<ReplicatedAlgebra> {
        if m == 0 {
            return Err(Error::Precondition("replication index m must be at least 1".into()));
        }
        Ok(Self::build(quiver, m))
    }

    fn build(quiver: Quiver, m: usize) -> ReplicatedAlgebra {
        let n = quiver.vertex_count();
        let np = quiver.paths().len();
        let mut basis = Vec::new();
        for level in 0..=m {
            for (p, path) in quiver.paths().iter().enumerate() {
                basis.push(BasisElem {
                    kind: ElemKind::Path { level, path: p },
                    source: level * n + path.source,
                    target: level * n + path.target,
                });
            }
        }
        for level in 1..=m {
            for (p, path) in quiver.paths().iter().enumerate() {
                basis.push(BasisElem {
                    kind: ElemKind::Dual { level, path: p },
                    source: level * n + path.target,
                    target: (level - 1) * n + path.source,
                });
            }
        }
        let index = |kind: ElemKind| match kind {
            ElemKind::Path { level, path } => level * np + path,
            ElemKind::Dual { level, path } => (m + 1) * np + (level - 1) * np + path,
        };
        let bn = basis.len();
        let mut mul = vec![None; bn * bn];
        for (c, ce) in basis.iter().enumerate() {
            for (b, be) in basis.iter().enumerate() {
                if be.target != ce.source {
                    continue;
                }
                let prod = match (be.kind, ce.kind) {
                    (ElemKind::Path { level, path: p }, ElemKind::Path { path: q, .. }) => {
                        quiver.compose(p, q).map(|r| ElemKind::Path { level, path: r })
                    }
                    (ElemKind::Dual { level, path: p }, ElemKind::Path { path: c, .. }) => {
                        quiver.strip_prefix(p, c).map(|z| ElemKind::Dual { level, path: z })
                    }
                    (ElemKind::Path { path: c, .. }, ElemKind::Dual { level, path: p }) => {
                        quiver.strip_suffix(p, c).map(|z| ElemKind::Dual { level, path: z })
                    }
                    (ElemKind::Dual { .. }, ElemKind::Dual { .. }) => None,
                };
                mul[c * bn + b] = prod.map(index);
            }
        }
        let mut gens = Vec::new();
        let mut gen_of_elem = vec![None; bn];
        for (e, be) in basis.iter().enumerate() {
            let (is_gen, essential) = match be.kind {
                ElemKind::Path { path, .. } => {
                    let l = quiver.paths()[path].len() == 1;
                    (l, l)
                }
                ElemKind::Dual { path, .. } => (true, quiver.is_maximal_path(path)),
            };
            if is_gen {
                gen_of_elem[e] = Some(gens.len());
                gens.push(Generator { elem: e, source: be.source, target: be.target, essential });
            }
        }
        let essential = (0..gens.len()).filter(|&g| gens[g].essential).collect();
        let factor = basis
            .iter()
            .enumerate()
            .map(|(e, be)| match be.kind {
                ElemKind::Path { level, path } => quiver.paths()[path]
                    .arrows
                    .iter()
                    .map(|&a| {
                        let ap = quiver.find_path(quiver.arrows()[a].source, &[a]).unwrap();
                        gen_of_elem[index(ElemKind::Path { level, path: ap })].unwrap()
                    })
                    .collect(),
                ElemKind::Dual { .. } => vec![gen_of_elem[e].unwrap()],
            })
            .collect();
        ReplicatedAlgebra { quiver, m, basis, mul, gens, gen_of_elem, essential, factor }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of base vertices.
    pub fn n(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn vertex_count(&self) -> usize {
        self.n() * (self.m + 1)
    }

    pub fn vertex(&self, v: usize, level: usize) -> Vertex {
        level * self.n() + v
    }

    /// `(base vertex, level)`
    pub fn split_vertex(&self, x: Vertex) -> (usize, usize) {
        (x % self.n(), x / self.n())
    }

    pub fn vertex_label(&self, x: Vertex) -> String {
        let (v, i) = self.split_vertex(x);
        format!("{}{}", self.quiver.vertices()[v], "'".repeat(i))
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Number of isoclasses of simple modules, `(m+1) n`.
    pub fn simple_count(&self) -> usize {
        self.vertex_count()
    }

    pub fn basis(&self) -> &[BasisElem] {
        &self.basis
    }

    /// `c · b` (apply `b` first).
    pub fn mul(&self, c: usize, b: usize) -> Option<usize> {
        self.mul[c * self.basis.len() + b]
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn essential_generators(&self) -> &[usize] {
        &self.essential
    }

    pub fn generator_of(&self, elem: usize) -> Option<usize> {
        self.gen_of_elem[elem]
    }

    pub fn factorization(&self, elem: usize) -> &[usize] {
        &self.factor[elem]
    }

    pub fn idempotent(&self, x: Vertex) -> usize {
        let (v, i) = self.split_vertex(x);
        i * self.quiver.paths().len() + self.quiver.trivial_path(v)
    }

    pub fn generator_label(&self, g: usize) -> String {
        match self.basis[self.gens[g].elem].kind {
            ElemKind::Path { level, path } => {
                format!("{}@{}", self.quiver.path_label(path), level)
            }
            ElemKind::Dual { level, path } => {
                format!("{}*@{}", self.quiver.path_label(path), level)
            }
        }
    }

    /// The dual path generator `p*` between levels `level` and `level - 1`.
    pub fn dual_generator(&self, level: usize, path: usize) -> Option<usize> {
        let np = self.quiver.paths().len();
        if level == 0 || level > self.m || path >= np {
            return None;
        }
        self.gen_of_elem[(self.m + 1) * np + (level - 1) * np + path]
    }

    pub fn arrow_generator(&self, level: usize, arrow: usize) -> Option<usize> {
        if level > self.m {
            return None;
        }
        let a = self.quiver.arrows().get(arrow)?;
        let p = self.quiver.find_path(a.source, &[arrow])?;
        self.gen_of_elem[level * self.quiver.paths().len() + p]
    }
}

impl fmt::Display for ReplicatedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "A^({}) over a quiver with {} vertices and {} arrows (dim {})",
            self.m,
            self.n(),
            self.quiver.arrows().len(),
            self.dim()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kronecker() -> Quiver {
        Quiver::new(&["1", "2"], &[("a", "2", "1"), ("b", "2", "1")]).unwrap()
    }

    #[test]
    fn dimension_count() {
        let q = kronecker();
        let dim_a = q.algebra_dim();
        let alg = ReplicatedAlgebra::new(q, 1).unwrap();
        assert_eq!(alg.dim(), 12);
        assert_eq!(alg.dim(), 2 * dim_a + dim_a);
        assert_eq!(alg.simple_count(), 4);
        assert!(ReplicatedAlgebra::new(kronecker(), 0).is_err());
    }

    #[test]
    fn associativity() {
        let alg = ReplicatedAlgebra::new(kronecker(), 2).unwrap();
        let n = alg.dim();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let left = alg.mul(b, a).and_then(|ba| alg.mul(c, ba));
                    let right = alg.mul(c, b).and_then(|cb| alg.mul(cb, a));
                    if alg.basis()[a].target == alg.basis()[b].source
                        && alg.basis()[b].target == alg.basis()[c].source
                    {
                        assert_eq!(left, right, "({c}·{b})·{a}");
                    }
                }
            }
        }
    }

    #[test]
    fn gabriel_generators_of_duplicated_kronecker() {
        let alg = ReplicatedAlgebra::new(kronecker(), 1).unwrap();
        let labels: Vec<String> =
            alg.essential_generators().iter().map(|&g| alg.generator_label(g)).collect();
        assert_eq!(labels, ["a@0", "b@0", "a@1", "b@1", "a*@1", "b*@1"]);
    }
}
