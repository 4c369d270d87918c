//! The base hereditary algebra: acyclic quivers, their representations,
//! morphism spaces, indecomposable projectives/injectives and the functor
//! `DA ⊗_A -`.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Mat, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A path, arrows listed in traversal order. Trivial paths have no arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// A finite connected acyclic quiver with its (finite) set of paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    paths: Vec<Path>,
    path_index: HashMap<(usize, Vec<usize>), usize>,
}

#[derive(Serialize, Deserialize)]
struct ArrowFile {
    name: String,
    from: String,
    to: String,
}

#[derive(Serialize, Deserialize)]
struct QuiverFile {
    vertices: Vec<String>,
    arrows: Vec<ArrowFile>,
}

impl Quiver {
    /// Builds a quiver from labels and `(name, from, to)` triples.
    pub fn new(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Quiver> {
        let vertices: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
        let lookup = |l: &str| {
            vertices
                .iter()
                .position(|v| v == l)
                .ok_or_else(|| Error::Quiver(format!("unknown vertex `{l}`")))
        };
        let mut arrow_list = Vec::new();
        for (name, from, to) in arrows {
            arrow_list.push(Arrow {
                name: name.to_string(),
                source: lookup(from)?,
                target: lookup(to)?,
            });
        }
        Quiver::from_parts(vertices, arrow_list)
    }

    pub fn from_parts(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Quiver> {
        let n = vertices.len();
        if n == 0 {
            return Err(Error::Quiver("no vertices".into()));
        }
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::Quiver(format!("duplicate vertex `{v}`")));
            }
        }
        for (i, a) in arrows.iter().enumerate() {
            if arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::Quiver(format!("duplicate arrow `{}`", a.name)));
            }
            if a.source >= n || a.target >= n {
                return Err(Error::Quiver(format!("arrow `{}` has a bad endpoint", a.name)));
            }
        }
        // acyclic: Kahn
        let mut indeg = vec![0usize; n];
        for a in &arrows {
            indeg[a.target] += 1;
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop_front() {
            seen += 1;
            for a in arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    queue.push_back(a.target);
                }
            }
        }
        if seen != n {
            return Err(Error::Quiver("quiver has an oriented cycle".into()));
        }
        // connected
        let mut comp = vec![false; n];
        let mut stack = vec![0];
        comp[0] = true;
        while let Some(v) = stack.pop() {
            for a in &arrows {
                for (x, y) in [(a.source, a.target), (a.target, a.source)] {
                    if x == v && !comp[y] {
                        comp[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        if comp.iter().any(|c| !c) {
            return Err(Error::Quiver("quiver is not connected".into()));
        }

        let mut paths: Vec<Path> =
            (0..n).map(|v| Path { source: v, target: v, arrows: vec![] }).collect();
        let mut frontier = paths.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                for (ai, a) in arrows.iter().enumerate() {
                    if a.source == p.target {
                        let mut arr = p.arrows.clone();
                        arr.push(ai);
                        next.push(Path { source: p.source, target: a.target, arrows: arr });
                    }
                }
            }
            paths.extend(next.iter().cloned());
            frontier = next;
        }
        let key = |p: &Path| {
            (
                p.len(),
                p.arrows.iter().map(|&a| arrows[a].name.clone()).collect::<Vec<_>>(),
                p.source,
            )
        };
        paths.sort_by_key(key);
        let path_index =
            paths.iter().enumerate().map(|(i, p)| ((p.source, p.arrows.clone()), i)).collect();
        Ok(Quiver { vertices, arrows, paths, path_index })
    }

    pub fn from_json(text: &str) -> Result<Quiver> {
        let file: QuiverFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let verts: Vec<&str> = file.vertices.iter().map(String::as_str).collect();
        let arrows: Vec<(&str, &str, &str)> =
            file.arrows.iter().map(|a| (a.name.as_str(), a.from.as_str(), a.to.as_str())).collect();
        Quiver::new(&verts, &arrows)
    }

    pub fn to_json(&self) -> String {
        let file = QuiverFile {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowFile {
                    name: a.name.clone(),
                    from: self.vertices[a.source].clone(),
                    to: self.vertices[a.target].clone(),
                })
                .collect(),
        };
        serde_json::to_string(&file).expect("quiver serializes")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::OutOfRange(format!("no vertex `{label}`")))
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, name: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::OutOfRange(format!("no arrow `{name}`")))
    }

    /// All paths in canonical order: by length, then arrow names.
    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn path_label(&self, p: usize) -> String {
        let path = &self.paths[p];
        if path.is_trivial() {
            format!("e{}", self.vertices[path.source])
        } else {
            path.arrows.iter().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join(".")
        }
    }

    pub fn find_path(&self, source: usize, arrows: &[usize]) -> Option<usize> {
        self.path_index.get(&(source, arrows.to_vec())).copied()
    }

    pub fn trivial_path(&self, v: usize) -> usize {
        self.find_path(v, &[]).expect("trivial path exists")
    }

    /// `second ∘ first`, if composable.
    pub fn compose(&self, first: usize, second: usize) -> Option<usize> {
        let (p, q) = (&self.paths[first], &self.paths[second]);
        if p.target != q.source {
            return None;
        }
        let mut arr = p.arrows.clone();
        arr.extend_from_slice(&q.arrows);
        self.find_path(p.source, &arr)
    }

    /// For `p = z ∘ c` (c traversed first) returns `z`.
    pub fn strip_prefix(&self, p: usize, c: usize) -> Option<usize> {
        let (p, c) = (&self.paths[p], &self.paths[c]);
        if p.source != c.source || !p.arrows.starts_with(&c.arrows) {
            return None;
        }
        self.find_path(c.target, &p.arrows[c.len()..])
    }

    /// For `p = c ∘ z` (c traversed last) returns `z`.
    pub fn strip_suffix(&self, p: usize, c: usize) -> Option<usize> {
        let (p, c) = (&self.paths[p], &self.paths[c]);
        if p.target != c.target || !p.arrows.ends_with(&c.arrows) {
            return None;
        }
        self.find_path(p.source, &p.arrows[..p.len() - c.len()])
    }

    /// Paths that cannot be extended by an arrow at either end.
    pub fn is_maximal_path(&self, p: usize) -> bool {
        let path = &self.paths[p];
        !self.arrows.iter().any(|a| a.target == path.source || a.source == path.target)
    }

    /// Whether the underlying graph is a simply-laced Dynkin diagram (A, D, E).
    pub fn is_dynkin(&self) -> bool {
        let n = self.vertex_count();
        if self.arrows.len() != n - 1 {
            return false; // connected: a tree has n-1 edges; multiple edges excluded too
        }
        let mut deg = vec![0usize; n];
        for a in &self.arrows {
            if a.source == a.target {
                return false;
            }
            deg[a.source] += 1;
            deg[a.target] += 1;
        }
        let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
        if branch.is_empty() {
            return true;
        }
        if branch.len() > 1 || deg[branch[0]] > 3 {
            return false;
        }
        let b = branch[0];
        let mut legs = Vec::new();
        for a in self.arrows.iter().filter(|a| a.source == b || a.target == b) {
            let mut prev = b;
            let mut cur = if a.source == b { a.target } else { a.source };
            let mut len = 1;
            loop {
                let next = self.arrows.iter().map(|e| (e.source, e.target)).find_map(|(s, t)| {
                    if s == cur && t != prev {
                        Some(t)
                    } else if t == cur && s != prev {
                        Some(s)
                    } else {
                        None
                    }
                });
                match next {
                    Some(nx) => {
                        prev = cur;
                        cur = nx;
                        len += 1;
                    }
                    None => break,
                }
            }
            legs.push(len);
        }
        legs.sort_unstable();
        // legs p <= q <= r: Dynkin iff 1/(p+1)+1/(q+1)+1/(r+1) > 1
        let (p, q, r) = (legs[0] + 1, legs[1] + 1, legs[2] + 1);
        q * r + p * r + p * q > p * q * r
    }

    /// Dimension of the path algebra.
    pub fn algebra_dim(&self) -> usize {
        self.paths.len()
    }

    pub fn opposite(&self) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
            .collect();
        Quiver::from_parts(self.vertices.clone(), arrows).expect("opposite of a valid quiver")
    }
}

/// A finite dimensional representation: one matrix per arrow.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rep<F> {
    pub dims: Vec<usize>,
    /// `maps[a]` is `dims[target] x dims[source]`
    pub maps: Vec<Mat<F>>,
}

/// A morphism of representations, one matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AMap<F> {
    pub components: Vec<Mat<F>>,
}

impl<F: Field> Rep<F> {
    pub fn new(quiver: &Quiver, dims: Vec<usize>, maps: Vec<Mat<F>>) -> Result<Rep<F>> {
        let rep = Rep { dims, maps };
        rep.validate(quiver)?;
        Ok(rep)
    }

    pub fn zero(quiver: &Quiver) -> Rep<F> {
        Rep {
            dims: vec![0; quiver.vertex_count()],
            maps: quiver.arrows().iter().map(|_| Mat::zero(0, 0)).collect(),
        }
    }

    pub fn validate(&self, quiver: &Quiver) -> Result<()> {
        if self.dims.len() != quiver.vertex_count() || self.maps.len() != quiver.arrows().len() {
            return Err(Error::InvalidModule("representation does not match quiver".into()));
        }
        for (a, m) in quiver.arrows().iter().zip(&self.maps) {
            if m.rows() != self.dims[a.target] || m.cols() != self.dims[a.source] {
                return Err(Error::InvalidModule(format!("arrow `{}` has wrong shape", a.name)));
            }
        }
        Ok(())
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Action of a path.
    pub fn path_action(&self, quiver: &Quiver, p: usize) -> Mat<F> {
        let path = &quiver.paths()[p];
        let mut acc = Mat::identity(self.dims[path.source]);
        for &a in &path.arrows {
            acc = self.maps[a].mul(&acc);
        }
        acc
    }
}

impl<F: Field> AMap<F> {
    pub fn is_homomorphism(&self, quiver: &Quiver, src: &Rep<F>, tgt: &Rep<F>) -> bool {
        self.components.len() == quiver.vertex_count()
            && self
                .components
                .iter()
                .enumerate()
                .all(|(v, c)| c.rows() == tgt.dims[v] && c.cols() == src.dims[v])
            && quiver.arrows().iter().enumerate().all(|(i, a)| {
                tgt.maps[i].mul(&self.components[a.source])
                    == self.components[a.target].mul(&src.maps[i])
            })
    }

    pub fn compose(&self, after: &AMap<F>) -> AMap<F> {
        AMap {
            components: self
                .components
                .iter()
                .zip(&after.components)
                .map(|(f, g)| g.mul(f))
                .collect(),
        }
    }
}

/// Solves the commutation equations `tgt_g ∘ f_s = f_t ∘ src_g` for all
/// listed generators `g: s -> t`, returning a basis of per-vertex solutions.
pub(crate) fn solve_commuting<F: Field>(
    src_dims: &[usize],
    tgt_dims: &[usize],
    gens: &[(usize, usize, &Mat<F>, &Mat<F>)],
) -> Vec<Vec<Mat<F>>> {
    let mut offset = Vec::with_capacity(src_dims.len());
    let mut unknowns = 0;
    for (d, e) in src_dims.iter().zip(tgt_dims) {
        offset.push(unknowns);
        unknowns += d * e;
    }
    if unknowns == 0 {
        return Vec::new();
    }
    let idx = |v: usize, i: usize, j: usize| offset[v] + i * src_dims[v] + j;
    let mut rows: Vec<Vec<(usize, F)>> = Vec::new();
    for &(s, t, src_g, tgt_g) in gens {
        for i in 0..tgt_dims[t] {
            for j in 0..src_dims[s] {
                let mut row: Vec<(usize, F)> = Vec::new();
                for k in 0..tgt_dims[s] {
                    let c = &tgt_g[(i, k)];
                    if !c.is_zero() {
                        row.push((idx(s, k, j), c.clone()));
                    }
                }
                for k in 0..src_dims[t] {
                    let c = &src_g[(k, j)];
                    if !c.is_zero() {
                        row.push((idx(t, i, k), -c.clone()));
                    }
                }
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    let mut m: Mat<F> = Mat::zero(rows.len(), unknowns);
    for (r, row) in rows.iter().enumerate() {
        for (c, v) in row {
            let x = m[(r, *c)].clone() + v.clone();
            m[(r, *c)] = x;
        }
    }
    let kernel = m.kernel();
    kernel
        .basis()
        .iter()
        .map(|sol| {
            (0..src_dims.len())
                .map(|v| {
                    let data = sol[offset[v]..offset[v] + src_dims[v] * tgt_dims[v]].to_vec();
                    Mat::from_rows(tgt_dims[v], src_dims[v], data).expect("shape")
                })
                .collect()
        })
        .collect()
}

/// Basis of `Hom_A(M, N)`.
pub fn hom_basis<F: Field>(quiver: &Quiver, m: &Rep<F>, n: &Rep<F>) -> Result<Vec<AMap<F>>> {
    m.validate(quiver)?;
    n.validate(quiver)?;
    let gens: Vec<_> = quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, a)| (a.source, a.target, &m.maps[i], &n.maps[i]))
        .collect();
    Ok(solve_commuting(&m.dims, &n.dims, &gens)
        .into_iter()
        .map(|components| AMap { components })
        .collect())
}

/// `A e_v`, with basis the paths starting at `v`.
pub fn projective_rep<F: Field>(quiver: &Quiver, v: usize) -> Rep<F> {
    // basis at vertex y: paths v -> y in canonical order
    let basis: Vec<Vec<usize>> = (0..quiver.vertex_count())
        .map(|y| {
            (0..quiver.paths().len())
                .filter(|&p| quiver.paths()[p].source == v && quiver.paths()[p].target == y)
                .collect()
        })
        .collect();
    let dims = basis.iter().map(Vec::len).collect::<Vec<_>>();
    let maps = quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let mut m: Mat<F> = Mat::zero(dims[a.target], dims[a.source]);
            let arrow_path = quiver.find_path(a.source, &[ai]).expect("arrow is a path");
            for (c, &p) in basis[a.source].iter().enumerate() {
                if let Some(q) = quiver.compose(p, arrow_path) {
                    let r = basis[a.target].iter().position(|&x| x == q).expect("path present");
                    m[(r, c)] = F::one();
                }
            }
            m
        })
        .collect();
    Rep { dims, maps }
}

/// `D(e_v A)`, with basis the duals of paths ending at `v`.
pub fn injective_rep<F: Field>(quiver: &Quiver, v: usize) -> Rep<F> {
    let basis: Vec<Vec<usize>> = (0..quiver.vertex_count())
        .map(|y| {
            (0..quiver.paths().len())
                .filter(|&p| quiver.paths()[p].target == v && quiver.paths()[p].source == y)
                .collect()
        })
        .collect();
    let dims = basis.iter().map(Vec::len).collect::<Vec<_>>();
    let maps = quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let mut m: Mat<F> = Mat::zero(dims[a.target], dims[a.source]);
            let arrow_path = quiver.find_path(a.source, &[ai]).expect("arrow is a path");
            for (c, &p) in basis[a.source].iter().enumerate() {
                // a . p^ = (p with leading arrow a removed)^
                if let Some(u) = quiver.strip_prefix(p, arrow_path) {
                    let r = basis[a.target].iter().position(|&x| x == u).expect("path present");
                    m[(r, c)] = F::one();
                }
            }
            m
        })
        .collect();
    Rep { dims, maps }
}

pub fn simple_rep<F: Field>(quiver: &Quiver, v: usize) -> Rep<F> {
    let dims: Vec<usize> = (0..quiver.vertex_count()).map(|x| usize::from(x == v)).collect();
    let maps = quiver.arrows().iter().map(|a| Mat::zero(dims[a.target], dims[a.source])).collect();
    Rep { dims, maps }
}

/// `DA ⊗_A M` together with the data needed to move between it and the
/// free space `DA ⊗_k M`.
#[derive(Clone, Debug)]
pub struct DualTensor<F> {
    pub rep: Rep<F>,
    /// per vertex x: the paths p starting at x, in order, indexing the
    /// blocks of `(DA ⊗_k M)_x = ⊕_p M_{target p}`
    pub blocks: Vec<Vec<usize>>,
    pub projection: Vec<Mat<F>>,
    pub section: Vec<Mat<F>>,
}

fn free_offsets<F: Field>(quiver: &Quiver, m: &Rep<F>) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let n = quiver.vertex_count();
    let mut blocks = vec![Vec::new(); n];
    let mut offsets = vec![Vec::new(); n];
    for x in 0..n {
        let mut off = 0;
        for (p, path) in quiver.paths().iter().enumerate() {
            if path.source == x {
                blocks[x].push(p);
                offsets[x].push(off);
                off += m.dims[path.target];
            }
        }
        offsets[x].push(off);
    }
    (blocks, offsets)
}

/// Computes `DA ⊗_A M` as the quotient of `DA ⊗_k M` by the balancing
/// relations `x·a ⊗ m - x ⊗ a·m`.
pub fn dual_tensor<F: Field>(quiver: &Quiver, m: &Rep<F>) -> DualTensor<F> {
    let n = quiver.vertex_count();
    let (blocks, offsets) = free_offsets(quiver, m);
    let free_dim: Vec<usize> = (0..n).map(|x| *offsets[x].last().unwrap()).collect();
    let mut projection = Vec::with_capacity(n);
    let mut section = Vec::with_capacity(n);
    for x in 0..n {
        let mut relations = Vec::new();
        for (bi, &p) in blocks[x].iter().enumerate() {
            let path = &quiver.paths()[p];
            for (ai, a) in quiver.arrows().iter().enumerate() {
                if a.target != path.target {
                    continue;
                }
                let arrow_path = quiver.find_path(a.source, &[ai]).unwrap();
                let z = quiver.strip_suffix(p, arrow_path);
                for j in 0..m.dims[a.source] {
                    let mut v = vec![F::zero(); free_dim[x]];
                    if let Some(z) = z {
                        let zb = blocks[x].iter().position(|&q| q == z).unwrap();
                        v[offsets[x][zb] + j] = F::one();
                    }
                    for r in 0..m.dims[path.target] {
                        let c = &m.maps[ai][(r, j)];
                        if !c.is_zero() {
                            let k = offsets[x][bi] + r;
                            v[k] = v[k].clone() - c.clone();
                        }
                    }
                    relations.push(v);
                }
            }
        }
        let q = Subspace::span(free_dim[x], &relations).quotient();
        projection.push(q.projection);
        section.push(q.section);
    }
    let dims: Vec<usize> = projection.iter().map(Mat::rows).collect();
    let maps = quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let arrow_path = quiver.find_path(a.source, &[ai]).unwrap();
            let (x, y) = (a.source, a.target);
            // a·(p* ⊗ m) = (a·p*) ⊗ m, a·p* = (p without leading a)*
            let mut act: Mat<F> = Mat::zero(free_dim[y], free_dim[x]);
            for (bi, &p) in blocks[x].iter().enumerate() {
                if let Some(w) = quiver.strip_prefix(p, arrow_path) {
                    let wb = blocks[y].iter().position(|&q| q == w).unwrap();
                    for r in 0..m.dims[quiver.paths()[p].target] {
                        act[(offsets[y][wb] + r, offsets[x][bi] + r)] = F::one();
                    }
                }
            }
            projection[y].mul(&act).mul(&section[x])
        })
        .collect();
    DualTensor { rep: Rep { dims, maps }, blocks, projection, section }
}

/// `DA ⊗_A f`.
pub fn dual_tensor_map<F: Field>(
    quiver: &Quiver,
    src: &Rep<F>,
    tgt: &Rep<F>,
    f: &AMap<F>,
) -> AMap<F> {
    let ds = dual_tensor(quiver, src);
    let dt = dual_tensor(quiver, tgt);
    let (blocks, soff) = free_offsets(quiver, src);
    let (_, toff) = free_offsets(quiver, tgt);
    let components = (0..quiver.vertex_count())
        .map(|x| {
            let mut free = Mat::zero(*toff[x].last().unwrap(), *soff[x].last().unwrap());
            for (bi, &p) in blocks[x].iter().enumerate() {
                free.set_block(toff[x][bi], soff[x][bi], &f.components[quiver.paths()[p].target]);
            }
            dt.projection[x].mul(&free).mul(&ds.section[x])
        })
        .collect();
    AMap { components }
}
