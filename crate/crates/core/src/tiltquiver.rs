//! The tilting quiver: exchange arrows between basic tilting modules and
//! breadth-first exploration by mutation.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::approx::{left_approximation, right_approximation};
use crate::error::Result;
use crate::field::Field;
use crate::homological::is_injective;
use crate::module::{cokernel, kernel, DimGrid};
use crate::registry::Registry;
use crate::tilting::{
    certify_complement, complement_fan, ComplementFan, ExchangeSequence, Pieces, TiltingRecord,
};

/// One exchange at a summand of a tilting module.
pub struct Mutation<F> {
    pub neighbor: TiltingRecord<F>,
    /// index of the exchanged summand in the source record
    pub summand: usize,
    /// `0 -> X -> E -> Y -> 0` with `E` in add of the common part
    pub witness: ExchangeSequence<F>,
    /// true when the exchanged summand of the source is `X`, so the arrow
    /// points from the source to the neighbor
    pub outgoing: bool,
}

/// Neighbours of `t` obtained by replacing one non projective-injective
/// summand with an adjacent complement.
pub fn mutate_all<F: Field>(t: &TiltingRecord<F>) -> Result<Vec<Mutation<F>>> {
    let mut out = Vec::new();
    for (i, x) in t.pieces.modules().iter().enumerate() {
        if t.pds[i] == 0 && is_injective(x) {
            continue;
        }
        let rest: Pieces<F> = t.pieces.without(i);
        let add = rest.add_category()?;
        let left = left_approximation(x, &add)?;
        if left.map.is_mono() {
            let (y, proj) = cokernel(&left.target, &left.map);
            certify_complement(&rest, &y, "cokernel of a left approximation")?;
            out.push(Mutation {
                neighbor: TiltingRecord::from_pieces(rest.with(y.clone())?)?,
                summand: i,
                witness: ExchangeSequence {
                    left: x.clone(),
                    middle: left.target,
                    right: y,
                    mono: left.map,
                    epi: proj,
                },
                outgoing: true,
            });
        }
        let right = right_approximation(&add, x)?;
        if right.map.is_epi() {
            let (z, incl) = kernel(&right.source, &right.map);
            certify_complement(&rest, &z, "kernel of a right approximation")?;
            out.push(Mutation {
                neighbor: TiltingRecord::from_pieces(rest.with(z.clone())?)?,
                summand: i,
                witness: ExchangeSequence {
                    left: z,
                    middle: right.source,
                    right: x.clone(),
                    mono: incl,
                    epi: right.map,
                },
                outgoing: false,
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_vertices: usize,
    pub max_radius: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_vertices: 2000, max_radius: usize::MAX }
    }
}

pub struct QuiverVertex<F> {
    pub record: TiltingRecord<F>,
    /// sorted registry ids of the summands
    pub key: Vec<usize>,
    pub radius: usize,
}

pub struct QuiverArrow<F> {
    pub from: usize,
    pub to: usize,
    pub witness: ExchangeSequence<F>,
}

pub struct TiltingQuiverGraph<F> {
    pub registry: Registry<F>,
    pub vertices: Vec<QuiverVertex<F>>,
    pub arrows: Vec<QuiverArrow<F>>,
    /// vertices whose mutations were not expanded
    pub frontier: Vec<usize>,
    /// a neighbour was dropped because of the vertex limit
    pub truncated: bool,
    pub exhausted: bool,
}

impl<F: Field> TiltingQuiverGraph<F> {
    fn key_of(registry: &Registry<F>, t: &TiltingRecord<F>) -> Result<Vec<usize>> {
        let mut key = t
            .pieces
            .modules()
            .iter()
            .map(|p| registry.intern(p).map(|r| r.0))
            .collect::<Result<Vec<_>>>()?;
        key.sort_unstable();
        Ok(key)
    }

    /// Vertex isomorphic to `t`, if present.
    pub fn find(&self, t: &TiltingRecord<F>) -> Result<Option<usize>> {
        let mut key = Vec::new();
        for p in t.pieces.modules() {
            match self.registry.find(p)? {
                Some(id) => key.push(id),
                None => return Ok(None),
            }
        }
        key.sort_unstable();
        Ok(self.vertices.iter().position(|v| v.key == key))
    }

    pub fn keys(&self) -> BTreeSet<Vec<usize>> {
        self.vertices.iter().map(|v| v.key.clone()).collect()
    }

    /// Connectivity of the underlying graph on the vertices of projective
    /// dimension at most one.
    pub fn pd_le_one_connected(&self) -> bool {
        let inside: Vec<bool> = self.vertices.iter().map(|v| v.record.pd_max <= 1).collect();
        let Some(start) = inside.iter().position(|&b| b) else { return true };
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.vertices.len()];
        for a in &self.arrows {
            if inside[a.from] && inside[a.to] {
                adj[a.from].push(a.to);
                adj[a.to].push(a.from);
            }
        }
        let mut seen = vec![false; self.vertices.len()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        inside.iter().zip(&seen).all(|(&i, &s)| !i || s)
    }

    pub fn export(&self) -> GraphExport {
        let alg = self.vertices.first().map(|v| v.record.module.algebra().clone());
        let labels = alg.map(|a| a.quiver().vertices().to_vec()).unwrap_or_default();
        let vertices = self
            .vertices
            .iter()
            .enumerate()
            .map(|(id, v)| {
                let mut summands: Vec<DimGrid> =
                    v.record.pieces.modules().iter().map(|p| p.dim_grid()).collect();
                summands.sort();
                VertexExport { id, summands, pd: v.record.pd_max, radius: v.radius }
            })
            .collect();
        let arrows = self
            .arrows
            .iter()
            .map(|a| ArrowExport {
                from: a.from,
                to: a.to,
                left: a.witness.left.dim_grid(),
                middle: a.witness.middle.dim_grid(),
                right: a.witness.right.dim_grid(),
            })
            .collect();
        GraphExport {
            labels,
            vertices,
            arrows,
            frontier: self.frontier.clone(),
            truncated: self.truncated,
            exhausted: self.exhausted,
        }
    }

    pub fn to_json(&self) -> String {
        self.export().to_json()
    }

    pub fn to_dot(&self) -> String {
        self.export().to_dot()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexExport {
    pub id: usize,
    pub summands: Vec<DimGrid>,
    pub pd: usize,
    pub radius: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowExport {
    pub from: usize,
    pub to: usize,
    pub left: DimGrid,
    pub middle: DimGrid,
    pub right: DimGrid,
}

/// Serializable view of a tilting quiver.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphExport {
    pub labels: Vec<String>,
    pub vertices: Vec<VertexExport>,
    pub arrows: Vec<ArrowExport>,
    pub frontier: Vec<usize>,
    pub truncated: bool,
    pub exhausted: bool,
}

impl GraphExport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph export serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| crate::Error::Parse(e.to_string()))
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph tilting_quiver {\n");
        for v in &self.vertices {
            let label: Vec<String> = v.summands.iter().map(|g| g.render(&self.labels)).collect();
            s.push_str(&format!("  v{} [label=\"{}\\npd {}\"];\n", v.id, label.join("\\n"), v.pd));
        }
        for a in &self.arrows {
            s.push_str(&format!(
                "  v{} -> v{} [label=\"{}\"];\n",
                a.from,
                a.to,
                a.middle.render(&self.labels)
            ));
        }
        s.push_str("}\n");
        s
    }
}

/// Breadth-first closure of `seed` under mutation, level by level.
pub fn explore<F: Field>(seed: TiltingRecord<F>, limits: Limits) -> Result<TiltingQuiverGraph<F>> {
    let registry = Registry::new();
    let key = TiltingQuiverGraph::key_of(&registry, &seed)?;
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(key.clone(), 0)]);
    let mut g = TiltingQuiverGraph {
        registry,
        vertices: vec![QuiverVertex { record: seed, key, radius: 0 }],
        arrows: Vec::new(),
        frontier: Vec::new(),
        truncated: false,
        exhausted: false,
    };
    let mut edges: BTreeMap<(usize, usize), ExchangeSequence<F>> = BTreeMap::new();
    let mut layer = vec![0usize];
    let mut radius = 0;
    while !layer.is_empty() && radius < limits.max_radius {
        let found: Vec<Vec<Mutation<F>>> = layer
            .par_iter()
            .map(|&v| mutate_all(&g.vertices[v].record))
            .collect::<Result<Vec<_>>>()?;
        let mut next = Vec::new();
        for (&v, muts) in layer.iter().zip(found) {
            for mu in muts {
                let key = TiltingQuiverGraph::key_of(&g.registry, &mu.neighbor)?;
                let w = match index.get(&key) {
                    Some(&w) => w,
                    None if g.vertices.len() >= limits.max_vertices => {
                        g.truncated = true;
                        continue;
                    }
                    None => {
                        let w = g.vertices.len();
                        index.insert(key.clone(), w);
                        g.vertices.push(QuiverVertex {
                            record: mu.neighbor,
                            key,
                            radius: radius + 1,
                        });
                        next.push(w);
                        w
                    }
                };
                let e = if mu.outgoing { (v, w) } else { (w, v) };
                edges.entry(e).or_insert(mu.witness);
            }
        }
        layer = next;
        radius += 1;
    }
    g.exhausted = layer.is_empty() && !g.truncated;
    g.frontier = layer;
    g.arrows =
        edges.into_iter().map(|((from, to), witness)| QuiverArrow { from, to, witness }).collect();
    Ok(g)
}

/// Almost complete modules `T/X` for the vertices `T` of `g` in order,
/// skipping projective-injective `X` and repeated `T/X`; returns the first
/// passing `pre` whose complement fan passes `accept`.
pub fn find_fan<F: Field>(
    g: &TiltingQuiverGraph<F>,
    mut pre: impl FnMut(&Pieces<F>) -> Result<bool>,
    mut accept: impl FnMut(&ComplementFan<F>) -> bool,
) -> Result<Option<(usize, ComplementFan<F>)>> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for (v, vertex) in g.vertices.iter().enumerate() {
        let t = &vertex.record;
        for (i, x) in t.pieces.modules().iter().enumerate() {
            if t.pds[i] == 0 && is_injective(x) {
                continue;
            }
            let mut key = vertex.key.clone();
            let id = g.registry.find(x)?.expect("summands are registered");
            key.remove(key.iter().position(|&k| k == id).expect("summand in key"));
            if !seen.insert(key) {
                continue;
            }
            let rest = t.pieces.without(i);
            if !pre(&rest)? {
                continue;
            }
            let fan = complement_fan(&rest, Some(x))?;
            if accept(&fan) {
                return Ok(Some((v, fan)));
            }
        }
    }
    Ok(None)
}

/// Exploration from the regular module.
pub fn explore_from_regular<F: Field>(
    alg: &std::sync::Arc<crate::algebra::ReplicatedAlgebra>,
    limits: Limits,
) -> Result<TiltingQuiverGraph<F>> {
    explore(TiltingRecord::regular(alg)?, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{algebra, linear_a, single_vertex};
    use crate::Q;

    #[test]
    fn one_vertex_base_has_two_tilting_modules() {
        let alg = algebra(single_vertex(), 1);
        let g = explore_from_regular::<Q>(&alg, Limits::default()).unwrap();
        assert!(g.exhausted);
        assert_eq!(g.vertices.len(), 2);
        assert_eq!(g.arrows.len(), 1);
        let muts = mutate_all(&g.vertices[0].record).unwrap();
        assert_eq!(muts.len(), 1);
    }

    #[test]
    fn witnesses_are_exact() {
        let alg = algebra(linear_a(2), 1);
        let g = explore_from_regular::<Q>(&alg, Limits::default()).unwrap();
        assert!(g.exhausted);
        for a in &g.arrows {
            assert!(a.witness.is_exact());
        }
        assert!(g.pd_le_one_connected());
    }

    #[test]
    fn json_round_trip_and_dot() {
        let alg = algebra(single_vertex(), 1);
        let g = explore_from_regular::<Q>(&alg, Limits::default()).unwrap();
        let e = g.export();
        assert_eq!(GraphExport::from_json(&g.to_json()).unwrap(), e);
        let dot = g.to_dot();
        assert_eq!(dot.matches("->").count(), 1);
        assert_eq!(dot.lines().filter(|l| l.contains("[label=") && !l.contains("->")).count(), 2);
    }

    #[test]
    fn empty_export_has_empty_body() {
        let e = GraphExport {
            labels: vec![],
            vertices: vec![],
            arrows: vec![],
            frontier: vec![],
            truncated: false,
            exhausted: true,
        };
        assert_eq!(e.to_dot(), "digraph tilting_quiver {\n}\n");
    }
}
