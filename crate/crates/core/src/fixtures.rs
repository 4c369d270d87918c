//! Standard quivers and the worked examples over duplicated algebras.

use std::sync::Arc;

use crate::algebra::ReplicatedAlgebra;
use crate::error::Result;
use crate::field::Field;
use crate::hereditary::{injective_rep, Quiver, Rep};
use crate::linalg::Mat;
use crate::module::{DimGrid, RModule, Structural};
use crate::tilting::{is_complement, ComplementFan, Pieces};
use crate::tiltquiver::{explore_from_regular, find_fan, Limits};

pub fn single_vertex() -> Quiver {
    Quiver::new(&["1"], &[]).expect("valid quiver")
}

/// Linear `A_n` with arrows `k+1 -> k`.
pub fn linear_a(n: usize) -> Quiver {
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let names: Vec<String> = (1..n).map(|i| format!("a{i}")).collect();
    let arrows: Vec<(&str, &str, &str)> = (1..n)
        .map(|i| (names[i - 1].as_str(), labels[i].as_str(), labels[i - 1].as_str()))
        .collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    Quiver::new(&refs, &arrows).expect("valid quiver")
}

/// Two arrows `a, b : 2 -> 1`.
pub fn kronecker() -> Quiver {
    Quiver::new(&["1", "2"], &[("a", "2", "1"), ("b", "2", "1")]).expect("valid quiver")
}

/// Four arrows into the central vertex 1.
pub fn d4_tilde() -> Quiver {
    Quiver::new(
        &["1", "2", "3", "4", "5"],
        &[("a", "2", "1"), ("b", "3", "1"), ("c", "4", "1"), ("d", "5", "1")],
    )
    .expect("valid quiver")
}

pub fn algebra(q: Quiver, m: usize) -> Arc<ReplicatedAlgebra> {
    Arc::new(ReplicatedAlgebra::new(q, m).expect("m >= 1"))
}

/// Expected data of one complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedComplement {
    pub dims: DimGrid,
    pub pd: usize,
}

pub struct Example<F> {
    pub name: &'static str,
    pub algebra: Arc<ReplicatedAlgebra>,
    pub almost_complete: Pieces<F>,
    /// in chain order
    pub complements: Vec<ExpectedComplement>,
}

fn grid(n: usize, entries: &[(usize, usize, usize)]) -> DimGrid {
    let mut g = vec![vec![0; n]; 2];
    for &(level, vertex, d) in entries {
        g[level][vertex - 1] = d;
    }
    DimGrid(g)
}

fn expected(n: usize, list: &[(&[(usize, usize, usize)], usize)]) -> Vec<ExpectedComplement> {
    list.iter().map(|(e, pd)| ExpectedComplement { dims: grid(n, e), pd: *pd }).collect()
}

fn with_projective_injectives<F: Field>(
    alg: &Arc<ReplicatedAlgebra>,
    mut modules: Vec<RModule<F>>,
) -> Result<Pieces<F>> {
    modules.extend(Structural::projective_injectives::<F>(alg));
    Pieces::new(alg, modules)
}

/// `D̃4`: `T_1 = (2345/1) ⊕ 3 ⊕ 4 ⊕ 5 ⊕ P`.
pub fn example1<F: Field>() -> Result<Example<F>> {
    let alg = algebra(d4_tilde(), 1);
    let q = alg.quiver();
    let mut modules = vec![Structural::embed_level(&alg, &injective_rep::<F>(q, 0), 0)?];
    for v in 2..5 {
        modules.push(Structural::simple::<F>(&alg, v, 0)?);
    }
    Ok(Example {
        name: "example 1",
        almost_complete: with_projective_injectives(&alg, modules)?,
        complements: expected(
            5,
            &[
                (&[(0, 1, 1), (0, 3, 1), (0, 4, 1), (0, 5, 1)], 1),
                (&[(0, 2, 1)], 1),
                (&[(1, 1, 1), (1, 2, 1)], 2),
            ],
        ),
        algebra: alg,
    })
}

/// The level-one `D̃4` module with dimension 2 at the centre and lines
/// `(1,0), (0,1), (1,1)` at the outer vertices other than `omit`.
pub fn d4_three_lines<F: Field>(alg: &Arc<ReplicatedAlgebra>, omit: usize) -> Result<RModule<F>> {
    let lines = [[1, 0], [0, 1], [1, 1]];
    let mut dims = vec![2, 1, 1, 1, 1];
    dims[omit] = 0;
    let mut next = 0;
    let maps = (1..5)
        .map(|v| {
            if v == omit {
                Mat::zero(2, 0)
            } else {
                let l = lines[next];
                next += 1;
                Mat::from_i64(&[&[l[0]], &[l[1]]])
            }
        })
        .collect();
    Structural::embed_level(alg, &Rep { dims, maps }, 1)
}

/// `D̃4`: four level-one modules with three lines each ⊕ `P`.
pub fn example2<F: Field>() -> Result<Example<F>> {
    let alg = algebra(d4_tilde(), 1);
    let modules = (1..5).map(|v| d4_three_lines::<F>(&alg, v)).collect::<Result<Vec<_>>>()?;
    Ok(Example {
        name: "example 2",
        almost_complete: with_projective_injectives(&alg, modules)?,
        complements: expected(
            5,
            &[
                (&[(0, 1, 1)], 0),
                (&[(1, 1, 1), (0, 2, 1), (0, 3, 1), (0, 4, 1), (0, 5, 1)], 1),
                (&[(1, 1, 3), (1, 2, 1), (1, 3, 1), (1, 4, 1), (1, 5, 1)], 2),
                (&[(1, 1, 5), (1, 2, 2), (1, 3, 2), (1, 4, 2), (1, 5, 2)], 3),
            ],
        ),
        algebra: alg,
    })
}

/// Kronecker: `T_3 = 2' ⊕ P_1' ⊕ P_2'`.
pub fn example3_1<F: Field>() -> Result<Example<F>> {
    let alg = algebra(kronecker(), 1);
    let modules = vec![Structural::simple::<F>(&alg, 1, 1)?];
    Ok(Example {
        name: "example 3 (1)",
        almost_complete: with_projective_injectives(&alg, modules)?,
        complements: expected(
            2,
            &[
                (&[(0, 1, 3), (0, 2, 4)], 1),
                (&[(1, 1, 3), (0, 2, 2)], 2),
                (&[(1, 1, 1), (1, 2, 2)], 3),
            ],
        ),
        algebra: alg,
    })
}

/// Kronecker: `T_1 = 2 ⊕ P_1' ⊕ P_2'`.
pub fn example3_2i<F: Field>() -> Result<Example<F>> {
    let alg = algebra(kronecker(), 1);
    let modules = vec![Structural::simple::<F>(&alg, 1, 0)?];
    Ok(Example {
        name: "example 3 (2i)",
        almost_complete: with_projective_injectives(&alg, modules)?,
        complements: expected(
            2,
            &[
                (&[(0, 1, 1), (0, 2, 2)], 1),
                (&[(1, 1, 1), (0, 2, 2)], 1),
                (&[(1, 1, 3), (1, 2, 2)], 2),
            ],
        ),
        algebra: alg,
    })
}

/// Kronecker (2ii): mutation search from the regular module for a
/// projective dimension two almost complete module admitting the simple
/// `1'` as a complement, with complements of dimensions `(1, 2, 2)`.
pub fn example3_2ii_search<F: Field>(limits: Limits) -> Result<Option<ComplementFan<F>>> {
    let alg = algebra(kronecker(), 1);
    let s1 = Structural::simple::<F>(&alg, 0, 1)?;
    let g = explore_from_regular::<F>(&alg, limits)?;
    let found =
        find_fan(&g, |t| Ok(t.pd() == 2 && is_complement(t, &s1)?), |fan| fan.pds() == [1, 2, 2])?;
    Ok(found.map(|f| f.1))
}

/// Kronecker (2ii): expected complements `2`, `1'`, `2'2'/1'1'1'`.
pub fn example3_2ii_complements() -> Vec<ExpectedComplement> {
    expected(2, &[(&[(0, 2, 1)], 1), (&[(1, 1, 1)], 2), (&[(1, 1, 3), (1, 2, 2)], 2)])
}

/// The printed DimGrid of the summand `2'/1'1'/1` of (2ii).
pub fn example3_2ii_summand_dims() -> DimGrid {
    grid(2, &[(0, 1, 1), (1, 1, 2), (1, 2, 1)])
}
