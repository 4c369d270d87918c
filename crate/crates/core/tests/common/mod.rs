#![allow(dead_code)]

use std::sync::Arc;

use reptilt::algebra::ReplicatedAlgebra;
use reptilt::arknit::enumerate_indecomposables;
use reptilt::homological::ext_all_via_injectives;
use reptilt::module::RModule;
use reptilt::{Field, Result};

/// Knitted indecomposables together with their Ext-compatibility relation,
/// computed through injective coresolutions.
pub struct Oracle<F> {
    pub modules: Vec<RModule<F>>,
    /// `compat[i][j]`: Ext^k between i and j vanishes both ways for k >= 1
    pub compat: Vec<Vec<bool>>,
}

impl<F: Field> Oracle<F> {
    pub fn new(alg: &Arc<ReplicatedAlgebra>) -> Result<Self> {
        let modules = enumerate_indecomposables::<F>(alg)?;
        let k = modules.len();
        let mut vanish = vec![vec![false; k]; k];
        for i in 0..k {
            for j in 0..k {
                vanish[i][j] = ext_all_via_injectives(&modules[i], &modules[j])?
                    .iter()
                    .skip(1)
                    .all(|&d| d == 0);
            }
        }
        let compat =
            (0..k).map(|i| (0..k).map(|j| vanish[i][j] && vanish[j][i]).collect()).collect();
        Ok(Oracle { modules, compat })
    }

    /// Every set of pairwise compatible, self-orthogonal indecomposables with
    /// exactly `size` members, or at most `size` when `exact` is false.
    pub fn cliques(&self, size: usize, exact: bool) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.extend(0, size, exact, &mut cur, &mut out);
        out
    }

    fn extend(
        &self,
        from: usize,
        size: usize,
        exact: bool,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if !exact || cur.len() == size {
            out.push(cur.clone());
        }
        if cur.len() == size {
            return;
        }
        for i in from..self.modules.len() {
            if self.compat[i][i] && cur.iter().all(|&j| self.compat[i][j]) {
                cur.push(i);
                self.extend(i + 1, size, exact, cur, out);
                cur.pop();
            }
        }
    }

    pub fn subset(&self, ids: &[usize]) -> Vec<RModule<F>> {
        ids.iter().map(|&i| self.modules[i].clone()).collect()
    }
}
