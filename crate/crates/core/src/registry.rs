//! Interning of indecomposable modules up to isomorphism.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::error::Result;
use crate::field::Field;
use crate::krull::find_isomorphism;
use crate::module::{DimGrid, RModule};

struct State<F> {
    modules: Vec<RModule<F>>,
    buckets: HashMap<DimGrid, Vec<usize>>,
}

/// Assigns stable ids to indecomposables; ids follow insertion order.
pub struct Registry<F> {
    state: Mutex<State<F>>,
}

impl<F: Field> Default for Registry<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Field> Registry<F> {
    pub fn new() -> Self {
        Registry { state: Mutex::new(State { modules: Vec::new(), buckets: HashMap::new() }) }
    }

    /// Id of an existing isomorphic module, without inserting.
    pub fn find(&self, m: &RModule<F>) -> Result<Option<usize>> {
        let st = self.state.lock().expect("registry lock");
        let Some(ids) = st.buckets.get(&m.dim_grid()) else { return Ok(None) };
        for &id in ids {
            if find_isomorphism(&st.modules[id], m)?.is_some() {
                return Ok(Some(id));
            }
        }
        Ok(None)
    }

    /// Returns the id and whether the module was new.
    pub fn intern(&self, m: &RModule<F>) -> Result<(usize, bool)> {
        let mut st = self.state.lock().expect("registry lock");
        let key = m.dim_grid();
        if let Some(ids) = st.buckets.get(&key) {
            for &id in ids {
                if find_isomorphism(&st.modules[id], m)?.is_some() {
                    return Ok((id, false));
                }
            }
        }
        let id = st.modules.len();
        st.modules.push(m.clone());
        st.buckets.entry(key).or_default().push(id);
        Ok((id, true))
    }

    pub fn get(&self, id: usize) -> RModule<F> {
        self.state.lock().expect("registry lock").modules[id].clone()
    }

    pub fn len(&self) -> usize {
        self.state.lock().expect("registry lock").modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn modules(&self) -> Vec<RModule<F>> {
        self.state.lock().expect("registry lock").modules.clone()
    }
}
