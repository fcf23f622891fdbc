use super::{normal_subgroups, GroupTable};
use crate::bitset::ElementSet;
use crate::error::Result;

/// The chain `G ≥ G1 ≥ G2 ≥ G3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residuals {
    /// Soluble residual: last term of the derived series.
    pub g1: ElementSet,
    /// Intersection of the maximal normal subgroups of `G1`.
    pub g2: ElementSet,
    /// Stable term of `[G2, G, G, ...]`.
    pub g3: ElementSet,
}

impl GroupTable {
    pub fn residuals(&self, lattice_cap: usize) -> Result<Residuals> {
        let g1 = self.derived_series().pop().expect("nonempty series");
        let g2 = if g1.len() == 1 {
            g1.clone()
        } else {
            let st = self.subgroup_table(&g1)?;
            let lat = normal_subgroups(&st.table, lattice_cap)?;
            st.to_parent_set(&lat.radical_of_maximals(), self.order())
        };
        let g3 = self.lower_central_limit(&g2);
        Ok(Residuals { g1, g2, g3 })
    }

    /// `[N, G], [[N, G], G], ...` until the term repeats.
    pub fn lower_central_limit(&self, n: &ElementSet) -> ElementSet {
        let mut cur = n.clone();
        loop {
            let next = self.commutator_with_group(&cur);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }
}
