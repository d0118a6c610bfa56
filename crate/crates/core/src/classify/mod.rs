//! Constructions, counts and brute-force classification at small volume.

mod census;
mod constructions;
mod enumerate;
mod partitions;

use serde::{Deserialize, Serialize};

use crate::ehrhart::hstar;
use crate::error::Result;
use crate::normal_form::{normal_form, NormalForm};
use crate::polytope::{LatticePolytope, Point};

pub use census::{
    census_by_hstar, census_sums_match, scan_leading_coefficient, scan_scott, HStarCensusRow,
    LeadingCoefficientRow, ScottReport,
};
pub use constructions::{exceptional_triangle, lawrence_prism, triangle_t};
pub use enumerate::{degrees_present, enumerate_2d, enumerate_simplices, DEFAULT_VMAX};
pub use partitions::{c_linear, partition_count};

/// One equivalence class with a representative and its invariants.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassEntry {
    pub normal_form: NormalForm,
    pub representative: Vec<Point>,
    pub hstar: Vec<u64>,
    pub nv: u64,
    pub degree: usize,
}

impl ClassEntry {
    pub fn from_polytope(p: &LatticePolytope) -> Result<Self> {
        let h = hstar(p)?;
        Ok(ClassEntry {
            normal_form: normal_form(p)?,
            representative: p.vertices().to_vec(),
            hstar: h.coefficients().to_vec(),
            nv: h.sum(),
            degree: h.degree(),
        })
    }

    pub fn polytope(&self) -> LatticePolytope {
        LatticePolytope::new(self.normal_form.dim, self.representative.clone())
            .expect("representative was a valid polytope")
    }
}

/// All classes with given normalized volume and dimension, sorted by normal
/// form. `degree` is `None` when the table mixes degrees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationTable {
    pub volume: u64,
    pub degree: Option<usize>,
    pub dim: usize,
    pub classes: Vec<ClassEntry>,
    pub count: usize,
}

impl ClassificationTable {
    pub fn new(
        volume: u64,
        degree: Option<usize>,
        dim: usize,
        mut classes: Vec<ClassEntry>,
    ) -> Self {
        classes.sort();
        let count = classes.len();
        ClassificationTable {
            volume,
            degree,
            dim,
            classes,
            count,
        }
    }
}
