//! Fixtures shared by the benchmarks.

use splitloci::{CVector, SplittingType};

/// The C-vector of the rank 4 quadric example, 30 nodes and 342 chains.
pub fn hasse_root() -> CVector {
    CVector::new(vec![0, 0, 0, 5, 5, 2]).expect("valid C-vector")
}

/// `(z, z, z, 0, 0, 0)`, whose chain count grows like `8^z / 12`.
pub fn six3_equal(z: usize) -> CVector {
    CVector::new(vec![z, z, z, 0, 0, 0]).expect("valid C-vector")
}

pub fn trigonal() -> SplittingType {
    SplittingType::new(vec![-3, -1, 1]).expect("valid splitting type")
}

pub fn catalan(k: usize) -> SplittingType {
    let mut mu = vec![-3];
    mu.extend(std::iter::repeat_n(-2, k - 3));
    mu.extend([0, 0]);
    SplittingType::new(mu).expect("valid splitting type")
}
