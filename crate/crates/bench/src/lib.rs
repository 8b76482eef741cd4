//! Inputs shared by the benchmarks.

use motivic_zeta::exact::rational::int;
use motivic_zeta::{Ambient, MultiPoly, RatMatrix, VarietySpec};

/// Deterministic dense integer matrix with entries in `-4..=4`.
pub fn dense_matrix(n: usize) -> RatMatrix {
    let entries = (0..n * n).map(|k| int(((k * 7 + 3) % 9) as i64 - 4)).collect();
    RatMatrix::new(n, n, entries).unwrap()
}

/// `y^2 z = x^3 + x z^2 + z^3` over `F_p`.
pub fn elliptic_curve(p: u64) -> VarietySpec {
    let f = MultiPoly::new(vec![
        (vec![0, 2, 1], 1),
        (vec![3, 0, 0], -1),
        (vec![1, 0, 2], -1),
        (vec![0, 0, 3], -1),
    ]);
    VarietySpec::new(Ambient::Projective(2), p, 1, vec![f]).unwrap()
}

/// Integer Gram matrix of a chain with a few extra couplings.
pub fn gram(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1 } else if j > i { ((i + 2 * j) % 5) as i64 } else { 0 }).collect())
        .collect()
}
