//! Seeded inputs shared by the benchmarks, so runs are comparable across changes.

use tspec_core::random::{self, TestRng};
use tspec_core::matrix::int_matrix;
use tspec_core::{IntMatrix, KTheoryAction, PolyMatrix, PresentedModule, ToralAutomorphism};

pub const SEED: u64 = 0x5eed;

pub fn rng() -> TestRng {
    random::rng(SEED)
}

/// A dense `n x n` polynomial matrix with entries of span at most 2.
pub fn dense_matrix(n: usize) -> PolyMatrix {
    random::poly_matrix(&mut rng(), n, n, 2, 1.0)
}

/// A torsion module with up to `summands` cyclic summands hidden behind a change of basis.
pub fn torsion_module(summands: usize) -> PresentedModule {
    random::torsion_module(&mut rng(), summands)
}

/// The golden-mean action on K_0 with a 3x3 block on K_1.
pub fn action() -> KTheoryAction {
    KTheoryAction::new(int_matrix(&[&[1, 1], &[1, 0]]), int_matrix(&[&[2, 1, 0], &[1, 1, 1], &[0, 1, 1]]))
        .expect("invertible blocks")
}

pub fn cat_map() -> ToralAutomorphism {
    ToralAutomorphism::new(int_matrix(&[&[2, 1], &[1, 1]])).expect("unimodular")
}

/// A hyperbolic automorphism of the 3-torus.
pub fn torus3() -> IntMatrix {
    int_matrix(&[&[0, 0, 1], &[1, 0, -1], &[0, 1, 3]])
}
