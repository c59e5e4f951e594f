//! Small fixture algebras shared by the unit tests.

use alloc::vec::Vec;

use crate::algebra::{basis_labels, zero_table, Kind, StructurePresentation};
use crate::scalar::int;

/// Dendriform family: `e_i < e_1 = e_i` for `i >= 2`, `e_1 > e_1 = e_1`, rest zero.
pub(crate) fn chain_dendriform(n: usize) -> StructurePresentation {
    let mut prec = zero_table(n, n, n);
    for i in 1..n {
        prec[i][0][i] = int(1);
    }
    let mut succ = zero_table(n, n, n);
    succ[0][0][0] = int(1);
    StructurePresentation::dendriform(basis_labels("e", n), prec, succ).unwrap()
}

/// Two-dimensional pre-Lie algebra with `e_1 · e_2 = e_1`, rest zero.
pub(crate) fn projector_prelie() -> StructurePresentation {
    let mut t = zero_table(2, 2, 2);
    t[0][1][0] = int(1);
    StructurePresentation::single(Kind::PreLie, basis_labels("e", 2), t).unwrap()
}

/// Two-dimensional Lie algebra with `[e_1, e_2] = e_1`.
pub(crate) fn affine_lie() -> StructurePresentation {
    let mut t = zero_table(2, 2, 2);
    t[0][1][0] = int(1);
    t[1][0][0] = int(-1);
    StructurePresentation::single(Kind::Lie, basis_labels("e", 2), t).unwrap()
}

/// Three-dimensional Heisenberg Lie algebra: `[e_1, e_2] = e_3`.
pub(crate) fn heisenberg_lie() -> StructurePresentation {
    let mut t = zero_table(3, 3, 3);
    t[0][1][2] = int(1);
    t[1][0][2] = int(-1);
    StructurePresentation::single(Kind::Lie, basis_labels("e", 3), t).unwrap()
}

/// Indices used when spelling out tuples in tests.
pub(crate) fn pairs(dim: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            out.push((i, j));
        }
    }
    out
}
