//! Tensor-product algebras and modules built from a Perm factor and a
//! dendriform or pre-Lie factor.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use num_traits::Zero;

use crate::algebra::{
    zero_table, Actions, BimoduleData, Kind, StructurePresentation, Table,
};
use crate::scalar::Scalar;
use crate::Error;

/// Pair index `(i, j) -> i * second_dim + j`, shared by every tensor construction.
pub fn pair_index(i: usize, j: usize, second_dim: usize) -> usize {
    i * second_dim + j
}

fn pair_labels(a: &[String], b: &[String]) -> Vec<String> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for an in a {
        for bn in b {
            out.push(format!("{an}⊗{bn}"));
        }
    }
    out
}

/// Adds `coef * (u ⊗ v)` into a flat vector over the pair basis.
fn add_tensor_term(out: &mut [Scalar], coef: &Scalar, u: &[Scalar], v: &[Scalar]) {
    if coef.is_zero() {
        return;
    }
    let second = v.len();
    for (i, ui) in u.iter().enumerate() {
        if ui.is_zero() {
            continue;
        }
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            out[pair_index(i, j, second)] += coef * ui * vj;
        }
    }
}

/// Product algebra on `A ⊗ B`:
/// `(a₁⊗b₁)(a₂⊗b₂) = (a₁a₂)⊗(b₁≺b₂) + (a₂a₁)⊗(b₁≻b₂)`.
///
/// The right factor only needs two tables; it is not required to satisfy the
/// dendriform axioms, and the output is returned unvalidated.
pub fn tensor_associative(
    a: &StructurePresentation,
    b: &StructurePresentation,
) -> Result<StructurePresentation, Error> {
    let at = a.table()?;
    let (prec, succ) = b.prec_succ()?;
    let dim = a.dim * b.dim;
    let one = Scalar::from_integer(1.into());
    let mut table = zero_table(dim, dim, dim);
    for i1 in 0..a.dim {
        for j1 in 0..b.dim {
            for i2 in 0..a.dim {
                for j2 in 0..b.dim {
                    let row = &mut table[pair_index(i1, j1, b.dim)][pair_index(i2, j2, b.dim)];
                    add_tensor_term(row, &one, &at[i1][i2], &prec[j1][j2]);
                    add_tensor_term(row, &one, &at[i2][i1], &succ[j1][j2]);
                }
            }
        }
    }
    Ok(StructurePresentation {
        kind: Kind::Associative,
        dim,
        basis_names: pair_labels(&a.basis_names, &b.basis_names),
        tables: crate::algebra::Tables::Single(table),
    })
}

/// Module structure on `M ⊗ N` over `tensor_associative(a, b)`:
/// left `(a⊗b)(m⊗n) = (am)⊗(b≺n) + (ma)⊗(b≻n)`,
/// right `(m⊗n)(a⊗b) = (ma)⊗(n≺b) + (am)⊗(n≻b)`.
pub fn tensor_assoc_bimodule(
    a: &StructurePresentation,
    m: &BimoduleData,
    b: &StructurePresentation,
    n: &BimoduleData,
) -> Result<BimoduleData, Error> {
    if m.over.dim != a.dim || n.over.dim != b.dim {
        return Err(Error::ShapeMismatch);
    }
    let ml = m.left_table()?;
    let mr = m.right_table()?;
    let (lprec, lsucc, rprec, rsucc) = n.dend_tables()?;
    let module_dim = m.module_dim * n.module_dim;
    let one = Scalar::from_integer(1.into());
    let mut left = zero_table(a.dim * b.dim, module_dim, module_dim);
    for i in 0..a.dim {
        for j in 0..b.dim {
            for mm in 0..m.module_dim {
                for u in 0..n.module_dim {
                    let row = &mut left[pair_index(i, j, b.dim)]
                        [pair_index(mm, u, n.module_dim)];
                    add_tensor_term(row, &one, &ml[i][mm], &lprec[j][u]);
                    add_tensor_term(row, &one, &mr[mm][i], &lsucc[j][u]);
                }
            }
        }
    }
    let mut right = zero_table(module_dim, a.dim * b.dim, module_dim);
    for mm in 0..m.module_dim {
        for u in 0..n.module_dim {
            for i in 0..a.dim {
                for j in 0..b.dim {
                    let row = &mut right[pair_index(mm, u, n.module_dim)]
                        [pair_index(i, j, b.dim)];
                    add_tensor_term(row, &one, &mr[mm][i], &rprec[u][j]);
                    add_tensor_term(row, &one, &ml[i][mm], &rsucc[u][j]);
                }
            }
        }
    }
    BimoduleData::new(
        tensor_associative(a, b)?,
        module_dim,
        Actions::LeftRight { left, right },
    )
}

/// Bracket on `A ⊗ P`:
/// `[a₁⊗p₁, a₂⊗p₂] = (a₁a₂)⊗(p₁p₂) − (a₂a₁)⊗(p₂p₁)`.
///
/// The right factor only needs one table; the output is returned unvalidated.
pub fn tensor_lie(
    a: &StructurePresentation,
    p: &StructurePresentation,
) -> Result<StructurePresentation, Error> {
    let at = a.table()?;
    let pt = p.table()?;
    let dim = a.dim * p.dim;
    let one = Scalar::from_integer(1.into());
    let minus_one = -one.clone();
    let mut table = zero_table(dim, dim, dim);
    for i1 in 0..a.dim {
        for j1 in 0..p.dim {
            for i2 in 0..a.dim {
                for j2 in 0..p.dim {
                    let row = &mut table[pair_index(i1, j1, p.dim)][pair_index(i2, j2, p.dim)];
                    add_tensor_term(row, &one, &at[i1][i2], &pt[j1][j2]);
                    add_tensor_term(row, &minus_one, &at[i2][i1], &pt[j2][j1]);
                }
            }
        }
    }
    Ok(StructurePresentation {
        kind: Kind::Lie,
        dim,
        basis_names: pair_labels(&a.basis_names, &p.basis_names),
        tables: crate::algebra::Tables::Single(table),
    })
}

/// Module structure on `M ⊗ N` over `tensor_lie(a, p)`:
/// `(a⊗p)(m⊗n) = (am)⊗(pn) − (ma)⊗(np)`.
pub fn tensor_lie_module(
    a: &StructurePresentation,
    m: &BimoduleData,
    p: &StructurePresentation,
    n: &BimoduleData,
) -> Result<BimoduleData, Error> {
    if m.over.dim != a.dim || n.over.dim != p.dim {
        return Err(Error::ShapeMismatch);
    }
    let ml = m.left_table()?;
    let mr = m.right_table()?;
    let nl = n.left_table()?;
    let nr = n.right_table()?;
    let module_dim = m.module_dim * n.module_dim;
    let one = Scalar::from_integer(1.into());
    let minus_one = -one.clone();
    let mut action = zero_table(a.dim * p.dim, module_dim, module_dim);
    for i in 0..a.dim {
        for j in 0..p.dim {
            for mm in 0..m.module_dim {
                for u in 0..n.module_dim {
                    let row = &mut action[pair_index(i, j, p.dim)]
                        [pair_index(mm, u, n.module_dim)];
                    add_tensor_term(row, &one, &ml[i][mm], &nl[j][u]);
                    add_tensor_term(row, &minus_one, &mr[mm][i], &nr[u][j]);
                }
            }
        }
    }
    BimoduleData::new(tensor_lie(a, p)?, module_dim, Actions::Single { action })
}

/// Extracts the single structure table, for tests that poke at tensor output.
pub fn single_table(p: &StructurePresentation) -> &Table {
    p.table().expect("tensor outputs carry a single table")
}
