//! Truncated free Perm algebras and their canonical monomial normal forms.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{zero_table, Kind, StructurePresentation};
use crate::scalar::int;

/// Normal-form basis word: a leading generator followed by a sorted multiset tail.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FreePermMonomial {
    pub leading: usize,
    pub tail: Vec<usize>,
}

impl FreePermMonomial {
    /// Builds a monomial, sorting the tail into canonical order.
    pub fn new(leading: usize, mut tail: Vec<usize>) -> Self {
        tail.sort_unstable();
        FreePermMonomial { leading, tail }
    }

    /// Returns the degree `1 + |tail|`.
    pub fn degree(&self) -> usize {
        1 + self.tail.len()
    }

    /// Renders the monomial as `x{leading}*x{t1}*…` with 1-based generator numbers.
    pub fn label(&self) -> String {
        let mut out = format!("x{}", self.leading + 1);
        for t in &self.tail {
            out.push_str(&format!("*x{}", t + 1));
        }
        out
    }
}

/// Product of two normal forms: the left leading generator survives, everything
/// else joins the sorted tail.
pub fn mul_monomials(a: &FreePermMonomial, b: &FreePermMonomial) -> FreePermMonomial {
    let mut tail = a.tail.clone();
    tail.push(b.leading);
    tail.extend_from_slice(&b.tail);
    FreePermMonomial::new(a.leading, tail)
}

/// A nonempty binary product tree over generator indices.
#[derive(Clone, Debug)]
pub enum Word {
    Gen(usize),
    Prod(Box<Word>, Box<Word>),
}

impl Word {
    /// Leaf word for generator `i`.
    pub fn gen(i: usize) -> Word {
        Word::Gen(i)
    }

    /// Product of two words.
    pub fn prod(left: Word, right: Word) -> Word {
        Word::Prod(Box::new(left), Box::new(right))
    }
}

/// Normal form of a product tree: leftmost leaf leads, all other leaves are
/// collected into the sorted tail.
pub fn normalize_monomial(word: &Word) -> FreePermMonomial {
    fn leaves(w: &Word, out: &mut Vec<usize>) {
        match w {
            Word::Gen(i) => out.push(*i),
            Word::Prod(l, r) => {
                leaves(l, out);
                leaves(r, out);
            }
        }
    }
    let mut all = Vec::new();
    leaves(word, &mut all);
    FreePermMonomial::new(all[0], all[1..].to_vec())
}

/// The free Perm algebra on `g` generators, truncated above degree `d`.
#[derive(Clone, Debug)]
pub struct TruncatedFreePerm {
    pub generators: usize,
    pub max_degree: usize,
    pub basis: Vec<FreePermMonomial>,
    pub monomial_index: BTreeMap<FreePermMonomial, usize>,
    pub presentation: StructurePresentation,
}

impl TruncatedFreePerm {
    /// Looks up the basis position of a normal-form monomial; `None` above the cutoff.
    pub fn index_of(&self, m: &FreePermMonomial) -> Option<usize> {
        self.monomial_index.get(m).copied()
    }

    /// Returns the basis position of generator `i`.
    pub fn generator_basis_index(&self, i: usize) -> usize {
        assert!(i < self.generators, "generator index out of range");
        self.monomial_index[&FreePermMonomial::new(i, Vec::new())]
    }

    /// Basis-index product: `None` when the product truncates to zero.
    pub fn mul_basis(&self, i: usize, j: usize) -> Option<usize> {
        self.index_of(&mul_monomials(&self.basis[i], &self.basis[j]))
    }
}

/// Enumerates all normal-form monomials of degree at most `d` and builds the
/// induced Perm presentation; products of combined degree above `d` are zero.
pub fn free_perm_truncated(g: usize, d: usize) -> TruncatedFreePerm {
    assert!(g >= 1 && d >= 1, "need at least one generator and degree one");
    let mut basis = Vec::new();
    for degree in 1..=d {
        for lead in 0..g {
            let mut tail: Vec<usize> = alloc::vec![0; degree - 1];
            loop {
                basis.push(FreePermMonomial { leading: lead, tail: tail.clone() });
                // advance the nondecreasing tail like a multi-combination odometer
                let Some(pos) = (0..tail.len()).rfind(|&p| tail[p] < g - 1) else {
                    break;
                };
                let v = tail[pos] + 1;
                for slot in tail.iter_mut().skip(pos) {
                    *slot = v;
                }
            }
        }
    }
    let monomial_index: BTreeMap<FreePermMonomial, usize> =
        basis.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect();
    let dim = basis.len();
    let mut table = zero_table(dim, dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            if let Some(k) = monomial_index.get(&mul_monomials(&basis[i], &basis[j])) {
                table[i][j][*k] = int(1);
            }
        }
    }
    let names = basis.iter().map(|m| m.label()).collect();
    let presentation = StructurePresentation::single(Kind::Perm, names, table)
        .expect("generated table is well shaped");
    TruncatedFreePerm { generators: g, max_degree: d, basis, monomial_index, presentation }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::validate_presentation;
    use crate::linalg::vec_is_zero;

    #[test]
    fn normal_forms_identify_equal_words() {
        let w1 = Word::prod(Word::prod(Word::gen(0), Word::gen(1)), Word::gen(2));
        let w2 = Word::prod(Word::gen(0), Word::prod(Word::gen(2), Word::gen(1)));
        assert_eq!(normalize_monomial(&w1), normalize_monomial(&w2));
        assert_eq!(normalize_monomial(&w1), FreePermMonomial::new(0, alloc::vec![1, 2]));
        assert_eq!(normalize_monomial(&Word::gen(1)), FreePermMonomial::new(1, Vec::new()));
        let w3 = Word::prod(Word::gen(1), Word::prod(Word::gen(2), Word::gen(0)));
        assert_eq!(normalize_monomial(&w3), FreePermMonomial::new(1, alloc::vec![0, 2]));
    }

    #[test]
    fn basis_sizes_match_the_multiset_count() {
        assert_eq!(free_perm_truncated(3, 3).basis.len(), 30);
        assert_eq!(free_perm_truncated(1, 2).basis.len(), 2);
        assert_eq!(free_perm_truncated(2, 1).basis.len(), 2);
        assert_eq!(free_perm_truncated(2, 2).basis.len(), 6);
        assert_eq!(free_perm_truncated(2, 3).basis.len(), 12);
        assert_eq!(free_perm_truncated(3, 4).basis.len(), 60);
    }

    #[test]
    fn truncation_kills_overflowing_products() {
        let a = free_perm_truncated(1, 2);
        assert_eq!(a.basis[0], FreePermMonomial::new(0, Vec::new()));
        assert_eq!(a.basis[1], FreePermMonomial::new(0, alloc::vec![0]));
        assert_eq!(a.mul_basis(0, 0), Some(1));
        assert_eq!(a.mul_basis(0, 1), None);
        let t = a.presentation.table().unwrap();
        assert!(vec_is_zero(&t[0][1]));

        let b = free_perm_truncated(2, 1);
        let t = b.presentation.table().unwrap();
        assert!(t.iter().flatten().all(|v| vec_is_zero(v)));
    }

    #[test]
    fn generator_positions_lead_the_basis() {
        let a = free_perm_truncated(3, 2);
        for i in 0..3 {
            assert_eq!(a.generator_basis_index(i), i);
        }
        assert_eq!(a.basis[0].label(), "x1");
        assert_eq!(a.basis[3].label(), "x1*x1");
    }

    #[test]
    fn presentations_pass_the_perm_validator() {
        for g in 1..=3 {
            for d in 1..=3 {
                let a = free_perm_truncated(g, d);
                assert!(
                    validate_presentation(&a.presentation).unwrap().is_empty(),
                    "g={g} d={d}"
                );
            }
        }
    }

    #[test]
    fn products_reorder_tails_but_not_leading_generators() {
        let a = free_perm_truncated(2, 3);
        let x1 = a.generator_basis_index(0);
        let x2 = a.generator_basis_index(1);
        let x1x2 = a.mul_basis(x1, x2).unwrap();
        let x2x1 = a.mul_basis(x2, x1).unwrap();
        assert_ne!(x1x2, x2x1);
        // x1*(x2*x1) and (x1*x2)*x1 and (x1*x1)*x2 all share a normal form
        let left = a.mul_basis(a.mul_basis(x1, x2).unwrap(), x1);
        let right = a.mul_basis(x1, a.mul_basis(x2, x1).unwrap());
        let other = a.mul_basis(a.mul_basis(x1, x1).unwrap(), x2);
        assert_eq!(left, right);
        assert_eq!(left, other);
        assert!(left.is_some());
    }
}
