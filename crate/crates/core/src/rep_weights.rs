//! Weight multisets, quasi-symmetry, and the virtual class `[X^v] - [g^v]`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::rat::{dot_int, neg_weight, primitive, rat, Rat, Weight};
use crate::root_datum::GroupDatum;

/// T-weights of a representation, with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMultiset {
    pub group: GroupDatum,
    pub weights: Vec<Weight>,
}

impl WeightMultiset {
    pub fn new(group: GroupDatum, weights: Vec<Weight>) -> Result<Self> {
        for w in &weights {
            group.check_dim(w.len())?;
        }
        Ok(WeightMultiset { group, weights })
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn nonzero(&self) -> Vec<Weight> {
        self.weights.iter().filter(|w| w.iter().any(|&x| x != 0)).cloned().collect()
    }

    /// Sum of the weights on each line through the origin, keyed by primitive direction.
    pub fn line_sums(&self) -> BTreeMap<Weight, Weight> {
        let mut sums: BTreeMap<Weight, Weight> = BTreeMap::new();
        for w in self.nonzero() {
            let (dir, _) = primitive(&w);
            let e = sums.entry(dir).or_insert_with(|| vec![0; w.len()]);
            for (s, x) in e.iter_mut().zip(&w) {
                *s += x;
            }
        }
        sums
    }

    /// Lines whose weights do not sum to zero.
    pub fn unbalanced_lines(&self) -> Vec<(Weight, Weight)> {
        self.line_sums()
            .into_iter()
            .filter(|(_, s)| s.iter().any(|&x| x != 0))
            .collect()
    }

    pub fn is_quasi_symmetric(&self) -> bool {
        self.unbalanced_lines().is_empty()
    }

    pub fn dual_weights(&self) -> WeightMultiset {
        WeightMultiset {
            group: self.group.clone(),
            weights: self.weights.iter().map(|w| neg_weight(w)).collect(),
        }
    }

    /// `rep` together with its dual.
    pub fn symplectic_double(&self) -> WeightMultiset {
        let mut weights = self.weights.clone();
        weights.extend(self.dual_weights().weights);
        WeightMultiset { group: self.group.clone(), weights }
    }

    /// Appends the weights of the adjoint representation: `e_i - e_j` for all `i, j`
    /// in each block (zeros on the diagonal) and one zero per torus coordinate.
    pub fn adjoin_adjoint(&self) -> WeightMultiset {
        let r = self.rank();
        let mut weights = self.weights.clone();
        for b in self.group.blocks() {
            for i in b.clone() {
                for j in b.clone() {
                    let mut w = vec![0; r];
                    w[i] += 1;
                    w[j] -= 1;
                    weights.push(w);
                }
            }
        }
        weights.extend((0..self.group.torus_rank).map(|_| vec![0; r]));
        WeightMultiset { group: self.group.clone(), weights }
    }

    /// Sorted copy, for multiset comparison.
    pub fn sorted(&self) -> Vec<Weight> {
        let mut w = self.weights.clone();
        w.sort();
        w
    }
}

/// `L = [X^v] - [g^v]`: `plus` are the weights of `X^v`, `minus` all roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualClass {
    pub plus: Vec<Weight>,
    pub minus: Vec<Weight>,
}

impl VirtualClass {
    /// Built from user-supplied weights of `X`.
    pub fn of_rep(rep: &WeightMultiset) -> Self {
        VirtualClass { plus: rep.dual_weights().weights, minus: rep.group.roots() }
    }

    /// `<lambda, L^{lambda > 0}>`.
    pub fn eta(&self, lambda: &[i64]) -> Rat {
        let pos = |ws: &[Weight]| -> i64 {
            ws.iter().map(|b| dot_int(lambda, b)).filter(|&x| x > 0).sum()
        };
        rat(pos(&self.plus) - pos(&self.minus))
    }
}

/// Checks that `lambda` has the right length for `group`.
pub fn check_cocharacter(group: &GroupDatum, lambda: &[i64]) -> Result<()> {
    if lambda.len() != group.rank() {
        return Err(Error::Dimension { expected: group.rank(), got: lambda.len() });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ms(group: GroupDatum, w: &[&[i64]]) -> WeightMultiset {
        WeightMultiset::new(group, w.iter().map(|x| x.to_vec()).collect()).unwrap()
    }

    pub fn tsym3() -> WeightMultiset {
        ms(GroupDatum::gl(2), &[&[3, 0], &[2, 1], &[1, 2], &[0, 3]]).symplectic_double()
    }

    #[test]
    fn quasi_symmetry() {
        let t2 = GroupDatum::torus(2);
        assert!(ms(t2.clone(), &[&[1, 0], &[-1, 0]]).is_quasi_symmetric());
        assert!(!ms(t2, &[&[1, 0]]).is_quasi_symmetric());
        assert!(ms(GroupDatum::torus(1), &[&[2], &[-1], &[-1]]).is_quasi_symmetric());
        assert!(tsym3().is_quasi_symmetric());
    }

    #[test]
    fn duals_and_doubles() {
        let t2 = GroupDatum::torus(2);
        assert_eq!(ms(t2.clone(), &[&[3, 0], &[2, 1]]).dual_weights().weights, vec![vec![-3, 0], vec![-2, -1]]);
        let h1 = ms(GroupDatum::gl(1), &[&[0], &[0], &[1], &[-1]]);
        assert_eq!(h1.dual_weights().sorted(), h1.sorted());
        assert_eq!(ms(t2, &[&[1, 0]]).symplectic_double().weights, vec![vec![1, 0], vec![-1, 0]]);
        let g2 = ms(GroupDatum::gl(2), &[]).adjoin_adjoint();
        assert_eq!(g2.nonzero(), vec![vec![1, -1], vec![-1, 1]]);
        assert_eq!(g2.weights.len(), 4);
    }

    #[test]
    fn eta_examples() {
        let vc = VirtualClass { plus: vec![vec![-2], vec![1], vec![1]], minus: vec![] };
        assert_eq!(vc.eta(&[1]), rat(2));
        let vc = VirtualClass::of_rep(&tsym3());
        assert_eq!(vc.eta(&[1, 0]), rat(5));
        assert_eq!(vc.eta(&[1, 1]), rat(12));
        assert_eq!(vc.eta(&[2, -1]), rat(9));
    }

    #[test]
    fn non_self_dual_uses_negation() {
        // X = {2, -1, -1} on a rank-1 torus: X^v = {-2, 1, 1}
        let rep = ms(GroupDatum::torus(1), &[&[2], &[-1], &[-1]]);
        let vc = VirtualClass::of_rep(&rep);
        assert_eq!(vc.plus, vec![vec![-2], vec![1], vec![1]]);
        assert_eq!(vc.eta(&[1]), rat(2));
        assert_eq!(vc.eta(&[-1]), rat(2));
    }

    proptest! {
        #[test]
        fn doubling_is_quasi_symmetric(ws in proptest::collection::vec(proptest::collection::vec(-3i64..4, 3), 0..6)) {
            let rep = WeightMultiset::new(GroupDatum::torus(3), ws).unwrap();
            prop_assert!(rep.symplectic_double().is_quasi_symmetric());
        }

        #[test]
        fn eta_weyl_invariant(a in -3i64..4, b in -3i64..4) {
            let vc = VirtualClass::of_rep(&tsym3());
            prop_assert_eq!(vc.eta(&[a, b]), vc.eta(&[b, a]));
            prop_assert_eq!(vc.eta(&[a, b]), vc.eta(&[-a, -b]));
        }
    }
}
