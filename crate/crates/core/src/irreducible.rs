//! I(F): the irreducible numerical semigroups with Frobenius number `F`.
//!
//! They form a rooted tree. The root is the semigroup whose minimal generators
//! all exceed `F/2`; a child replaces a large minimal generator `x` by `F − x`,
//! and the parent of a non-root node swaps its multiplicity `m` for `F − m`.
//! Each node is reached exactly once, so the traversal needs no dedup table.

use crate::enumerator::Enumerator;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::gap_vector::GapVector;
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub semigroup: NumericalSemigroup,
    pub depth: u32,
    /// `(x, F − x)`: the generator removed from the parent and the integer added.
    pub parent_edge: Option<(u32, u32)>,
}

/// The root of the tree: `{0, ⌊F/2⌋ + 1, →} \ {F}`.
pub fn canonical_irreducible(frobenius: u32) -> Result<NumericalSemigroup> {
    if frobenius == 0 {
        return Err(Error::ZeroFrobenius);
    }
    let gaps = (1..=frobenius / 2).chain(std::iter::once(frobenius));
    Ok(NumericalSemigroup::from_closed_vector(
        GapVector::from_gaps(frobenius, gaps)?,
    ))
}

/// Children of `s` in the tree of I(F).
pub fn children(s: &NumericalSemigroup, frobenius: u32) -> Result<Vec<NumericalSemigroup>> {
    if s.frobenius() != frobenius || s.special_gaps().len() > 1 {
        return Err(Error::NotIrreducible(frobenius));
    }
    Ok(child_edges(s).into_iter().map(|(_, c)| c).collect())
}

fn child_edges(s: &NumericalSemigroup) -> Vec<(u32, NumericalSemigroup)> {
    let f = s.frobenius();
    let m = s.multiplicity();
    s.minimal_generators()
        .iter()
        .copied()
        .filter(|&x| {
            2 * x > f
                && x < f
                && !s.contains(2 * x - f)
                && 3 * x != 2 * f
                && 4 * x != 3 * f
                && f - x < m
        })
        .map(|x| {
            let mut v = s.gap_vector().clone();
            v.set(x, true);
            v.set(f - x, false);
            (x, NumericalSemigroup::from_closed_vector(v))
        })
        .collect()
}

/// Parent of `s` in the tree of I(F), or `None` at the root (or when `s` does
/// not have Frobenius number `F`).
pub fn parent(s: &NumericalSemigroup, frobenius: u32) -> Option<NumericalSemigroup> {
    let m = s.multiplicity();
    if s.frobenius() != frobenius || 2 * m >= frobenius {
        return None;
    }
    let mut v = s.gap_vector().clone();
    v.set(m, true);
    v.set(frobenius - m, false);
    Some(NumericalSemigroup::from_closed_vector(v))
}

fn explore(exec: Execution, node: TreeNode) -> Vec<TreeNode> {
    let expand = |n: &TreeNode| -> Vec<TreeNode> {
        let f = n.semigroup.frobenius();
        child_edges(&n.semigroup)
            .into_iter()
            .map(|(x, c)| TreeNode {
                semigroup: c,
                depth: n.depth + 1,
                parent_edge: Some((x, f - x)),
            })
            .collect()
    };
    match exec {
        Execution::Sequential => {
            let mut out = Vec::new();
            let mut stack = vec![node];
            while let Some(n) = stack.pop() {
                stack.extend(expand(&n));
                out.push(n);
            }
            out
        }
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            let kids = expand(&node);
            let mut out = exec.flat_map(&kids, |k| explore(exec, k.clone()));
            out.push(node);
            out
        }
    }
}

impl Enumerator {
    /// Every node of the tree, sorted by depth and then canonically.
    pub fn irreducible_tree(&self, frobenius: u32) -> Result<Vec<TreeNode>> {
        self.check(frobenius)?;
        let root = TreeNode {
            semigroup: canonical_irreducible(frobenius)?,
            depth: 0,
            parent_edge: None,
        };
        let mut nodes = explore(self.execution, root);
        nodes.sort_by(|a, b| (a.depth, &a.semigroup).cmp(&(b.depth, &b.semigroup)));
        Ok(nodes)
    }

    /// I(F) in canonical order.
    pub fn irreducible(&self, frobenius: u32) -> Result<Vec<NumericalSemigroup>> {
        let mut all: Vec<_> = self
            .irreducible_tree(frobenius)?
            .into_iter()
            .map(|n| n.semigroup)
            .collect();
        all.sort_unstable();
        Ok(all)
    }
}

pub fn enumerate_irreducible(frobenius: u32) -> Result<Vec<NumericalSemigroup>> {
    Enumerator::default().irreducible(frobenius)
}

pub fn irreducible_tree(frobenius: u32) -> Result<Vec<TreeNode>> {
    Enumerator::default().irreducible_tree(frobenius)
}
