//! Exhaustive reference enumeration straight from the definitions.
//!
//! Every semigroup with Frobenius number `F` is built by deciding positions
//! `F − 1, …, 1` from the top down, pruning as soon as a new member `i` has a
//! sum `i + j` (with `j ≥ i` already a member) that was made a gap. Marking the
//! remaining positions as gaps always completes a partial assignment, so no
//! branch is wasted. Special gaps are recomputed from the raw definition.
//!
//! Nothing here calls into the tree or join/minimals code.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::gap_vector::GapVector;
use crate::semigroup::NumericalSemigroup;

pub const DEFAULT_ORACLE_MAX_FROBENIUS: u32 = 22;
pub const DEFAULT_CLOSURE_MAX_FROBENIUS: u32 = 14;

/// Top levels of the search that fork onto the thread pool.
const SPLIT_LEVELS: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    pub max_frobenius: u32,
    pub closure_max_frobenius: u32,
    pub execution: Execution,
}

impl Default for Oracle {
    fn default() -> Self {
        Self {
            max_frobenius: DEFAULT_ORACLE_MAX_FROBENIUS,
            closure_max_frobenius: DEFAULT_CLOSURE_MAX_FROBENIUS,
            execution: Execution::default(),
        }
    }
}

fn check(frobenius: u32, limit: u32) -> Result<()> {
    if frobenius == 0 {
        Err(Error::ZeroFrobenius)
    } else if frobenius > limit {
        Err(Error::LimitExceeded {
            requested: frobenius,
            limit,
        })
    } else {
        Ok(())
    }
}

/// E(S) by the definition: gaps `x` with `2x ∈ S` and `x + s ∈ S` for every
/// nonzero member `s ≤ F`.
pub fn definitional_special_gaps(s: &NumericalSemigroup) -> Vec<u32> {
    let f = s.frobenius();
    s.gaps()
        .filter(|&x| s.contains(2 * x))
        .filter(|&x| {
            (1..=f)
                .filter(|&m| s.contains(m))
                .all(|m| s.contains(x + m))
        })
        .collect()
}

fn search(exec: Execution, members: &mut Vec<bool>, i: u32, f: u32, out: &mut Vec<GapVector>) {
    if i == 0 {
        let gaps = (1..=f).filter(|&k| !members[k as usize]);
        out.push(GapVector::from_gaps(f, gaps).expect("positions within 1..=F"));
        return;
    }
    let can_be_member = i > f - i
        || (i..=f - i).all(|j| (j != i && !members[j as usize]) || members[(i + j) as usize]);

    if f - i <= SPLIT_LEVELS && exec != Execution::Sequential && can_be_member {
        let mut with_member = members.clone();
        with_member[i as usize] = true;
        let (mut left, right) = exec.join(
            || {
                let mut m = members.clone();
                let mut v = Vec::new();
                search(exec, &mut m, i - 1, f, &mut v);
                v
            },
            move || {
                let mut v = Vec::new();
                search(exec, &mut with_member, i - 1, f, &mut v);
                v
            },
        );
        left.extend(right);
        out.extend(left);
        return;
    }

    search(exec, members, i - 1, f, out);
    if can_be_member {
        members[i as usize] = true;
        search(exec, members, i - 1, f, out);
        members[i as usize] = false;
    }
}

impl Oracle {
    /// S(F), every semigroup with Frobenius number `F`, in canonical order.
    pub fn all_semigroups(&self, frobenius: u32) -> Result<Vec<NumericalSemigroup>> {
        check(frobenius, self.max_frobenius)?;
        let f = frobenius;
        // index 0 and F are fixed: 0 is a member, F a gap
        let mut members = vec![false; f as usize + 1];
        members[0] = true;
        let mut vectors = Vec::new();
        search(self.execution, &mut members, f - 1, f, &mut vectors);
        let mut all = vectors
            .into_iter()
            .map(NumericalSemigroup::from_vector)
            .collect::<Result<Vec<_>>>()?;
        all.sort_unstable();
        Ok(all)
    }

    fn with_special_gap_count<P>(&self, frobenius: u32, keep: P) -> Result<Vec<NumericalSemigroup>>
    where
        P: Fn(usize) -> bool + Sync + Send,
    {
        let all = self.all_semigroups(frobenius)?;
        Ok(self
            .execution
            .filter(&all, |s| keep(definitional_special_gaps(s).len())))
    }

    /// Inclusion-maximal elements of S(F).
    pub fn maximal(&self, frobenius: u32) -> Result<Vec<NumericalSemigroup>> {
        let all = self.all_semigroups(frobenius)?;
        Ok(self.execution.filter(&all, |s| {
            !all.iter()
                .any(|t| t != s && t.gap_vector().is_below(s.gap_vector()).unwrap())
        }))
    }

    /// I(F) as the semigroups with at most one special gap, cross-checked
    /// against the inclusion-maximal elements of S(F).
    pub fn irreducible(&self, frobenius: u32) -> Result<Vec<NumericalSemigroup>> {
        let by_count = self.with_special_gap_count(frobenius, |k| k <= 1)?;
        if by_count != self.maximal(frobenius)? {
            return Err(Error::OracleInconsistent(frobenius));
        }
        Ok(by_count)
    }

    pub fn atomic(&self, frobenius: u32) -> Result<Vec<NumericalSemigroup>> {
        self.with_special_gap_count(frobenius, |k| k <= 2)
    }

    /// ANI members of S(F) keyed by their special gap other than `F`. Only
    /// non-empty fibres appear.
    pub fn ani_levels(&self, frobenius: u32) -> Result<BTreeMap<u32, Vec<NumericalSemigroup>>> {
        let mut levels: BTreeMap<u32, Vec<NumericalSemigroup>> = BTreeMap::new();
        for s in self.all_semigroups(frobenius)? {
            let e = definitional_special_gaps(&s);
            if e.len() == 2 {
                debug_assert_eq!(e[1], frobenius);
                levels.entry(e[0]).or_default().push(s);
            }
        }
        Ok(levels)
    }

    /// Whether every semigroup in S(F) is the intersection of the atomic
    /// semigroups in S(F) that contain it.
    pub fn atomic_intersection_closure(&self, frobenius: u32) -> Result<bool> {
        check(frobenius, self.closure_max_frobenius)?;
        let all = self.all_semigroups(frobenius)?;
        let atoms: Vec<&GapVector> = all
            .iter()
            .filter(|s| definitional_special_gaps(s).len() <= 2)
            .map(|s| s.gap_vector())
            .collect();
        let failures = self.execution.filter(&all, |s| {
            let target = s.gap_vector();
            let meet = atoms
                .iter()
                .filter(|a| a.is_below(target).unwrap())
                .try_fold(None::<GapVector>, |acc, a| {
                    Ok::<_, Error>(Some(match acc {
                        None => (*a).clone(),
                        Some(m) => m.join(a)?,
                    }))
                })
                .unwrap();
            meet.as_ref() != Some(target)
        });
        Ok(failures.is_empty())
    }
}

pub fn all_semigroups(frobenius: u32) -> Result<Vec<NumericalSemigroup>> {
    Oracle::default().all_semigroups(frobenius)
}

pub fn oracle_irreducible(frobenius: u32) -> Result<Vec<NumericalSemigroup>> {
    Oracle::default().irreducible(frobenius)
}

pub fn oracle_atomic(frobenius: u32) -> Result<Vec<NumericalSemigroup>> {
    Oracle::default().atomic(frobenius)
}

pub fn oracle_ani_levels(frobenius: u32) -> Result<BTreeMap<u32, Vec<NumericalSemigroup>>> {
    Oracle::default().ani_levels(frobenius)
}

pub fn oracle_atomic_intersection_closure(frobenius: u32) -> Result<bool> {
    Oracle::default().atomic_intersection_closure(frobenius)
}
