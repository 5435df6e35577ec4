//! Atomic numerical semigroups with a fixed Frobenius number.
//!
//! A(F) splits into I(F) and the ANI-semigroups N(F), those with exactly two
//! special gaps `{l, F}`. For each admissible level `l`, N(F, l) is obtained
//! from I(l) and I(F) by joining gap vectors, keeping the minimal joins and
//! discarding any that lie above an element of I(F) missing `l`.

use std::collections::BTreeMap;

use crate::enumerator::Enumerator;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::gap_vector::GapVector;
use crate::semigroup::NumericalSemigroup;

/// Whether some semigroup has special gaps exactly `{g1, g2}`.
///
/// Requires `g2/2 < g1 < g2` and either `(g2 − g1) | g2` or `(2g1 − g2) ∤ g2`.
pub fn ani_pair_feasible(g1: u32, g2: u32) -> bool {
    if g1 == 0 || g1 >= g2 || 2 * g1 <= g2 {
        return false;
    }
    g2.is_multiple_of(g2 - g1) || !g2.is_multiple_of(2 * g1 - g2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelSet {
    pub frobenius: u32,
    pub levels: Vec<u32>,
}

/// L(F): the possible second special gaps of an ANI-semigroup with Frobenius
/// number `F`.
pub fn levels(frobenius: u32) -> LevelSet {
    LevelSet {
        frobenius,
        levels: (frobenius / 2 + 1..frobenius)
            .filter(|&l| ani_pair_feasible(l, frobenius))
            .collect(),
    }
}

pub fn join(a: &GapVector, b: &GapVector) -> Result<GapVector> {
    a.join(b)
}

pub fn pad(v: &GapVector, n: u32) -> GapVector {
    v.padded(n)
}

/// Minimal elements under the component-wise order, deduplicated and sorted.
pub fn minimals(vs: &[GapVector]) -> Result<Vec<GapVector>> {
    if let Some(first) = vs.first() {
        if let Some(bad) = vs.iter().find(|v| v.len() != first.len()) {
            return Err(Error::LengthMismatch(first.len(), bad.len()));
        }
    }
    Ok(minimal_elements(Execution::Sequential, vs.to_vec()))
}

fn minimal_elements(exec: Execution, mut vs: Vec<GapVector>) -> Vec<GapVector> {
    vs.sort_unstable();
    vs.dedup();
    // after dedup, u ≤ v with u ≠ v means u is strictly below v
    exec.filter(&vs, |v| !vs.iter().any(|u| u != v && u.dominated_by(v)))
}

/// Intermediate sets of one ANI level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AniStages {
    /// I(g1), padded with members up to length g2.
    pub a: Vec<GapVector>,
    /// Elements of I(g2) containing g1.
    pub b0: Vec<GapVector>,
    /// Elements of I(g2) missing g1.
    pub b1: Vec<GapVector>,
    /// Minimal joins of A with B₀.
    pub c: Vec<GapVector>,
}

/// N(g2, g1) together with, optionally, the stages that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AniLevelResult {
    pub g1: u32,
    pub g2: u32,
    pub stages: Option<AniStages>,
    pub result: Vec<NumericalSemigroup>,
}

/// Counts and listings for one Frobenius number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationReport {
    pub frobenius: u32,
    pub irreducible: Vec<NumericalSemigroup>,
    /// N(F, l) for every `l` in L(F), including empty fibres.
    pub ani_levels: BTreeMap<u32, Vec<NumericalSemigroup>>,
}

impl EnumerationReport {
    /// N(F) in canonical order.
    pub fn ani(&self) -> Vec<NumericalSemigroup> {
        let mut all: Vec<_> = self.ani_levels.values().flatten().cloned().collect();
        all.sort_unstable();
        all
    }

    /// A(F) in canonical order.
    pub fn atomic(&self) -> Vec<NumericalSemigroup> {
        let mut all = self.ani();
        all.extend(self.irreducible.iter().cloned());
        all.sort_unstable();
        all
    }

    pub fn irreducible_count(&self) -> usize {
        self.irreducible.len()
    }

    pub fn ani_count(&self) -> usize {
        self.ani_levels.values().map(Vec::len).sum()
    }

    pub fn atomic_count(&self) -> usize {
        self.irreducible_count() + self.ani_count()
    }
}

impl Enumerator {
    /// N(g2, g1), the semigroups with special gaps exactly `{g1, g2}`.
    pub fn ani_level(&self, g1: u32, g2: u32) -> Result<AniLevelResult> {
        self.check(g2)?;
        if !ani_pair_feasible(g1, g2) {
            return Err(Error::InfeasiblePair { g1, g2 });
        }
        let upper = self.irreducible(g2)?;
        self.ani_level_from(g1, &upper)
    }

    /// Same as [`Enumerator::ani_level`] with I(g2) already computed.
    fn ani_level_from(&self, g1: u32, upper: &[NumericalSemigroup]) -> Result<AniLevelResult> {
        let g2 = upper[0].frobenius();
        let exec = self.execution;

        let a: Vec<GapVector> = self
            .irreducible(g1)?
            .iter()
            .map(|s| s.gap_vector().padded(g2))
            .collect();
        let (b1, b0): (Vec<GapVector>, Vec<GapVector>) = upper
            .iter()
            .map(|s| s.gap_vector().clone())
            .partition(|v| v.get(g1));

        let mut joins = exec.flat_map(&a, |x| {
            let mut row: Vec<GapVector> = b0.iter().map(|y| x.join(y).unwrap()).collect();
            row.sort_unstable();
            row.dedup();
            row
        });
        joins.sort_unstable();
        joins.dedup();
        let c = minimal_elements(exec, joins);

        let d: Vec<GapVector> = exec.filter(&c, |v| !b1.iter().any(|b| b.dominated_by(v)));
        let result = d
            .into_iter()
            .map(NumericalSemigroup::from_vector)
            .collect::<Result<Vec<_>>>()?;

        Ok(AniLevelResult {
            g1,
            g2,
            stages: self.keep_stages.then(|| AniStages { a, b0, b1, c }),
            result,
        })
    }

    /// I(F) and N(F, l) for every level, with I(F) computed once.
    pub fn report(&self, frobenius: u32) -> Result<EnumerationReport> {
        self.check(frobenius)?;
        let irreducible = self.irreducible(frobenius)?;
        let lv = levels(frobenius).levels;
        let per_level = self
            .execution
            .map(&lv, |&l| self.ani_level_from(l, &irreducible));
        let mut ani_levels = BTreeMap::new();
        for r in per_level {
            let r = r?;
            ani_levels.insert(r.g1, r.result);
        }
        Ok(EnumerationReport {
            frobenius,
            irreducible,
            ani_levels,
        })
    }

    pub fn atomic(&self, frobenius: u32) -> Result<Vec<NumericalSemigroup>> {
        Ok(self.report(frobenius)?.atomic())
    }

    pub fn ani(&self, frobenius: u32) -> Result<Vec<NumericalSemigroup>> {
        Ok(self.report(frobenius)?.ani())
    }
}

/// N(g2, g1) in canonical order.
pub fn ani_semigroups(g1: u32, g2: u32) -> Result<Vec<NumericalSemigroup>> {
    Ok(Enumerator::default().ani_level(g1, g2)?.result)
}

/// A(F) in canonical order.
pub fn atomic_semigroups(frobenius: u32) -> Result<Vec<NumericalSemigroup>> {
    Enumerator::default().atomic(frobenius)
}

/// N(F) in canonical order.
pub fn ani_with_frobenius(frobenius: u32) -> Result<Vec<NumericalSemigroup>> {
    Enumerator::default().ani(frobenius)
}
