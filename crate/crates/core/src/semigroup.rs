//! Numerical semigroups stored by their gap vector, with the per-semigroup
//! invariants (multiplicity, minimal generators, pseudo-Frobenius numbers,
//! special gaps) and the irreducible / atomic classification.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::gap_vector::GapVector;

/// A numerical semigroup other than ℕ.
///
/// The gap vector has length `F`, the Frobenius number, and its last bit is set.
/// Every integer above `F` is a member, as is 0. Multiplicity and minimal
/// generators are computed once on construction.
#[derive(Clone)]
pub struct NumericalSemigroup {
    gaps: GapVector,
    multiplicity: u32,
    generators: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParityClass {
    Symmetric,
    PseudoSymmetric,
    None,
}

/// Classification by the number of special gaps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClassLabel {
    pub special_gap_count: u32,
    pub is_irreducible: bool,
    pub is_atomic: bool,
    pub is_ani: bool,
    pub parity_class: ParityClass,
}

impl ClassLabel {
    fn new(special_gap_count: u32, frobenius: u32) -> Self {
        let is_irreducible = special_gap_count <= 1;
        let parity_class = match (is_irreducible, frobenius % 2) {
            (true, 1) => ParityClass::Symmetric,
            (true, _) => ParityClass::PseudoSymmetric,
            (false, _) => ParityClass::None,
        };
        Self {
            special_gap_count,
            is_irreducible,
            is_atomic: special_gap_count <= 2,
            is_ani: special_gap_count == 2,
            parity_class,
        }
    }
}

/// Returns the first pair of members `a ≤ b` whose sum is a gap, if any.
fn closure_violation(v: &GapVector) -> Option<(u32, u32)> {
    let f = v.len();
    for a in (1..=f / 2).filter(|&a| !v.get(a)) {
        for b in (a..=f - a).filter(|&b| !v.get(b)) {
            if v.get(a + b) {
                return Some((a, b));
            }
        }
    }
    None
}

pub(crate) fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl NumericalSemigroup {
    /// Semigroup whose gap set is exactly `gap_set`.
    pub fn from_gaps<I: IntoIterator<Item = u32>>(gap_set: I) -> Result<Self> {
        let gaps: Vec<u32> = gap_set.into_iter().collect();
        if gaps.contains(&0) {
            return Err(Error::ZeroGap);
        }
        let f = gaps.iter().copied().max().ok_or(Error::EmptyGapSet)?;
        Self::from_vector(GapVector::from_gaps(f, gaps)?)
    }

    /// Validates a raw vector: its last position must be a gap and its members
    /// must be closed under addition.
    pub fn from_vector(gaps: GapVector) -> Result<Self> {
        if !gaps.get(gaps.len()) {
            return Err(Error::LastBitNotGap);
        }
        if let Some((a, b)) = closure_violation(&gaps) {
            return Err(Error::NotClosed { a, b });
        }
        Ok(Self::from_closed_vector(gaps))
    }

    /// Skips validation; callers guarantee closure and a final gap.
    pub(crate) fn from_closed_vector(gaps: GapVector) -> Self {
        debug_assert!(gaps.get(gaps.len()));
        debug_assert!(closure_violation(&gaps).is_none(), "{gaps} is not closed");
        let f = gaps.len();
        let multiplicity = (1..=f).find(|&i| !gaps.get(i)).unwrap_or(f + 1);
        let mut s = Self {
            gaps,
            multiplicity,
            generators: Vec::new(),
        };
        s.generators = s.compute_generators();
        s
    }

    /// The semigroup ⟨gens⟩, found by an additive sieve that stops after a run of
    /// `min(gens)` consecutive members.
    pub fn from_generators<I: IntoIterator<Item = u32>>(gens: I) -> Result<Self> {
        let mut gens: Vec<u32> = gens.into_iter().collect();
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let d = gens.iter().fold(0, |d, &g| gcd(d, g));
        if d != 1 {
            return Err(Error::GcdNotOne(d));
        }
        gens.retain(|&g| g != 0);
        gens.sort_unstable();
        gens.dedup();
        let m = gens[0];
        if m == 1 {
            return Err(Error::EmptyGapSet);
        }

        let mut member = vec![true];
        let mut run = 0;
        let mut last_gap = 0;
        let mut n = 0usize;
        while run < m {
            n += 1;
            let hit = gens
                .iter()
                .take_while(|&&g| g as usize <= n)
                .any(|&g| member[n - g as usize]);
            member.push(hit);
            if hit {
                run += 1;
            } else {
                run = 0;
                last_gap = n as u32;
            }
        }
        let gaps = (1..=last_gap).filter(|&i| !member[i as usize]);
        Ok(Self::from_closed_vector(GapVector::from_gaps(
            last_gap, gaps,
        )?))
    }

    #[inline]
    pub fn frobenius(&self) -> u32 {
        self.gaps.len()
    }

    #[inline]
    pub fn gap_vector(&self) -> &GapVector {
        &self.gaps
    }

    pub fn gaps(&self) -> impl Iterator<Item = u32> + '_ {
        self.gaps.gaps()
    }

    /// Number of gaps.
    pub fn genus(&self) -> u32 {
        self.gaps.count_gaps()
    }

    #[inline]
    pub fn contains(&self, n: u32) -> bool {
        n == 0 || n > self.frobenius() || !self.gaps.get(n)
    }

    #[inline]
    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    /// Minimal generators, ascending. All of them are at most `F + m`.
    #[inline]
    pub fn minimal_generators(&self) -> &[u32] {
        &self.generators
    }

    fn compute_generators(&self) -> Vec<u32> {
        let m = self.multiplicity;
        (m..=self.frobenius() + m)
            .filter(|&s| self.contains(s))
            .filter(|&s| !(m..=s / 2).any(|a| self.contains(a) && self.contains(s - a)))
            .collect()
    }

    /// PF(S): gaps `x` with `x + s ∈ S` for every nonzero member `s`.
    /// Checking the minimal generators is enough.
    pub fn pseudo_frobenius(&self) -> Vec<u32> {
        self.gaps()
            .filter(|&x| self.generators.iter().all(|&g| self.contains(x + g)))
            .collect()
    }

    /// Pseudo-Frobenius numbers above `F/2`.
    pub fn big_pseudo_frobenius(&self) -> Vec<u32> {
        let f = self.frobenius();
        self.pseudo_frobenius()
            .into_iter()
            .filter(|&x| 2 * x > f)
            .collect()
    }

    /// E(S): pseudo-Frobenius numbers whose double is a member. These are
    /// exactly the gaps `x` for which `S ∪ {x}` is again a semigroup.
    pub fn special_gaps(&self) -> Vec<u32> {
        self.pseudo_frobenius()
            .into_iter()
            .filter(|&x| self.contains(2 * x))
            .collect()
    }

    /// `S ∪ {x}` for a special gap `x`. Adjoining the only gap would give ℕ and
    /// is rejected with [`Error::EmptyGapSet`].
    pub fn adjoin(&self, x: u32) -> Result<Self> {
        if self.contains(x) {
            return Err(Error::NotAGap(x));
        }
        if !self.special_gaps().contains(&x) {
            return Err(Error::NotSpecialGap(x));
        }
        let mut v = self.gaps.clone();
        v.set(x, false);
        let f = v.last_gap().ok_or(Error::EmptyGapSet)?;
        Ok(Self::from_closed_vector(v.truncated(f)))
    }

    pub fn classify(&self) -> ClassLabel {
        ClassLabel::new(self.special_gaps().len() as u32, self.frobenius())
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        other.gaps().all(|g| !self.contains(g))
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.gaps == other.gaps
    }
}

impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.gaps.hash(state);
    }
}

/// Canonical order: the bit strings, lexicographically.
impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.gaps.cmp(&other.gaps)
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Generator form, e.g. `<5,7,9,13>`.
impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [{}]", self.gaps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(g: &[u32]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g.iter().copied()).unwrap()
    }

    #[test]
    fn from_gaps_examples() {
        let s = NumericalSemigroup::from_gaps([1, 2, 3, 4, 6, 8, 11]).unwrap();
        assert_eq!(s.frobenius(), 11);
        assert_eq!(s.minimal_generators(), [5, 7, 9, 13]);

        let s = NumericalSemigroup::from_gaps([1]).unwrap();
        assert_eq!(s, gens(&[2, 3]));
        assert_eq!(s.frobenius(), 1);

        assert_eq!(
            NumericalSemigroup::from_gaps([1, 3, 4]),
            Err(Error::NotClosed { a: 2, b: 2 })
        );
        assert_eq!(
            NumericalSemigroup::from_gaps(std::iter::empty()),
            Err(Error::EmptyGapSet)
        );
        assert_eq!(NumericalSemigroup::from_gaps([0, 1]), Err(Error::ZeroGap));
    }

    #[test]
    fn from_generators_examples() {
        let s = gens(&[5, 7, 9, 13]);
        assert_eq!(s.gaps().collect::<Vec<_>>(), [1, 2, 3, 4, 6, 8, 11]);
        let s = gens(&[2, 13]);
        assert_eq!(s.gaps().collect::<Vec<_>>(), [1, 3, 5, 7, 9, 11]);
        assert_eq!(
            NumericalSemigroup::from_generators([4, 6]),
            Err(Error::GcdNotOne(2))
        );
        assert_eq!(
            NumericalSemigroup::from_generators([]),
            Err(Error::EmptyGenerators)
        );
        assert_eq!(
            NumericalSemigroup::from_generators([1, 5]),
            Err(Error::EmptyGapSet)
        );
        // redundant generators are dropped from msg
        assert_eq!(gens(&[3, 5, 6, 8, 10]).minimal_generators(), [3, 5]);
    }

    #[test]
    fn from_vector_rejects_member_at_end() {
        let v: GapVector = "1110".parse().unwrap();
        assert_eq!(
            NumericalSemigroup::from_vector(v),
            Err(Error::LastBitNotGap)
        );
    }

    #[test]
    fn contains_examples() {
        let s = gens(&[5, 7, 9, 13]);
        assert!(!s.contains(8));
        assert!(s.contains(0));
        assert!(s.contains(12));
        assert!(s.contains(1000));
    }

    #[test]
    fn generators_and_multiplicity() {
        let s = NumericalSemigroup::from_gaps(1..=5).unwrap();
        assert_eq!(s.minimal_generators(), [6, 7, 8, 9, 10, 11]);
        assert_eq!(s.multiplicity(), 6);
        let s = NumericalSemigroup::from_gaps([1, 3, 5, 7, 9, 11]).unwrap();
        assert_eq!(s.minimal_generators(), [2, 13]);
        assert_eq!(s.multiplicity(), 2);
        assert_eq!(gens(&[5, 7, 9, 13]).multiplicity(), 5);
    }

    #[test]
    fn pseudo_frobenius_examples() {
        assert_eq!(gens(&[4, 5]).pseudo_frobenius(), [11]);
        assert_eq!(gens(&[2, 13]).pseudo_frobenius(), [11]);
        // 6 + 5 = 11 is a gap, so 6 is not pseudo-Frobenius.
        assert_eq!(gens(&[5, 7, 9, 13]).pseudo_frobenius(), [8, 11]);
    }

    #[test]
    fn big_pseudo_frobenius_examples() {
        assert_eq!(gens(&[5, 7, 9, 13]).big_pseudo_frobenius(), [8, 11]);
        assert_eq!(gens(&[4, 5]).big_pseudo_frobenius(), [11]);
        assert_eq!(gens(&[2, 3]).big_pseudo_frobenius(), [1]);
    }

    #[test]
    fn special_gaps_examples() {
        let s = gens(&[5, 7, 9, 13]);
        assert_eq!(s.special_gaps(), [8, 11]);
        assert!(!s.special_gaps().contains(&6));
        assert_eq!(gens(&[2, 13]).special_gaps(), [11]);
    }

    #[test]
    fn adjoin_examples() {
        let s = gens(&[5, 7, 9, 13]);
        let t = s.adjoin(8).unwrap();
        assert_eq!(t.gaps().collect::<Vec<_>>(), [1, 2, 3, 4, 6, 11]);
        assert_eq!(s.adjoin(4), Err(Error::NotSpecialGap(4)));
        assert_eq!(s.adjoin(5), Err(Error::NotAGap(5)));
        assert_eq!(gens(&[2, 3]).adjoin(1), Err(Error::EmptyGapSet));
        // adjoining the Frobenius number renormalises the length
        let u = s.adjoin(11).unwrap();
        assert_eq!(u.frobenius(), 8);
        assert_eq!(u.gaps().collect::<Vec<_>>(), [1, 2, 3, 4, 6, 8]);
    }

    #[test]
    fn classify_examples() {
        let c = gens(&[5, 7, 9, 13]).classify();
        assert!(c.is_ani && c.is_atomic && !c.is_irreducible);
        assert_eq!(c.special_gap_count, 2);
        assert_eq!(c.parity_class, ParityClass::None);

        let c = gens(&[2, 13]).classify();
        assert!(c.is_irreducible && c.is_atomic && !c.is_ani);
        assert_eq!(c.parity_class, ParityClass::Symmetric);

        assert!(gens(&[6, 7, 8, 10]).classify().is_ani);
        assert_eq!(
            gens(&[3, 5, 7]).classify().parity_class,
            ParityClass::PseudoSymmetric
        );
    }

    #[test]
    fn display_and_subset() {
        let s = gens(&[5, 7, 9, 13]);
        assert_eq!(s.to_string(), "<5,7,9,13>");
        assert_eq!(s.gap_vector().to_string(), "11110101001");
        assert!(s.is_subset_of(&s.adjoin(8).unwrap()));
        assert!(!s.adjoin(8).unwrap().is_subset_of(&s));
        assert!(gens(&[4, 5]).is_subset_of(&gens(&[2, 3])));
    }
}
