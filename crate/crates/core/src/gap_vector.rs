//! Fixed-length 0/1 vectors over the positions `1..=n`.
//!
//! Position `i` holds `1` when the integer `i` is a gap (not in the semigroup)
//! and `0` when it is a member. All public indices are 1-based; storage is a
//! little-endian array of 64-bit words with bit `i - 1` standing for position `i`.
//! Bits above `len` are always zero.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::{Error, Result};

type Words = SmallVec<[u64; 2]>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GapVector {
    len: u32,
    words: Words,
}

#[inline]
fn word_count(len: u32) -> usize {
    (len as usize).div_ceil(64)
}

#[inline]
fn locate(i: u32) -> (usize, u32) {
    let k = i - 1;
    ((k / 64) as usize, k % 64)
}

impl GapVector {
    /// The all-members vector of length `len`.
    ///
    /// Panics if `len` is zero.
    pub fn zeros(len: u32) -> Self {
        assert!(len >= 1, "gap vectors have length at least 1");
        Self {
            len,
            words: SmallVec::from_elem(0, word_count(len)),
        }
    }

    /// Builds a vector of length `len` whose `1` positions are exactly `gaps`.
    ///
    /// Fails with [`Error::ZeroGap`] for a 0 entry and with
    /// [`Error::LengthMismatch`] for an entry past `len`.
    pub fn from_gaps<I: IntoIterator<Item = u32>>(len: u32, gaps: I) -> Result<Self> {
        let mut v = Self::zeros(len);
        for g in gaps {
            if g == 0 {
                return Err(Error::ZeroGap);
            }
            if g > len {
                return Err(Error::LengthMismatch(g, len));
            }
            v.set(g, true);
        }
        Ok(v)
    }

    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::Parse(String::new()));
        }
        let mut v = Self::zeros(bits.len() as u32);
        for (k, &b) in bits.iter().enumerate() {
            v.set(k as u32 + 1, b);
        }
        Ok(v)
    }

    #[inline]
    pub fn len(&self) -> u32 {
        self.len
    }

    /// Always false; present for API symmetry with collections.
    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Bit at 1-based position `i`. Panics when `i` is outside `1..=len`.
    #[inline]
    pub fn get(&self, i: u32) -> bool {
        assert!(
            i >= 1 && i <= self.len,
            "position {i} outside 1..={}",
            self.len
        );
        let (w, b) = locate(i);
        self.words[w] >> b & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: u32, gap: bool) {
        assert!(
            i >= 1 && i <= self.len,
            "position {i} outside 1..={}",
            self.len
        );
        let (w, b) = locate(i);
        if gap {
            self.words[w] |= 1 << b;
        } else {
            self.words[w] &= !(1 << b);
        }
    }

    pub fn count_gaps(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    /// Gap positions in ascending order.
    pub fn gaps(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let base = k as u32 * 64;
            BitIter(w).map(move |b| base + b + 1)
        })
    }

    /// Member positions (zeros) in ascending order.
    pub fn members(&self) -> impl Iterator<Item = u32> + '_ {
        (1..=self.len).filter(move |&i| !self.get(i))
    }

    /// Largest gap position, if any.
    pub fn last_gap(&self) -> Option<u32> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(k, &w)| k as u32 * 64 + (63 - w.leading_zeros()) + 1)
    }

    /// Component-wise maximum. As gap sets this is the union, so the encoded
    /// member sets intersect.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        Ok(Self {
            len: self.len,
            words,
        })
    }

    /// Component-wise `self ≤ other`, i.e. `gaps(self) ⊆ gaps(other)`.
    pub fn is_below(&self, other: &Self) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.dominated_by(other))
    }

    #[inline]
    pub(crate) fn dominated_by(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Extends with member (zero) positions up to length `n`.
    ///
    /// Panics if `n` is shorter than the vector.
    pub fn padded(&self, n: u32) -> Self {
        assert!(n >= self.len, "cannot pad length {} down to {n}", self.len);
        let mut words = self.words.clone();
        words.resize(word_count(n), 0);
        Self { len: n, words }
    }

    /// Keeps positions `1..=n`.
    pub(crate) fn truncated(&self, n: u32) -> Self {
        assert!(n >= 1 && n <= self.len);
        let mut words = self.words.clone();
        words.truncate(word_count(n));
        let tail = n % 64;
        if tail != 0 {
            let last = words.len() - 1;
            words[last] &= (1u64 << tail) - 1;
        }
        Self { len: n, words }
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len == other.len {
            Ok(())
        } else {
            Err(Error::LengthMismatch(self.len, other.len))
        }
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = u32;

    #[inline]
    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let t = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(t)
    }
}

/// Lexicographic order on the bit strings `b₁…bₙ`, a proper prefix sorting first.
impl Ord for GapVector {
    fn cmp(&self, other: &Self) -> Ordering {
        let common = self.len.min(other.len);
        for k in 0..word_count(common) {
            let mut diff = self.words[k] ^ other.words[k];
            let remaining = common - k as u32 * 64;
            if remaining < 64 {
                diff &= (1u64 << remaining) - 1;
            }
            if diff != 0 {
                let t = diff.trailing_zeros();
                return if self.words[k] >> t & 1 == 1 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
        }
        self.len.cmp(&other.len)
    }
}

impl PartialOrd for GapVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GapVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (1..=self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for GapVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GapVector({self})")
    }
}

impl FromStr for GapVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse(s.to_owned())),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_bits(&bits).map_err(|_| Error::Parse(s.to_owned()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> GapVector {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let g = v("11110101001");
        assert_eq!(g.len(), 11);
        assert_eq!(g.gaps().collect::<Vec<_>>(), vec![1, 2, 3, 4, 6, 8, 11]);
        assert_eq!(g.to_string(), "11110101001");
        assert!("".parse::<GapVector>().is_err());
        assert!("10x1".parse::<GapVector>().is_err());
    }

    #[test]
    fn join_is_gap_union() {
        assert_eq!(v("101").join(&v("011")).unwrap(), v("111"));
        let a = v("11110110");
        assert_eq!(a.join(&a).unwrap(), a);
        assert_eq!(v("101").join(&v("1011")), Err(Error::LengthMismatch(3, 4)));
    }

    #[test]
    fn pad_and_truncate() {
        assert_eq!(v("11011001").padded(11), v("11011001000"));
        assert_eq!(v("11011001").padded(8), v("11011001"));
        assert_eq!(v("11011001000").truncated(8), v("11011001"));
    }

    #[test]
    fn wide_vectors_cross_word_boundaries() {
        let gaps = [1u32, 63, 64, 65, 100, 130];
        let g = GapVector::from_gaps(130, gaps).unwrap();
        assert_eq!(g.gaps().collect::<Vec<_>>(), gaps);
        assert_eq!(g.last_gap(), Some(130));
        assert_eq!(g.truncated(64).gaps().collect::<Vec<_>>(), vec![1, 63, 64]);
        assert_eq!(g.to_string().parse::<GapVector>().unwrap(), g);
    }

    #[test]
    fn order_matches_string_order() {
        let mut vs = ["1101", "1011", "11", "110", "0111", "1"].map(v).to_vec();
        vs.sort();
        let strings: Vec<String> = vs.iter().map(|g| g.to_string()).collect();
        let mut expected: Vec<String> = strings.clone();
        expected.sort();
        assert_eq!(strings, expected);
    }

    #[test]
    fn dominance() {
        assert!(v("0101").is_below(&v("1101")).unwrap());
        assert!(!v("0111").is_below(&v("1101")).unwrap());
    }
}
