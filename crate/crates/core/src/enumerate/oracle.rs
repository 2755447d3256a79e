use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Largest genus [`enumerate_bruteforce`] accepts by default.
pub const DEFAULT_ORACLE_CAP: u32 = 10;

/// Hard ceiling: gap sets are bitmasks over `{1, ..., 2g - 1}`.
const MAX_CAP: u32 = 16;

/// All numerical semigroups of genus `genus`, by testing every `genus`-subset
/// of `{1, ..., 2 genus - 1}` as a gap set. Sorted canonically.
pub fn enumerate_bruteforce(genus: u32, cap: u32) -> Result<Vec<NumericalSemigroup>> {
    if genus > cap.min(MAX_CAP) {
        return Err(Error::CapExceeded {
            genus,
            cap: cap.min(MAX_CAP),
        });
    }
    if genus == 0 {
        return Ok(vec![NumericalSemigroup::full()]);
    }
    let universe = 2 * genus - 1;
    let mut out = Vec::new();
    let mut gaps = Vec::with_capacity(genus as usize);
    for mask in subsets_of_size(universe, genus) {
        gaps.clear();
        gaps.extend((0..universe).filter(|i| mask >> i & 1 == 1).map(|i| i + 1));
        match NumericalSemigroup::from_gaps(&gaps) {
            Ok(s) => out.push(s),
            Err(Error::InvalidGapSet { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    out.sort();
    Ok(out)
}

/// Bitmasks over `n` bits with exactly `k` set, in increasing order.
fn subsets_of_size(n: u32, k: u32) -> impl Iterator<Item = u64> {
    debug_assert!(k >= 1 && k <= n && n < 64);
    let first = (1u64 << k) - 1;
    let limit = 1u64 << n;
    std::iter::successors(Some(first), |&x| {
        // Gosper's hack: next integer with the same popcount.
        let c = x & x.wrapping_neg();
        let r = x + c;
        Some((((r ^ x) >> 2) / c) | r)
    })
    .take_while(move |&x| x < limit)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn atoms(v: &[NumericalSemigroup]) -> Vec<Vec<u32>> {
        v.iter().map(|s| s.minimal_generators().to_vec()).collect()
    }

    #[test]
    fn subset_counts() {
        assert_eq!(subsets_of_size(5, 2).count(), 10);
        assert_eq!(subsets_of_size(19, 10).count(), 92378);
        assert_eq!(subsets_of_size(3, 3).collect::<Vec<_>>(), vec![0b111]);
    }

    #[test]
    fn small_genera() {
        assert_eq!(atoms(&enumerate_bruteforce(0, 10).unwrap()), vec![vec![1]]);
        assert_eq!(
            atoms(&enumerate_bruteforce(1, 10).unwrap()),
            vec![vec![2, 3]]
        );
        assert_eq!(
            atoms(&enumerate_bruteforce(2, 10).unwrap()),
            vec![vec![2, 5], vec![3, 4, 5]]
        );
        assert_eq!(enumerate_bruteforce(4, 10).unwrap().len(), 7);
    }

    #[test]
    fn cap() {
        assert_eq!(
            enumerate_bruteforce(11, DEFAULT_ORACLE_CAP).unwrap_err(),
            Error::CapExceeded { genus: 11, cap: 10 }
        );
        assert!(matches!(
            enumerate_bruteforce(17, 100),
            Err(Error::CapExceeded { cap: 16, .. })
        ));
    }
}
