use alloc::sync::Arc;
use alloc::vec::Vec;

use super::ideal::MonomialIdeal;
use super::semigroup::NumericalSemigroup;

/// Every normalized ideal whose generators all lie in `lo..=hi`.
pub fn enumerate_ideals(ring: &Arc<NumericalSemigroup>, lo: i64, hi: i64) -> Vec<MonomialIdeal> {
    fn go(
        ring: &Arc<NumericalSemigroup>,
        next: i64,
        hi: i64,
        chosen: &mut Vec<i64>,
        out: &mut Vec<MonomialIdeal>,
    ) {
        if next > hi {
            if !chosen.is_empty() {
                out.push(MonomialIdeal::normalize(ring.clone(), chosen).expect("nonempty"));
            }
            return;
        }
        go(ring, next + 1, hi, chosen, out);
        if chosen.iter().all(|&g| !ring.contains(next - g)) {
            chosen.push(next);
            go(ring, next + 1, hi, chosen, out);
            chosen.pop();
        }
    }
    let mut out = Vec::new();
    go(ring, lo, hi, &mut Vec::new(), &mut out);
    out
}

/// Representatives of all ideals up to multiplication by a monomial: the
/// ideals with least value `0`.
pub fn ideal_classes(ring: &Arc<NumericalSemigroup>) -> Vec<MonomialIdeal> {
    enumerate_ideals(ring, 0, ring.frobenius().max(0)).into_iter().filter(|i| i.min() == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    // subsets by bitmask, keeping the antichains
    fn brute_count(ring: &NumericalSemigroup, lo: i64, hi: i64) -> usize {
        let n = (hi - lo + 1) as u32;
        (1u64..1 << n)
            .filter(|mask| {
                let pts: Vec<i64> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| lo + i as i64).collect();
                pts.iter().all(|&a| pts.iter().all(|&b| a == b || !ring.contains(a - b)))
            })
            .count()
    }

    #[test]
    fn counts_match_bitmask_enumeration() {
        for gens in [&[3u64, 4, 5][..], &[2, 3], &[4, 6, 9]] {
            let ring = Arc::new(NumericalSemigroup::new(gens).unwrap());
            let ideals = enumerate_ideals(&ring, 0, 8);
            assert_eq!(ideals.len(), brute_count(&ring, 0, 8));
            let mut dedup = ideals.clone();
            dedup.sort_by(|a, b| a.generators().cmp(b.generators()));
            dedup.dedup();
            assert_eq!(dedup.len(), ideals.len());
        }
    }

    #[test]
    fn classes_of_345() {
        let ring = Arc::new(NumericalSemigroup::new(&[3, 4, 5]).unwrap());
        let gens: Vec<Vec<i64>> = ideal_classes(&ring).iter().map(|i| i.generators().to_vec()).collect();
        assert_eq!(gens, alloc::vec![alloc::vec![0], alloc::vec![0, 2], alloc::vec![0, 1], alloc::vec![0, 1, 2]]);
    }
}
