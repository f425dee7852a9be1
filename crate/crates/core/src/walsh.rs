//! In-place Walsh–Hadamard transform over any additive scalar.

use std::ops::{Add, Sub};

/// Unnormalized Walsh–Hadamard transform, natural (Hadamard) ordering.
///
/// After the call, `values[m] = Σ_j v[j] · (−1)^popcount(j & m)`. Applying the
/// transform twice multiplies the input by `values.len()`, so the inverse is
/// the same butterfly followed by a division. The length must be a power of
/// two.
pub fn walsh_transform<T>(values: &mut [T])
where
    T: Copy + Add<Output = T> + Sub<Output = T>,
{
    assert!(values.len().is_power_of_two(), "length must be a power of two");
    let mut half = 1;
    while half < values.len() {
        for block in values.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (sum, diff) = (*a + *b, *a - *b);
                *a = sum;
                *b = diff;
            }
        }
        half *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_entry_is_identity() {
        let mut v = [7i64];
        walsh_transform(&mut v);
        assert_eq!(v, [7]);
    }

    #[test]
    fn length_two_butterfly() {
        let mut v = [3i64, 5];
        walsh_transform(&mut v);
        assert_eq!(v, [8, -2]);
    }

    #[test]
    fn matches_direct_sign_sum() {
        let v: Vec<i64> = vec![4, -1, 9, 0, 2, 7, -8, 5];
        let mut t = v.clone();
        walsh_transform(&mut t);
        for mask in 0..v.len() {
            let direct: i64 = v
                .iter()
                .enumerate()
                .map(|(j, &x)| if (j & mask).count_ones() % 2 == 0 { x } else { -x })
                .sum();
            assert_eq!(t[mask], direct, "mask {mask}");
        }
    }

    #[test]
    fn double_transform_scales_by_len() {
        let v: Vec<i128> = (0..16).map(|j| (j * j) as i128 - 40).collect();
        let mut t = v.clone();
        walsh_transform(&mut t);
        walsh_transform(&mut t);
        for (orig, twice) in v.iter().zip(&t) {
            assert_eq!(*twice, orig * 16);
        }
    }
}
