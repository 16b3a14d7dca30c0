//! Derangement numbers D_k, by two independent routes.
//!
//! D_0 = 1: the empty permutation has no fixed points. This is also what the
//! recurrence needs to produce D_2 = 1.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// D_k = Σ_{j=0}^{k} (-1)^j k!/j!.
pub fn derangement_incl_excl(k: usize) -> BigUint {
    // k!/j! = (j+1)(j+2)...k, built from j = k downwards.
    let mut falling = BigInt::one();
    let mut sum = BigInt::zero();
    for j in (0..=k).rev() {
        if j % 2 == 0 {
            sum += &falling;
        } else {
            sum -= &falling;
        }
        falling *= j.max(1);
    }
    sum.to_biguint().expect("derangement count is nonnegative")
}

/// D_0 = 1, D_1 = 0, D_{k+1} = k (D_k + D_{k-1}).
pub fn derangement_recurrence(k: usize) -> BigUint {
    let (mut prev, mut cur) = (BigUint::one(), BigUint::zero());
    if k == 0 {
        return prev;
    }
    for m in 1..k {
        let next = (&cur + &prev) * m;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force(k: usize) -> u64 {
        fn go(pos: usize, used: &mut Vec<bool>) -> u64 {
            let k = used.len();
            if pos == k {
                return 1;
            }
            let mut total = 0;
            for v in 0..k {
                if v != pos && !used[v] {
                    used[v] = true;
                    total += go(pos + 1, used);
                    used[v] = false;
                }
            }
            total
        }
        go(0, &mut vec![false; k])
    }

    #[test]
    fn published_values() {
        let expected = [0u32, 1, 2, 9, 44, 265, 1854, 14833];
        for (i, &d) in expected.iter().enumerate() {
            assert_eq!(derangement_incl_excl(i + 1), BigUint::from(d), "k = {}", i + 1);
            assert_eq!(derangement_recurrence(i + 1), BigUint::from(d), "k = {}", i + 1);
        }
    }

    #[test]
    fn empty_permutation() {
        assert_eq!(derangement_incl_excl(0), BigUint::one());
        assert_eq!(derangement_recurrence(0), BigUint::one());
    }

    #[test]
    fn methods_agree_up_to_64() {
        for k in 0..=64 {
            assert_eq!(derangement_incl_excl(k), derangement_recurrence(k), "k = {k}");
        }
    }

    #[test]
    fn matches_brute_force() {
        for k in 0..=8 {
            assert_eq!(derangement_incl_excl(k), BigUint::from(brute_force(k)), "k = {k}");
        }
    }
}
