//! Deterministic instance generation.
//!
//! All randomness comes from SplitMix64 so that instances are reproducible
//! from a seed in any language:
//!
//! ```text
//! state += 0x9E3779B97F4A7C15
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! return z ^ (z >> 31)
//! ```
//!
//! (all arithmetic wrapping mod 2^64). A uniform integer in `[lo, hi]` is
//! `lo + next() % (hi - lo + 1)`. The generator for trial `i` under master
//! seed `s` is seeded with the first output of a generator seeded `s ^ i`.

use num_bigint::BigInt;

use crate::hermitian::{GaussianRational, HermitianMatrix};
use crate::poly::Polynomial;
use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Generator for trial `index` of a run seeded with `master`.
    pub fn for_trial(master: u64, index: u64) -> Self {
        Self::new(Self::new(master ^ index).next_u64())
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform integer in `[lo, hi]` (inclusive).
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "empty range {lo}..={hi}");
        let span = (hi as i128 - lo as i128 + 1) as u128;
        (lo as i128 + (self.next_u64() as u128 % span) as i128) as i64
    }

    pub fn usize_in(&mut self, lo: usize, hi: usize) -> usize {
        self.int_in(lo as i64, hi as i64) as usize
    }

    /// `p / q` with `p` in `[-bound, bound]` and `q` in `[1, bound]`, drawn in that order.
    pub fn rational(&mut self, bound: i64) -> Rational {
        let p = self.int_in(-bound, bound);
        let q = self.int_in(1, bound);
        Rational::new(BigInt::from(p), BigInt::from(q))
    }
}

/// A random Hermitian matrix with Gaussian-integer entries in `[-bound, bound]`.
///
/// Upper-triangle entries are drawn row by row, real part then imaginary
/// part; diagonal entries draw only a real part. The lower triangle mirrors
/// the upper one conjugated.
pub fn random_hermitian(rng: &mut SplitMix64, n: usize, bound: i64) -> HermitianMatrix {
    let zero = GaussianRational::zero();
    let mut entries = vec![vec![zero; n]; n];
    for i in 0..n {
        for j in i..n {
            let re = int(rng.int_in(-bound, bound));
            let im = if i == j { int(0) } else { int(rng.int_in(-bound, bound)) };
            let z = GaussianRational::new(re, im);
            entries[j][i] = z.conj();
            entries[i][j] = z;
        }
    }
    HermitianMatrix::new(entries).expect("symmetrized by construction")
}

/// A pair `(f, g)` whose roots form the weak chain `r_1 <= s_1 <= ... <= r_n`.
///
/// Draws `2n - 1` values `p/q` (`|p| <= bound`, `1 <= q <= 4`), sorts them,
/// and deals them alternately to `f` and `g`. Collisions give equalities in
/// the chain, which is intended. Returns the sorted chain as well.
pub fn random_interlacing_pair(
    rng: &mut SplitMix64,
    n: usize,
    bound: i64,
) -> (Polynomial, Polynomial, Vec<Rational>) {
    assert!(n >= 1);
    let mut chain: Vec<Rational> = (0..2 * n - 1)
        .map(|_| {
            let p = rng.int_in(-bound, bound);
            let q = rng.int_in(1, 4);
            Rational::new(BigInt::from(p), BigInt::from(q))
        })
        .collect();
    chain.sort();
    let f_roots: Vec<_> = chain.iter().step_by(2).cloned().collect();
    let g_roots: Vec<_> = chain.iter().skip(1).step_by(2).cloned().collect();
    (
        Polynomial::from_roots(&f_roots),
        Polynomial::from_roots(&g_roots),
        chain,
    )
}
