//! Counting, listing, ranking and sampling Dyck words.
//!
//! Words are ordered lexicographically with `(` before `)`, which is also the
//! byte order of their rendered strings.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::word::{DyckWord, Step};

/// The `n`-th Catalan number, via `C(k+1) = C(k) * 2(2k+1) / (k+2)`.
pub fn catalan(n: u64) -> BigUint {
    let mut c = BigUint::one();
    for k in 0..n {
        c = c * (2 * (2 * k + 1)) / (k + 2);
    }
    c
}

/// Iterator over the Dyck words of half-length `n` in lexicographic order.
///
/// Each call to `next` moves to the successor in place: find the rightmost
/// open that can become a close without the prefix going negative, flip it,
/// then complete with as many opens as remain followed by the closes.
#[derive(Debug, Clone)]
pub struct DyckWords {
    current: Option<Vec<Step>>,
    n: usize,
}

impl DyckWords {
    pub fn new(n: usize) -> Self {
        DyckWords {
            current: Some(DyckWord::nested(n).steps().to_vec()),
            n,
        }
    }

    fn advance(steps: &mut [Step], n: usize) -> bool {
        // balance before each position, computed once per call
        let mut before = Vec::with_capacity(steps.len());
        let mut balance = 0i64;
        for s in steps.iter() {
            before.push(balance);
            balance += if *s == Step::Open { 1 } else { -1 };
        }
        for k in (0..steps.len()).rev() {
            if steps[k] == Step::Open && before[k] >= 1 {
                let opens_before = steps[..k].iter().filter(|s| **s == Step::Open).count();
                steps[k] = Step::Close;
                let remaining_opens = n - opens_before;
                for (offset, slot) in steps[k + 1..].iter_mut().enumerate() {
                    *slot = if offset < remaining_opens {
                        Step::Open
                    } else {
                        Step::Close
                    };
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for DyckWords {
    type Item = DyckWord;

    fn next(&mut self) -> Option<DyckWord> {
        let steps = self.current.as_mut()?;
        let word = DyckWord::from_steps_unchecked(steps.clone());
        if !DyckWords::advance(steps, self.n) {
            self.current = None;
        }
        Some(word)
    }
}

pub fn enumerate_words(n: usize) -> DyckWords {
    DyckWords::new(n)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RankError {
    #[error("rank {rank} is not below catalan({n})")]
    RankOutOfRange { rank: BigUint, n: u64 },
}

/// Number of ways to finish a word: `table[m][b]` counts step sequences of
/// length `m` that start at balance `b`, never go negative and end at zero.
struct Completions {
    table: Vec<Vec<BigUint>>,
}

impl Completions {
    fn new(n: usize) -> Self {
        let len = 2 * n;
        let mut table = vec![vec![BigUint::zero(); n + 2]; len + 1];
        table[0][0] = BigUint::one();
        for m in 1..=len {
            for b in 0..=n.min(m) {
                let mut ways = table[m - 1][b + 1].clone();
                if b > 0 {
                    ways += &table[m - 1][b - 1];
                }
                table[m][b] = ways;
            }
        }
        Completions { table }
    }

    fn get(&self, remaining: usize, balance: usize) -> &BigUint {
        static ZERO: std::sync::OnceLock<BigUint> = std::sync::OnceLock::new();
        self.table
            .get(remaining)
            .and_then(|row| row.get(balance))
            .unwrap_or_else(|| ZERO.get_or_init(BigUint::zero))
    }
}

/// Position of `word` in [`enumerate_words`] order.
pub fn rank(word: &DyckWord) -> BigUint {
    let n = word.half_length();
    let completions = Completions::new(n);
    let len = word.len();
    let mut rank = BigUint::zero();
    let mut balance = 0usize;
    for (k, step) in word.steps().iter().enumerate() {
        match step {
            Step::Open => balance += 1,
            Step::Close => {
                // every word that opens here instead sorts first
                rank += completions.get(len - k - 1, balance + 1);
                balance -= 1;
            }
        }
    }
    rank
}

/// The word at position `k` of [`enumerate_words`] order.
pub fn unrank(k: &BigUint, n: u64) -> Result<DyckWord, RankError> {
    let out_of_range = || RankError::RankOutOfRange { rank: k.clone(), n };
    let half = usize::try_from(n).map_err(|_| out_of_range())?;
    let completions = Completions::new(half);
    let len = 2 * half;
    if k >= completions.get(len, 0) {
        return Err(out_of_range());
    }
    let mut k = k.clone();
    let mut steps = Vec::with_capacity(len);
    let mut balance = 0usize;
    for pos in 0..len {
        let remaining = len - pos - 1;
        let with_open = completions.get(remaining, balance + 1);
        if k < *with_open {
            steps.push(Step::Open);
            balance += 1;
        } else {
            k -= with_open;
            steps.push(Step::Close);
            balance -= 1;
        }
    }
    Ok(DyckWord::from_steps_unchecked(steps))
}

/// Draws uniform Dyck words of a fixed half-length from a seeded ChaCha8
/// stream.
///
/// A rank is drawn by rejection: take `ceil(bits / 64)` little-endian `u64`
/// blocks, where `bits` is the bit length of `catalan(n)`, clear the bits
/// above `bits`, and retry until the value is below `catalan(n)`.
#[derive(Debug, Clone)]
pub struct Sampler {
    n: u64,
    total: BigUint,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(n: u64, seed: u64) -> Self {
        Sampler {
            n,
            total: catalan(n),
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn next_rank(&mut self) -> BigUint {
        let bits = self.total.bits();
        if bits <= 1 {
            // catalan(n) == 1
            return BigUint::zero();
        }
        let blocks = bits.div_ceil(64) as usize;
        let top_bits = bits - 64 * (blocks as u64 - 1);
        loop {
            let mut digits: Vec<u64> = (0..blocks).map(|_| self.rng.next_u64()).collect();
            if top_bits < 64 {
                digits[blocks - 1] &= (1u64 << top_bits) - 1;
            }
            let candidate = BigUint::from_slice(
                &digits
                    .iter()
                    .flat_map(|d| [*d as u32, (*d >> 32) as u32])
                    .collect::<Vec<_>>(),
            );
            if candidate < self.total {
                return candidate;
            }
        }
    }

    pub fn next_word(&mut self) -> DyckWord {
        let k = self.next_rank();
        unrank(&k, self.n).expect("rank drawn below catalan(n)")
    }
}

pub fn sample_uniform(n: u64, seed: u64) -> DyckWord {
    Sampler::new(n, seed).next_word()
}

/// Small Catalan numbers as `u64`, for callers that know `n <= 36`.
pub fn catalan_u64(n: u64) -> Option<u64> {
    catalan(n).to_u64()
}
