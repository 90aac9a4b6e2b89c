//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the crate's parsing or counting code.

#![allow(dead_code)]

/// Every string of length `len` over `(` and `)`, in lexicographic order.
pub fn all_strings(len: usize) -> impl Iterator<Item = String> {
    (0u64..(1 << len)).map(move |mask| {
        (0..len)
            .map(|p| {
                if mask >> (len - 1 - p) & 1 == 1 {
                    ')'
                } else {
                    '('
                }
            })
            .collect()
    })
}

/// Prefix-sum check: `Ok(n)` for a balanced word of half-length `n`,
/// otherwise the first failure as `(kind, position)` with the same position
/// conventions as the parser (steps read for a negative prefix, final
/// excess for an unbalanced word).
pub fn prefix_sum_oracle(s: &str) -> Result<usize, (&'static str, usize)> {
    let mut sum: i64 = 0;
    for (k, c) in s.chars().enumerate() {
        sum += match c {
            '(' => 1,
            ')' => -1,
            _ => return Err(("invalid", k)),
        };
        if sum < 0 {
            return Err(("negative", k + 1));
        }
    }
    if sum != 0 {
        return Err(("unbalanced", sum as usize));
    }
    Ok(s.len() / 2)
}

/// All balanced strings of half-length `n`, by filtering all `4^n` strings.
pub fn balanced_strings(n: usize) -> Vec<String> {
    all_strings(2 * n)
        .filter(|s| prefix_sum_oracle(s).is_ok())
        .collect()
}

/// The `(l, r)` counters after each prefix of a balanced string.
pub fn visited_counts(s: &str) -> Vec<(u64, u64)> {
    let mut out = vec![(0, 0)];
    let (mut l, mut r) = (0, 0);
    for c in s.chars() {
        if c == '(' {
            l += 1;
        } else {
            r += 1;
        }
        out.push((l, r));
    }
    out
}
