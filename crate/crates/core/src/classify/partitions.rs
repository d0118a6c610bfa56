/// Partitions of `v` into at most `n` parts, i.e. solutions of
/// `k_1 + ... + k_n = v` with `0 <= k_1 <= ... <= k_n`.
pub fn partition_count(n: usize, v: usize) -> u128 {
    // table[j] holds p(i, j) after processing part-count bound i
    let mut table = vec![0u128; v + 1];
    table[0] = 1;
    for i in 1..=n {
        for j in i..=v {
            table[j] += table[j - i];
        }
    }
    table[v]
}

/// Number of classes of `n`-dimensional polytopes with `h* = 1 + (v-1)t`.
///
/// Lawrence prisms contribute `p(n, v)`; for `v = 4` and `n >= 2` the
/// iterated pyramid over `T` adds one more.
pub fn c_linear(v: usize, n: usize) -> u128 {
    partition_count(n, v) + u128::from(v == 4 && n >= 2)
}
