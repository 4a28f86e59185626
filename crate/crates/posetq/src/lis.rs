//! Longest strictly decreasing subsequence, patience style.

/// Length of the longest strictly decreasing subsequence of `xs`,
/// O(m log m).
pub fn longest_strictly_decreasing(xs: &[usize]) -> usize {
    // tails[d] = largest possible tail value of a strictly decreasing
    // subsequence of length d+1; tails is non-increasing... stored negated
    // so we can binary-search ascending.
    let mut tails: Vec<i64> = Vec::new();
    for &x in xs {
        let key = -(x as i64);
        // First position whose tail is >= key fails strictness; we need
        // tails[i-1] > key, i.e. insertion point of key in ascending order.
        let idx = tails.partition_point(|&t| t < key);
        if idx == tails.len() {
            tails.push(key);
        } else {
            tails[idx] = key;
        }
    }
    tails.len()
}
