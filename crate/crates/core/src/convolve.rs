//! Max-plus convolution of optimum vectors.

use alloc::vec;
use alloc::vec::Vec;

use crate::value::Value;

/// `out[k] = max over i + j = k of a[i] + b[j]`, ABSENT where no split exists.
pub fn max_plus(a: &[Value], b: &[Value]) -> Vec<Value> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Value::ABSENT; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x.is_absent() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = out[i + j].max(x + y);
        }
    }
    out
}

/// Folds [`max_plus`] over several vectors, truncating to `0..=k` after every
/// step. The empty product is `[0]`.
pub fn combine(vectors: &[Vec<Value>], k: usize) -> Vec<Value> {
    let mut acc = vec![Value::ZERO];
    for v in vectors {
        acc = max_plus(&acc, v);
        acc.truncate(k + 1);
    }
    acc
}

/// Plain-integer version of [`combine`] for complete optimum vectors.
pub fn combine_counts(vectors: &[Vec<u32>], k: usize) -> Vec<u32> {
    let lifted: Vec<Vec<Value>> = vectors
        .iter()
        .map(|v| v.iter().map(|&x| Value::new(x)).collect())
        .collect();
    combine(&lifted, k)
        .into_iter()
        .map(|v| v.get().expect("complete vectors combine to complete vectors"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_single_edges() {
        let out = combine_counts(&[vec![0, 0, 1], vec![0, 0, 1]], 4);
        assert_eq!(out, vec![0, 0, 1, 1, 2]);
    }

    #[test]
    fn single_vector_is_identity() {
        assert_eq!(combine_counts(&[vec![0, 0, 1, 3]], 3), vec![0, 0, 1, 3]);
    }

    #[test]
    fn absent_cells_are_skipped() {
        let a = [Value::ABSENT, Value::new(2)];
        let b = [Value::new(1), Value::ABSENT];
        let out = max_plus(&a, &b);
        assert_eq!(out, vec![Value::ABSENT, Value::new(3), Value::ABSENT]);
    }
}
