//! Exhaustive enumeration of labelled connected graphs on small orders.

use super::Graph;
use crate::error::{Error, Result};

pub const MAX_ENUMERATION_ORDER: usize = 7;

/// All labelled connected graphs on `n` vertices, in increasing edge-mask
/// order. Bit `k` of the mask selects the `k`-th pair of the lexicographic
/// pair order `(0,1), (0,2), ..., (n-2,n-1)`.
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Graph>> {
    let pairs = pair_list(n)?;
    let masks = 1u64 << pairs.len();
    Ok((0..masks).filter_map(move |mask| graph_from_mask(n, &pairs, mask)))
}

/// Graph for one mask, or `None` if it is disconnected.
pub(crate) fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Option<Graph> {
    if !mask_connected(n, pairs, mask) {
        return None;
    }
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, &p)| p);
    Some(Graph::from_edges(n, edges).expect("mask pairs are distinct and in range"))
}

pub(crate) fn pair_list(n: usize) -> Result<Vec<(usize, usize)>> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "enumeration order must be in 1..={MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    Ok((0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect())
}

/// Number of masks for order `n`.
pub(crate) fn mask_count(n: usize) -> u64 {
    1u64 << (n * (n - 1) / 2)
}

// Bitset flood fill; avoids building a Graph for the discarded masks.
fn mask_connected(n: usize, pairs: &[(usize, usize)], mask: u64) -> bool {
    let mut adj = [0u8; MAX_ENUMERATION_ORDER];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        if mask >> k & 1 == 1 {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
    }
    let mut seen = 1u8;
    let mut frontier = 1u8;
    while frontier != 0 {
        let mut next = 0u8;
        for (v, row) in adj.iter().enumerate().take(n) {
            if frontier >> v & 1 == 1 {
                next |= row;
            }
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen.count_ones() as usize == n
}

/// Count of labelled connected graphs on `n` vertices.
pub fn connected_count(n: usize) -> Result<u64> {
    let pairs = pair_list(n)?;
    Ok((0..mask_count(n))
        .filter(|&m| mask_connected(n, &pairs, m))
        .count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent oracle: count connected labelled graphs with the
    // exponential-generating-function recurrence
    // c(n) = 2^C(n,2) - sum_{k=1}^{n-1} C(n-1,k-1) c(k) 2^C(n-k,2).
    fn recurrence(n: usize) -> u64 {
        let binom = |a: u64, b: u64| -> u64 { (0..b).fold(1, |acc, i| acc * (a - i) / (i + 1)) };
        let mut c = vec![0u64; n + 1];
        for m in 1..=n as u64 {
            let total = 1u64 << (m * (m - 1) / 2);
            let sub: u64 = (1..m)
                .map(|k| {
                    binom(m - 1, k - 1) * c[k as usize] * (1u64 << ((m - k) * (m - k - 1) / 2))
                })
                .sum();
            c[m as usize] = total - sub;
        }
        c[n]
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_connected(1).unwrap().count(), 1);
        let two: Vec<_> = enumerate_connected(2).unwrap().collect();
        assert_eq!(two, vec![Graph::complete(2).unwrap()]);
        assert_eq!(enumerate_connected(3).unwrap().count(), 4);
        assert_eq!(enumerate_connected(4).unwrap().count(), 38);
    }

    #[test]
    fn counts_match_recurrence() {
        for n in 1..=6 {
            assert_eq!(connected_count(n).unwrap(), recurrence(n), "n = {n}");
        }
        assert_eq!(recurrence(6), 26_704);
    }

    #[test]
    fn order_is_by_mask() {
        let three: Vec<_> = enumerate_connected(3).unwrap().collect();
        // masks 3 (01,02), 5 (01,12), 6 (02,12), 7 (all)
        assert_eq!(three[0].edges(), &[(0, 1), (0, 2)]);
        assert_eq!(three[1].edges(), &[(0, 1), (1, 2)]);
        assert_eq!(three[2].edges(), &[(0, 2), (1, 2)]);
        assert!(three[3].is_complete());
    }

    #[test]
    fn out_of_range() {
        assert!(enumerate_connected(0).is_err());
        assert!(enumerate_connected(8).is_err());
    }
}
