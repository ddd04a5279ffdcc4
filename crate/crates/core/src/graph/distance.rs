use super::Graph;
use crate::error::{Error, Result};
use crate::linalg::SquareMatrix;

/// All-pairs shortest-path lengths of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistMatrix {
    d: SquareMatrix<i64>,
    transmissions: Vec<i64>,
    diameter: i64,
}

impl DistMatrix {
    pub fn order(&self) -> usize {
        self.d.order()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.d[(i, j)]
    }

    pub fn matrix(&self) -> &SquareMatrix<i64> {
        &self.d
    }

    /// Row sums `Tr(v_i)`.
    pub fn transmissions(&self) -> &[i64] {
        &self.transmissions
    }

    pub fn diameter(&self) -> i64 {
        self.diameter
    }

    /// `k` when every vertex has transmission `k`.
    pub fn is_transmission_regular(&self) -> Option<i64> {
        let k = *self.transmissions.first()?;
        self.transmissions.iter().all(|&t| t == k).then_some(k)
    }

    /// Exact sum of squared entries, equal to the sum of squared eigenvalues.
    pub fn sum_of_squares(&self) -> u64 {
        self.d.as_slice().iter().map(|&x| (x * x) as u64).sum()
    }

    /// `Diag(Tr) - D`.
    pub fn distance_laplacian(&self) -> SquareMatrix<i64> {
        SquareMatrix::from_fn(self.order(), |i, j| {
            if i == j {
                self.transmissions[i]
            } else {
                -self.d[(i, j)]
            }
        })
    }

    /// Per-vertex count of vertices at each distance `1..=diameter`, as a
    /// sorted multiset. Isomorphic graphs have equal profiles.
    pub fn distance_degree_profile(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut rows: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                let mut counts = vec![0; self.diameter as usize];
                for j in 0..n {
                    if i != j {
                        counts[self.d[(i, j)] as usize - 1] += 1;
                    }
                }
                counts
            })
            .collect();
        rows.sort();
        rows
    }

    /// Per-vertex multiset of `(d(v,u), |S_k(v) ∩ S_k(u)|)` over `u != v`,
    /// where `S_k(v)` is the sphere of radius `k`; rows sorted. Finer than
    /// the distance-degree profile and still an isomorphism invariant.
    pub fn sphere_intersection_profile(&self, k: i64) -> Vec<Vec<(i64, usize)>> {
        let n = self.order();
        let mut rows: Vec<Vec<(i64, usize)>> = (0..n)
            .map(|v| {
                let mut row: Vec<(i64, usize)> = (0..n)
                    .filter(|&u| u != v)
                    .map(|u| {
                        let shared = (0..n)
                            .filter(|&w| self.d[(v, w)] == k && self.d[(u, w)] == k)
                            .count();
                        (self.d[(v, u)], shared)
                    })
                    .collect();
                row.sort_unstable();
                row
            })
            .collect();
        rows.sort();
        rows
    }
}

/// Shortest-path distances by one breadth-first search per vertex.
pub fn bfs_distances(g: &Graph) -> Result<DistMatrix> {
    if let Some(v) = g.unreachable_from_zero() {
        return Err(Error::Disconnected(0, v));
    }
    let n = g.order();
    let mut d = SquareMatrix::zeros(n);
    for s in 0..n {
        for (t, dist) in g.bfs_from(s).into_iter().enumerate() {
            d[(s, t)] = dist.expect("connected graph") as i64;
        }
    }
    let transmissions: Vec<i64> = d.rows().map(|r| r.iter().sum()).collect();
    let diameter = d.as_slice().iter().copied().max().unwrap_or(0);
    Ok(DistMatrix {
        d,
        transmissions,
        diameter,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::disjoint_union;

    #[test]
    fn path_three() {
        let dm = bfs_distances(&Graph::path(3).unwrap()).unwrap();
        assert_eq!(
            dm.matrix().to_rows(),
            vec![vec![0, 1, 2], vec![1, 0, 1], vec![2, 1, 0]]
        );
        assert_eq!(dm.transmissions(), &[3, 2, 3]);
        assert_eq!(dm.diameter(), 2);
        assert_eq!(dm.is_transmission_regular(), None);
        assert_eq!(dm.sum_of_squares(), 12);
    }

    #[test]
    fn complete_is_j_minus_i() {
        let dm = bfs_distances(&Graph::complete(4).unwrap()).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(dm.get(i, j), i64::from(i != j));
            }
        }
        assert_eq!(dm.is_transmission_regular(), Some(3));
    }

    #[test]
    fn pentagon_is_circulant() {
        let dm = bfs_distances(&Graph::cycle(5).unwrap()).unwrap();
        let first = [0, 1, 2, 2, 1];
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(dm.get(i, j), first[(j + 5 - i) % 5]);
            }
        }
    }

    #[test]
    fn four_cycle_transmission_regular() {
        let dm = bfs_distances(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!(dm.is_transmission_regular(), Some(4));
        assert_eq!(dm.sum_of_squares(), 24);
    }

    #[test]
    fn disconnected_is_rejected() {
        let c3 = Graph::cycle(3).unwrap();
        let u = disjoint_union(&[c3.clone(), c3]).unwrap();
        assert_eq!(bfs_distances(&u).unwrap_err(), Error::Disconnected(0, 3));
    }

    #[test]
    fn single_vertex() {
        let dm = bfs_distances(&Graph::complete(1).unwrap()).unwrap();
        assert_eq!(dm.diameter(), 0);
        assert_eq!(dm.is_transmission_regular(), Some(0));
        assert_eq!(dm.distance_degree_profile(), vec![Vec::<usize>::new()]);
    }
}
