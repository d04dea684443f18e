use std::collections::HashMap;

use super::geometry::{Lozenge, Triangle};
use super::region::Region;
use super::{Tiling, TilingError};

// Called with the chosen (up, down) index pairs of each complete matching.
type Visit<'a> = dyn FnMut(&[(usize, usize)]) -> Result<(), TilingError> + 'a;

/// Perfect-matching search over the triangle adjacency graph of a region.
///
/// Triangles are visited in their row-by-row order; the smallest uncovered
/// triangle is always paired next, trying its neighbors in order. This code
/// knows nothing about paths or shapes.
struct Matcher {
    triangles: Vec<Triangle>,
    adjacency: Vec<Vec<usize>>,
    covered: Vec<bool>,
    chosen: Vec<(usize, usize)>,
}

impl Matcher {
    fn new(region: &Region) -> Self {
        let triangles: Vec<Triangle> = region.triangles().iter().copied().collect();
        let index: HashMap<Triangle, usize> = triangles.iter().enumerate().map(|(i, t)| (*t, i)).collect();
        let adjacency =
            triangles.iter().map(|t| t.neighbors().iter().filter_map(|n| index.get(n).copied()).collect()).collect();
        let covered = vec![false; triangles.len()];
        Matcher { triangles, adjacency, covered, chosen: Vec::new() }
    }

    fn search(&mut self, from: usize, visit: &mut Visit<'_>) -> Result<(), TilingError> {
        let Some(first) = (from..self.triangles.len()).find(|&i| !self.covered[i]) else {
            return visit(&self.chosen);
        };
        self.covered[first] = true;
        for k in 0..self.adjacency[first].len() {
            let other = self.adjacency[first][k];
            if self.covered[other] {
                continue;
            }
            self.covered[other] = true;
            self.chosen.push((first, other));
            let outcome = self.search(first + 1, visit);
            self.chosen.pop();
            self.covered[other] = false;
            outcome?;
        }
        self.covered[first] = false;
        Ok(())
    }

    fn tiling(&self, pairs: &[(usize, usize)]) -> Tiling {
        Tiling::new(
            pairs
                .iter()
                .map(|&(i, j)| {
                    Lozenge::from_triangles(self.triangles[i], self.triangles[j])
                        .expect("adjacent triangles form a lozenge")
                })
                .collect(),
        )
    }
}

/// All lozenge tilings of `region`, in search order. The empty region has
/// exactly one (empty) tiling.
pub fn enumerate_tilings(region: &Region, cap: usize) -> Result<Vec<Tiling>, TilingError> {
    let mut matcher = Matcher::new(region);
    let mut pairs_found: Vec<Vec<(usize, usize)>> = Vec::new();
    matcher.search(0, &mut |pairs| {
        if pairs_found.len() == cap {
            return Err(TilingError::CapExceeded { cap });
        }
        pairs_found.push(pairs.to_vec());
        Ok(())
    })?;
    Ok(pairs_found.iter().map(|pairs| matcher.tiling(pairs)).collect())
}

/// Number of lozenge tilings of `region`, without materializing them.
pub fn count_tilings(region: &Region, cap: usize) -> Result<usize, TilingError> {
    let mut matcher = Matcher::new(region);
    let mut count = 0;
    matcher.search(0, &mut |_| {
        if count == cap {
            return Err(TilingError::CapExceeded { cap });
        }
        count += 1;
        Ok(())
    })?;
    Ok(count)
}
