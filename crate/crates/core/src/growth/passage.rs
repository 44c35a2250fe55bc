use crate::growth::weights::{WeightField, WeightKind};
use crate::params::ModelParams;

/// The dynamic-programming table of last-passage times:
/// `G(i,j) = w(i,j) + max(G(i-1,j), G(i,j-1))`.
#[derive(Debug, Clone)]
pub struct PassageGrid {
    pub params: ModelParams,
    pub kind: WeightKind,
    values: Vec<f64>, // row-major like WeightField
}

impl PassageGrid {
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[(j - 1) * self.params.m + (i - 1)]
    }

    /// G(M, N), the passage time to the far corner.
    pub fn corner(&self) -> f64 {
        self.get(self.params.m, self.params.n)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Fill the DP table. `G(M,N)` equals the maximum of the weight sum over
/// all up/right paths from (1,1) to (M,N).
pub fn last_passage(weights: &WeightField) -> PassageGrid {
    let (m, n) = (weights.params.m, weights.params.n);
    let mut values = vec![0.0f64; m * n];
    for j in 1..=n {
        for i in 1..=m {
            let up = if j > 1 { values[(j - 2) * m + (i - 1)] } else { 0.0 };
            let left = if i > 1 { values[(j - 1) * m + (i - 2)] } else { 0.0 };
            values[(j - 1) * m + (i - 1)] = weights.get(i, j) + up.max(left);
        }
    }
    PassageGrid {
        params: weights.params,
        kind: weights.kind,
        values,
    }
}

/// The shifted table `G*(i,j) = G(i,j) + i + j - 1`, the cell-addition
/// times of the growth process (all up/right paths to (i,j) have the same
/// length, so adding 1 to every weight adds i + j - 1 to every path sum).
pub fn passage_star(grid: &PassageGrid) -> PassageGrid {
    let m = grid.params.m;
    let mut values = grid.values.clone();
    for j in 1..=grid.params.n {
        for i in 1..=m {
            values[(j - 1) * m + (i - 1)] += (i + j - 1) as f64;
        }
    }
    PassageGrid {
        params: grid.params,
        kind: match grid.kind {
            WeightKind::Geometric => WeightKind::GeometricStar,
            k => k,
        },
        values,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::growth::weights::sample_weights;

    fn field_from(params: ModelParams, vals: &[f64]) -> WeightField {
        WeightField::from_entries(params, WeightKind::Geometric, vals.to_vec()).unwrap()
    }

    #[test]
    fn two_by_two_hand_example() {
        // w(1,1)=1, w(2,1)=2, w(1,2)=3, w(2,2)=4; the two paths sum to 7 and 8.
        let p = ModelParams::new(0.5, 2, 2).unwrap();
        let w = field_from(p, &[1.0, 2.0, 3.0, 4.0]);
        let g = last_passage(&w);
        assert_eq!(g.corner(), 8.0);
        let gs = passage_star(&g);
        assert_eq!(gs.corner(), 11.0);
        assert_eq!(gs.get(1, 1), 1.0 + 1.0);
    }

    #[test]
    fn all_zero_weights() {
        let p = ModelParams::new(0.5, 4, 3).unwrap();
        let w = field_from(p, &vec![0.0; 12]);
        assert_eq!(last_passage(&w).corner(), 0.0);
    }

    #[test]
    fn single_column_is_a_sum() {
        let p = ModelParams::new(0.5, 7, 1).unwrap();
        let w = sample_weights(p, WeightKind::Geometric, 5).unwrap();
        let g = last_passage(&w);
        assert_eq!(g.corner(), w.total());
    }

    #[test]
    fn monotone_in_each_argument() {
        let p = ModelParams::new(0.4, 9, 6).unwrap();
        let w = sample_weights(p, WeightKind::Geometric, 17).unwrap();
        let g = last_passage(&w);
        for j in 1..=6 {
            for i in 2..=9 {
                assert!(g.get(i, j) >= g.get(i - 1, j));
            }
        }
        for j in 2..=6 {
            for i in 1..=9 {
                assert!(g.get(i, j) >= g.get(i, j - 1));
            }
        }
        assert!(g.corner() <= w.total());
    }

    #[test]
    fn star_equals_direct_star_weights() {
        // dual route: G computed from w* equals G + i + j - 1 entrywise
        let p = ModelParams::new(0.6, 5, 4).unwrap();
        let g = last_passage(&sample_weights(p, WeightKind::Geometric, 23).unwrap());
        let direct = last_passage(&sample_weights(p, WeightKind::GeometricStar, 23).unwrap());
        let shifted = passage_star(&g);
        for j in 1..=4 {
            for i in 1..=5 {
                assert_eq!(shifted.get(i, j), direct.get(i, j));
            }
        }
    }

    #[test]
    fn monotone_coupling_under_weight_increase() {
        let p = ModelParams::new(0.5, 6, 5).unwrap();
        let w = sample_weights(p, WeightKind::Geometric, 31).unwrap();
        let base = last_passage(&w).corner();
        for cell in 0..30 {
            let mut vals = w.entries().to_vec();
            vals[cell] += 2.0;
            let bumped = last_passage(&field_from(p, &vals)).corner();
            assert!(bumped >= base);
        }
    }
}
