use crate::growth::passage::PassageGrid;
use crate::rng::SplitMix64;

/// The growing Young diagram A(t): `rows[k]` is the height of column
/// k+1, weakly decreasing. Empty list at t = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YoungDiagramState {
    pub t: u64,
    pub rows: Vec<u64>,
}

impl YoungDiagramState {
    pub fn empty() -> Self {
        YoungDiagramState { t: 0, rows: vec![] }
    }

    pub fn cell_count(&self) -> u64 {
        self.rows.iter().sum()
    }

    pub fn is_valid(&self) -> bool {
        self.rows.windows(2).all(|w| w[0] >= w[1]) && self.rows.iter().all(|&r| r > 0)
    }

    /// Conjugate partition (column heights <-> row lengths).
    pub fn conjugate(&self) -> Vec<u64> {
        let max = self.rows.first().copied().unwrap_or(0);
        (1..=max)
            .map(|h| self.rows.iter().filter(|&&r| r >= h).count() as u64)
            .collect()
    }

    /// Cells that may be added while keeping the diagram shape: one at the
    /// end of each strictly shorter column plus a fresh column of height 1.
    pub fn addable_cells(&self) -> Vec<(usize, u64)> {
        let mut out = Vec::new();
        for (k, &h) in self.rows.iter().enumerate() {
            let above = if k == 0 { u64::MAX } else { self.rows[k - 1] };
            if h < above {
                out.push((k, h + 1));
            }
        }
        out.push((self.rows.len(), 1));
        out
    }
}

/// Read A(t) off the shifted passage grid: column k holds the cells (k, j)
/// with `G*(k,j) <= t`. Pass `t = u64::MAX` as the "t = infinity" sentinel.
pub fn diagram_at(gstar: &PassageGrid, t: u64) -> YoungDiagramState {
    let (m, n) = (gstar.params.m, gstar.params.n);
    let tf = if t == u64::MAX { f64::INFINITY } else { t as f64 };
    let mut rows = Vec::new();
    for i in 1..=m {
        let mut h = 0u64;
        for j in 1..=n {
            if gstar.get(i, j) <= tf {
                h = j as u64;
            } else {
                break;
            }
        }
        if h == 0 {
            break; // G* is monotone in i, later columns are empty too
        }
        rows.push(h);
    }
    YoungDiagramState { t, rows }
}

/// One step of the growth dynamics: every addable corner is filled
/// independently with probability 1 - q.
pub fn grow_step(state: &YoungDiagramState, q: f64, rng: &mut SplitMix64) -> YoungDiagramState {
    let mut rows = state.rows.clone();
    for (col, _height) in state.addable_cells() {
        if rng.next_bool(1.0 - q) {
            if col == rows.len() {
                rows.push(1);
            } else {
                rows[col] += 1;
            }
        }
    }
    YoungDiagramState {
        t: state.t + 1,
        rows,
    }
}
