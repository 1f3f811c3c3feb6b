use super::SimplicialSet;

/// A levelwise map between truncated simplicial sets, `levels[n][x]` being
/// the image of simplex `x` on level `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    pub levels: Vec<Vec<usize>>,
}

impl SimplicialMap {
    pub fn identity(x: &SimplicialSet) -> Self {
        Self { levels: (0..=x.cutoff()).map(|n| (0..x.level_size(n)).collect()).collect() }
    }

    pub fn apply(&self, n: usize, x: usize) -> usize {
        self.levels[n][x]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &SimplicialMap) -> SimplicialMap {
        let levels = first
            .levels
            .iter()
            .zip(&self.levels)
            .map(|(f, g)| f.iter().map(|&y| g[y]).collect())
            .collect();
        SimplicialMap { levels }
    }

    /// Checks shapes and commutation with every face and degeneracy.
    pub fn check(&self, source: &SimplicialSet, target: &SimplicialSet) -> Result<(), String> {
        if source.cutoff() != target.cutoff() || self.levels.len() != source.cutoff() + 1 {
            return Err("cutoffs do not match".into());
        }
        for n in 0..=source.cutoff() {
            if self.levels[n].len() != source.level_size(n) {
                return Err(format!("level {n} has {} images for {} simplices", self.levels[n].len(), source.level_size(n)));
            }
            if let Some(&y) = self.levels[n].iter().find(|&&y| y >= target.level_size(n)) {
                return Err(format!("level {n} maps to {y}, outside the target"));
            }
        }
        for n in 1..=source.cutoff() {
            for i in 0..=n {
                for x in 0..source.level_size(n) {
                    if self.apply(n - 1, source.face(n, i, x)) != target.face(n, i, self.apply(n, x)) {
                        return Err(format!("does not commute with d_{i} on {}", source.label(n, x)));
                    }
                }
            }
        }
        for n in 0..source.cutoff() {
            for i in 0..=n {
                for x in 0..source.level_size(n) {
                    if self.apply(n + 1, source.degeneracy(n, i, x)) != target.degeneracy(n, i, self.apply(n, x)) {
                        return Err(format!("does not commute with s_{i} on {}", source.label(n, x)));
                    }
                }
            }
        }
        Ok(())
    }
}
