use super::SampledPath;
use crate::error::{Error, Result};

/// Points `c = t_0 < t_1 < ... < t_n = d`.
#[derive(Clone, Debug, PartialEq)]
pub struct Partition {
    points: Vec<f64>,
}

impl Partition {
    pub fn new(points: Vec<f64>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::BadCount {
                count: points.len(),
                min: 2,
            });
        }
        if let Some(index) = points.iter().position(|t| !t.is_finite()) {
            return Err(Error::NonFiniteValue { index });
        }
        if let Some(i) = points.windows(2).position(|w| w[1] <= w[0]) {
            return Err(Error::NonMonotoneTimes { index: i + 1 });
        }
        Ok(Partition { points })
    }

    /// Partition through the samples of `path` at the given strictly increasing indices.
    pub fn from_indices(path: &SampledPath, indices: &[usize]) -> Result<Self> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= path.len()) {
            return Err(Error::BadParameter(format!(
                "index {bad} out of range for {} samples",
                path.len()
            )));
        }
        Self::new(indices.iter().map(|&i| path.times()[i]).collect())
    }

    /// `cells` equal cells of `[c, d]`.
    pub fn uniform(c: f64, d: f64, cells: usize) -> Result<Self> {
        if cells == 0 {
            return Err(Error::BadCount { count: 0, min: 1 });
        }
        if !(c < d) {
            return Err(Error::EmptyInterval { c, d });
        }
        Self::new(super::generate::uniform_grid(cells + 1, c, d))
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn cells(&self) -> usize {
        self.points.len() - 1
    }

    pub fn start(&self) -> f64 {
        self.points[0]
    }

    pub fn end(&self) -> f64 {
        self.points[self.points.len() - 1]
    }
}

/// A partition with one tag `t_{i-1} <= xi_i <= t_i` per cell.
#[derive(Clone, Debug, PartialEq)]
pub struct TaggedPartition {
    partition: Partition,
    tags: Vec<f64>,
}

impl TaggedPartition {
    pub fn new(partition: Partition, tags: Vec<f64>) -> Result<Self> {
        if tags.len() != partition.cells() {
            return Err(Error::LengthMismatch {
                times: partition.cells(),
                values: tags.len(),
            });
        }
        let pts = partition.points();
        for (i, &xi) in tags.iter().enumerate() {
            if !(pts[i] <= xi && xi <= pts[i + 1]) {
                return Err(Error::BadParameter(format!(
                    "tag {xi} lies outside cell [{}, {}]",
                    pts[i],
                    pts[i + 1]
                )));
            }
        }
        Ok(TaggedPartition { partition, tags })
    }

    pub fn left(partition: Partition) -> Self {
        let tags = partition.points()[..partition.cells()].to_vec();
        TaggedPartition { partition, tags }
    }

    pub fn right(partition: Partition) -> Self {
        let tags = partition.points()[1..].to_vec();
        TaggedPartition { partition, tags }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn tags(&self) -> &[f64] {
        &self.tags
    }
}
