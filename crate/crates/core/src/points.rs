//! Ordered finite point sets with optional integer labels.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// An ordered collection of points in ℝ^N, stored row-major, optionally
/// carrying one integer label per point.
///
/// Invariants enforced at construction: `dim ≥ 1`, every point has exactly
/// `dim` coordinates, and a label list (when present) has one entry per
/// point.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    data: Vec<f64>,
    dim: usize,
    labels: Option<Vec<i64>>,
}

impl PointSet {
    /// Build from per-point rows. All rows must share one dimension ≥ 1.
    pub fn new(points: Vec<Vec<f64>>, labels: Option<Vec<i64>>) -> Result<Self> {
        let dim = match points.first() {
            Some(p) => p.len(),
            None => {
                return Err(Error::DegenerateInput(
                    "cannot infer dimension of an empty point list".into(),
                ))
            }
        };
        let mut data = Vec::with_capacity(points.len() * dim);
        for (i, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::Dimension {
                    expected: dim,
                    got: p.len(),
                });
            }
            let _ = i;
            data.extend_from_slice(p);
        }
        Self::from_flat(data, dim, labels)
    }

    /// Build from a flat row-major buffer of `len × dim` coordinates.
    pub fn from_flat(data: Vec<f64>, dim: usize, labels: Option<Vec<i64>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Domain("point dimension must be ≥ 1".into()));
        }
        if data.len() % dim != 0 {
            return Err(Error::Dimension {
                expected: dim,
                got: data.len() % dim,
            });
        }
        let n = data.len() / dim;
        if let Some(ref l) = labels {
            if l.len() != n {
                return Err(Error::Domain(format!(
                    "label count {} does not match point count {n}",
                    l.len()
                )));
            }
        }
        Ok(Self { data, dim, labels })
    }

    pub fn len(&self) -> usize {
        self.data.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks_exact(self.dim)
    }

    pub fn labels(&self) -> Option<&[i64]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> Option<i64> {
        self.labels.as_ref().map(|l| l[i])
    }

    pub fn flat(&self) -> &[f64] {
        &self.data
    }

    /// New set containing the given indices, in order, with labels carried
    /// along.
    pub fn subset(&self, indices: &[usize]) -> Self {
        let mut data = Vec::with_capacity(indices.len() * self.dim);
        for &i in indices {
            data.extend_from_slice(self.point(i));
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| indices.iter().map(|&i| l[i]).collect());
        Self {
            data,
            dim: self.dim,
            labels,
        }
    }

    /// Indices of each class, keyed by label, in ascending label order.
    /// Index lists preserve the set's original ordering.
    pub fn class_indices(&self) -> Option<BTreeMap<i64, Vec<usize>>> {
        self.labels.as_ref().map(|labels| {
            let mut map: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
            for (i, &l) in labels.iter().enumerate() {
                map.entry(l).or_default().push(i);
            }
            map
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn rejects_mixed_dimensions() {
        let err = PointSet::new(vec![vec![1.0, 2.0], vec![3.0]], None).unwrap_err();
        assert!(matches!(err, Error::Dimension { expected: 2, got: 1 }));
    }

    #[test]
    fn rejects_label_mismatch() {
        let err = PointSet::new(vec![vec![1.0], vec![2.0]], Some(vec![0])).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
    }

    #[test]
    fn subset_keeps_labels() {
        let ps = PointSet::new(
            vec![vec![0.0], vec![1.0], vec![2.0]],
            Some(vec![5, 6, 7]),
        )
        .unwrap();
        let sub = ps.subset(&[2, 0]);
        assert_eq!(sub.point(0), &[2.0]);
        assert_eq!(sub.labels(), Some(&[7, 5][..]));
    }

    #[test]
    fn class_indices_sorted_by_label() {
        let ps = PointSet::new(
            vec![vec![0.0], vec![1.0], vec![2.0], vec![3.0]],
            Some(vec![1, 0, 1, 0]),
        )
        .unwrap();
        let map = ps.class_indices().unwrap();
        let keys: Vec<i64> = map.keys().copied().collect();
        assert_eq!(keys, vec![0, 1]);
        assert_eq!(map[&0], vec![1, 3]);
        assert_eq!(map[&1], vec![0, 2]);
    }
}
