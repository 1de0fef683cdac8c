//! Small dense-vector kernels over `&[f64]`.
//!
//! Everything in this crate works on flat row-major buffers; these helpers
//! keep the index arithmetic in one place. All functions assume matching
//! lengths (checked with `debug_assert!`).

use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

#[inline]
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[inline]
pub fn norm_sq(v: &[f64]) -> f64 {
    dot(v, v)
}

#[inline]
pub fn norm(v: &[f64]) -> f64 {
    norm_sq(v).sqrt()
}

#[inline]
pub fn dist_sq(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let d = x - y;
            d * d
        })
        .sum()
}

#[inline]
pub fn dist(a: &[f64], b: &[f64]) -> f64 {
    dist_sq(a, b).sqrt()
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `y += alpha * x`
#[inline]
pub fn axpy(y: &mut [f64], alpha: f64, x: &[f64]) {
    debug_assert_eq!(y.len(), x.len());
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

#[inline]
pub fn scale(v: &mut [f64], alpha: f64) {
    for vi in v.iter_mut() {
        *vi *= alpha;
    }
}

pub fn scaled(v: &[f64], alpha: f64) -> Vec<f64> {
    v.iter().map(|x| x * alpha).collect()
}

/// Row-major matrix–vector product: `mat` is `rows × cols`.
pub fn matvec(mat: &[f64], rows: usize, cols: usize, v: &[f64]) -> Vec<f64> {
    debug_assert_eq!(mat.len(), rows * cols);
    debug_assert_eq!(v.len(), cols);
    let mut out = Vec::with_capacity(rows);
    for r in 0..rows {
        out.push(dot(&mat[r * cols..(r + 1) * cols], v));
    }
    out
}
