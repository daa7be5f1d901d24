//! Dense third-order complex tensors: mode unfoldings, mode products,
//! Kronecker products and frontal-slice Hankel construction.
//!
//! Conventions, fixed once and relied on everywhere else in the crate:
//!
//! * Entries are stored column-major: element `(i1, i2, i3)` lives at
//!   `i1 + d1*(i2 + d2*i3)`. This makes the mode-1 unfolding a plain reshape.
//! * The mode-k unfolding is the `I_k x (prod of other dims)` matrix whose
//!   columns are the mode-k fibers, with the *earlier* remaining index varying
//!   fastest. Mode 1 columns are ordered `(i2, i3)` with `i2` fastest, mode 2
//!   `(i1, i3)` with `i1` fastest, mode 3 `(i1, i2)` with `i1` fastest.
//! * Under that ordering, `unfold(A x2 M2 x3 M3, 1) = unfold(A, 1) *
//!   kron(M3, M2)^T`, and analogously for the other modes with the
//!   higher-mode factor always on the left of the Kronecker product. The
//!   alternating decompositions in [`crate::tucker`] depend on this pairing.
//!
//! Mode arguments are 1-based (`1`, `2`, `3`) to match the usual tensor
//! notation; element indices are 0-based.

use faer::{c64, Mat, MatRef};

use crate::error::{Error, Result};

/// Dense complex tensor of order three.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor3 {
    dims: (usize, usize, usize),
    data: Vec<c64>,
}

impl Tensor3 {
    /// All-zero tensor. Dimensions must be positive.
    pub fn zeros(d1: usize, d2: usize, d3: usize) -> Self {
        assert!(d1 > 0 && d2 > 0 && d3 > 0, "tensor dimensions must be positive");
        Self {
            dims: (d1, d2, d3),
            data: vec![c64::new(0.0, 0.0); d1 * d2 * d3],
        }
    }

    /// Build a tensor entry by entry from 0-based indices.
    pub fn from_fn(
        d1: usize,
        d2: usize,
        d3: usize,
        mut f: impl FnMut(usize, usize, usize) -> c64,
    ) -> Self {
        let mut t = Self::zeros(d1, d2, d3);
        for i3 in 0..d3 {
            for i2 in 0..d2 {
                for i1 in 0..d1 {
                    t.data[i1 + d1 * (i2 + d2 * i3)] = f(i1, i2, i3);
                }
            }
        }
        t
    }

    /// Wrap a raw column-major buffer (`i1` fastest, `i3` slowest).
    pub fn from_data(dims: (usize, usize, usize), data: Vec<c64>) -> Result<Self> {
        let (d1, d2, d3) = dims;
        if d1 == 0 || d2 == 0 || d3 == 0 {
            return Err(Error::DimMismatch("tensor dimensions must be positive".into()));
        }
        if data.len() != d1 * d2 * d3 {
            return Err(Error::DimMismatch(format!(
                "buffer holds {} entries, dims {}x{}x{} need {}",
                data.len(),
                d1,
                d2,
                d3,
                d1 * d2 * d3
            )));
        }
        Ok(Self { dims, data })
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    /// Size of the given mode (1-based).
    pub fn dim(&self, mode: usize) -> Result<usize> {
        match mode {
            1 => Ok(self.dims.0),
            2 => Ok(self.dims.1),
            3 => Ok(self.dims.2),
            m => Err(Error::InvalidMode(m)),
        }
    }

    #[inline]
    fn offset(&self, i1: usize, i2: usize, i3: usize) -> usize {
        let (d1, d2, d3) = self.dims;
        assert!(i1 < d1 && i2 < d2 && i3 < d3, "tensor index out of bounds");
        i1 + d1 * (i2 + d2 * i3)
    }

    #[inline]
    pub fn get(&self, i1: usize, i2: usize, i3: usize) -> c64 {
        self.data[self.offset(i1, i2, i3)]
    }

    #[inline]
    pub fn set(&mut self, i1: usize, i2: usize, i3: usize, value: c64) {
        let off = self.offset(i1, i2, i3);
        self.data[off] = value;
    }

    /// Column-major backing storage.
    pub fn data(&self) -> &[c64] {
        &self.data
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Mode-k unfolding as an `I_k x (prod of other dims)` matrix.
    pub fn unfold(&self, mode: usize) -> Result<Mat<c64>> {
        let (d1, d2, d3) = self.dims;
        match mode {
            1 => Ok(Mat::from_fn(d1, d2 * d3, |r, c| {
                self.get(r, c % d2, c / d2)
            })),
            2 => Ok(Mat::from_fn(d2, d1 * d3, |r, c| {
                self.get(c % d1, r, c / d1)
            })),
            3 => Ok(Mat::from_fn(d3, d1 * d2, |r, c| {
                self.get(c % d1, c / d1, r)
            })),
            m => Err(Error::InvalidMode(m)),
        }
    }

    /// Inverse of [`Tensor3::unfold`]: refold a mode-k unfolding into a tensor
    /// with the given dimensions.
    pub fn fold(m: MatRef<'_, c64>, mode: usize, dims: (usize, usize, usize)) -> Result<Self> {
        let (d1, d2, d3) = dims;
        let (rows, cols) = match mode {
            1 => (d1, d2 * d3),
            2 => (d2, d1 * d3),
            3 => (d3, d1 * d2),
            m => return Err(Error::InvalidMode(m)),
        };
        if m.nrows() != rows || m.ncols() != cols {
            return Err(Error::DimMismatch(format!(
                "mode-{mode} unfolding of a {d1}x{d2}x{d3} tensor is {rows}x{cols}, got {}x{}",
                m.nrows(),
                m.ncols()
            )));
        }
        Ok(match mode {
            1 => Self::from_fn(d1, d2, d3, |i1, i2, i3| m[(i1, i2 + d2 * i3)]),
            2 => Self::from_fn(d1, d2, d3, |i1, i2, i3| m[(i2, i1 + d1 * i3)]),
            _ => Self::from_fn(d1, d2, d3, |i1, i2, i3| m[(i3, i1 + d1 * i2)]),
        })
    }

    /// Mode-k product with a matrix `M` of shape `R x I_k`; the result has the
    /// mode-k dimension replaced by `R`.
    pub fn mode_product(&self, mode: usize, m: MatRef<'_, c64>) -> Result<Self> {
        let ik = self.dim(mode)?;
        if m.ncols() != ik {
            return Err(Error::DimMismatch(format!(
                "mode-{mode} product needs {ik} columns, matrix has {}",
                m.ncols()
            )));
        }
        let unfolded = self.unfold(mode)?;
        let product = m * unfolded;
        let mut dims = self.dims;
        match mode {
            1 => dims.0 = m.nrows(),
            2 => dims.1 = m.nrows(),
            _ => dims.2 = m.nrows(),
        }
        Self::fold(product.as_ref(), mode, dims)
    }
}

/// Kronecker product; block `(i, j)` of the result is `a[(i, j)] * b`.
pub fn kronecker(a: MatRef<'_, c64>, b: MatRef<'_, c64>) -> Mat<c64> {
    let (br, bc) = (b.nrows(), b.ncols());
    Mat::from_fn(a.nrows() * br, a.ncols() * bc, |i, j| {
        a[(i / br, j / bc)] * b[(i % br, j % bc)]
    })
}

/// Stack per-symbol sample vectors into a frontal-slice Hankel tensor.
///
/// `samples` holds one length-`N` sample vector per row (`Q x N`); the result
/// is `i1 x i2 x Q` with entry `(a, b, q) = samples[q][a + b]`, which requires
/// `i1 + i2 - 1 = N`. Every frontal slice is a Hankel matrix generated by one
/// row of `samples`.
pub fn fs_hankel(samples: MatRef<'_, c64>, i1: usize, i2: usize) -> Result<Tensor3> {
    let (q, n) = (samples.nrows(), samples.ncols());
    if q == 0 || i1 == 0 || i2 == 0 {
        return Err(Error::DimMismatch("fs-Hankel dimensions must be positive".into()));
    }
    if i1 + i2 - 1 != n {
        return Err(Error::DimMismatch(format!(
            "fs-Hankel needs i1 + i2 - 1 = N; got {i1} + {i2} - 1 != {n}"
        )));
    }
    Ok(Tensor3::from_fn(i1, i2, q, |a, b, slice| samples[(slice, a + b)]))
}

/// Multi-mode product `core x1 U1 x2 U2 x3 U3`.
pub fn reconstruct(
    core: &Tensor3,
    u1: MatRef<'_, c64>,
    u2: MatRef<'_, c64>,
    u3: MatRef<'_, c64>,
) -> Result<Tensor3> {
    core.mode_product(1, u1)?
        .mode_product(2, u2)?
        .mode_product(3, u3)
}
