//! Complex matrix operators and principal-component extraction.
//!
//! Provides the entrywise complex sign `csgn`, the polar-factor projection
//! `unt`, the matrix norms used throughout the crate, classical SVD-based PCA,
//! and the L1-norm PCA fixed-point iteration that powers the robust Tucker
//! engines in [`crate::tucker`].

use faer::{c64, Mat, MatRef};

use crate::error::{Error, Result};

/// Orthonormality tolerance for [`SemiUnitary`] columns.
pub const SEMI_UNITARY_TOL: f64 = 1e-10;

/// A complex matrix with orthonormal columns (`P^H P = I`).
///
/// Construction through [`SemiUnitary::new`] enforces the invariant to
/// [`SEMI_UNITARY_TOL`]; decomposition routines build their factors through
/// SVD factors that satisfy it by construction.
#[derive(Clone, Debug)]
pub struct SemiUnitary {
    mat: Mat<c64>,
}

impl SemiUnitary {
    /// Validate and wrap a matrix with orthonormal columns.
    pub fn new(mat: Mat<c64>) -> Result<Self> {
        if mat.ncols() > mat.nrows() {
            return Err(Error::DimMismatch(format!(
                "semi-unitary matrix needs at least as many rows as columns, got {}x{}",
                mat.nrows(),
                mat.ncols()
            )));
        }
        let defect = Self::orthonormality_defect(mat.as_ref());
        if defect > SEMI_UNITARY_TOL {
            return Err(Error::NotSemiUnitary { defect });
        }
        Ok(Self { mat })
    }

    pub(crate) fn new_unchecked(mat: Mat<c64>) -> Self {
        debug_assert!(Self::orthonormality_defect(mat.as_ref()) <= 1e-8);
        Self { mat }
    }

    /// Largest entry of `P^H P - I` in absolute value.
    pub fn orthonormality_defect(mat: MatRef<'_, c64>) -> f64 {
        let gram = mat.adjoint() * mat;
        let id: Mat<c64> = Mat::identity(mat.ncols(), mat.ncols());
        (&gram - &id).norm_max()
    }

    pub fn mat(&self) -> MatRef<'_, c64> {
        self.mat.as_ref()
    }

    pub fn into_mat(self) -> Mat<c64> {
        self.mat
    }

    pub fn rows(&self) -> usize {
        self.mat.nrows()
    }

    pub fn cols(&self) -> usize {
        self.mat.ncols()
    }

    /// Orthogonal projector `P P^H` onto the column space. Subspaces are
    /// compared through projectors since factor matrices are only defined up
    /// to a right-unitary transform.
    pub fn projector(&self) -> Mat<c64> {
        &self.mat * self.mat.adjoint()
    }

    /// Frobenius distance between the column-space projectors of `self` and
    /// `other`.
    pub fn projector_distance(&self, other: &SemiUnitary) -> f64 {
        frobenius_norm((&self.projector() - &other.projector()).as_ref())
    }
}

/// Entrywise complex sign: `a_ij / |a_ij|`, with zero entries mapped to `1`
/// so the output is always unimodular.
pub fn csgn(a: MatRef<'_, c64>) -> Mat<c64> {
    Mat::from_fn(a.nrows(), a.ncols(), |i, j| {
        let z = a[(i, j)];
        let m = z.norm();
        if m == 0.0 {
            c64::new(1.0, 0.0)
        } else {
            z / m
        }
    })
}

/// Polar-factor projection: for `A = U D V^H` (thin SVD), returns `U V^H`,
/// the nearest matrix with orthonormal columns when `A` is tall with full
/// column rank.
pub fn unt(a: MatRef<'_, c64>) -> Result<Mat<c64>> {
    if a.norm_max() == 0.0 {
        return Err(Error::ZeroMatrix);
    }
    let svd = a.thin_svd().map_err(|_| Error::SvdFailed)?;
    Ok(svd.U() * svd.V().adjoint())
}

/// Sum of entry moduli.
pub fn l1_norm(a: MatRef<'_, c64>) -> f64 {
    let mut acc = 0.0;
    for j in 0..a.ncols() {
        for i in 0..a.nrows() {
            acc += a[(i, j)].norm();
        }
    }
    acc
}

/// Square root of the sum of squared entry moduli.
pub fn frobenius_norm(a: MatRef<'_, c64>) -> f64 {
    let mut acc = 0.0;
    for j in 0..a.ncols() {
        for i in 0..a.nrows() {
            acc += a[(i, j)].norm_sqr();
        }
    }
    acc.sqrt()
}

/// Sum of singular values.
pub fn nuclear_norm(a: MatRef<'_, c64>) -> Result<f64> {
    let sv = a.singular_values().map_err(|_| Error::SvdFailed)?;
    Ok(sv.iter().sum())
}

/// First `k` left singular vectors (singular values nonincreasing).
pub fn svd_pca(x: MatRef<'_, c64>, k: usize) -> Result<SemiUnitary> {
    assert!(k >= 1, "rank must be positive");
    let max = x.nrows().min(x.ncols());
    if k > max {
        return Err(Error::RankTooLarge { requested: k, max });
    }
    let svd = x.thin_svd().map_err(|_| Error::SvdFailed)?;
    Ok(SemiUnitary::new_unchecked(
        svd.U().submatrix(0, 0, x.nrows(), k).to_owned(),
    ))
}

/// Settings for the L1-PCA fixed-point iteration.
#[derive(Clone, Debug)]
pub struct L1PcaConfig {
    /// Number of components to extract.
    pub rank: usize,
    /// Stop once the nuclear norm of `X B` changes by no more than this.
    pub delta: f64,
    /// Hard cap on iterations, guarding against limit cycles right at the
    /// tolerance boundary.
    pub max_iters: usize,
}

impl L1PcaConfig {
    pub fn new(rank: usize) -> Self {
        Self {
            rank,
            delta: 1e-6,
            max_iters: 500,
        }
    }
}

/// Result of [`l1_pca`].
#[derive(Clone, Debug)]
pub struct L1PcaOutcome {
    /// The extracted components `P = unt(X B)`.
    pub basis: SemiUnitary,
    /// `||P^H X||_1` at the returned basis.
    pub objective: f64,
    /// Number of sign-matrix updates performed.
    pub iters: usize,
    /// `||X B^(k)||_*` for `k = 0, 1, ...`; nondecreasing.
    pub nuclear_trace: Vec<f64>,
}

/// Fixed-point iteration maximizing `||P^H X||_1` over matrices with `rank`
/// orthonormal columns.
///
/// Starting from `B^(0) = csgn(X^H P0)`, repeats
/// `B^(k) = csgn(X^H unt(X B^(k-1)))` until the nuclear norm of `X B^(k)`
/// stabilizes to within `delta`, then returns `P = unt(X B)`. The nuclear
/// norm sequence increases monotonically, so the iteration terminates. The
/// objective is nonconvex: the result is a fixed point, not necessarily the
/// global maximizer, and depends on `p0`.
pub fn l1_pca(x: MatRef<'_, c64>, cfg: &L1PcaConfig, p0: &SemiUnitary) -> Result<L1PcaOutcome> {
    assert!(cfg.delta > 0.0, "delta must be positive");
    assert!(cfg.max_iters >= 1, "max_iters must be at least 1");
    if x.norm_max() == 0.0 {
        return Err(Error::ZeroMatrix);
    }
    if p0.rows() != x.nrows() || p0.cols() != cfg.rank {
        return Err(Error::DimMismatch(format!(
            "initial basis is {}x{}, expected {}x{}",
            p0.rows(),
            p0.cols(),
            x.nrows(),
            cfg.rank
        )));
    }

    let mut b = csgn((x.adjoint() * p0.mat()).as_ref());
    let mut xb = x * &b;
    let mut trace = vec![nuclear_norm(xb.as_ref())?];
    let mut iters = 0;
    loop {
        let p = unt(xb.as_ref())?;
        b = csgn((x.adjoint() * &p).as_ref());
        xb = x * &b;
        trace.push(nuclear_norm(xb.as_ref())?);
        iters += 1;
        let delta = (trace[iters] - trace[iters - 1]).abs();
        if delta <= cfg.delta || iters >= cfg.max_iters {
            break;
        }
    }
    let p = unt(xb.as_ref())?;
    let objective = l1_norm((p.adjoint() * x).as_ref());
    Ok(L1PcaOutcome {
        basis: SemiUnitary::new_unchecked(p),
        objective,
        iters,
        nuclear_trace: trace,
    })
}
