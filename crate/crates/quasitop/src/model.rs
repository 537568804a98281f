//! Chain Hamiltonians: the Harper chain with open or twisted-periodic
//! boundaries, the two-component superconducting (BdG) chain, and the
//! non-Hermitian fluctuation operator obtained by peeling off an
//! exponential envelope.

use crate::approximant::RationalFlux;
use crate::error::{Error, Result};
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

/// Boundary condition of the Harper chain.
///
/// `Bloch(theta)` closes one period of length q into a ring whose
/// corner hopping carries the full accumulated phase e^{i theta},
/// theta in [0, 2pi). Sweeping theta uniformly covers the Bloch
/// momenta of the periodic system (theta = k q).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Boundary {
    Open,
    Bloch(f64),
}

/// Full specification of one Harper chain instance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HarperParams {
    pub lambda: f64,
    pub flux: RationalFlux,
    pub phi: f64,
    pub boundary: Boundary,
}

impl HarperParams {
    /// Validate and normalize: lambda >= 0, phi wrapped into [0, 1),
    /// Bloch phase wrapped into [0, 2pi).
    pub fn new(lambda: f64, flux: RationalFlux, phi: f64, boundary: Boundary) -> Result<Self> {
        if !(lambda >= 0.0) {
            return Err(Error::InvalidArgument(format!(
                "lambda must be >= 0, got {lambda}"
            )));
        }
        let boundary = match boundary {
            Boundary::Open => Boundary::Open,
            Boundary::Bloch(theta) => Boundary::Bloch(theta.rem_euclid(TAU)),
        };
        Ok(Self {
            lambda,
            flux,
            phi: phi.rem_euclid(1.0),
            boundary,
        })
    }

    /// On-site potential V_n = 2 lambda cos(2 pi (p n / q + phi)).
    pub fn potential(&self, n: i64) -> f64 {
        harper_potential(self.lambda, self.flux, self.phi, n)
    }
}

/// V_n = 2 lambda cos(2 pi (p n / q + phi)).
pub fn harper_potential(lambda: f64, flux: RationalFlux, phi: f64, n: i64) -> f64 {
    // Reduce p n mod q in integers first so large n costs no precision.
    let q = flux.q() as i64;
    let m = (flux.p() as i64 * n.rem_euclid(q)).rem_euclid(q);
    2.0 * lambda * (TAU * (m as f64 / q as f64 + phi)).cos()
}

/// Where a matrix came from, for diagnostics and downstream labels.
#[derive(Debug, Clone, PartialEq)]
pub enum MatrixSource {
    Harper { params: HarperParams, length: usize },
    Bdg { params: BdgParams },
    Other(String),
}

impl MatrixSource {
    pub fn fingerprint(&self) -> String {
        match self {
            MatrixSource::Harper { params, length } => format!(
                "harper(lambda={}, flux={}, phi={}, boundary={:?}, length={length})",
                params.lambda, params.flux, params.phi, params.boundary
            ),
            MatrixSource::Bdg { params } => format!(
                "bdg(delta={}, lambda={}, flux={}, phi={}, length={}, boundary={:?})",
                params.delta, params.lambda, params.flux, params.phi, params.length,
                params.boundary
            ),
            MatrixSource::Other(s) => s.clone(),
        }
    }
}

/// Dense Hermitian chain Hamiltonian.
#[derive(Debug, Clone)]
pub struct ChainMatrix {
    entries: DMatrix<Complex64>,
    source: MatrixSource,
}

const HERMITICITY_TOL: f64 = 1e-14;

impl ChainMatrix {
    /// Wrap a dense matrix, enforcing Hermiticity to 1e-14.
    pub fn new(entries: DMatrix<Complex64>, source: MatrixSource) -> Result<Self> {
        let n = entries.nrows();
        if n == 0 || entries.ncols() != n {
            return Err(Error::InvalidArgument(format!(
                "chain matrix must be square and nonempty, got {}x{}",
                entries.nrows(),
                entries.ncols()
            )));
        }
        let mut deviation = 0.0f64;
        for i in 0..n {
            for j in i..n {
                let d = (entries[(i, j)] - entries[(j, i)].conj()).norm();
                deviation = deviation.max(d);
            }
        }
        if deviation > HERMITICITY_TOL {
            return Err(Error::NonHermitian { deviation });
        }
        Ok(Self { entries, source })
    }

    pub fn dimension(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn source(&self) -> &MatrixSource {
        &self.source
    }

    /// True when every imaginary part is negligible, so the real
    /// symmetric eigensolver path applies.
    pub fn is_real(&self) -> bool {
        self.entries.iter().all(|z| z.im.abs() < 1e-15)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dimension()).map(|i| self.entries[(i, i)]).sum()
    }
}

/// Build the Harper chain matrix: hopping 1 between adjacent sites,
/// diagonal V_n, eigenvalues satisfying
/// psi_{n+1} + psi_{n-1} + V_n psi_n = E psi_n directly.
///
/// A Bloch boundary requires length = q (one period) and adds corner
/// hopping with phase e^{i theta}: the hop from site q-1 wrapping to
/// site 0 carries e^{i theta}, its conjugate the reverse.
pub fn build_harper(params: &HarperParams, length: usize) -> Result<ChainMatrix> {
    let q = params.flux.q() as usize;
    if length < 2 {
        return Err(Error::InvalidArgument(format!(
            "chain length must be >= 2, got {length}"
        )));
    }
    if matches!(params.boundary, Boundary::Bloch(_)) && length != q {
        return Err(Error::InvalidArgument(format!(
            "Bloch boundary requires length = q = {q}, got {length}"
        )));
    }
    let mut h = DMatrix::<Complex64>::zeros(length, length);
    for n in 0..length {
        h[(n, n)] = Complex64::new(params.potential(n as i64), 0.0);
        if n + 1 < length {
            h[(n, n + 1)] += Complex64::new(1.0, 0.0);
            h[(n + 1, n)] += Complex64::new(1.0, 0.0);
        }
    }
    if let Boundary::Bloch(theta) = params.boundary {
        let phase = Complex64::from_polar(1.0, theta);
        h[(length - 1, 0)] += phase;
        h[(0, length - 1)] += phase.conj();
    }
    ChainMatrix::new(
        h,
        MatrixSource::Harper {
            params: *params,
            length,
        },
    )
}

/// Boundary condition of the superconducting chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BdgBoundary {
    Open,
    Periodic,
}

/// Parameters of the two-component superconducting chain.
///
/// The anisotropic couplings are derived from the gap parameter:
/// xi = asinh(delta / 2), J_x = e^{-xi}, J_y = e^{xi}, so that
/// J_x J_y = 1 and J_y - J_x = delta hold exactly.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BdgParams {
    pub delta: f64,
    pub lambda: f64,
    pub flux: RationalFlux,
    pub phi: f64,
    pub length: usize,
    pub boundary: BdgBoundary,
}

impl BdgParams {
    pub fn new(
        delta: f64,
        lambda: f64,
        flux: RationalFlux,
        phi: f64,
        length: usize,
        boundary: BdgBoundary,
    ) -> Result<Self> {
        if !(lambda >= 0.0) {
            return Err(Error::InvalidArgument(format!(
                "lambda must be >= 0, got {lambda}"
            )));
        }
        if length < 2 {
            return Err(Error::InvalidArgument(format!(
                "BdG chain length must be >= 2, got {length}"
            )));
        }
        Ok(Self {
            delta,
            lambda,
            flux,
            phi: phi.rem_euclid(1.0),
            length,
            boundary,
        })
    }

    pub fn xi(&self) -> f64 {
        (self.delta / 2.0).asinh()
    }

    pub fn j_x(&self) -> f64 {
        (-self.xi()).exp()
    }

    pub fn j_y(&self) -> f64 {
        self.xi().exp()
    }

    pub fn potential(&self, n: i64) -> f64 {
        harper_potential(self.lambda, self.flux, self.phi, n)
    }
}

/// Index of the f component of site n in the interleaved BdG vector.
pub fn bdg_f_index(n: usize) -> usize {
    2 * n
}

/// Index of the g component of site n in the interleaved BdG vector.
pub fn bdg_g_index(n: usize) -> usize {
    2 * n + 1
}

/// Build the 2L x 2L BdG matrix on interleaved (f_n, g_n) components.
///
/// Row 2n+1 (producing E g_n): J_x f_{n+1} + J_y f_{n-1} + V_n f_n.
/// Row 2n  (producing E f_n): J_y g_{n+1} + J_x g_{n-1} + V_n g_n.
/// Open boundaries drop the wraparound terms. The matrix is real
/// symmetric, so the spectrum comes in +-E pairs.
pub fn build_bdg(params: &BdgParams) -> Result<ChainMatrix> {
    let l = params.length;
    let (j_x, j_y) = (params.j_x(), params.j_y());
    let mut h = DMatrix::<Complex64>::zeros(2 * l, 2 * l);
    let re = |x: f64| Complex64::new(x, 0.0);
    for n in 0..l {
        let v = re(params.potential(n as i64));
        h[(bdg_g_index(n), bdg_f_index(n))] += v;
        h[(bdg_f_index(n), bdg_g_index(n))] += v;
        let neighbors: &[(i64, f64, f64)] = &[(1, j_x, j_y), (-1, j_y, j_x)];
        for &(step, f_coupling, g_coupling) in neighbors {
            let m = n as i64 + step;
            let m = match params.boundary {
                BdgBoundary::Periodic => m.rem_euclid(l as i64) as usize,
                BdgBoundary::Open => {
                    if m < 0 || m >= l as i64 {
                        continue;
                    }
                    m as usize
                }
            };
            h[(bdg_g_index(n), bdg_f_index(m))] += re(f_coupling);
            h[(bdg_f_index(n), bdg_g_index(m))] += re(g_coupling);
        }
    }
    ChainMatrix::new(h, MatrixSource::Bdg { params: *params })
}

/// Non-Hermitian tridiagonal operator for the fluctuations about an
/// exponentially decaying envelope: super-diagonal e^{-xi},
/// sub-diagonal e^{+xi}, diagonal V_n, with xi = ln(lambda).
///
/// It is exactly similar to the open Harper chain through
/// D = diag(e^{-n xi}), so its spectrum is real.
#[derive(Debug, Clone)]
pub struct FluctuationMatrix {
    pub diag: Vec<f64>,
    pub sup: f64,
    pub sub: f64,
    pub xi: f64,
}

impl FluctuationMatrix {
    pub fn dimension(&self) -> usize {
        self.diag.len()
    }

    /// Dense form, for residual checks against computed eigenpairs.
    pub fn to_dense(&self) -> DMatrix<f64> {
        let l = self.dimension();
        let mut m = DMatrix::<f64>::zeros(l, l);
        for n in 0..l {
            m[(n, n)] = self.diag[n];
            if n + 1 < l {
                m[(n, n + 1)] = self.sup;
                m[(n + 1, n)] = self.sub;
            }
        }
        m
    }
}

/// Build the fluctuation operator for lambda > 1 on an open chain.
pub fn build_fluctuation(
    lambda: f64,
    flux: RationalFlux,
    phi: f64,
    length: usize,
) -> Result<FluctuationMatrix> {
    if !(lambda > 1.0) {
        return Err(Error::InvalidArgument(format!(
            "fluctuation operator requires lambda > 1 (real positive xi), got {lambda}"
        )));
    }
    if length < 2 {
        return Err(Error::InvalidArgument(format!(
            "chain length must be >= 2, got {length}"
        )));
    }
    let xi = lambda.ln();
    let diag = (0..length)
        .map(|n| harper_potential(lambda, flux, phi.rem_euclid(1.0), n as i64))
        .collect();
    Ok(FluctuationMatrix {
        diag,
        sup: (-xi).exp(),
        sub: xi.exp(),
        xi,
    })
}
