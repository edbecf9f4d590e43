//! Complex radial fields stored through v = r·u and the phase-optimal
//! orbit distance of Definition-style orbital stability diagnostics.
//!
//! Translations are deliberately omitted: the infimum runs over the phase
//! only, which is exact in the radial class. The minimizing phase has the
//! closed form θ* = arg ⟨u, Q⟩_{H¹} for real Q, so no search is needed.

use crate::error::{Error, Result};
use crate::grid::{integrate_radial, gradient_norm_sq, RadialGrid, RealRadialFunction, FOUR_PI};
use rustfft::num_complex::Complex64;

/// Time-dependent complex radial field u(t, r), stored as v(r) = r·u(r)
/// with Dirichlet endpoints (v extrapolates to 0 at the origin and the
/// last node is the outer wall).
#[derive(Debug, Clone)]
pub struct ComplexRadialField {
    pub grid: RadialGrid,
    pub v_values: Vec<Complex64>,
    pub time: f64,
}

impl ComplexRadialField {
    pub fn new(grid: RadialGrid, v_values: Vec<Complex64>, time: f64) -> Result<Self> {
        if v_values.len() != grid.n() {
            return Err(Error::GridMismatch);
        }
        if v_values.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidField);
        }
        Ok(Self { grid, v_values, time })
    }

    /// Lift a real radial function u(r) to the v = r·u representation.
    pub fn from_real(u: &RealRadialFunction) -> Self {
        let v_values = u
            .values
            .iter()
            .zip(u.grid.nodes())
            .map(|(&q, r)| Complex64::new(q * r, 0.0))
            .collect();
        Self { grid: u.grid.clone(), v_values, time: 0.0 }
    }

    /// Samples of u(r_i) = v_i / r_i.
    pub fn u_values(&self) -> Vec<Complex64> {
        self.v_values
            .iter()
            .zip(self.grid.nodes())
            .map(|(&v, r)| v / r)
            .collect()
    }

    pub fn scale_amplitude(&mut self, factor: f64) {
        for v in &mut self.v_values {
            *v *= factor;
        }
    }
}

/// H¹ data of a complex field: (‖u‖²_{H¹}, ∇-part, mass-part).
fn h1_norm_sq(u: &ComplexRadialField) -> Result<f64> {
    let (re, im) = split(u);
    let g = gradient_norm_sq(&re)? + gradient_norm_sq(&im)?;
    let m = integrate_radial(&re, 2)? + integrate_radial(&im, 2)?;
    Ok(g + m)
}

fn split(u: &ComplexRadialField) -> (RealRadialFunction, RealRadialFunction) {
    let uu = u.u_values();
    let re = RealRadialFunction {
        grid: u.grid.clone(),
        values: uu.iter().map(|z| z.re).collect(),
    };
    let im = RealRadialFunction {
        grid: u.grid.clone(),
        values: uu.iter().map(|z| z.im).collect(),
    };
    (re, im)
}

/// Complex H¹ inner product ⟨u, Q⟩_{H¹} = ∫ (∇u·∇Q + u Q) dx for real Q.
fn h1_inner(u: &ComplexRadialField, q: &RealRadialFunction) -> Result<Complex64> {
    let (re, im) = split(u);
    let dq = q.grid.derivative(&q.values)?;
    let dre = re.grid.derivative(&re.values)?;
    let dim = im.grid.derivative(&im.values)?;
    let mut g_re = Vec::with_capacity(q.grid.n());
    let mut g_im = Vec::with_capacity(q.grid.n());
    for (i, r) in q.grid.nodes().enumerate() {
        let w = r * r;
        g_re.push((dre[i] * dq[i] + re.values[i] * q.values[i]) * w);
        g_im.push((dim[i] * dq[i] + im.values[i] * q.values[i]) * w);
    }
    Ok(Complex64::new(
        FOUR_PI * q.grid.integrate_samples(&g_re),
        FOUR_PI * q.grid.integrate_samples(&g_im),
    ))
}

/// min over θ of ‖u − e^{iθ}Q‖_{H¹}; θ* = arg⟨u, Q⟩_{H¹} in closed form.
pub fn orbit_distance(u: &ComplexRadialField, q: &RealRadialFunction) -> Result<f64> {
    if u.grid != q.grid {
        return Err(Error::GridMismatch);
    }
    let nu = h1_norm_sq(u)?;
    let nq = gradient_norm_sq(q)? + integrate_radial(q, 2)?;
    let ip = h1_inner(u, q)?;
    let d2 = nu + nq - 2.0 * ip.norm();
    Ok(d2.max(0.0).sqrt())
}

/// ‖Q‖_{H¹} of a real field, used to express distances in relative units.
pub fn h1_norm_real(q: &RealRadialFunction) -> Result<f64> {
    Ok((gradient_norm_sq(q)? + integrate_radial(q, 2)?).sqrt())
}
