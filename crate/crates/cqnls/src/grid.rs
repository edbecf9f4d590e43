//! Uniform radial grids, quadrature and differentiation stencils.
//!
//! All integrals over R^3 of radial integrands reduce to
//! 4π ∫₀^∞ g(f(r)) r² dr. Fields are sampled on the interior nodes
//! r_i = (i+1)h, i = 0..n-1, with h = r_max/n; the value at r = 0 is
//! recovered by even extension when needed and the integrand f^p r²
//! vanishes there exactly, so composite Simpson over [0, r_max] applies
//! with a virtual zero at the origin.

use crate::error::{Error, Result};

pub const FOUR_PI: f64 = 4.0 * std::f64::consts::PI;

/// Uniform radial grid storing interior nodes only: r_i = (i+1)h up to r_max.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialGrid {
    r_max: f64,
    n: usize,
    h: f64,
}

impl RadialGrid {
    /// Build a grid with `n` nodes on (0, r_max]. Requires n >= 64, r_max > 0.
    pub fn new(r_max: f64, n: usize) -> Result<Self> {
        if !(r_max > 0.0) || !r_max.is_finite() {
            return Err(Error::InvalidParameter(format!("r_max = {r_max}")));
        }
        if n < 64 {
            return Err(Error::GridTooCoarse { n, need: 64 });
        }
        Ok(Self { r_max, n, h: r_max / n as f64 })
    }

    /// Default production grid for frequency `omega`: r_max = max(40/√ω, 60),
    /// node count rounded up so that h <= `h_target` (even n keeps plain
    /// composite Simpson applicable).
    pub fn for_omega(omega: f64, h_target: f64) -> Result<Self> {
        let r_max = (40.0 / omega.sqrt()).max(60.0);
        let mut n = (r_max / h_target).ceil() as usize;
        if n % 2 == 1 {
            n += 1;
        }
        Self::new(r_max, n.max(64))
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    /// Node radius r_i = (i+1)h.
    pub fn r(&self, i: usize) -> f64 {
        (i as f64 + 1.0) * self.h
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(|i| self.r(i))
    }

    /// Composite quadrature of node samples `g` interpreted as g(r_i) with a
    /// virtual g(0) = 0: returns ∫₀^{r_max} g dr to 4th order (Simpson, with a
    /// 3/8 patch at the far end when the interval count is odd).
    pub fn integrate_samples(&self, g: &[f64]) -> f64 {
        assert_eq!(g.len(), self.n);
        let h = self.h;
        // Samples indexed by interval endpoint j = 1..=n, g(0) = 0.
        let val = |j: usize| -> f64 { if j == 0 { 0.0 } else { g[j - 1] } };
        let simpson = |lo: usize, hi: usize| -> f64 {
            // hi - lo even
            let mut s = val(lo) + val(hi);
            let mut j = lo + 1;
            while j < hi {
                s += 4.0 * val(j);
                j += 2;
            }
            let mut j = lo + 2;
            while j < hi {
                s += 2.0 * val(j);
                j += 2;
            }
            s * h / 3.0
        };
        if self.n % 2 == 0 {
            simpson(0, self.n)
        } else {
            // Simpson on [0, n-3], 3/8 rule on the last three intervals.
            let body = if self.n > 3 { simpson(0, self.n - 3) } else { 0.0 };
            let a = self.n - 3;
            body + 3.0 * h / 8.0 * (val(a) + 3.0 * val(a + 1) + 3.0 * val(a + 2) + val(a + 3))
        }
    }

    /// First derivative of node samples by 4th-order finite differences,
    /// centered in the interior and one-sided at the ends.
    pub fn derivative(&self, f: &[f64]) -> Result<Vec<f64>> {
        if self.n < 5 {
            return Err(Error::GridTooCoarse { n: self.n, need: 5 });
        }
        assert_eq!(f.len(), self.n);
        let n = self.n;
        let d = 1.0 / (12.0 * self.h);
        let mut out = vec![0.0; n];
        out[0] = d * (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]);
        out[1] = d * (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]);
        for i in 2..n - 2 {
            out[i] = d * (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]);
        }
        out[n - 2] = d * (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] - f[n - 5]);
        out[n - 1] = d * (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] + 3.0 * f[n - 5]);
        Ok(out)
    }

    /// Second derivative, 4th-order centered stencil; only nodes 2..n-2 are
    /// meaningful (callers asking for "interior" residuals use that range).
    pub fn second_derivative(&self, f: &[f64]) -> Result<Vec<f64>> {
        if self.n < 7 {
            return Err(Error::GridTooCoarse { n: self.n, need: 7 });
        }
        assert_eq!(f.len(), self.n);
        let n = self.n;
        let d2 = 1.0 / (12.0 * self.h * self.h);
        let mut out = vec![0.0; n];
        for i in 2..n - 2 {
            out[i] = d2
                * (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]);
        }
        // One-sided 4th-order second-derivative stencils at the edges.
        let c = [
            [45.0, -154.0, 214.0, -156.0, 61.0, -10.0],
            [10.0, -15.0, -4.0, 14.0, -6.0, 1.0],
        ];
        for (row, &coef) in c.iter().enumerate() {
            let mut s_lo = 0.0;
            let mut s_hi = 0.0;
            for (k, &w) in coef.iter().enumerate() {
                s_lo += w * f[k];
                s_hi += w * f[n - 1 - k];
            }
            out[row] = d2 * s_lo;
            out[n - 1 - row] = d2 * s_hi;
        }
        Ok(out)
    }
}

/// A real radial function sampled on a [`RadialGrid`].
#[derive(Debug, Clone)]
pub struct RealRadialFunction {
    pub grid: RadialGrid,
    pub values: Vec<f64>,
}

impl RealRadialFunction {
    pub fn new(grid: RadialGrid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.n() {
            return Err(Error::GridMismatch);
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidField);
        }
        Ok(Self { grid, values })
    }

    pub fn from_fn(grid: RadialGrid, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values = grid.nodes().map(&f).collect();
        Self::new(grid, values)
    }

    pub fn zero(grid: RadialGrid) -> Self {
        let n = grid.n();
        Self { grid, values: vec![0.0; n] }
    }

    /// Value at r = 0 by even-symmetric extrapolation: fits a + b r² + c r⁴
    /// through the first three nodes (Lagrange in r² evaluated at 0).
    pub fn value_at_origin(&self) -> f64 {
        let f = &self.values;
        1.5 * f[0] - 0.6 * f[1] + 0.1 * f[2]
    }
}

/// 4π ∫ f(r)^p r² dr over R^3 realized on the grid (no tail correction).
pub fn integrate_radial(f: &RealRadialFunction, power: u32) -> Result<f64> {
    if f.values.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidField);
    }
    let g: Vec<f64> = f
        .values
        .iter()
        .zip(f.grid.nodes())
        .map(|(&v, r)| v.powi(power as i32) * r * r)
        .collect();
    Ok(FOUR_PI * f.grid.integrate_samples(&g))
}

/// 4π ∫ f'(r)² r² dr = ∫ |∇u|² dx for radial u.
pub fn gradient_norm_sq(f: &RealRadialFunction) -> Result<f64> {
    if f.values.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidField);
    }
    let df = f.grid.derivative(&f.values)?;
    let g: Vec<f64> = df
        .iter()
        .zip(f.grid.nodes())
        .map(|(&d, r)| d * d * r * r)
        .collect();
    Ok(FOUR_PI * f.grid.integrate_samples(&g))
}

/// Quintic (6-point) Lagrange interpolation of grid samples at radius `r`.
/// Samples are extended evenly through the origin; beyond r_max the tail is
/// taken as zero (callers guard against meaningful truncation).
pub fn interpolate(f: &RealRadialFunction, r: f64) -> f64 {
    let g = &f.grid;
    let h = g.h();
    let n = g.n();
    if r > g.r_max() {
        return 0.0;
    }
    let r = r.abs();
    // Fractional node index: r = (idx+1) h.
    let x = r / h - 1.0;
    let mut lo = x.floor() as isize - 2;
    if lo > n as isize - 6 {
        lo = n as isize - 6;
    }
    // Conceptual node index i has position (i+1)h; i = -1 sits at the origin
    // and negative radii reflect evenly onto stored samples.
    let sample = |i: isize| -> f64 {
        if i >= 0 {
            f.values[i as usize]
        } else if i == -1 {
            f.value_at_origin()
        } else {
            f.values[(-i - 2) as usize]
        }
    };
    let node_pos = |i: isize| -> f64 { (i + 1) as f64 * h };
    let mut acc = 0.0;
    for a in 0..6 {
        let ia = lo + a;
        let xa = node_pos(ia);
        let mut w = 1.0;
        for b in 0..6 {
            if a != b {
                let xb = node_pos(lo + b);
                w *= (r - xb) / (xa - xb);
            }
        }
        acc += w * sample(ia);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gauss_grid() -> RadialGrid {
        RadialGrid::new(12.0, 4096).unwrap()
    }

    #[test]
    fn integrate_zero_field() {
        let f = RealRadialFunction::zero(gauss_grid());
        for p in [1, 2, 4, 6] {
            assert_eq!(integrate_radial(&f, p).unwrap(), 0.0);
        }
    }

    #[test]
    fn integrate_gaussian_squared() {
        // ∫ e^{-2r²} dx over R³ = π^{3/2} 2^{-3/2}
        let f = RealRadialFunction::from_fn(gauss_grid(), |r| (-r * r).exp()).unwrap();
        let exact = std::f64::consts::PI.powf(1.5) * 2.0_f64.powf(-1.5);
        let got = integrate_radial(&f, 2).unwrap();
        assert!((got - exact).abs() / exact < 1e-10, "got {got}, exact {exact}");
    }

    #[test]
    fn integrate_exponential() {
        // ∫ e^{-r} dx = 8π
        let g = RadialGrid::new(60.0, 8192).unwrap();
        let f = RealRadialFunction::from_fn(g, |r| (-r).exp()).unwrap();
        let exact = 8.0 * std::f64::consts::PI;
        let got = integrate_radial(&f, 1).unwrap();
        assert!((got - exact).abs() / exact < 1e-9, "got {got}, exact {exact}");
    }

    #[test]
    fn quadrature_order_at_least_four() {
        // Halving h must cut the error of a smooth integrand by >= 2^4.
        let exact = std::f64::consts::PI.powf(1.5) * 2.0_f64.powf(-1.5);
        let err = |n: usize| -> f64 {
            let g = RadialGrid::new(12.0, n).unwrap();
            let f = RealRadialFunction::from_fn(g, |r| (-r * r).exp()).unwrap();
            (integrate_radial(&f, 2).unwrap() - exact).abs()
        };
        let coarse = err(128);
        let fine = err(256);
        assert!(coarse / fine >= 16.0, "ratio {}", coarse / fine);
    }

    #[test]
    fn integrate_odd_node_count() {
        let g = RadialGrid::new(12.0, 4097).unwrap();
        let f = RealRadialFunction::from_fn(g, |r| (-r * r).exp()).unwrap();
        let exact = std::f64::consts::PI.powf(1.5) * 2.0_f64.powf(-1.5);
        let got = integrate_radial(&f, 2).unwrap();
        assert!((got - exact).abs() / exact < 1e-10);
    }

    #[test]
    fn gradient_gaussian() {
        // ∫ |∇ e^{-|x|²}|² dx = 3 π^{3/2} / (2 √2)
        let f = RealRadialFunction::from_fn(gauss_grid(), |r| (-r * r).exp()).unwrap();
        let exact = 3.0 * std::f64::consts::PI.powf(1.5) / (2.0 * 2.0_f64.sqrt());
        let got = gradient_norm_sq(&f).unwrap();
        assert!((got - exact).abs() / exact < 1e-8, "got {got}, exact {exact}");
    }

    #[test]
    fn gradient_scaling_law() {
        // ‖∇ u_λ‖² = λ² ‖∇ u‖² for u_λ = λ^{3/2} u(λ r)
        let f = RealRadialFunction::from_fn(gauss_grid(), |r| (-r * r).exp()).unwrap();
        let lam: f64 = 1.7;
        let fs = RealRadialFunction::from_fn(f.grid.clone(), |r| {
            lam.powf(1.5) * (-(lam * r) * (lam * r)).exp()
        })
        .unwrap();
        let a = gradient_norm_sq(&fs).unwrap();
        let b = lam * lam * gradient_norm_sq(&f).unwrap();
        assert!((a - b).abs() / b < 1e-6);
    }

    #[test]
    fn integrate_scaling_in_amplitude() {
        let f = RealRadialFunction::from_fn(gauss_grid(), |r| (-r * r).exp()).unwrap();
        let alpha = 2.5;
        let fa = RealRadialFunction::new(
            f.grid.clone(),
            f.values.iter().map(|v| alpha * v).collect(),
        )
        .unwrap();
        for p in [1u32, 2, 4] {
            let lhs = integrate_radial(&fa, p).unwrap();
            let rhs = alpha.powi(p as i32) * integrate_radial(&f, p).unwrap();
            assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1.0));
        }
    }

    #[test]
    fn non_finite_rejected() {
        let g = gauss_grid();
        let mut vals = vec![0.0; g.n()];
        vals[10] = f64::NAN;
        assert!(RealRadialFunction::new(g, vals).is_err());
    }

    #[test]
    fn interpolation_reproduces_smooth_function() {
        let f = RealRadialFunction::from_fn(gauss_grid(), |r| (-r * r).exp()).unwrap();
        for &r in &[0.0013, 0.013, 0.5, 1.234567, 7.77, 11.5] {
            let got = interpolate(&f, r);
            let exact = (-r * r as f64).exp();
            assert!((got - exact).abs() < 1e-10, "r = {r}: {got} vs {exact}");
        }
    }

    #[test]
    fn origin_value_even_extrapolation() {
        let f = RealRadialFunction::from_fn(gauss_grid(), |r| (-r * r).exp()).unwrap();
        assert!((f.value_at_origin() - 1.0).abs() < 1e-10);
    }
}
