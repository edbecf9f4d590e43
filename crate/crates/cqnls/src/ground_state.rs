//! Ground states Q_ω of  Q'' + (2/r)Q' − ωQ + Q³ − Q⁵ = 0  by shooting on
//! the central amplitude.
//!
//! Mechanical picture: Q(r) is a particle in the potential
//! V(s) = s⁴/4 − s⁶/6 − ωs²/2 with friction 2/r. A decaying solution must
//! start at rest at an amplitude a with V(a) > 0; the admissible window is
//! a² ∈ (3/4 − √(9/16 − 3ω), 3/4 + √(9/16 − 3ω)), nonempty exactly for
//! ω < 3/16. Shots below the critical amplitude rebound toward the interior
//! equilibrium (overshoot event), shots above cross zero (undershoot event);
//! bisection pinches the unique decaying trajectory in between.
//!
//! The exponentially ill-conditioned far tail is replaced beyond the splice
//! radius by the asymptotic model c e^{−√ω r}/r matched at the splice point;
//! the decay rate is fitted on clean shooting data before the splice and must
//! land within 2% of √ω.

use crate::error::{Error, Result};
use crate::grid::RadialGrid;

/// Validated soliton frequency, 0 < ω < 3/16 strictly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frequency(f64);

impl Frequency {
    pub const UPPER: f64 = 3.0 / 16.0;

    pub fn new(omega: f64) -> Result<Self> {
        if omega.is_finite() && omega > 0.0 && omega < Self::UPPER {
            Ok(Self(omega))
        } else {
            Err(Error::NoGroundState { omega })
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Shooting and bisection controls.
#[derive(Debug, Clone)]
pub struct ShootingConfig {
    /// Relative error control of the embedded RK 5(4) integrator.
    pub ode_rel_tol: f64,
    /// Absolute error control of the integrator.
    pub ode_abs_tol: f64,
    /// Relative width of the amplitude bracket at convergence.
    pub bisection_rel_tol: f64,
    /// Q' >= 0 while Q > this fraction of the amplitude flags a rebound.
    pub overshoot_threshold: f64,
    /// Below this fraction of the amplitude the tail is spliced to the decay model.
    pub splice_threshold: f64,
    /// Number of uniform candidates scanned across the amplitude window.
    pub scan_candidates: usize,
    /// Grid spacing target for the default grid.
    pub grid_h: f64,
    /// Optional override of the default r_max.
    pub r_max_override: Option<f64>,
}

impl Default for ShootingConfig {
    fn default() -> Self {
        Self {
            ode_rel_tol: 1e-12,
            ode_abs_tol: 1e-14,
            bisection_rel_tol: 1e-14,
            overshoot_threshold: 1e-3,
            splice_threshold: 1e-6,
            scan_candidates: 512,
            grid_h: 0.02,
            r_max_override: None,
        }
    }
}

impl ShootingConfig {
    fn validate(&self) -> Result<()> {
        let eps8 = 8.0 * f64::EPSILON;
        if self.ode_rel_tol <= 0.0 || self.ode_abs_tol <= 0.0 {
            return Err(Error::InvalidParameter("ODE tolerances must be positive".into()));
        }
        if self.bisection_rel_tol < eps8 {
            return Err(Error::InvalidParameter(format!(
                "bisection tolerance {} below 8*machine epsilon",
                self.bisection_rel_tol
            )));
        }
        Ok(())
    }

    pub fn default_grid(&self, omega: Frequency) -> Result<RadialGrid> {
        match self.r_max_override {
            Some(r_max) => {
                let mut n = (r_max / self.grid_h).ceil() as usize;
                if n % 2 == 1 {
                    n += 1;
                }
                RadialGrid::new(r_max, n.max(64))
            }
            None => RadialGrid::for_omega(omega.value(), self.grid_h),
        }
    }
}

/// Converged ground-state profile with its decay-fit metadata.
#[derive(Debug, Clone)]
pub struct RadialProfile {
    pub grid: RadialGrid,
    pub values: Vec<f64>,
    /// Central amplitude Q(0).
    pub amplitude_a: f64,
    pub omega: Frequency,
    /// Prefactor of the fitted tail model c e^{-rate r} / r.
    pub decay_c: f64,
    /// Fitted decay rate; within 2% of √ω for a valid solve.
    pub decay_rate: f64,
    /// First node index carrying the model tail instead of shooting data.
    pub splice_index: usize,
    /// Radius of the undershoot/overshoot event of the final trajectory.
    pub event_radius: f64,
}

impl RadialProfile {
    pub fn as_function(&self) -> crate::grid::RealRadialFunction {
        crate::grid::RealRadialFunction {
            grid: self.grid.clone(),
            values: self.values.clone(),
        }
    }
}

/// Outcome of a single shot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shot {
    /// Q crossed zero while still falling: amplitude too large.
    Undershoot,
    /// Q' turned >= 0 while Q was still sizable: amplitude too small
    /// (or the trajectory rolled outward for a > the outer equilibrium).
    Overshoot,
}

#[derive(Debug, Clone, Copy)]
pub struct ShotEvent {
    pub class: Shot,
    pub radius: f64,
}

/// Amplitude window (a_min, a_max): the positive roots of
/// F(a) = a⁴/4 − a⁶/6 − ωa²/2.
pub fn amplitude_window(omega: Frequency) -> (f64, f64) {
    let d = (9.0 / 16.0 - 3.0 * omega.value()).sqrt();
    ((0.75 - d).sqrt(), (0.75 + d).sqrt())
}

/// The potential-well value F(a) = a⁴/4 − a⁶/6 − ωa²/2.
pub fn potential_well(omega: Frequency, a: f64) -> f64 {
    0.25 * a.powi(4) - a.powi(6) / 6.0 - 0.5 * omega.value() * a * a
}

// Dormand-Prince 5(4) butcher tableau.
const C: [f64; 6] = [1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 6] = [
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
const E: [f64; 7] = [
    35.0 / 384.0 - 5179.0 / 57600.0,
    0.0,
    500.0 / 1113.0 - 7571.0 / 16695.0,
    125.0 / 192.0 - 393.0 / 640.0,
    -2187.0 / 6784.0 + 92097.0 / 339200.0,
    11.0 / 84.0 - 187.0 / 2100.0,
    -1.0 / 40.0,
];

#[inline]
fn rhs(omega: f64, r: f64, y: [f64; 2]) -> [f64; 2] {
    let [q, p] = y;
    [p, -2.0 / r * p + omega * q - q * q * q + q.powi(5)]
}

/// One adaptive DP45 step attempt from (r, y); returns (r_new, y_new, k_last)
/// on acceptance and updates the proposed step size in place.
struct Stepper {
    omega: f64,
    rtol: f64,
    atol: f64,
    h: f64,
    k1: Option<[f64; 2]>,
}

impl Stepper {
    fn new(omega: f64, rtol: f64, atol: f64) -> Self {
        Self { omega, rtol, atol, h: 1e-4, k1: None }
    }

    /// Advance one accepted step, not beyond `r_stop`. Returns the new (r, y).
    fn step(&mut self, r: f64, y: [f64; 2], r_stop: f64) -> (f64, [f64; 2]) {
        let mut h = self.h.min(0.5);
        loop {
            let clamped = h >= r_stop - r;
            if clamped {
                h = r_stop - r;
            }
            let k1 = self.k1.unwrap_or_else(|| rhs(self.omega, r, y));
            let mut k = [[0.0; 2]; 7];
            k[0] = k1;
            for s in 0..6 {
                let mut ys = y;
                for (j, kj) in k.iter().enumerate().take(s + 1) {
                    ys[0] += h * A[s][j] * kj[0];
                    ys[1] += h * A[s][j] * kj[1];
                }
                k[s + 1] = rhs(self.omega, r + C[s] * h, ys);
            }
            // 5th-order solution is row 6 of A (FSAL), already used for k[6].
            let mut y5 = y;
            for j in 0..6 {
                y5[0] += h * A[5][j] * k[j][0];
                y5[1] += h * A[5][j] * k[j][1];
            }
            let mut err: f64 = 0.0;
            for i in 0..2 {
                let mut e = 0.0;
                for (j, kj) in k.iter().enumerate() {
                    e += E[j] * kj[i];
                }
                e *= h;
                let sc = self.atol + self.rtol * y[i].abs().max(y5[i].abs());
                err = err.max((e / sc).abs());
            }
            if err <= 1.0 {
                let grow = if err == 0.0 { 5.0 } else { (0.9 * err.powf(-0.2)).clamp(0.2, 5.0) };
                self.h = (h * grow).min(0.5);
                self.k1 = if clamped { None } else { Some(k[6]) };
                return (r + h, y5);
            }
            h *= (0.9 * err.powf(-0.2)).clamp(0.2, 0.9);
            self.k1 = Some(k1);
        }
    }

    fn reset(&mut self) {
        self.k1 = None;
        self.h = 1e-4;
    }
}

fn series_start(omega: f64, a: f64) -> (f64, [f64; 2]) {
    let r0 = 1e-4;
    let g = omega * a - a.powi(3) + a.powi(5);
    (r0, [a + g * r0 * r0 / 6.0, g * r0 / 3.0])
}

/// Integrate a shot and classify it, without recording the trajectory.
pub fn classify_shot(
    omega: Frequency,
    amplitude: f64,
    cfg: &ShootingConfig,
    r_max: f64,
) -> Result<ShotEvent> {
    let om = omega.value();
    let (mut r, mut y) = series_start(om, amplitude);
    let mut stepper = Stepper::new(om, cfg.ode_rel_tol, cfg.ode_abs_tol);
    let q_floor = cfg.overshoot_threshold * amplitude;
    while r < r_max {
        let (rn, yn) = stepper.step(r, y, r_max);
        r = rn;
        y = yn;
        if !y[0].is_finite() || !y[1].is_finite() {
            // Finite-precision blow-up far out behaves like a rebound.
            return Ok(ShotEvent { class: Shot::Overshoot, radius: r });
        }
        if y[0] <= 0.0 {
            return Ok(ShotEvent { class: Shot::Undershoot, radius: r });
        }
        if y[1] >= 0.0 && y[0] >= q_floor {
            return Ok(ShotEvent { class: Shot::Overshoot, radius: r });
        }
    }
    Err(Error::Undecided { r_max })
}

/// Scan the amplitude window for the first overshoot→undershoot transition.
fn scan_bracket(omega: Frequency, cfg: &ShootingConfig, r_max: f64) -> Result<(f64, f64)> {
    let (a_lo, a_hi) = amplitude_window(omega);
    let m = cfg.scan_candidates.max(8);
    let step = (a_hi - a_lo) / (m as f64 + 1.0);
    let mut prev: Option<(f64, Shot)> = None;
    for k in 1..=m {
        let a = a_lo + k as f64 * step;
        let class = match classify_shot(omega, a, cfg, r_max) {
            Ok(ev) => ev.class,
            Err(Error::Undecided { .. }) => continue,
            Err(e) => return Err(e),
        };
        if let Some((ap, Shot::Overshoot)) = prev {
            if class == Shot::Undershoot {
                return Ok((ap, a));
            }
        }
        prev = Some((a, class));
    }
    Err(Error::ShootingBracketFailure { omega: omega.value() })
}

/// Bisection on the bracket; returns (amplitude, event of the last midpoint).
fn bisect(
    omega: Frequency,
    bracket: (f64, f64),
    cfg: &ShootingConfig,
    r_max: f64,
) -> Result<(f64, f64)> {
    let (mut a_over, mut a_under) = bracket;
    let mut event_radius = 0.0;
    let mut radius = r_max;
    for _ in 0..256 {
        let mid = 0.5 * (a_over + a_under);
        if a_under - a_over <= cfg.bisection_rel_tol * a_under {
            return Ok((mid, event_radius));
        }
        match classify_shot(omega, mid, cfg, radius) {
            Ok(ShotEvent { class: Shot::Overshoot, radius: r }) => {
                a_over = mid;
                event_radius = r;
            }
            Ok(ShotEvent { class: Shot::Undershoot, radius: r }) => {
                a_under = mid;
                event_radius = r;
            }
            Err(Error::Undecided { .. }) => {
                if radius < 2.5 * r_max {
                    radius *= 1.3;
                } else {
                    // The trajectory decays through the whole extended domain:
                    // as converged as finite precision permits.
                    return Ok((mid, radius));
                }
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::ConvergenceFailure(format!(
        "amplitude bisection stalled at omega = {}",
        omega.value()
    )))
}

/// Integrate the converged shot onto the grid nodes; returns the samples and
/// the number of valid leading entries.
fn fill_profile(
    omega: Frequency,
    a: f64,
    grid: &RadialGrid,
    cfg: &ShootingConfig,
) -> (Vec<f64>, usize) {
    let om = omega.value();
    let (mut r, mut y) = series_start(om, a);
    let mut stepper = Stepper::new(om, cfg.ode_rel_tol, cfg.ode_abs_tol);
    let mut values = vec![0.0; grid.n()];
    let q_floor = cfg.overshoot_threshold * a;
    for i in 0..grid.n() {
        let target = grid.r(i);
        while r < target {
            let (rn, yn) = stepper.step(r, y, target);
            r = rn;
            y = yn;
        }
        // Walk node by node; stop once the trajectory stops being a clean,
        // positive, decreasing decay.
        if !y[0].is_finite() || y[0] <= 0.0 || (y[1] >= 0.0 && y[0] >= q_floor) {
            return (values, i);
        }
        values[i] = y[0];
        stepper.k1 = None;
    }
    let n = grid.n();
    (values, n)
}

/// Least-squares fit of log(r Q) = log c − rate·r over node indices [lo, hi).
fn fit_log_linear(grid: &RadialGrid, values: &[f64], lo: usize, hi: usize) -> Result<(f64, f64)> {
    if hi <= lo + 4 {
        return Err(Error::DecayFitFailure);
    }
    let mut sx = 0.0;
    let mut sy = 0.0;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    let m = (hi - lo) as f64;
    for i in lo..hi {
        let q = values[i];
        if q <= 0.0 {
            return Err(Error::DecayFitFailure);
        }
        let x = grid.r(i);
        let y = (x * q).ln();
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    let denom = m * sxx - sx * sx;
    let slope = (m * sxy - sx * sy) / denom;
    let intercept = (sy - slope * sx) / m;
    Ok((intercept.exp(), -slope))
}

/// Fit the decay tail of a profile over the window r ∈ [0.6, 0.85]·r_max.
/// Returns (c, rate) of the model c e^{−rate r}/r.
pub fn fit_decay(profile: &RadialProfile) -> Result<(f64, f64)> {
    let n = profile.grid.n();
    let lo = (0.6 * n as f64) as usize;
    let hi = (0.85 * n as f64) as usize;
    fit_log_linear(&profile.grid, &profile.values, lo, hi)
}

/// Same fit on an arbitrary node-index window (used by tests and the solver).
pub fn fit_decay_window(
    grid: &RadialGrid,
    values: &[f64],
    lo: usize,
    hi: usize,
) -> Result<(f64, f64)> {
    fit_log_linear(grid, values, lo, hi)
}

/// Max-norm ODE residual |Q'' + (2/r)Q' − ωQ + Q³ − Q⁵| / max|Q| over the
/// centered-stencil interior.
pub fn residual(profile: &RadialProfile) -> Result<f64> {
    let g = &profile.grid;
    let q = &profile.values;
    let d1 = g.derivative(q)?;
    let d2 = g.second_derivative(q)?;
    let qmax = q.iter().fold(0.0_f64, |m, &v| m.max(v.abs()));
    if qmax == 0.0 {
        return Ok(0.0);
    }
    let om = profile.omega.value();
    let mut worst = 0.0_f64;
    for i in 2..g.n() - 2 {
        let r = g.r(i);
        let res = d2[i] + 2.0 / r * d1[i] - om * q[i] + q[i].powi(3) - q[i].powi(5);
        worst = worst.max(res.abs());
    }
    Ok(worst / qmax)
}

/// Solve the ground state on the default grid for ω.
pub fn solve_ground_state(omega: Frequency, cfg: &ShootingConfig) -> Result<RadialProfile> {
    let grid = cfg.default_grid(omega)?;
    solve_on_grid(omega, cfg, &grid, None)
}

/// Solve on a caller-provided grid, optionally warm-starting the amplitude
/// bracket from a neighboring solve.
pub fn solve_on_grid(
    omega: Frequency,
    cfg: &ShootingConfig,
    grid: &RadialGrid,
    amplitude_hint: Option<f64>,
) -> Result<RadialProfile> {
    cfg.validate()?;
    let r_max = grid.r_max();
    let bracket = match amplitude_hint {
        Some(hint) => hinted_bracket(omega, hint, cfg, r_max)
            .or_else(|_| scan_bracket(omega, cfg, r_max))?,
        None => scan_bracket(omega, cfg, r_max)?,
    };
    let (a, event_radius) = bisect(omega, bracket, cfg, r_max)?;
    assemble_profile(omega, a, grid, cfg, event_radius)
}

fn hinted_bracket(
    omega: Frequency,
    hint: f64,
    cfg: &ShootingConfig,
    r_max: f64,
) -> Result<(f64, f64)> {
    let (a_lo, a_hi) = amplitude_window(omega);
    let mut w = 1e-3;
    for _ in 0..12 {
        let lo = (hint * (1.0 - w)).max(a_lo * 1.000001);
        let hi = (hint * (1.0 + w)).min(a_hi * 0.999999);
        if lo >= hi {
            break;
        }
        let clo = classify_shot(omega, lo, cfg, r_max);
        let chi = classify_shot(omega, hi, cfg, r_max);
        if let (Ok(l), Ok(h)) = (&clo, &chi) {
            if l.class == Shot::Overshoot && h.class == Shot::Undershoot {
                return Ok((lo, hi));
            }
        }
        w *= 3.0;
    }
    Err(Error::ShootingBracketFailure { omega: omega.value() })
}

fn assemble_profile(
    omega: Frequency,
    a: f64,
    grid: &RadialGrid,
    cfg: &ShootingConfig,
    event_radius: f64,
) -> Result<RadialProfile> {
    let om = omega.value();
    let (mut values, filled) = fill_profile(omega, a, grid, cfg);
    if filled < grid.n() / 4 {
        return Err(Error::ConvergenceFailure(format!(
            "trajectory corrupted after {filled} of {} nodes at omega = {om}",
            grid.n()
        )));
    }
    // Splice index: first node below the splice threshold, else the last
    // clean node; everything beyond carries the asymptotic model.
    let thresh = cfg.splice_threshold * a;
    let splice = values[..filled]
        .iter()
        .position(|&q| q <= thresh)
        .unwrap_or(filled.saturating_sub(2))
        .max(8);
    // Genuine decay fit on clean shooting data well inside the splice radius.
    let fit_lo = (0.55 * splice as f64) as usize;
    let fit_hi = (0.90 * splice as f64) as usize;
    let (c_fit, rate_fit) = fit_log_linear(grid, &values, fit_lo, fit_hi)?;
    let sqrt_om = om.sqrt();
    if (rate_fit - sqrt_om).abs() > 0.02 * sqrt_om {
        return Err(Error::ConvergenceFailure(format!(
            "fitted decay rate {rate_fit} deviates from sqrt(omega) = {sqrt_om} by more than 2%"
        )));
    }
    // Tail model matched continuously at the last kept node.
    let r_match = grid.r(splice - 1);
    let c_cont = values[splice - 1] * r_match * (sqrt_om * r_match).exp();
    for i in splice..grid.n() {
        let r = grid.r(i);
        values[i] = c_cont * (-sqrt_om * r).exp() / r;
    }
    let profile = RadialProfile {
        grid: grid.clone(),
        values,
        amplitude_a: a,
        omega,
        decay_c: c_fit,
        decay_rate: rate_fit,
        splice_index: splice,
        event_radius,
    };
    validate_profile(&profile)?;
    Ok(profile)
}

fn validate_profile(p: &RadialProfile) -> Result<()> {
    for i in 0..p.splice_index {
        if p.values[i] <= 0.0 {
            return Err(Error::ConvergenceFailure("non-positive pre-splice sample".into()));
        }
        if i > 0 && p.values[i] >= p.values[i - 1] {
            return Err(Error::ConvergenceFailure(
                "profile not strictly decreasing before the splice".into(),
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frequency_window_is_open() {
        assert!(Frequency::new(3.0 / 16.0).is_err());
        assert!(Frequency::new(0.0).is_err());
        assert!(Frequency::new(-0.1).is_err());
        assert!(Frequency::new(0.1875001).is_err());
        assert!(Frequency::new(0.05).is_ok());
    }

    #[test]
    fn amplitude_window_closes_at_the_endpoint() {
        let om = Frequency::new(0.18749).unwrap();
        let (lo, hi) = amplitude_window(om);
        assert!(hi - lo < 0.01, "window ({lo}, {hi}) should pinch near 3/16");
        let mid = 0.5 * (lo + hi);
        assert!(potential_well(om, mid) > 0.0);
    }

    #[test]
    fn bracket_endpoints_classify_as_expected() {
        let om = Frequency::new(3.0 / 32.0).unwrap();
        let cfg = ShootingConfig::default();
        let (a_lo, a_hi) = amplitude_window(om);
        // Near the upper window edge the trajectory rolls outward: overshoot.
        let hi_ev = classify_shot(om, a_hi * 0.999, &cfg, 120.0).unwrap();
        assert_eq!(hi_ev.class, Shot::Overshoot);
        // Just above the lower edge there is too little stored energy: rebound.
        let lo_ev = classify_shot(om, a_lo * 1.001, &cfg, 120.0).unwrap();
        assert_eq!(lo_ev.class, Shot::Overshoot);
    }

    #[test]
    fn solve_at_three_thirtyseconds() {
        let om = Frequency::new(3.0 / 32.0).unwrap();
        let cfg = ShootingConfig::default();
        let p = solve_ground_state(om, &cfg).unwrap();
        // positive, strictly decreasing before the splice
        assert!(p.values[..p.splice_index].windows(2).all(|w| w[0] > w[1]));
        assert!(p.values[0] > 0.0);
        // decay rate forced by the far-field linearization
        let expect = (3.0_f64 / 32.0).sqrt();
        assert!(
            (p.decay_rate - expect).abs() < 0.02 * expect,
            "rate {} vs sqrt(omega) {}",
            p.decay_rate,
            expect
        );
        // ODE residual small
        let res = residual(&p).unwrap();
        assert!(res < 1e-6, "residual {res}");
        // converged amplitude satisfies the potential-well condition
        assert!(potential_well(om, p.amplitude_a) > 0.0);
    }

    #[test]
    fn residual_of_zero_profile_vanishes() {
        let om = Frequency::new(0.05).unwrap();
        let grid = RadialGrid::new(60.0, 3000).unwrap();
        let p = RadialProfile {
            grid: grid.clone(),
            values: vec![0.0; grid.n()],
            amplitude_a: 0.0,
            omega: om,
            decay_c: 0.0,
            decay_rate: om.value().sqrt(),
            splice_index: 0,
            event_radius: 0.0,
        };
        assert_eq!(residual(&p).unwrap(), 0.0);
    }

    #[test]
    fn residual_detects_corruption() {
        let om = Frequency::new(3.0 / 32.0).unwrap();
        let cfg = ShootingConfig::default();
        let mut p = solve_ground_state(om, &cfg).unwrap();
        for (i, r) in p.grid.clone().nodes().enumerate() {
            p.values[i] += 0.01 * (-r * r).exp();
        }
        let res = residual(&p).unwrap();
        assert!(res > 1e-4, "residual {res} too small to flag corruption");
    }

    #[test]
    fn synthetic_decay_fit_is_exact() {
        let grid = RadialGrid::new(50.0, 2500).unwrap();
        let om = Frequency::new(0.05).unwrap();
        let values: Vec<f64> = grid.nodes().map(|r| 5.0 * (-0.4 * r).exp() / r).collect();
        let p = RadialProfile {
            grid: grid.clone(),
            values,
            amplitude_a: 5.0,
            omega: om,
            decay_c: 5.0,
            decay_rate: 0.4,
            splice_index: grid.n(),
            event_radius: 50.0,
        };
        let (c, rate) = fit_decay(&p).unwrap();
        assert!((c - 5.0).abs() < 1e-6, "c = {c}");
        assert!((rate - 0.4).abs() < 1e-6, "rate = {rate}");
    }

    #[test]
    fn uniqueness_probe_two_seeds_agree() {
        let om = Frequency::new(0.08).unwrap();
        let cfg = ShootingConfig::default();
        let grid = cfg.default_grid(om).unwrap();
        let base = solve_on_grid(om, &cfg, &grid, None).unwrap();
        // Warm start from two deliberately skewed hints.
        let from_below = solve_on_grid(om, &cfg, &grid, Some(base.amplitude_a * 0.97)).unwrap();
        let from_above = solve_on_grid(om, &cfg, &grid, Some(base.amplitude_a * 1.03)).unwrap();
        let tol = 4.0 * cfg.bisection_rel_tol * base.amplitude_a;
        assert!((from_below.amplitude_a - base.amplitude_a).abs() <= tol);
        assert!((from_above.amplitude_a - base.amplitude_a).abs() <= tol);
    }

    #[test]
    fn residual_order_under_refinement() {
        let om = Frequency::new(3.0 / 32.0).unwrap();
        let mut cfg = ShootingConfig::default();
        cfg.grid_h = 0.04;
        let coarse = residual(&solve_ground_state(om, &cfg).unwrap()).unwrap();
        cfg.grid_h = 0.02;
        let fine = residual(&solve_ground_state(om, &cfg).unwrap()).unwrap();
        assert!(
            coarse / fine >= 12.0,
            "expected ~2^4 reduction, got {coarse} -> {fine}"
        );
    }
}
