use crate::error::{Result, SpannerError};

/// Parameters shared by the constructions.
#[derive(Clone, Debug, PartialEq)]
pub struct SpannerConfig {
    pub epsilon: f64,
    /// Shrink factor of the weak variants.
    pub delta: f64,
    /// Cone constant of the fat-triangle construction.
    pub gamma: f64,
    /// Rectangle grid resolution; `None` uses [`min_tau`].
    pub tau: Option<usize>,
    pub seed: u64,
    /// Marker spacing divisor of the trapezoid cover.
    pub c2: f64,
    /// Refinement factor of the trapezoid cover.
    pub c3: usize,
    /// Divisor of `ε` in the nice-polygon construction.
    pub c4: f64,
}

pub const DEFAULT_GAMMA: f64 = 64.0;
pub const DEFAULT_C2: f64 = 16.0;
pub const DEFAULT_C3: usize = 8;
pub const DEFAULT_C4: f64 = 32.0;

impl Default for SpannerConfig {
    fn default() -> Self {
        Self {
            epsilon: 0.25,
            delta: 0.25,
            gamma: DEFAULT_GAMMA,
            tau: None,
            seed: 0,
            c2: DEFAULT_C2,
            c3: DEFAULT_C3,
            c4: DEFAULT_C4,
        }
    }
}

/// Smallest grid resolution accepted by the rectangle construction.
pub fn min_tau(eps: f64, delta: f64) -> usize {
    (20.0 / eps + 20.0 / delta).ceil() as usize
}

pub(crate) fn check_unit(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v < 1.0 {
        Ok(())
    } else {
        Err(SpannerError::Parameter(format!("{name} = {v} not in (0, 1)")))
    }
}

impl SpannerConfig {
    pub fn new(epsilon: f64) -> Self {
        Self { epsilon, ..Self::default() }
    }

    pub fn with_delta(mut self, delta: f64) -> Self {
        self.delta = delta;
        self
    }

    pub fn validate(&self) -> Result<()> {
        check_unit("epsilon", self.epsilon)?;
        check_unit("delta", self.delta)?;
        if !(self.gamma >= 1.0) {
            return Err(SpannerError::Parameter(format!("gamma = {} below 1", self.gamma)));
        }
        if !(self.c2 > 0.0 && self.c4 >= 1.0 && self.c3 >= 1) {
            return Err(SpannerError::Parameter("trapezoid constants".into()));
        }
        if let Some(t) = self.tau {
            let m = min_tau(self.epsilon, self.delta);
            if t < m {
                return Err(SpannerError::Parameter(format!("tau = {t} below {m}")));
            }
        }
        Ok(())
    }

    /// Grid resolution for the rectangle construction.
    pub fn tau(&self) -> usize {
        self.tau.unwrap_or_else(|| min_tau(self.epsilon, self.delta))
    }
}
