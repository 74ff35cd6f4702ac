/// Relative slack allowed when a bound is checked numerically.
pub const BOUND_REL_TOL: f64 = 1e-9;

/// One numerical check of `lhs <= rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub variant: String,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs`.
    pub margin: f64,
    /// `margin >= -BOUND_REL_TOL * max(1, |rhs|)`.
    pub pass: bool,
    pub constant_used: f64,
}

impl BoundReport {
    pub fn new(variant: impl Into<String>, lhs: f64, rhs: f64, constant_used: f64) -> Self {
        let margin = rhs - lhs;
        let pass = !margin.is_nan() && margin >= -BOUND_REL_TOL * rhs.abs().max(1.0);
        BoundReport {
            variant: variant.into(),
            lhs,
            rhs,
            margin,
            pass,
            constant_used,
        }
    }
}
