use std::fmt;

use super::{ParamPoly, Rational};
use crate::Error;

/// A coefficient tagged with its ring mode.
///
/// Generic algebra in this crate picks its ring statically; `Scalar` is the
/// boundary type for values whose mode is only known at run time (parsed
/// weights, JSON input).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Scalar {
    Rational(Rational),
    Param(ParamPoly),
}

impl Scalar {
    pub fn mode(&self) -> &'static str {
        match self {
            Scalar::Rational(_) => "rational",
            Scalar::Param(_) => "parametric",
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => num_traits::Zero::is_zero(r),
            Scalar::Param(p) => p.is_zero(),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> Error {
    Error::RingMismatch {
        left: a.mode(),
        right: b.mode(),
    }
}

pub fn scalar_add(a: &Scalar, b: &Scalar) -> Result<Scalar, Error> {
    match (a, b) {
        (Scalar::Rational(x), Scalar::Rational(y)) => Ok(Scalar::Rational(x + y)),
        (Scalar::Param(x), Scalar::Param(y)) => Ok(Scalar::Param(x + y)),
        _ => Err(mismatch(a, b)),
    }
}

pub fn scalar_mul(a: &Scalar, b: &Scalar) -> Result<Scalar, Error> {
    match (a, b) {
        (Scalar::Rational(x), Scalar::Rational(y)) => Ok(Scalar::Rational(x * y)),
        (Scalar::Param(x), Scalar::Param(y)) => Ok(Scalar::Param(x * y)),
        _ => Err(mismatch(a, b)),
    }
}

/// Evaluates a parameter polynomial at `l1 = v1`, `l2 = v2`.
pub fn specialize(p: &ParamPoly, v1: &Rational, v2: &Rational) -> Rational {
    p.specialize(v1, v2)
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Param(p) => write!(f, "{p}"),
        }
    }
}
