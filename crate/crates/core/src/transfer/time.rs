use alloc::string::String;
use core::fmt;

use num_integer::Integer;
#[cfg_attr(feature = "std", allow(unused_imports))]
use num_traits::Float;

/// The exact walk time `num * pi / (den * sqrt(radicand))`, with
/// `gcd(num, den) = 1` and `radicand` squarefree (`1` for rational multiples
/// of `pi`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactTime {
    pub num: u64,
    pub den: u64,
    pub radicand: u64,
}

impl ExactTime {
    pub fn new(num: u64, den: u64, radicand: u64) -> Self {
        debug_assert!(num > 0 && den > 0 && radicand > 0);
        let g = num.gcd(&den);
        ExactTime {
            num: num / g,
            den: den / g,
            radicand,
        }
    }

    /// `pi / (g sqrt(radicand))`.
    pub fn half_period(g: u64, radicand: u64) -> Self {
        Self::new(1, g, radicand)
    }

    /// `2 pi / (g sqrt(radicand))`.
    pub fn period(g: u64, radicand: u64) -> Self {
        Self::new(2, g, radicand)
    }

    pub fn doubled(&self) -> Self {
        Self::new(2 * self.num, self.den, self.radicand)
    }

    pub fn approx(&self) -> f64 {
        self.num as f64 * core::f64::consts::PI / (self.den as f64 * (self.radicand as f64).sqrt())
    }

    /// `pi/2`, `pi/sqrt(2)`, `2*pi/(3*sqrt(5))`, ...
    pub fn exact_string(&self) -> String {
        alloc::format!("{self}")
    }
}

impl fmt::Display for ExactTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 1 {
            f.write_str("pi")?;
        } else {
            write!(f, "{}*pi", self.num)?;
        }
        match (self.den, self.radicand) {
            (1, 1) => Ok(()),
            (d, 1) => write!(f, "/{d}"),
            (1, r) => write!(f, "/sqrt({r})"),
            (d, r) => write!(f, "/({d}*sqrt({r}))"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting() {
        assert_eq!(ExactTime::half_period(2, 1).to_string(), "pi/2");
        assert_eq!(ExactTime::half_period(1, 2).to_string(), "pi/sqrt(2)");
        assert_eq!(ExactTime::period(1, 1).to_string(), "2*pi");
        assert_eq!(ExactTime::period(2, 1).to_string(), "pi");
        assert_eq!(ExactTime::period(3, 5).to_string(), "2*pi/(3*sqrt(5))");
    }

    #[test]
    fn values() {
        let t = ExactTime::half_period(1, 2);
        assert!((t.approx() - 2f64.sqrt() * core::f64::consts::PI / 2.0).abs() < 1e-15);
        assert_eq!(t.doubled(), ExactTime::period(1, 2));
        assert_eq!(ExactTime::half_period(2, 1).doubled(), ExactTime::new(1, 1, 1));
    }
}
