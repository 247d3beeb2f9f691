//! Exact non-negative rationals for independence ratios and `a(G)`.

use core::cmp::Ordering;
use core::fmt;

/// Reduced fraction `num/den` with `den >= 1`. Comparisons cross-multiply
/// in `u128`, so they are exact for every representable value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: u64,
    den: u64,
}

const fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Ratio {
    pub const ZERO: Ratio = Ratio { num: 0, den: 1 };
    pub const ONE: Ratio = Ratio { num: 1, den: 1 };
    pub const HALF: Ratio = Ratio { num: 1, den: 2 };

    /// Panics when `den == 0`.
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        if g == 0 {
            return Ratio::ZERO;
        }
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    pub fn from_usize(num: usize, den: usize) -> Self {
        Ratio::new(num as u64, den as u64)
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    /// `1 - self`, or `None` when `self > 1`.
    pub fn one_minus(self) -> Option<Ratio> {
        self.den.checked_sub(self.num).map(|n| Ratio::new(n, self.den))
    }

    /// `self / other`, or `None` when `other` is zero.
    pub fn checked_div(self, other: Ratio) -> Option<Ratio> {
        if other.num == 0 {
            return None;
        }
        let num = self.num as u128 * other.den as u128;
        let den = self.den as u128 * other.num as u128;
        let g = gcd128(num, den);
        Some(Ratio::new(
            u64::try_from(num / g).ok()?,
            u64::try_from(den / g).ok()?,
        ))
    }
}

fn gcd128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}
