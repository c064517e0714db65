use core::fmt;
use core::ops::Mul;

use super::margolus::MargolusQca;

/// Positive reduced fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalIndex {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl RationalIndex {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(num > 0 && den > 0, "index must be a positive fraction");
        let g = gcd(num, den);
        RationalIndex { num: num / g, den: den / g }
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    pub fn recip(self) -> Self {
        RationalIndex { num: self.den, den: self.num }
    }

    pub fn is_trivial(self) -> bool {
        self.num == 1 && self.den == 1
    }
}

impl Mul for RationalIndex {
    type Output = RationalIndex;

    fn mul(self, rhs: RationalIndex) -> RationalIndex {
        RationalIndex::new(self.num * rhs.num, self.den * rhs.den)
    }
}

impl fmt::Display for RationalIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// `r / d`.
pub fn gnvw_index(q: &MargolusQca) -> RationalIndex {
    RationalIndex::new(q.r as u64, q.d as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fractions_reduce() {
        let x = RationalIndex::new(6, 4);
        assert_eq!((x.num(), x.den()), (3, 2));
        assert_eq!(x * x.recip(), RationalIndex::new(1, 1));
        assert_eq!(alloc::format!("{}", RationalIndex::new(4, 2)), "2");
        assert_eq!(alloc::format!("{}", RationalIndex::new(1, 2)), "1/2");
    }
}
