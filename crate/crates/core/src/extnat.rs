//! Extended natural numbers: the codomain of cycle counts and wagers.

use std::fmt;
use std::iter::Sum;
use std::ops::Add;
use std::str::FromStr;

/// A natural number or `omega`. Addition absorbs `omega`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtNat {
    Finite(u64),
    Omega,
}

impl ExtNat {
    pub const ZERO: ExtNat = ExtNat::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, ExtNat::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtNat::Finite(n) => Some(n),
            ExtNat::Omega => None,
        }
    }
}

impl Default for ExtNat {
    fn default() -> Self {
        ExtNat::ZERO
    }
}

impl From<u64> for ExtNat {
    fn from(n: u64) -> Self {
        ExtNat::Finite(n)
    }
}

impl From<usize> for ExtNat {
    fn from(n: usize) -> Self {
        ExtNat::Finite(n as u64)
    }
}

impl Add for ExtNat {
    type Output = ExtNat;

    fn add(self, rhs: ExtNat) -> ExtNat {
        match (self, rhs) {
            // overflow is reported as omega
            (ExtNat::Finite(a), ExtNat::Finite(b)) => {
                a.checked_add(b).map_or(ExtNat::Omega, ExtNat::Finite)
            }
            _ => ExtNat::Omega,
        }
    }
}

impl Sum for ExtNat {
    fn sum<I: Iterator<Item = ExtNat>>(iter: I) -> ExtNat {
        iter.fold(ExtNat::ZERO, Add::add)
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(n) => write!(f, "{n}"),
            ExtNat::Omega => f.write_str("omega"),
        }
    }
}

impl FromStr for ExtNat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "omega" {
            return Ok(ExtNat::Omega);
        }
        s.parse::<u64>()
            .map(ExtNat::Finite)
            .map_err(|_| format!("expected a natural number or `omega`, got `{s}`"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ext() -> impl Strategy<Value = ExtNat> {
        prop_oneof![
            4 => (0u64..1000).prop_map(ExtNat::Finite),
            1 => Just(ExtNat::Omega),
        ]
    }

    proptest! {
        #[test]
        fn addition_is_commutative_and_associative(a in ext(), b in ext(), c in ext()) {
            prop_assert_eq!(a + b, b + a);
            prop_assert_eq!((a + b) + c, a + (b + c));
        }

        #[test]
        fn omega_absorbs(a in ext()) {
            prop_assert_eq!(a + ExtNat::Omega, ExtNat::Omega);
            prop_assert_eq!(a + ExtNat::ZERO, a);
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("omega".parse::<ExtNat>(), Ok(ExtNat::Omega));
        assert_eq!("17".parse::<ExtNat>(), Ok(ExtNat::Finite(17)));
        assert!("-1".parse::<ExtNat>().is_err());
        assert_eq!(ExtNat::Omega.to_string(), "omega");
        assert_eq!(ExtNat::Finite(u64::MAX) + ExtNat::Finite(1), ExtNat::Omega);
    }
}
