//! Overflow-tracking integer used for exponent and parameter arithmetic.
//!
//! Every operation is checked; once an operation overflows the value is
//! poisoned and stays poisoned, so a whole formula can be written with plain
//! operators and inspected once at the end.

use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Checked(Option<i64>);

impl Checked {
    pub fn new(v: i64) -> Self {
        Checked(Some(v))
    }

    pub fn get(self, what: &'static str) -> Result<i64> {
        self.0.ok_or(Error::ArithmeticOverflow(what))
    }

    pub fn is_overflow(self) -> bool {
        self.0.is_none()
    }
}

impl From<i64> for Checked {
    fn from(v: i64) -> Self {
        Checked(Some(v))
    }
}

impl From<i32> for Checked {
    fn from(v: i32) -> Self {
        Checked(Some(v.into()))
    }
}

macro_rules! checked_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for Checked {
            type Output = Checked;
            fn $method(self, rhs: Checked) -> Checked {
                Checked(match (self.0, rhs.0) {
                    (Some(a), Some(b)) => a.$checked(b),
                    _ => None,
                })
            }
        }

        impl $tr<i64> for Checked {
            type Output = Checked;
            fn $method(self, rhs: i64) -> Checked {
                Checked(self.0.and_then(|a| a.$checked(rhs)))
            }
        }

        impl $tr<Checked> for i64 {
            type Output = Checked;
            fn $method(self, rhs: Checked) -> Checked {
                Checked(rhs.0.and_then(|b| self.$checked(b)))
            }
        }
    };
}

checked_op!(Add, add, checked_add);
checked_op!(Sub, sub, checked_sub);
checked_op!(Mul, mul, checked_mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_poisons() {
        let big = Checked::new(i64::MAX);
        let v = (big + 1) * 2 - 5;
        assert!(v.is_overflow());
        assert!(matches!(v.get("x"), Err(Error::ArithmeticOverflow("x"))));
    }

    #[test]
    fn mixed_operands() {
        let a = Checked::new(7);
        assert_eq!((3 * a - 1).get("t").unwrap(), 20);
        assert_eq!((a * a + a).get("t").unwrap(), 56);
    }
}
