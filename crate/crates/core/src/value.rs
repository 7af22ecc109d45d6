//! Table cell values: a non-negative edge count or ABSENT.

use core::fmt;
use core::ops::Add;

/// An edge count, or [`Value::ABSENT`] when no vertex set fits the cell.
///
/// ABSENT absorbs addition and loses every `max`; the maximum of nothing is
/// ABSENT.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Value(u32);

impl Value {
    pub const ABSENT: Value = Value(u32::MAX);
    pub const ZERO: Value = Value(0);

    pub fn new(v: u32) -> Self {
        debug_assert!(v != u32::MAX);
        Value(v)
    }

    pub fn is_absent(self) -> bool {
        self.0 == u32::MAX
    }

    pub fn get(self) -> Option<u32> {
        (!self.is_absent()).then_some(self.0)
    }

    pub fn max(self, other: Value) -> Value {
        match (self.is_absent(), other.is_absent()) {
            (true, _) => other,
            (_, true) => self,
            _ => Value(self.0.max(other.0)),
        }
    }

    /// Adds `delta`, which may be negative; ABSENT stays ABSENT.
    pub fn offset(self, delta: i64) -> Value {
        if self.is_absent() {
            return self;
        }
        let v = self.0 as i64 + delta;
        debug_assert!(v >= 0, "table value went negative");
        Value(v as u32)
    }
}

impl Add for Value {
    type Output = Value;
    fn add(self, rhs: Value) -> Value {
        if self.is_absent() || rhs.is_absent() {
            Value::ABSENT
        } else {
            Value(self.0 + rhs.0)
        }
    }
}

impl From<u32> for Value {
    fn from(v: u32) -> Self {
        Value::new(v)
    }
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.get() {
            Some(v) => write!(f, "{v}"),
            None => f.write_str("∅"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn absent_rules() {
        let a = Value::ABSENT;
        let three = Value::new(3);
        assert!((a + three).is_absent());
        assert_eq!(a.max(three), three);
        assert_eq!(three.max(a), three);
        assert!(a.max(a).is_absent());
        assert_eq!(three.offset(-1), Value::new(2));
        assert!(a.offset(5).is_absent());
    }
}
