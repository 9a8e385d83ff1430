use std::fmt;

use serde::{Deserialize, Serialize};

/// One end of an edge. Edge `e` owns darts `2e` (end 0, at its first
/// endpoint) and `2e + 1` (end 1, at its second endpoint).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Dart(usize);

impl Dart {
    #[inline]
    pub const fn new(edge: usize, end: usize) -> Self {
        Dart(2 * edge + (end & 1))
    }

    #[inline]
    pub const fn from_index(index: usize) -> Self {
        Dart(index)
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0
    }

    #[inline]
    pub const fn edge(self) -> usize {
        self.0 >> 1
    }

    #[inline]
    pub const fn end(self) -> usize {
        self.0 & 1
    }

    #[inline]
    pub const fn twin(self) -> Self {
        Dart(self.0 ^ 1)
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn twin_is_an_involution(raw in 0usize..1_000_000) {
            let d = Dart::from_index(raw);
            prop_assert_eq!(d.twin().twin(), d);
            prop_assert_ne!(d.twin(), d);
            prop_assert_eq!(d.twin().edge(), d.edge());
            prop_assert_eq!(Dart::new(d.edge(), d.end()), d);
        }
    }
}
