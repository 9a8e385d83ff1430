use std::fmt;

use serde::{Serialize, Serializer};

/// Largest color a [`ColorSet`] can hold.
pub const MAX_COLOR: u32 = 127;

/// A set of colors in `1..=MAX_COLOR`, stored as a bitmask.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash)]
pub struct ColorSet(u128);

impl ColorSet {
    pub const fn empty() -> Self {
        ColorSet(0)
    }

    /// `{1, ..., size}`, truncated at [`MAX_COLOR`].
    pub fn palette(size: u32) -> Self {
        let size = size.min(MAX_COLOR);
        ColorSet(((1u128 << size) - 1) << 1)
    }

    pub fn contains(self, color: u32) -> bool {
        color <= MAX_COLOR && self.0 >> color & 1 == 1
    }

    pub fn insert(&mut self, color: u32) {
        assert!((1..=MAX_COLOR).contains(&color), "color {color} out of range");
        self.0 |= 1 << color;
    }

    pub fn remove(&mut self, color: u32) {
        if color <= MAX_COLOR {
            self.0 &= !(1 << color);
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn intersection(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = u32> {
        (1..=MAX_COLOR).filter(move |&c| self.contains(c))
    }
}

impl FromIterator<u32> for ColorSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut set = ColorSet::empty();
        for c in iter {
            set.insert(c);
        }
        set
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ColorSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_operations() {
        let p = ColorSet::palette(10);
        assert_eq!(p.len(), 10);
        assert!(p.contains(1) && p.contains(10) && !p.contains(0) && !p.contains(11));
        let odd: ColorSet = [1, 3, 5, 11].into_iter().collect();
        assert_eq!(p.intersection(odd).iter().collect::<Vec<_>>(), vec![1, 3, 5]);
        assert_eq!(ColorSet::palette(MAX_COLOR).len(), MAX_COLOR as usize);
        assert_eq!(format!("{:?}", odd), "{1, 3, 5, 11}");
    }
}
