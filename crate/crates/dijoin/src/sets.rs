use std::fmt;

macro_rules! bitset {
    ($name:ident, $word:ty, $cap:expr) => {
        #[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(pub $word);

        impl $name {
            pub const CAPACITY: usize = $cap;

            pub const fn empty() -> Self {
                $name(0)
            }

            pub fn full(n: usize) -> Self {
                if n >= $cap {
                    $name(<$word>::MAX)
                } else {
                    $name(((1 as $word) << n) - 1)
                }
            }

            pub fn singleton(i: usize) -> Self {
                $name((1 as $word) << i)
            }

            pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
                it.into_iter().fold(Self::empty(), |s, i| s.with(i))
            }

            pub fn bits(self) -> $word {
                self.0
            }

            pub fn contains(self, i: usize) -> bool {
                i < $cap && (self.0 >> i) & 1 == 1
            }

            pub fn with(self, i: usize) -> Self {
                $name(self.0 | ((1 as $word) << i))
            }

            pub fn without(self, i: usize) -> Self {
                $name(self.0 & !((1 as $word) << i))
            }

            pub fn insert(&mut self, i: usize) {
                self.0 |= (1 as $word) << i;
            }

            pub fn remove(&mut self, i: usize) {
                self.0 &= !((1 as $word) << i);
            }

            pub fn len(self) -> usize {
                self.0.count_ones() as usize
            }

            pub fn is_empty(self) -> bool {
                self.0 == 0
            }

            pub fn union(self, o: Self) -> Self {
                $name(self.0 | o.0)
            }

            pub fn inter(self, o: Self) -> Self {
                $name(self.0 & o.0)
            }

            pub fn minus(self, o: Self) -> Self {
                $name(self.0 & !o.0)
            }

            pub fn is_subset(self, o: Self) -> bool {
                self.0 & !o.0 == 0
            }

            pub fn complement(self, n: usize) -> Self {
                Self::full(n).minus(self)
            }

            pub fn first(self) -> Option<usize> {
                (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
            }

            pub fn iter(self) -> impl Iterator<Item = usize> {
                let mut w = self.0;
                std::iter::from_fn(move || {
                    if w == 0 {
                        None
                    } else {
                        let i = w.trailing_zeros() as usize;
                        w &= w - 1;
                        Some(i)
                    }
                })
            }

            pub fn to_vec(self) -> Vec<usize> {
                self.iter().collect()
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.debug_set().entries(self.iter()).finish()
            }
        }
    };
}

bitset!(VertexSet, u64, 64);
bitset!(ArcSet, u128, 128);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let s = VertexSet::from_indices([0, 3, 5]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(3) && !s.contains(4));
        assert_eq!(s.to_vec(), vec![0, 3, 5]);
        assert_eq!(s.complement(6), VertexSet::from_indices([1, 2, 4]));
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(ArcSet::full(128).len(), 128);
        assert_eq!(ArcSet::singleton(100).first(), Some(100));
        assert!(VertexSet::from_indices([1]).is_subset(s.with(1)));
    }
}
