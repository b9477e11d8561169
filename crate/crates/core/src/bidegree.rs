use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

/// A (homological degree, weight) pair.
///
/// Cohomological degree `i` is stored as homological degree `-i`. Ordering is
/// by weight first, then degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Bidegree {
    pub degree: i64,
    pub weight: u32,
}

impl Bidegree {
    pub const ZERO: Bidegree = Bidegree { degree: 0, weight: 0 };

    pub fn new(degree: i64, weight: u32) -> Self {
        Bidegree { degree, weight }
    }

    /// Bidegree of something placed in cohomological degree `i`.
    pub fn cohomological(i: i64, weight: u32) -> Self {
        Bidegree { degree: -i, weight }
    }

    pub fn cohom_degree(self) -> i64 {
        -self.degree
    }
}

impl Add for Bidegree {
    type Output = Bidegree;

    fn add(self, rhs: Bidegree) -> Bidegree {
        Bidegree {
            degree: self.degree + rhs.degree,
            weight: self.weight + rhs.weight,
        }
    }
}

impl Ord for Bidegree {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.weight, self.degree).cmp(&(other.weight, other.degree))
    }
}

impl PartialOrd for Bidegree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.degree, self.weight)
    }
}
