//! Root datum of type G2: Dynkin nodes, the weight lattice in the basis of
//! fundamental weights, simple roots and the coroot pairing.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

/// A node of the G2 Dynkin diagram. Node 1 carries the short simple root
/// (`q_1 = q`), node 2 the long one (`q_2 = q^3`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Node {
    One,
    Two,
}

impl Node {
    pub const ALL: [Node; 2] = [Node::One, Node::Two];

    pub fn index(self) -> u8 {
        match self {
            Node::One => 1,
            Node::Two => 2,
        }
    }

    pub fn from_index(i: u8) -> Option<Node> {
        match i {
            1 => Some(Node::One),
            2 => Some(Node::Two),
            _ => None,
        }
    }

    /// Exponent `d_i` with `q_i = q^{d_i}`.
    pub fn q_exponent(self) -> i32 {
        match self {
            Node::One => 1,
            Node::Two => 3,
        }
    }

    /// Simple root `α_i` written in the basis of fundamental weights, i.e. the
    /// i-th row of the Cartan matrix `[[2, -1], [-3, 2]]`.
    pub fn simple_root(self) -> Weight {
        match self {
            Node::One => Weight::new(2, -1),
            Node::Two => Weight::new(-3, 2),
        }
    }

    pub fn other(self) -> Node {
        match self {
            Node::One => Node::Two,
            Node::Two => Node::One,
        }
    }
}

impl TryFrom<u8> for Node {
    type Error = String;

    fn try_from(i: u8) -> Result<Self, Self::Error> {
        Node::from_index(i).ok_or_else(|| format!("invalid Dynkin node {i}"))
    }
}

impl From<Node> for u8 {
    fn from(n: Node) -> u8 {
        n.index()
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// An element `a·Λ1 + b·Λ2` of the weight lattice.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct Weight {
    pub a: i32,
    pub b: i32,
}

impl Weight {
    pub const ZERO: Weight = Weight { a: 0, b: 0 };

    pub const fn new(a: i32, b: i32) -> Self {
        Weight { a, b }
    }

    /// Coroot pairing `<wt, α_i^∨>`: the coefficient of `Λ_i`.
    pub fn pairing(self, node: Node) -> i32 {
        match node {
            Node::One => self.a,
            Node::Two => self.b,
        }
    }

    pub fn is_dominant(self) -> bool {
        self.a >= 0 && self.b >= 0
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, rhs: Weight) {
        *self = *self + rhs;
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        Weight::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl SubAssign for Weight {
    fn sub_assign(&mut self, rhs: Weight) {
        *self = *self - rhs;
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.a, -self.b)
    }
}

impl Mul<Weight> for i32 {
    type Output = Weight;
    fn mul(self, rhs: Weight) -> Weight {
        Weight::new(self * rhs.a, self * rhs.b)
    }
}

impl std::iter::Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        iter.fold(Weight::ZERO, |acc, w| acc + w)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_roots_pair_to_cartan_matrix() {
        assert_eq!(Node::One.simple_root().pairing(Node::One), 2);
        assert_eq!(Node::Two.simple_root().pairing(Node::One), -3);
        assert_eq!(Node::One.simple_root().pairing(Node::Two), -1);
        assert_eq!(Node::Two.simple_root().pairing(Node::Two), 2);
    }

    #[test]
    fn node_round_trip() {
        for n in Node::ALL {
            assert_eq!(Node::from_index(n.index()), Some(n));
        }
        assert_eq!(Node::from_index(3), None);
    }
}
