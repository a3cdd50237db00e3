//! Arithmetic of the Klein four-group G = Z2 x Z2, its automorphism group,
//! and the three index-2 characters G -> Z2 used in parity arguments.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// An element of G = Z2 x Z2, written `0`, `a`, `b`, `g`.
///
/// The two-bit encoding makes addition a XOR, so flow sums accumulate
/// branch-free. Every element is its own inverse.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
#[repr(u8)]
pub enum GroupElem {
    Zero = 0,
    Alpha = 1,
    Beta = 2,
    Gamma = 3,
}

impl GroupElem {
    /// All four elements in the fixed order 0 < a < b < g.
    pub const ALL: [GroupElem; 4] = [
        GroupElem::Zero,
        GroupElem::Alpha,
        GroupElem::Beta,
        GroupElem::Gamma,
    ];

    /// The three nonzero elements in the fixed order a < b < g.
    pub const NONZERO: [GroupElem; 3] = [GroupElem::Alpha, GroupElem::Beta, GroupElem::Gamma];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> GroupElem {
        GroupElem::ALL[i]
    }

    pub fn is_zero(self) -> bool {
        self == GroupElem::Zero
    }

    /// For a nonzero element, the other two nonzero elements.
    ///
    /// These are the pair appearing opposite `{0, g}` in the facet forms.
    pub fn complement_pair(self) -> (GroupElem, GroupElem) {
        match self {
            GroupElem::Alpha => (GroupElem::Beta, GroupElem::Gamma),
            GroupElem::Beta => (GroupElem::Alpha, GroupElem::Gamma),
            GroupElem::Gamma => (GroupElem::Alpha, GroupElem::Beta),
            GroupElem::Zero => panic!("complement_pair is defined for nonzero elements"),
        }
    }

    pub fn letter(self) -> char {
        match self {
            GroupElem::Zero => '0',
            GroupElem::Alpha => 'a',
            GroupElem::Beta => 'b',
            GroupElem::Gamma => 'g',
        }
    }

    pub fn from_letter(c: char) -> Option<GroupElem> {
        match c.to_ascii_lowercase() {
            '0' => Some(GroupElem::Zero),
            'a' => Some(GroupElem::Alpha),
            'b' => Some(GroupElem::Beta),
            'g' => Some(GroupElem::Gamma),
            _ => None,
        }
    }
}

impl Add for GroupElem {
    type Output = GroupElem;

    fn add(self, rhs: GroupElem) -> GroupElem {
        GroupElem::from_index(self.index() ^ rhs.index())
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for GroupElem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "0" | "zero" => Ok(GroupElem::Zero),
            "a" | "alpha" => Ok(GroupElem::Alpha),
            "b" | "beta" => Ok(GroupElem::Beta),
            "g" | "gamma" => Ok(GroupElem::Gamma),
            other => Err(Error::Parse(format!("unknown group element `{other}`"))),
        }
    }
}

impl Serialize for GroupElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GroupElem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An automorphism of G: fixes 0 and permutes {a, b, g}.
///
/// Stored as a lookup over all four elements; there are only six
/// automorphisms, so the table form is simplest to test exhaustively.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupAut {
    images: [GroupElem; 4],
}

impl GroupAut {
    pub fn identity() -> GroupAut {
        GroupAut {
            images: GroupElem::ALL,
        }
    }

    /// Builds the automorphism from the images of a, b, g.
    pub fn from_images(
        alpha_to: GroupElem,
        beta_to: GroupElem,
        gamma_to: GroupElem,
    ) -> Result<GroupAut, Error> {
        let imgs = [alpha_to, beta_to, gamma_to];
        let mut seen = [false; 4];
        for e in imgs {
            if e.is_zero() || seen[e.index()] {
                return Err(Error::Parse(format!(
                    "images must be a permutation of a, b, g; got {alpha_to}{beta_to}{gamma_to}"
                )));
            }
            seen[e.index()] = true;
        }
        Ok(GroupAut {
            images: [GroupElem::Zero, alpha_to, beta_to, gamma_to],
        })
    }

    /// The transposition exchanging two nonzero elements.
    pub fn swapping(x: GroupElem, y: GroupElem) -> GroupAut {
        assert!(!x.is_zero() && !y.is_zero() && x != y);
        let mut images = GroupElem::ALL;
        images[x.index()] = y;
        images[y.index()] = x;
        GroupAut { images }
    }

    /// All six automorphisms, ordered lexicographically by image string.
    pub fn all() -> [GroupAut; 6] {
        let [a, b, g] = GroupElem::NONZERO;
        [
            GroupAut::from_images(a, b, g).unwrap(),
            GroupAut::from_images(a, g, b).unwrap(),
            GroupAut::from_images(b, a, g).unwrap(),
            GroupAut::from_images(b, g, a).unwrap(),
            GroupAut::from_images(g, a, b).unwrap(),
            GroupAut::from_images(g, b, a).unwrap(),
        ]
    }

    pub fn apply(&self, g: GroupElem) -> GroupElem {
        self.images[g.index()]
    }

    /// phi2(phi1(.)) where `self` is phi2.
    pub fn compose(&self, first: &GroupAut) -> GroupAut {
        let mut images = [GroupElem::Zero; 4];
        for e in GroupElem::ALL {
            images[e.index()] = self.apply(first.apply(e));
        }
        GroupAut { images }
    }

    pub fn inverse(&self) -> GroupAut {
        let mut images = [GroupElem::Zero; 4];
        for e in GroupElem::ALL {
            images[self.apply(e).index()] = e;
        }
        GroupAut { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images == GroupElem::ALL
    }
}

impl fmt::Display for GroupAut {
    /// The images of a, b, g concatenated, e.g. `bag` for the swap a <-> b.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}{}",
            self.apply(GroupElem::Alpha),
            self.apply(GroupElem::Beta),
            self.apply(GroupElem::Gamma)
        )
    }
}

impl FromStr for GroupAut {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let lower = s.to_ascii_lowercase();
        let chars: Vec<char> = lower.chars().collect();
        if chars.len() != 3 {
            return Err(Error::Parse(format!(
                "automorphism must be 3 letters over a, b, g; got `{s}`"
            )));
        }
        let img = |c: char| {
            GroupElem::from_letter(c)
                .filter(|e| !e.is_zero())
                .ok_or_else(|| Error::Parse(format!("invalid automorphism letter `{c}`")))
        };
        GroupAut::from_images(img(chars[0])?, img(chars[1])?, img(chars[2])?)
    }
}

impl Serialize for GroupAut {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GroupAut {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// One of the three homomorphisms G -> Z2 with a kernel of size two.
///
/// `kernel_pair` is the nonzero element mapped to 0; the kernel is
/// `{0, kernel_pair}` and the other two nonzero elements map to 1.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct ParityChar {
    kernel_pair: GroupElem,
}

impl ParityChar {
    pub fn new(kernel_pair: GroupElem) -> Result<ParityChar, Error> {
        if kernel_pair.is_zero() {
            return Err(Error::ZeroFacetElement);
        }
        Ok(ParityChar { kernel_pair })
    }

    pub fn all() -> [ParityChar; 3] {
        GroupElem::NONZERO.map(|g| ParityChar { kernel_pair: g })
    }

    pub fn kernel_pair(&self) -> GroupElem {
        self.kernel_pair
    }

    pub fn value(&self, g: GroupElem) -> u8 {
        if g.is_zero() || g == self.kernel_pair {
            0
        } else {
            1
        }
    }
}
