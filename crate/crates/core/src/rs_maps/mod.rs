//! Robinson–Schensted maps on the hyperoctahedral group.
//!
//! Each map is a [`RobinsonSchensted`] implementation selected at runtime
//! by a [`RankSpec`]: `G_r` for a finite rank `r`, and `G_∞` on bitableaux.

mod bitableau;
mod domino_insertion;
mod quotient;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

pub use bitableau::{g_infinity, g_infinity_inverse};
pub use domino_insertion::{g_r, g_r_inverse, insert_letter, reverse_insert};
pub use quotient::{two_quotient, two_quotient_inverse};

use crate::domino::DominoTableau;
use crate::error::{Error, Result};
use crate::group::SignedPermutation;
use crate::young::Bitableau;

/// An insertion/recording pair of equal shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RsImage<T> {
    pub p: T,
    pub q: T,
}

impl<T: Serialize> Serialize for RsImage<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (&self.p, &self.q).serialize(s)
    }
}

pub type DominoImage = RsImage<DominoTableau>;
pub type BitableauImage = RsImage<Bitableau>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum MapImage {
    Domino(DominoImage),
    Bitableau(BitableauImage),
}

/// `G_r` as a convenience returning an [`RsImage`].
pub fn domino_image(w: &SignedPermutation, r: usize) -> DominoImage {
    let (p, q) = g_r(w, r);
    RsImage { p, q }
}

pub fn bitableau_image(w: &SignedPermutation) -> BitableauImage {
    let (p, q) = g_infinity(w);
    RsImage { p, q }
}

/// The insertion (left) tableau of `w` under `G_r`.
pub fn left_tableau(w: &SignedPermutation, r: usize) -> DominoTableau {
    g_r(w, r).0
}

pub trait RobinsonSchensted: Send + Sync {
    fn name(&self) -> String;
    fn forward(&self, w: &SignedPermutation) -> MapImage;
    fn inverse(&self, image: &MapImage) -> Result<SignedPermutation>;
}

#[derive(Clone, Copy, Debug)]
pub struct DominoInsertion {
    pub rank: usize,
}

impl RobinsonSchensted for DominoInsertion {
    fn name(&self) -> String {
        format!("G_{}", self.rank)
    }

    fn forward(&self, w: &SignedPermutation) -> MapImage {
        MapImage::Domino(domino_image(w, self.rank))
    }

    fn inverse(&self, image: &MapImage) -> Result<SignedPermutation> {
        match image {
            MapImage::Domino(RsImage { p, q }) => g_r_inverse(p, q, self.rank),
            MapImage::Bitableau(_) => Err(Error::InvalidTableau(
                "expected domino tableaux for a finite-rank map".into(),
            )),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct BitableauInsertion;

impl RobinsonSchensted for BitableauInsertion {
    fn name(&self) -> String {
        "G_inf".into()
    }

    fn forward(&self, w: &SignedPermutation) -> MapImage {
        MapImage::Bitableau(bitableau_image(w))
    }

    fn inverse(&self, image: &MapImage) -> Result<SignedPermutation> {
        match image {
            MapImage::Bitableau(RsImage { p, q }) => g_infinity_inverse(p, q),
            MapImage::Domino(_) => Err(Error::InvalidTableau(
                "expected bitableaux for the infinite-rank map".into(),
            )),
        }
    }
}

/// A finite rank or `inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankSpec {
    Finite(usize),
    Infinite,
}

impl RankSpec {
    pub fn map(self) -> Box<dyn RobinsonSchensted> {
        match self {
            RankSpec::Finite(rank) => Box::new(DominoInsertion { rank }),
            RankSpec::Infinite => Box::new(BitableauInsertion),
        }
    }
}

impl FromStr for RankSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inf" | "infinity" | "∞" => Ok(RankSpec::Infinite),
            _ => s
                .parse()
                .map(RankSpec::Finite)
                .map_err(|_| Error::PreconditionViolated(format!("bad rank `{s}`"))),
        }
    }
}

impl fmt::Display for RankSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankSpec::Finite(r) => write!(f, "{r}"),
            RankSpec::Infinite => f.write_str("inf"),
        }
    }
}
