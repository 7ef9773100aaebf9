//! The hyperoctahedral group `H_n` of signed permutations.
//!
//! Elements are stored in window (one-line) notation `w_1 … w_n`, a barred
//! letter being a negative integer. The group acts on `±{1,…,n}` with
//! `w(-i) = -w(i)`, and `compose(u, v)` is the map `i ↦ u(v(i))`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    /// Builds an element from its window, rejecting `0` and repeated absolute values.
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &letter in &window {
            let a = letter.unsigned_abs() as usize;
            if a == 0 || a > n {
                return Err(Error::InvalidWindow(format!(
                    "letter {letter} outside ±1..={n}"
                )));
            }
            if seen[a] {
                return Err(Error::InvalidWindow(format!("repeated |{letter}|")));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { window })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            window: (1..=n as i32).collect(),
        }
    }

    /// The type-B generators `t, s_1, …, s_{n-1}` in that order.
    pub fn generators(n: usize) -> Vec<SignedPermutation> {
        let mut gens = Vec::with_capacity(n);
        if n == 0 {
            return gens;
        }
        let mut t = Self::identity(n);
        t.window[0] = -1;
        gens.push(t);
        for i in 0..n - 1 {
            let mut s = Self::identity(n);
            s.window.swap(i, i + 1);
            gens.push(s);
        }
        gens
    }

    pub fn degree(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// Image of a signed letter.
    pub fn apply(&self, letter: i32) -> i32 {
        let image = self.window[letter.unsigned_abs() as usize - 1];
        if letter < 0 {
            -image
        } else {
            image
        }
    }

    /// Coxeter length for the generators `t = s_0, s_1, …`:
    /// `#{i<j : w_i > w_j} + Σ_{w_i<0} |w_i|`.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        let neg: usize = w
            .iter()
            .filter(|&&x| x < 0)
            .map(|x| x.unsigned_abs() as usize)
            .sum();
        inv + neg
    }

    pub fn sign(&self) -> i8 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Number of barred letters.
    pub fn total_color(&self) -> usize {
        self.window.iter().filter(|&&x| x < 0).count()
    }

    pub fn compose(&self, other: &SignedPermutation) -> Result<SignedPermutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(SignedPermutation {
            window: other.window.iter().map(|&x| self.apply(x)).collect(),
        })
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut window = vec![0; self.degree()];
        for (i, &x) in self.window.iter().enumerate() {
            let pos = i as i32 + 1;
            window[x.unsigned_abs() as usize - 1] = if x < 0 { -pos } else { pos };
        }
        SignedPermutation { window }
    }

    pub fn is_involution(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(i, &x)| self.apply(x) == i as i32 + 1)
    }

    /// Absolute values of the window, a permutation of `1..=n`.
    pub fn underlying(&self) -> Vec<u32> {
        self.window.iter().map(|x| x.unsigned_abs()).collect()
    }

    /// Number of elements of `H_n`, `2^n n!`.
    pub fn group_order(n: usize) -> u64 {
        (1u64 << n) * factorial(n)
    }

    /// Position in the fixed enumeration order: the underlying permutation in
    /// lexicographic order, then the sign pattern read as a binary number with
    /// `w_1` as the most significant bit (barred = 1).
    pub fn rank(&self) -> u64 {
        let n = self.degree();
        let perm_rank = permutation_rank(&self.underlying());
        let mask = self
            .window
            .iter()
            .fold(0u64, |acc, &x| (acc << 1) | u64::from(x < 0));
        perm_rank * (1u64 << n) + mask
    }

    pub fn unrank(n: usize, rank: u64) -> Result<SignedPermutation> {
        if rank >= Self::group_order(n) {
            return Err(Error::RankOutOfRange { rank, degree: n });
        }
        let signs = 1u64 << n;
        let perm = permutation_unrank(n, rank / signs);
        let mask = rank % signs;
        let window = perm
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                let barred = (mask >> (n - 1 - i)) & 1 == 1;
                if barred {
                    -(a as i32)
                } else {
                    a as i32
                }
            })
            .collect();
        Ok(SignedPermutation { window })
    }

    /// All of `H_n` in rank order.
    pub fn enumerate(n: usize) -> impl Iterator<Item = SignedPermutation> {
        (0..Self::group_order(n)).map(move |r| Self::unrank(n, r).expect("rank in range"))
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.window {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let window = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i32>()
                    .map_err(|_| Error::InvalidWindow(format!("cannot parse `{tok}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPermutation::new(window)
    }
}

impl Serialize for SignedPermutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Lexicographic rank of a permutation of `1..=n`.
pub fn permutation_rank(perm: &[u32]) -> u64 {
    let n = perm.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = perm[i + 1..].iter().filter(|&&x| x < perm[i]).count() as u64;
        rank += smaller * factorial(n - 1 - i);
    }
    rank
}

pub fn permutation_unrank(n: usize, mut rank: u64) -> Vec<u32> {
    let mut pool: Vec<u32> = (1..=n as u32).collect();
    let mut perm = Vec::with_capacity(n);
    for i in 0..n {
        let f = factorial(n - 1 - i);
        let idx = (rank / f) as usize;
        rank %= f;
        perm.push(pool.remove(idx));
    }
    perm
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Vec<u32>> {
    (0..factorial(n)).map(move |r| permutation_unrank(n, r))
}

/// Sign of an ordinary permutation via inversion parity.
pub fn permutation_sign(perm: &[u32]) -> i8 {
    let mut inv = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(w: &[i32]) -> SignedPermutation {
        SignedPermutation::new(w.to_vec()).unwrap()
    }

    #[test]
    fn generators_small_degrees() {
        assert_eq!(SignedPermutation::generators(1), vec![sp(&[-1])]);
        assert_eq!(
            SignedPermutation::generators(2),
            vec![sp(&[-1, 2]), sp(&[2, 1])]
        );
        assert_eq!(
            SignedPermutation::generators(3),
            vec![sp(&[-1, 2, 3]), sp(&[2, 1, 3]), sp(&[1, 3, 2])]
        );
    }

    #[test]
    fn length_and_sign_examples() {
        assert_eq!(sp(&[-1, 2]).length(), 1);
        assert_eq!(sp(&[-2, -1]).length(), 3);
        assert_eq!(sp(&[-4, -3, 2, 1]).length(), 8);
        assert_eq!(sp(&[-4, -3, 2, 1]).sign(), 1);
        assert_eq!(SignedPermutation::identity(5).sign(), 1);
        for g in SignedPermutation::generators(4) {
            assert_eq!(g.sign(), -1);
        }
    }

    #[test]
    fn total_color_examples() {
        assert_eq!(sp(&[-4, -3, 2, 1]).total_color(), 2);
        assert_eq!(SignedPermutation::identity(3).total_color(), 0);
        assert_eq!(sp(&[-1, -2, -3]).total_color(), 3);
    }

    #[test]
    fn group_laws() {
        let t = sp(&[-1, 2]);
        assert_eq!(t.compose(&t).unwrap(), SignedPermutation::identity(2));
        let s1 = sp(&[2, 1, 3]);
        assert_eq!(s1.inverse(), s1);
        let inv = sp(&[5, 9, -7, -11, 1, 6, -3, -10, 2, -8, -4]);
        assert!(inv.is_involution());
        assert!(!sp(&[2, 3, 1]).is_involution());
        assert_eq!(
            sp(&[1, 2]).compose(&sp(&[1])),
            Err(Error::DegreeMismatch { left: 2, right: 1 })
        );
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(SignedPermutation::enumerate(1).count(), 2);
        assert_eq!(SignedPermutation::enumerate(3).count(), 48);
        assert_eq!(
            SignedPermutation::unrank(4, 0).unwrap(),
            SignedPermutation::identity(4)
        );
        assert_eq!(SignedPermutation::enumerate(0).count(), 1);
        assert!(SignedPermutation::unrank(2, 8).is_err());
        for (i, w) in SignedPermutation::enumerate(3).enumerate() {
            assert_eq!(w.rank(), i as u64);
        }
    }

    #[test]
    fn parse_window() {
        let w: SignedPermutation = "-4 -3 2 1".parse().unwrap();
        assert_eq!(w.window(), &[-4, -3, 2, 1]);
        assert_eq!(w.to_string(), "-4 -3 2 1");
        assert!("1 0".parse::<SignedPermutation>().is_err());
        assert!("1 -1".parse::<SignedPermutation>().is_err());
        assert!("1 x".parse::<SignedPermutation>().is_err());
        assert_eq!("".parse::<SignedPermutation>().unwrap().degree(), 0);
    }

    #[test]
    fn composition_is_associative_and_inverse_works() {
        let all: Vec<_> = SignedPermutation::enumerate(2).collect();
        for u in &all {
            assert!(u.compose(&u.inverse()).unwrap() == SignedPermutation::identity(2));
            for v in &all {
                for x in &all {
                    let a = u.compose(v).unwrap().compose(x).unwrap();
                    let b = u.compose(&v.compose(x).unwrap()).unwrap();
                    assert_eq!(a, b);
                }
            }
        }
    }
}
