//! Permutations of `{0, …, degree-1}` acting on the right.
//!
//! The product `a * b` applies `a` first and then `b`, so that
//! `i^(a*b) = (i^a)^b`. Conjugation follows the same convention:
//! `x^g = g⁻¹ x g`.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    /// Builds a permutation from its image list, rejecting non-bijections.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {x} out of range for degree {n}"
                )));
            }
            if seen[x] {
                return Err(Error::InvalidPermutation(format!("image {x} repeated")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                let p = p as usize;
                if p >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} out of range for degree {degree}"
                    )));
                }
                if touched[p] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} appears in more than one cycle"
                    )));
                }
                touched[p] = true;
                images[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `(0 1 2)(3 4)`; `()` and the empty
    /// string denote the identity. Points are 0-based and may be separated
    /// by whitespace or commas.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let err = |column: usize, message: String| Error::Parse { line: 1, column, message };
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        let mut current: Option<Vec<u32>> = None;
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let column = i + 1;
            match c {
                '(' => {
                    if current.is_some() {
                        return Err(err(column, "nested '('".into()));
                    }
                    current = Some(Vec::new());
                    i += 1;
                }
                ')' => match current.take() {
                    Some(cycle) => {
                        if !cycle.is_empty() {
                            cycles.push(cycle);
                        }
                        i += 1;
                    }
                    None => return Err(err(column, "unmatched ')'".into())),
                },
                c if c.is_whitespace() || c == ',' => i += 1,
                c if c.is_ascii_digit() => {
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let token: String = chars[start..i].iter().collect();
                    let point: u32 = token
                        .parse()
                        .map_err(|_| err(column, format!("bad point '{token}'")))?;
                    match current.as_mut() {
                        Some(cycle) => {
                            if point as usize >= degree {
                                return Err(err(
                                    column,
                                    format!("point {point} out of range for degree {degree}"),
                                ));
                            }
                            if cycle.contains(&point) {
                                return Err(err(column, format!("point {point} repeated in cycle")));
                            }
                            cycle.push(point);
                        }
                        None => return Err(err(column, format!("point '{token}' outside a cycle"))),
                    }
                }
                other => return Err(err(column, format!("unexpected character '{other}'"))),
            }
        }
        if current.is_some() {
            return Err(err(chars.len() + 1, "unterminated cycle, expected ')'".into()));
        }
        let refs: Vec<&[u32]> = cycles.iter().map(|c| c.as_slice()).collect();
        Self::from_cycles(degree, &refs).map_err(|e| match e {
            Error::InvalidPermutation(m) => err(1, m),
            other => other,
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `self^k` for a non-negative exponent.
    pub fn pow(&self, k: u64) -> Self {
        let mut result = Permutation::identity(self.degree());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        result
    }

    /// `g⁻¹ self g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Self {
        let mut images = vec![0u32; self.images.len()];
        // (x^g)(i^g) = (x(i))^g
        for (i, &x) in self.images.iter().enumerate() {
            images[g.images[i] as usize] = g.images[x as usize];
        }
        Permutation { images }
    }

    pub fn commutator(a: &Permutation, b: &Permutation) -> Self {
        &(&a.inverse() * &b.inverse()) * &(a * b)
    }

    /// Order as the lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.images.len()];
        let mut order = 1u64;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    /// First point moved by the permutation.
    pub fn first_moved(&self) -> Option<usize> {
        self.images.iter().enumerate().position(|(i, &x)| i as u32 != x)
    }

    /// Disjoint cycles of length at least two, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p as u32);
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Extends the permutation to a larger degree, fixing the new points.
    pub fn extend_to(&self, degree: usize) -> Self {
        let mut images = self.images.clone();
        images.extend(self.images.len() as u32..degree as u32);
        Permutation { images }
    }

    /// Shifts the permutation to act on `offset..offset+degree` inside a
    /// permutation of `total` points.
    pub fn shifted(&self, offset: usize, total: usize) -> Self {
        let mut images: Vec<u32> = (0..total as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = offset as u32 + x;
        }
        Permutation { images }
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), rhs.degree());
        Permutation {
            images: self.images.iter().map(|&x| rhs.images[x as usize]).collect(),
        }
    }
}

impl Mul for Permutation {
    type Output = Permutation;

    fn mul(self, rhs: Permutation) -> Permutation {
        &self * &rhs
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_applies_left_factor_first() {
        let a = Permutation::parse_cycles(3, "(0 1)").unwrap();
        let b = Permutation::parse_cycles(3, "(1 2)").unwrap();
        // 0 -> 1 -> 2
        assert_eq!((&a * &b).apply(0), 2);
        assert_eq!((&a * &b).to_string(), "(0 2 1)");
    }

    #[test]
    fn conjugation_matches_definition() {
        let x = Permutation::parse_cycles(3, "(0 1)").unwrap();
        let g = Permutation::parse_cycles(3, "(0 1 2)").unwrap();
        let direct = &(&g.inverse() * &x) * &g;
        assert_eq!(x.conjugate_by(&g), direct);
        assert_eq!(direct.to_string(), "(1 2)");
    }

    #[test]
    fn parse_rejects_malformed_cycles() {
        assert!(matches!(
            Permutation::parse_cycles(3, "(0 1"),
            Err(Error::Parse { column: 5, .. })
        ));
        assert!(matches!(
            Permutation::parse_cycles(3, "(0 5)"),
            Err(Error::Parse { column: 4, .. })
        ));
        assert!(Permutation::parse_cycles(3, "(0 1)(1 2)").is_err());
        assert!(Permutation::parse_cycles(3, "0 1").is_err());
    }

    #[test]
    fn parse_accepts_whitespace_and_identity() {
        let p = Permutation::parse_cycles(4, " ( 0 , 1 )  (2 3) ").unwrap();
        assert_eq!(p.to_string(), "(0 1)(2 3)");
        assert!(Permutation::parse_cycles(4, "()").unwrap().is_identity());
        assert!(Permutation::parse_cycles(4, "").unwrap().is_identity());
    }

    #[test]
    fn from_images_rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn order_and_pow() {
        let p = Permutation::parse_cycles(5, "(0 1 2)(3 4)").unwrap();
        assert_eq!(p.order(), 6);
        assert!(p.pow(6).is_identity());
        assert!(!p.pow(3).is_identity());
        assert_eq!(p.pow(7), p);
    }
}
