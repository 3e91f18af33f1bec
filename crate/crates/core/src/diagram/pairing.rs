use std::fmt;

use crate::error::{Error, Result};

/// An involution on the orbit list of a local action. Orbits are numbered
/// from zero in the order of [`PermGroup::orbits`](crate::perm::PermGroup::orbits).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitPairing {
    images: Vec<usize>,
}

impl OrbitPairing {
    pub fn identity(orbits: usize) -> Self {
        Self {
            images: (0..orbits).collect(),
        }
    }

    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        for (i, &j) in images.iter().enumerate() {
            if j >= n || images[j] != i {
                return Err(Error::InvalidPairing(format!(
                    "{images:?} is not an involution of {n} orbits"
                )));
            }
        }
        Ok(Self { images })
    }

    /// Builds a pairing from disjoint pairs of orbit indices.
    pub fn from_pairs(orbits: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut images: Vec<usize> = (0..orbits).collect();
        for &(i, j) in pairs {
            if i >= orbits || j >= orbits || i == j || images[i] != i || images[j] != j {
                return Err(Error::InvalidPairing(format!(
                    "pair ({}, {}) is not disjoint from the others or out of range",
                    i + 1,
                    j + 1
                )));
            }
            images[i] = j;
            images[j] = i;
        }
        Ok(Self { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, orbit: usize) -> usize {
        self.images[orbit]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|&(i, &j)| i == j).count()
    }

    /// Swapped pairs `(i, j)` with `i < j`.
    pub fn transpositions(&self) -> Vec<(usize, usize)> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i < j)
            .map(|(i, &j)| (i, j))
            .collect()
    }

    /// Bracket notation by orbit sizes: `id`, `[12]`, `[11,22]`.
    pub fn notation(&self, orbit_sizes: &[usize]) -> String {
        if self.is_identity() {
            return "id".to_string();
        }
        let mut pairs: Vec<(usize, usize)> = self
            .transpositions()
            .into_iter()
            .map(|(i, j)| {
                let (a, b) = (orbit_sizes[i], orbit_sizes[j]);
                (a.min(b), a.max(b))
            })
            .collect();
        pairs.sort_unstable();
        let body: Vec<String> = pairs.iter().map(|(a, b)| format!("{a}{b}")).collect();
        format!("[{}]", body.join(","))
    }

    /// Resolves bracket notation against an orbit-size list, pairing the
    /// first unused orbits of the requested sizes.
    pub fn parse_notation(text: &str, orbit_sizes: &[usize]) -> Result<Self> {
        let text = text.trim();
        if text == "id" || text == "()" || text == "[]" {
            return Ok(Self::identity(orbit_sizes.len()));
        }
        let inner = text
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected `id` or `[..]`, got `{text}`")))?;
        let mut used = vec![false; orbit_sizes.len()];
        let mut pairs = Vec::new();
        for token in inner.split(',').map(str::trim) {
            let digits: Vec<usize> = token
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .filter(|v: &Vec<usize>| v.len() == 2)
                .ok_or_else(|| Error::Parse(format!("bad pair `{token}` in `{text}`")))?;
            let mut take = |size: usize| -> Result<usize> {
                let i = (0..orbit_sizes.len())
                    .find(|&i| !used[i] && orbit_sizes[i] == size)
                    .ok_or_else(|| {
                        Error::InvalidPairing(format!("no free orbit of size {size} for `{text}`"))
                    })?;
                used[i] = true;
                Ok(i)
            };
            let i = take(digits[0])?;
            let j = take(digits[1])?;
            pairs.push((i, j));
        }
        Self::from_pairs(orbit_sizes.len(), &pairs)
    }
}

/// One-based cycle notation on orbit indices, `()` for the identity.
impl fmt::Display for OrbitPairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.transpositions();
        if t.is_empty() {
            return f.write_str("()");
        }
        for (i, j) in t {
            write!(f, "({},{})", i + 1, j + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn notation_round_trip() {
        let sizes = [1, 2, 2, 2];
        let p = OrbitPairing::from_pairs(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(p.notation(&sizes), "[12,22]");
        assert_eq!(OrbitPairing::parse_notation("[12,22]", &sizes).unwrap(), p);
        assert_eq!(OrbitPairing::identity(4).notation(&sizes), "id");
        assert_eq!(p.to_string(), "(1,2)(3,4)");
    }

    #[test]
    fn rejects_non_involutions() {
        assert!(OrbitPairing::new(vec![1, 2, 0]).is_err());
        assert!(OrbitPairing::parse_notation("[13]", &[1, 2]).is_err());
        assert!(OrbitPairing::from_pairs(3, &[(0, 1), (1, 2)]).is_err());
    }
}
