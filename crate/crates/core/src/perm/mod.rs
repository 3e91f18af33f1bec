//! Finite permutation groups small enough to hold every element in memory.
//!
//! Points are `0..degree` throughout the API. Text input and output
//! (cycle notation, image lists in files) use `1..=degree`, matching the
//! usual convention for permutation groups.

mod classes;
mod conjugacy;
mod parse;
pub mod stabilizer;

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

pub use classes::{subgroup_class_data, subgroup_classes, SubgroupClass, MAX_CLASS_DEGREE};
pub use conjugacy::{
    conjugate_in_sym, find_conjugator, normalizer_in_sym, ConjugatorSearch,
    DEFAULT_NORMALIZER_DEGREE,
};

/// Largest group whose full element list we are willing to store: `|Sym(7)|`.
pub const DEFAULT_ELEMENT_LIMIT: usize = 5040;

/// A bijection of `0..degree`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from zero-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n > u16::MAX as usize {
            return Err(Error::NotAPermutation(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::NotAPermutation(format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Self {
            images: images.into_iter().map(|x| x as u16).collect(),
        })
    }

    /// Builds a permutation from one-based images, as written in files.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::NotAPermutation(format!(
                "{images:?}: one-based images must be positive"
            )));
        }
        Self::from_images(images.iter().map(|&x| x - 1).collect())
    }

    /// Builds a permutation from zero-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::PointOutOfRange { point: x + 1, degree });
                }
                if touched[x] {
                    return Err(Error::NotAPermutation(format!(
                        "point {} appears in two cycles",
                        x + 1
                    )));
                }
                touched[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    /// Parses one-based cycle notation such as `(1,2,3)(4,5)`; `()` is the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let cycles = parse::cycles(text)?;
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images().map(|x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u16; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Self { images: inv.into() }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    /// `s ∘ self ∘ s⁻¹`, i.e. `self` with its points relabelled by `s`.
    pub fn conjugate_by(&self, s: &Self) -> Self {
        let mut images = vec![0u16; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[s.images[x] as usize] = s.images[y as usize];
        }
        Self { images: images.into() }
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            k >>= 1;
        }
        acc
    }

    /// Nontrivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths including fixed points, largest first.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let moved: usize = lens.iter().sum();
        lens.extend(std::iter::repeat_n(1, self.degree() - moved));
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn fixed_points(&self) -> usize {
        self.images().enumerate().filter(|&(i, x)| i == x).count()
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// A permutation group given by generators, with its element list, order
/// and orbit partition computed once at construction.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    orbits: Vec<Vec<usize>>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::with_limit(degree, generators, DEFAULT_ELEMENT_LIMIT)
    }

    pub fn with_limit(degree: usize, generators: Vec<Permutation>, limit: usize) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let elements = closure(degree, &generators, limit)?;
        let orbits = orbit_partition(degree, &generators);
        Ok(Self {
            degree,
            generators,
            elements,
            orbits,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self {
            degree,
            generators: Vec::new(),
            elements: vec![Permutation::identity(degree)],
            orbits: (0..degree).map(|x| vec![x]).collect(),
        }
    }

    pub fn symmetric(degree: usize) -> Result<Self> {
        let mut gens = Vec::new();
        if degree >= 2 {
            gens.push(Permutation::from_cycles(degree, &[vec![0, 1]])?);
        }
        if degree >= 3 {
            gens.push(Permutation::from_cycles(degree, &[(0..degree).collect()])?);
        }
        Self::new(degree, gens)
    }

    pub fn alternating(degree: usize) -> Result<Self> {
        let gens = (2..degree)
            .map(|k| Permutation::from_cycles(degree, &[vec![0, 1, k]]))
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, gens)
    }

    pub fn cyclic(degree: usize) -> Result<Self> {
        if degree < 2 {
            return Ok(Self::trivial(degree));
        }
        Self::new(
            degree,
            vec![Permutation::from_cycles(degree, &[(0..degree).collect()])?],
        )
    }

    /// Generators in one-based cycle notation, e.g. `["(1,2,3,4)", "(1,3)"]`.
    pub fn from_cycle_strs(degree: usize, gens: &[&str]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|s| Permutation::parse_cycles(degree, s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, gens)
    }

    /// Parses `Group([ (1,2), (3,4) ])`, `<(1,2),(3,4)>` or a bare
    /// comma/space separated list of cycle strings.
    pub fn parse(degree: usize, text: &str) -> Result<Self> {
        let gens = parse::generator_list(text)?
            .iter()
            .map(|c| Permutation::from_cycles(degree, c))
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, gens)
    }

    /// The group whose element set is exactly `elements`, which must already
    /// be closed. Generators are chosen greedily in element order.
    pub(crate) fn from_closed_elements(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        elements.dedup();
        let generators = greedy_generators(degree, &elements);
        let orbits = orbit_partition(degree, &generators);
        Self {
            degree,
            generators,
            elements,
            orbits,
        }
    }

    /// Subgroup generated by `gens`, which must lie in this group.
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<Self> {
        Self::with_limit(self.degree, gens, self.elements.len().max(1))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements, sorted by image sequence.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Orbits sorted internally and ordered by their minimum point.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn orbit_of(&self, x: usize) -> &[usize] {
        self.orbits
            .iter()
            .find(|o| o.binary_search(&x).is_ok())
            .expect("orbit partition covers every point")
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.elements.binary_search(p).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits.len() <= 1
    }

    /// Every point stabilizer is trivial.
    pub fn is_free(&self) -> bool {
        self.elements
            .iter()
            .all(|e| e.is_identity() || e.fixed_points() == 0)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order() as u64;
        self.elements.iter().any(|e| e.order() == n)
    }

    pub fn exponent(&self) -> u64 {
        self.elements.iter().fold(1, |acc, e| lcm(acc, e.order()))
    }

    pub fn same_elements(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }

    pub fn is_subgroup_of(&self, other: &Self) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    /// Whether this group is normalized by every generator of `other`.
    pub fn is_normalized_by(&self, other: &Self) -> bool {
        other.generators.iter().all(|s| {
            self.generators
                .iter()
                .all(|g| self.contains(&g.conjugate_by(s)))
        })
    }

    /// Subgroup fixing `x`, by filtering the element list.
    pub fn point_stabilizer(&self, x: usize) -> Result<Self> {
        stabilizer::ElementFilter.stabilizer(self, x)
    }

    /// Subgroup generated by all point stabilizers.
    pub fn plus_subgroup(&self) -> Self {
        let fixing: Vec<Permutation> = self
            .elements
            .iter()
            .filter(|e| !e.is_identity() && e.fixed_points() > 0)
            .cloned()
            .collect();
        let mut closed = closure(self.degree, &fixing, usize::MAX).expect("no limit");
        closed.sort();
        Self::from_closed_elements(self.degree, closed)
    }

    /// `s G s⁻¹`.
    pub fn conjugate(&self, s: &Permutation) -> Self {
        let generators = self.generators.iter().map(|g| g.conjugate_by(s)).collect();
        let elements = self.elements.iter().map(|g| g.conjugate_by(s)).collect();
        let mut out = Self::from_closed_elements(self.degree, elements);
        out.generators = generators;
        out.orbits = orbit_partition(self.degree, &out.generators);
        out
    }

    /// Induced action on a system of blocks (e.g. orbits of a normal subgroup),
    /// numbered in the order given.
    pub fn action_on_blocks(&self, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut block_of = vec![usize::MAX; self.degree];
        for (i, b) in blocks.iter().enumerate() {
            for &x in b {
                block_of[x] = i;
            }
        }
        let mut gens = Vec::new();
        for g in &self.generators {
            let mut images = Vec::with_capacity(blocks.len());
            for b in blocks {
                let target = block_of[g.apply(b[0])];
                if b.iter().any(|&x| block_of[g.apply(x)] != target) {
                    return Err(Error::Precondition(
                        "blocks are not permuted by the group".into(),
                    ));
                }
                images.push(target);
            }
            gens.push(Permutation::from_images(images)?);
        }
        Self::new(blocks.len(), gens)
    }

    /// Action on an invariant subset, relabelled `0..points.len()` in the given order.
    pub fn restrict_to(&self, points: &[usize]) -> Result<Self> {
        let mut index = vec![usize::MAX; self.degree];
        for (i, &x) in points.iter().enumerate() {
            index[x] = i;
        }
        let mut gens = Vec::new();
        for g in &self.generators {
            let images = points
                .iter()
                .map(|&x| match index[g.apply(x)] {
                    usize::MAX => Err(Error::Precondition("subset is not invariant".into())),
                    i => Ok(i),
                })
                .collect::<Result<Vec<_>>>()?;
            gens.push(Permutation::from_images(images)?);
        }
        Self::new(points.len(), gens)
    }

    /// Elements acting trivially on every point of `points`.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Self {
        let elements = self
            .elements
            .iter()
            .filter(|e| points.iter().all(|&x| e.apply(x) == x))
            .cloned()
            .collect();
        Self::from_closed_elements(self.degree, elements)
    }

    pub fn derived_subgroup(&self) -> Self {
        let mut comms = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                let c = a.inverse().compose(&b.inverse()).compose(a).compose(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        // normal closure of the generator commutators
        let mut current = closure(self.degree, &comms, usize::MAX).expect("no limit");
        loop {
            let mut extra = Vec::new();
            let set: HashSet<&Permutation> = current.iter().collect();
            for c in &current {
                for s in &self.generators {
                    let d = c.conjugate_by(s);
                    if !set.contains(&d) {
                        extra.push(d);
                    }
                }
            }
            if extra.is_empty() {
                break;
            }
            let mut gens = current.clone();
            gens.extend(extra);
            current = closure(self.degree, &gens, usize::MAX).expect("no limit");
        }
        Self::from_closed_elements(self.degree, current)
    }

    /// Invariant factors of the abelianization `G / [G,G]`, each > 1, ascending
    /// in divisibility order.
    pub fn abelian_invariants(&self) -> Vec<u64> {
        let derived = self.derived_subgroup();
        let n = (self.order() / derived.order()) as u64;
        let mut prime_parts: Vec<Vec<u64>> = Vec::new();
        for p in prime_factors(n) {
            // |A[p^k]| = number of cosets gG' with g^{p^k} ∈ G'
            let mut exps = Vec::new();
            let mut k = 1u32;
            let mut prev_log = 0u32;
            let mut counts_log = Vec::new();
            loop {
                let pk = p.pow(k);
                let count = self
                    .elements
                    .iter()
                    .filter(|g| derived.contains(&g.pow(pk)))
                    .count()
                    / derived.order();
                let log = ilog(count as u64, p);
                counts_log.push(log - prev_log);
                if log == prev_log {
                    break;
                }
                prev_log = log;
                k += 1;
            }
            // counts_log[k-1] = number of cyclic factors of order >= p^k
            for k in 0..counts_log.len() {
                let ge_k = counts_log[k];
                let ge_next = counts_log.get(k + 1).copied().unwrap_or(0);
                for _ in 0..(ge_k - ge_next) {
                    exps.push(p.pow(k as u32 + 1));
                }
            }
            exps.sort_unstable_by(|a, b| b.cmp(a));
            prime_parts.push(exps);
        }
        // combine prime parts into invariant factors
        let len = prime_parts.iter().map(Vec::len).max().unwrap_or(0);
        let mut factors: Vec<u64> = (0..len)
            .map(|i| {
                prime_parts
                    .iter()
                    .map(|v| v.get(i).copied().unwrap_or(1))
                    .product()
            })
            .collect();
        factors.reverse();
        factors
    }

    /// Number of elements of each order, keyed by order.
    pub fn order_statistics(&self) -> Vec<(u64, usize)> {
        let mut stats = std::collections::BTreeMap::new();
        for e in &self.elements {
            *stats.entry(e.order()).or_insert(0usize) += 1;
        }
        stats.into_iter().collect()
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_elements(other)
    }
}

impl Eq for PermGroup {}

impl fmt::Display for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return f.write_str("Group(())");
        }
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "Group([ {} ])", gens.join(", "))
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} of order {} on {} points", self.order(), self.degree)
    }
}

fn closure(degree: usize, gens: &[Permutation], limit: usize) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(e) = queue.pop_front() {
        for g in gens {
            let next = e.compose(g);
            if !seen.contains(&next) {
                if seen.len() >= limit {
                    return Err(Error::ElementLimit { limit });
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort();
    Ok(elements)
}

fn greedy_generators(degree: usize, elements: &[Permutation]) -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut have: HashSet<Permutation> = HashSet::new();
    have.insert(Permutation::identity(degree));
    for e in elements {
        if have.contains(e) {
            continue;
        }
        gens.push(e.clone());
        have = closure(degree, &gens, usize::MAX)
            .expect("no limit")
            .into_iter()
            .collect();
        if have.len() == elements.len() {
            break;
        }
    }
    gens
}

pub(crate) fn orbit_partition(degree: usize, gens: &[Permutation]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; degree];
    let mut orbits = Vec::new();
    for start in 0..degree {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for g in gens {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn ilog(mut n: u64, p: u64) -> u32 {
    let mut k = 0;
    while n > 1 {
        n /= p;
        k += 1;
    }
    k
}

use stabilizer::StabilizerMethod;

#[cfg(test)]
mod tests {
    use super::*;

    fn d8() -> PermGroup {
        PermGroup::from_cycle_strs(4, &["(1,2,3,4)", "(1,3)"]).unwrap()
    }

    #[test]
    fn orbit_partition_examples() {
        let g = PermGroup::from_cycle_strs(3, &["(2,3)"]).unwrap();
        assert_eq!(g.orbits(), &[vec![0], vec![1, 2]]);
        assert_eq!(PermGroup::trivial(3).orbits(), &[vec![0], vec![1], vec![2]]);
        assert_eq!(d8().orbits(), &[vec![0, 1, 2, 3]]);
    }

    #[test]
    fn orders() {
        assert_eq!(d8().order(), 8);
        let ga15 = PermGroup::from_cycle_strs(5, &["(1,2,3,4,5)", "(2,3,5,4)"]).unwrap();
        assert_eq!(ga15.order(), 20);
        assert_eq!(PermGroup::trivial(4).order(), 1);
        assert_eq!(PermGroup::symmetric(5).unwrap().order(), 120);
        assert_eq!(PermGroup::alternating(5).unwrap().order(), 60);
    }

    #[test]
    fn stabilizer_examples() {
        let st = d8().point_stabilizer(0).unwrap();
        let expected = vec![
            Permutation::identity(4),
            Permutation::parse_cycles(4, "(2,4)").unwrap(),
        ];
        let mut expected = expected;
        expected.sort();
        assert_eq!(st.elements(), expected.as_slice());
        let s3 = PermGroup::symmetric(3).unwrap();
        assert_eq!(
            s3.point_stabilizer(0).unwrap(),
            PermGroup::from_cycle_strs(3, &["(2,3)"]).unwrap()
        );
        let c5 = PermGroup::cyclic(5).unwrap();
        assert!(c5.point_stabilizer(0).unwrap().is_trivial());
        assert!(matches!(
            c5.point_stabilizer(5),
            Err(Error::PointOutOfRange { .. })
        ));
    }

    #[test]
    fn plus_subgroup_examples() {
        let plus = d8().plus_subgroup();
        assert_eq!(
            plus,
            PermGroup::from_cycle_strs(4, &["(1,3)", "(2,4)"]).unwrap()
        );
        assert_eq!(plus.orbits(), &[vec![0, 2], vec![1, 3]]);
        let s3 = PermGroup::symmetric(3).unwrap();
        assert_eq!(s3.plus_subgroup(), s3);
        assert!(PermGroup::cyclic(4).unwrap().plus_subgroup().is_trivial());
    }

    #[test]
    fn abelianization() {
        assert_eq!(PermGroup::symmetric(4).unwrap().abelian_invariants(), vec![2]);
        assert!(PermGroup::alternating(5).unwrap().abelian_invariants().is_empty());
        let v = PermGroup::from_cycle_strs(4, &["(1,2)", "(3,4)"]).unwrap();
        assert_eq!(v.abelian_invariants(), vec![2, 2]);
        let c6 = PermGroup::from_cycle_strs(5, &["(1,2,3)(4,5)"]).unwrap();
        assert_eq!(c6.abelian_invariants(), vec![6]);
        assert_eq!(d8().abelian_invariants(), vec![2, 2]);
        let c4 = PermGroup::cyclic(4).unwrap();
        assert_eq!(c4.abelian_invariants(), vec![4]);
    }

    #[test]
    fn display_round_trip() {
        let p = Permutation::parse_cycles(5, "(1,2,3)(4,5)").unwrap();
        assert_eq!(p.to_string(), "(1,2,3)(4,5)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert_eq!(p.order(), 6);
        assert_eq!(p.cycle_type(), vec![3, 2]);
    }

    #[test]
    fn element_limit_is_loud() {
        let err = PermGroup::symmetric(8).unwrap_err();
        assert!(matches!(err, Error::ElementLimit { limit: 5040 }));
    }
}
