//! Conjugacy classes of subgroups of `Sym(d)` for small `d`.
//!
//! Elements of `Sym(d)` are numbered lexicographically and multiplied by
//! table lookup; subgroups are bitsets over that numbering. Every subgroup
//! `K > 1` equals `⟨M, g⟩` for a maximal subgroup `M` and some prime-power
//! element `g ∉ M`, so joining each known class representative with every
//! such element (up to normalizer conjugacy) reaches every class.

use std::collections::HashMap;
use std::sync::OnceLock;

use super::{PermGroup, Permutation};
use crate::error::{Error, Result};

pub const MAX_CLASS_DEGREE: usize = 7;

/// One conjugacy class of subgroups of `Sym(d)`.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    /// The member whose sorted element numbering is lexicographically least.
    pub representative: PermGroup,
    /// Normalizer of the representative in `Sym(d)`.
    pub normalizer: PermGroup,
    pub class_size: usize,
}

/// Class data for `Sym(degree)`, sorted by order then by element numbering.
pub fn subgroup_class_data(degree: usize) -> Result<&'static [SubgroupClass]> {
    if degree > MAX_CLASS_DEGREE {
        return Err(Error::DegreeAboveBound {
            degree,
            bound: MAX_CLASS_DEGREE,
        });
    }
    static CACHE: [OnceLock<Vec<SubgroupClass>>; MAX_CLASS_DEGREE + 1] =
        [const { OnceLock::new() }; MAX_CLASS_DEGREE + 1];
    Ok(CACHE[degree].get_or_init(|| compute(degree)))
}

/// Representatives of the subgroup classes of `Sym(degree)`.
pub fn subgroup_classes(degree: usize) -> Result<Vec<PermGroup>> {
    Ok(subgroup_class_data(degree)?
        .iter()
        .map(|c| c.representative.clone())
        .collect())
}

type Bits = Vec<u64>;

struct SymTable {
    degree: usize,
    perms: Vec<Permutation>,
    mul: Vec<u16>,
    inv: Vec<u16>,
}

impl SymTable {
    fn new(degree: usize) -> Self {
        let mut perms = Vec::new();
        let mut images: Vec<usize> = (0..degree).collect();
        loop {
            perms.push(Permutation::from_images(images.clone()).expect("valid"));
            if !super::conjugacy::next_permutation(&mut images) {
                break;
            }
        }
        let n = perms.len();
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = rank(&perms[a].compose(&perms[b])) as u16;
            }
        }
        let inv = perms.iter().map(|p| rank(&p.inverse()) as u16).collect();
        Self {
            degree,
            perms,
            mul,
            inv,
        }
    }

    fn len(&self) -> usize {
        self.perms.len()
    }

    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.len() + b] as usize
    }

    /// `s a s⁻¹`
    #[inline]
    fn conj(&self, a: usize, s: usize) -> usize {
        self.mul(self.mul(s, a), self.inv[s] as usize)
    }

    fn order_of(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    fn closure(&self, start: &[usize], gens: &[usize]) -> (Vec<usize>, Bits) {
        let mut bits = vec![0u64; self.len().div_ceil(64)];
        let mut elems = Vec::new();
        for &e in start.iter().chain(std::iter::once(&0)) {
            if !test(&bits, e) {
                set(&mut bits, e);
                elems.push(e);
            }
        }
        let mut i = 0;
        while i < elems.len() {
            let e = elems[i];
            for &g in gens {
                let x = self.mul(e, g);
                if !test(&bits, x) {
                    set(&mut bits, x);
                    elems.push(x);
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        (elems, bits)
    }

    fn to_group(&self, elems: &[usize]) -> PermGroup {
        PermGroup::from_closed_elements(
            self.degree,
            elems.iter().map(|&e| self.perms[e].clone()).collect(),
        )
    }
}

/// Lexicographic index of a permutation (Lehmer code).
fn rank(p: &Permutation) -> usize {
    let imgs: Vec<usize> = p.images().collect();
    let n = imgs.len();
    let mut r = 0;
    for i in 0..n {
        let smaller = imgs[i + 1..].iter().filter(|&&x| x < imgs[i]).count();
        r = r * (n - i) + smaller;
    }
    r
}

#[inline]
fn test(bits: &[u64], i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

#[inline]
fn set(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

struct RawClass {
    elements: Vec<usize>,
    normalizer: Vec<usize>,
    class_size: usize,
}

struct Search<'a> {
    table: &'a SymTable,
    known: HashMap<Bits, usize>,
    classes: Vec<RawClass>,
}

impl Search<'_> {
    /// Records the conjugacy class of `elems` unless already known.
    fn insert(&mut self, elems: Vec<usize>, bits: Bits) {
        if self.known.contains_key(&bits) {
            return;
        }
        let t = self.table;
        let id = self.classes.len();
        let sym_gens: Vec<usize> = (0..t.len())
            .filter(|&s| {
                let p = &t.perms[s];
                let c = p.cycles();
                c.len() == 1 && (c[0].len() == 2 && c[0] == [0, 1] || c[0].len() == t.degree)
            })
            .collect();
        // orbit of the subgroup under conjugation, with transversal
        let mut orbit: Vec<(Vec<usize>, usize)> = vec![(elems.clone(), 0)];
        let mut index: HashMap<Bits, usize> = HashMap::new();
        index.insert(bits.clone(), 0);
        self.known.insert(bits, id);
        let mut schreier = Vec::new();
        let mut i = 0;
        while i < orbit.len() {
            let (members, trans) = orbit[i].clone();
            for &s in &sym_gens {
                let mut img: Vec<usize> = members.iter().map(|&e| t.conj(e, s)).collect();
                img.sort_unstable();
                let mut b = vec![0u64; t.len().div_ceil(64)];
                for &e in &img {
                    set(&mut b, e);
                }
                let st = t.mul(s, trans);
                match index.get(&b) {
                    Some(&j) => {
                        // s·trans maps K onto orbit[j]; trans_j⁻¹·s·trans normalizes K
                        let n = t.mul(t.inv[orbit[j].1] as usize, st);
                        if n != 0 {
                            schreier.push(n);
                        }
                    }
                    None => {
                        index.insert(b.clone(), orbit.len());
                        self.known.insert(b, id);
                        orbit.push((img, st));
                    }
                }
            }
            i += 1;
        }
        schreier.sort_unstable();
        schreier.dedup();
        let (norm, _) = t.closure(&[], &schreier);
        let (best, &(ref rep, trans)) = orbit
            .iter()
            .enumerate()
            .min_by(|a, b| a.1 .0.cmp(&b.1 .0))
            .expect("orbit is nonempty");
        let _ = best;
        let mut normalizer: Vec<usize> = norm.iter().map(|&n| t.conj(n, trans)).collect();
        normalizer.sort_unstable();
        self.classes.push(RawClass {
            elements: rep.clone(),
            normalizer,
            class_size: orbit.len(),
        });
    }
}

fn compute(degree: usize) -> Vec<SubgroupClass> {
    let table = SymTable::new(degree);
    let n = table.len();
    // generator of each prime-power cyclic subgroup, keyed by its least generator
    let mut cyclic_id = vec![usize::MAX; n];
    let mut cyclic_gens = Vec::new();
    for g in 1..n {
        let ord = table.order_of(g);
        if super::prime_factors(ord as u64).len() != 1 || cyclic_id[g] != usize::MAX {
            continue;
        }
        let id = cyclic_gens.len();
        cyclic_gens.push(g);
        let mut x = g;
        for k in 1..ord {
            if super::gcd(k as u64, ord as u64) == 1 {
                cyclic_id[x] = id;
            }
            x = table.mul(x, g);
        }
    }
    let mut search = Search {
        table: &table,
        known: HashMap::new(),
        classes: Vec::new(),
    };
    let (e, b) = table.closure(&[], &[]);
    search.insert(e, b);
    let mut next = 0;
    while next < search.classes.len() {
        let h = search.classes[next].elements.clone();
        let norm = search.classes[next].normalizer.clone();
        let h_gens: Vec<usize> = table
            .to_group(&h)
            .generators()
            .iter()
            .map(rank)
            .collect();
        let norm_gens: Vec<usize> = table
            .to_group(&norm)
            .generators()
            .iter()
            .map(rank)
            .collect();
        let mut handled = vec![false; cyclic_gens.len()];
        let h_set: std::collections::HashSet<usize> = h.iter().copied().collect();
        for (cid, &g) in cyclic_gens.iter().enumerate() {
            if handled[cid] || h_set.contains(&g) {
                continue;
            }
            let mut queue = vec![g];
            handled[cid] = true;
            let mut i = 0;
            while i < queue.len() {
                for &s in &norm_gens {
                    let c = table.conj(queue[i], s);
                    let id = cyclic_id[c];
                    if !handled[id] {
                        handled[id] = true;
                        queue.push(c);
                    }
                }
                i += 1;
            }
            let mut gens = h_gens.clone();
            gens.push(g);
            let (elems, bits) = table.closure(&h, &gens);
            search.insert(elems, bits);
        }
        next += 1;
    }
    let mut raw = search.classes;
    raw.sort_by(|a, b| {
        a.elements
            .len()
            .cmp(&b.elements.len())
            .then_with(|| a.elements.cmp(&b.elements))
    });
    raw.into_iter()
        .map(|c| SubgroupClass {
            representative: table.to_group(&c.elements),
            normalizer: table.to_group(&c.normalizer),
            class_size: c.class_size,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_small() {
        let counts: Vec<usize> = (0..=5)
            .map(|d| subgroup_class_data(d).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 19]);
    }

    #[test]
    fn class_sizes_sum_to_subgroup_totals() {
        let totals: Vec<usize> = (1..=5)
            .map(|d| {
                subgroup_class_data(d)
                    .unwrap()
                    .iter()
                    .map(|c| c.class_size)
                    .sum()
            })
            .collect();
        assert_eq!(totals, vec![1, 2, 6, 30, 156]);
    }

    #[test]
    fn normalizers_are_consistent() {
        for d in 2..=5 {
            let sym = PermGroup::symmetric(d).unwrap().order();
            for c in subgroup_class_data(d).unwrap() {
                assert_eq!(c.normalizer.order() * c.class_size, sym);
                assert!(c.representative.is_normalized_by(&c.normalizer));
                assert!(c.representative.is_subgroup_of(&c.normalizer));
            }
        }
    }

    #[test]
    fn rank_is_lexicographic() {
        assert_eq!(rank(&Permutation::identity(4)), 0);
        let last = Permutation::from_images(vec![3, 2, 1, 0]).unwrap();
        assert_eq!(rank(&last), 23);
    }

    #[test]
    fn degree_bound() {
        assert!(subgroup_class_data(8).is_err());
    }
}
