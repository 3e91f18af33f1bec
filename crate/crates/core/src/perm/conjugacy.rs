//! Conjugacy of permutation groups inside `Sym(d)`.

use super::{PermGroup, Permutation};
use crate::error::{Error, Result};

/// Default degree bound for exhaustive normalizer computation.
pub const DEFAULT_NORMALIZER_DEGREE: usize = 9;

/// Backtracking search for `β` with `β G β⁻¹ = H`, optionally restricting the
/// admissible images of each point.
pub struct ConjugatorSearch<'a> {
    pub source: &'a PermGroup,
    pub target: &'a PermGroup,
    /// `allowed[x]` lists the points `x` may be sent to.
    pub allowed: Option<&'a [Vec<usize>]>,
    pub node_limit: usize,
}

impl ConjugatorSearch<'_> {
    pub fn run(&self) -> Result<Option<Permutation>> {
        let (g, h) = (self.source, self.target);
        if g.degree() != h.degree() {
            return Err(Error::DegreeMismatch {
                expected: g.degree(),
                found: h.degree(),
            });
        }
        if g.order() != h.order() || !same_invariants(g, h) {
            return Ok(None);
        }
        let n = g.degree();
        let order = search_order(g);
        let gens: Vec<&Permutation> = g.generators().iter().collect();
        let all: Vec<u32> = (0..h.order() as u32).collect();
        let candidates = vec![all; gens.len()];
        let g_orbit_len: Vec<usize> = (0..n).map(|x| g.orbit_of(x).len()).collect();
        let h_orbit_len: Vec<usize> = (0..n).map(|x| h.orbit_of(x).len()).collect();
        let mut state = State {
            beta: vec![usize::MAX; n],
            used: vec![false; n],
            nodes: 0,
        };
        let found = self.extend(
            0,
            &order,
            &gens,
            candidates,
            &g_orbit_len,
            &h_orbit_len,
            &mut state,
        )?;
        Ok(found.then(|| {
            Permutation::from_images(state.beta.clone()).expect("search builds a bijection")
        }))
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &self,
        pos: usize,
        order: &[usize],
        gens: &[&Permutation],
        candidates: Vec<Vec<u32>>,
        g_orbit_len: &[usize],
        h_orbit_len: &[usize],
        state: &mut State,
    ) -> Result<bool> {
        state.nodes += 1;
        if state.nodes > self.node_limit {
            return Err(Error::SearchLimit(self.node_limit));
        }
        if pos == order.len() {
            return Ok(true);
        }
        let x = order[pos];
        let targets: Vec<usize> = match self.allowed {
            Some(a) => a[x].clone(),
            None => (0..order.len()).collect(),
        };
        let h_elems = self.target.elements();
        for y in targets {
            if state.used[y] || g_orbit_len[x] != h_orbit_len[y] {
                continue;
            }
            state.beta[x] = y;
            state.used[y] = true;
            let mut next = Vec::with_capacity(gens.len());
            let mut ok = true;
            for (i, g) in gens.iter().enumerate() {
                // constraints h(β(p)) = β(g(p)) that became decidable with x assigned
                let mut pairs = Vec::new();
                let gx = g.apply(x);
                if state.beta[gx] != usize::MAX {
                    pairs.push((y, state.beta[gx]));
                }
                let gi = g.inverse().apply(x);
                if gi != x && state.beta[gi] != usize::MAX {
                    pairs.push((state.beta[gi], y));
                }
                let filtered: Vec<u32> = candidates[i]
                    .iter()
                    .copied()
                    .filter(|&k| {
                        let e = &h_elems[k as usize];
                        pairs.iter().all(|&(a, b)| e.apply(a) == b)
                    })
                    .collect();
                if filtered.is_empty() {
                    ok = false;
                    break;
                }
                next.push(filtered);
            }
            if ok
                && self.extend(pos + 1, order, gens, next, g_orbit_len, h_orbit_len, state)?
            {
                return Ok(true);
            }
            state.beta[x] = usize::MAX;
            state.used[y] = false;
        }
        Ok(false)
    }
}

struct State {
    beta: Vec<usize>,
    used: Vec<bool>,
    nodes: usize,
}

/// Points in breadth-first order along generator edges, so constraints bind early.
fn search_order(g: &PermGroup) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.degree());
    for orbit in g.orbits() {
        let start = orbit[0];
        let mut queue = vec![start];
        let mut seen = vec![start];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for s in g.generators() {
                let y = s.apply(x);
                if !seen.contains(&y) {
                    seen.push(y);
                    queue.push(y);
                }
            }
            i += 1;
        }
        order.extend(queue);
    }
    order
}

fn same_invariants(g: &PermGroup, h: &PermGroup) -> bool {
    let mut a = g.orbit_sizes();
    let mut b = h.orbit_sizes();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return false;
    }
    let mut ca: Vec<Vec<usize>> = g.elements().iter().map(|e| e.cycle_type()).collect();
    let mut cb: Vec<Vec<usize>> = h.elements().iter().map(|e| e.cycle_type()).collect();
    ca.sort();
    cb.sort();
    ca == cb
}

/// A permutation conjugating `g1` onto `g2`, if one exists.
pub fn conjugate_in_sym(g1: &PermGroup, g2: &PermGroup) -> Result<Option<Permutation>> {
    find_conjugator(g1, g2, None)
}

pub fn find_conjugator(
    g1: &PermGroup,
    g2: &PermGroup,
    allowed: Option<&[Vec<usize>]>,
) -> Result<Option<Permutation>> {
    let found = ConjugatorSearch {
        source: g1,
        target: g2,
        allowed,
        node_limit: 5_000_000,
    }
    .run()?;
    if let Some(beta) = &found {
        debug_assert!(g1.conjugate(beta) == *g2);
    }
    Ok(found)
}

/// `{ s ∈ Sym(d) : s G s⁻¹ = G }`, by exhaustive search over `Sym(d)`.
pub fn normalizer_in_sym(g: &PermGroup, degree_bound: usize) -> Result<PermGroup> {
    let d = g.degree();
    if d > degree_bound {
        return Err(Error::DegreeAboveBound {
            degree: d,
            bound: degree_bound,
        });
    }
    let mut found = Vec::new();
    let mut images: Vec<usize> = (0..d).collect();
    loop {
        let s = Permutation::from_images(images.clone()).expect("lexicographic successor");
        if g.generators().iter().all(|x| g.contains(&x.conjugate_by(&s))) {
            found.push(s);
            if found.len() > super::DEFAULT_ELEMENT_LIMIT {
                return Err(Error::ElementLimit {
                    limit: super::DEFAULT_ELEMENT_LIMIT,
                });
            }
        }
        if !next_permutation(&mut images) {
            break;
        }
    }
    Ok(PermGroup::from_closed_elements(d, found))
}

pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
