//! Point-stabilizer computation: an element filter and a Schreier-generator
//! construction. The two must agree on every input.

use std::sync::OnceLock;

use super::{PermGroup, Permutation};
use crate::error::{Error, Result};
use crate::registry::{Named, Registry};

pub trait StabilizerMethod: Named + Send + Sync {
    fn stabilizer(&self, group: &PermGroup, point: usize) -> Result<PermGroup>;
}

fn check_point(group: &PermGroup, point: usize) -> Result<()> {
    if point >= group.degree() {
        return Err(Error::PointOutOfRange {
            point: point + 1,
            degree: group.degree(),
        });
    }
    Ok(())
}

/// Keeps every element fixing the point.
pub struct ElementFilter;

impl Named for ElementFilter {
    fn name(&self) -> &'static str {
        "filter"
    }
}

impl StabilizerMethod for ElementFilter {
    fn stabilizer(&self, group: &PermGroup, point: usize) -> Result<PermGroup> {
        check_point(group, point)?;
        let elements = group
            .elements()
            .iter()
            .filter(|e| e.apply(point) == point)
            .cloned()
            .collect();
        Ok(PermGroup::from_closed_elements(group.degree(), elements))
    }
}

/// Schreier's lemma over an orbit transversal.
pub struct SchreierGenerators;

impl Named for SchreierGenerators {
    fn name(&self) -> &'static str {
        "schreier"
    }
}

impl StabilizerMethod for SchreierGenerators {
    fn stabilizer(&self, group: &PermGroup, point: usize) -> Result<PermGroup> {
        check_point(group, point)?;
        let n = group.degree();
        // transversal[y] maps `point` to y
        let mut transversal: Vec<Option<Permutation>> = vec![None; n];
        transversal[point] = Some(Permutation::identity(n));
        let mut orbit = vec![point];
        let mut i = 0;
        while i < orbit.len() {
            let y = orbit[i];
            let uy = transversal[y].clone().expect("orbit point has a transversal");
            for g in group.generators() {
                let z = g.apply(y);
                if transversal[z].is_none() {
                    transversal[z] = Some(g.compose(&uy));
                    orbit.push(z);
                }
            }
            i += 1;
        }
        let mut schreier = Vec::new();
        for &y in &orbit {
            let uy = transversal[y].as_ref().expect("set above");
            for g in group.generators() {
                let ugy = transversal[g.apply(y)].as_ref().expect("orbit is closed");
                let s = ugy.inverse().compose(g).compose(uy);
                if !s.is_identity() && !schreier.contains(&s) {
                    schreier.push(s);
                }
            }
        }
        group.subgroup(schreier)
    }
}

pub fn registry() -> &'static Registry<dyn StabilizerMethod> {
    static REGISTRY: OnceLock<Registry<dyn StabilizerMethod>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut r: Registry<dyn StabilizerMethod> = Registry::new();
        r.register(Box::new(ElementFilter))
            .register(Box::new(SchreierGenerators));
        r
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn methods_agree_on_small_groups() {
        let groups = [
            PermGroup::from_cycle_strs(4, &["(1,2,3,4)", "(1,3)"]).unwrap(),
            PermGroup::symmetric(5).unwrap(),
            PermGroup::from_cycle_strs(5, &["(1,2,3)", "(1,2)(4,5)"]).unwrap(),
            PermGroup::alternating(4).unwrap(),
            PermGroup::trivial(3),
        ];
        for g in &groups {
            for x in 0..g.degree() {
                let a = ElementFilter.stabilizer(g, x).unwrap();
                let b = SchreierGenerators.stabilizer(g, x).unwrap();
                assert_eq!(a, b, "stabilizer of {} in {g}", x + 1);
            }
        }
    }

    #[test]
    fn registry_has_both() {
        assert_eq!(registry().names(), vec!["filter", "schreier"]);
    }
}
