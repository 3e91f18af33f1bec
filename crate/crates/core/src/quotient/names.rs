//! Names for the small permutation groups that occur as local actions.
//!
//! Where two inequivalent actions of one abstract group both occur, the
//! name carries the orbit shape: `C_2^-` is a single transposition on four
//! or more points, `C_2^+` a double transposition, `V^-` the intransitive
//! Klein group and `V^+` the regular one.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::perm::{lcm, PermGroup};

#[derive(Clone, Debug)]
pub struct GroupName {
    pub name: String,
    pub witness: PermGroup,
}

impl GroupName {
    pub fn as_str(&self) -> &str {
        &self.name
    }

    /// Name of the abstract isomorphism type, dropping orbit decorations.
    pub fn abstract_name(&self) -> String {
        abstract_name(&self.name)
    }
}

impl PartialEq for GroupName {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

impl Eq for GroupName {}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl Serialize for GroupName {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.name)
    }
}

pub fn recognize_group(g: &PermGroup) -> GroupName {
    GroupName {
        name: name_of(g),
        witness: g.clone(),
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn name_of(g: &PermGroup) -> String {
    let order = g.order();
    let mut sizes: Vec<usize> = g.orbit_sizes().into_iter().filter(|&s| s > 1).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    let joined = |sizes: &[usize]| {
        sizes
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join("+")
    };
    if order == 1 {
        return "1".into();
    }
    if order == 2 {
        return match sizes.len() {
            1 if g.degree() <= 3 => "S_2".into(),
            1 => "C_2^-".into(),
            2 => "C_2^+".into(),
            _ => format!("C_{{{}}}", joined(&sizes)),
        };
    }
    let abelian = g.is_abelian();
    if order == 4 && abelian && !g.is_cyclic() {
        return match sizes.as_slice() {
            [2, 2] => "V^-".into(),
            [4] => "V^+".into(),
            _ => "V".into(),
        };
    }
    if g.is_cyclic() {
        return match sizes.as_slice() {
            [n] => format!("C_{n}"),
            _ => format!("C_{{{}}}", joined(&sizes)),
        };
    }
    if order == sizes.iter().map(|&s| factorial(s)).product::<usize>() {
        return match sizes.as_slice() {
            [n] => format!("S_{n}"),
            _ => format!("S_{{{}}}", joined(&sizes)),
        };
    }
    if let [n] = sizes.as_slice() {
        let n = *n;
        if n >= 4 && order == factorial(n) / 2 {
            return format!("A_{n}");
        }
        if n >= 4 && order == 2 * n && !abelian && has_element_of_order(g, n as u64) {
            return format!("D_{}", 2 * n);
        }
        if n == 5 && order == 20 {
            return "GA(1,5)".into();
        }
    }
    if order == 6 && !abelian && sizes == [3, 2] {
        return "S_3^*".into();
    }
    format!("G(order={order})")
}

fn has_element_of_order(g: &PermGroup, n: u64) -> bool {
    g.elements().iter().any(|e| e.order() == n)
}

/// Abstract type behind a decorated name: `C_2^+`, `S_2` and `C_{2+2+2}`
/// all become `C_2`; `V^±` become `V`; `C_{3+2}` becomes `C_6`; `S_3^*`
/// becomes `S_3`.
pub fn abstract_name(name: &str) -> String {
    let name = name.trim();
    match name {
        "S_2" | "C_2^-" | "C_2^+" => return "C_2".into(),
        "V^-" | "V^+" => return "V".into(),
        "S_3^*" => return "S_3".into(),
        _ => {}
    }
    if let Some(inner) = name.strip_prefix("C_{").and_then(|t| t.strip_suffix('}')) {
        let parts: Option<Vec<u64>> = inner.split('+').map(|p| p.parse().ok()).collect();
        if let Some(parts) = parts {
            let n = parts.into_iter().fold(1, lcm);
            return format!("C_{n}");
        }
    }
    name.to_string()
}
