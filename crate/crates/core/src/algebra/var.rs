use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Variable family. The declaration order is the primary key of the
/// variable order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    X,
    Y,
    Z,
    S,
    Delta,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::X => 'x',
            Family::Y => 'y',
            Family::Z => 'z',
            Family::S => 's',
            Family::Delta => 'd',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c {
            'x' => Family::X,
            'y' => Family::Y,
            'z' => Family::Z,
            's' => Family::S,
            'd' => Family::Delta,
            _ => return None,
        })
    }
}

/// A polynomial variable: a family tag plus up to three indices.
///
/// Ordered lexicographically on `(family, indices)`, so `x_1 < x_2 < x_1_1`
/// is *not* the order; `x_1 < x_1_1 < x_2` is.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VarId {
    family: Family,
    len: u8,
    idx: [u32; 3],
}

impl VarId {
    pub fn new(family: Family, indices: &[u32]) -> VarId {
        assert!(indices.len() <= 3, "a variable carries at most three indices");
        let mut idx = [0; 3];
        idx[..indices.len()].copy_from_slice(indices);
        VarId { family, len: indices.len() as u8, idx }
    }

    pub fn x(i: u32) -> VarId {
        VarId::new(Family::X, &[i])
    }

    pub fn x2(i: u32, j: u32) -> VarId {
        VarId::new(Family::X, &[i, j])
    }

    pub fn y(i: u32) -> VarId {
        VarId::new(Family::Y, &[i])
    }

    pub fn y2(i: u32, j: u32) -> VarId {
        VarId::new(Family::Y, &[i, j])
    }

    pub fn y3(i: u32, j: u32, k: u32) -> VarId {
        VarId::new(Family::Y, &[i, j, k])
    }

    pub fn z2(i: u32, j: u32) -> VarId {
        VarId::new(Family::Z, &[i, j])
    }

    pub fn s(i: u32) -> VarId {
        VarId::new(Family::S, &[i])
    }

    pub fn delta(a: u32, b: u32, k: u32) -> VarId {
        VarId::new(Family::Delta, &[a, b, k])
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn indices(&self) -> &[u32] {
        &self.idx[..self.len as usize]
    }

    /// Same family, indices rewritten by `f`.
    pub fn map_indices(&self, f: impl Fn(u32) -> u32) -> VarId {
        let mut out = *self;
        for i in out.idx[..out.len as usize].iter_mut() {
            *i = f(*i);
        }
        out
    }
}

impl Ord for VarId {
    fn cmp(&self, other: &Self) -> Ordering {
        self.family
            .cmp(&other.family)
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for VarId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family.letter())?;
        for i in self.indices() {
            write!(f, "_{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for VarId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::Parse(format!("bad variable name `{s}`"));
        let mut parts = s.split('_');
        let head = parts.next().ok_or_else(bad)?;
        let mut chars = head.chars();
        let family = chars.next().and_then(Family::from_letter).ok_or_else(bad)?;
        if chars.next().is_some() {
            return Err(bad());
        }
        let indices = parts
            .map(|p| p.parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        if indices.is_empty() || indices.len() > 3 {
            return Err(bad());
        }
        Ok(VarId::new(family, &indices))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_family_then_indices() {
        let mut v = vec![
            VarId::delta(1, 2, 1),
            VarId::y(1),
            VarId::x(2),
            VarId::x2(1, 1),
            VarId::x(1),
            VarId::s(1),
        ];
        v.sort();
        let names: Vec<String> = v.iter().map(|v| v.to_string()).collect();
        assert_eq!(names, ["x_1", "x_1_1", "x_2", "y_1", "s_1", "d_1_2_1"]);
    }

    #[test]
    fn parse_round_trip() {
        for name in ["x_1", "y_2_3", "d_10_2_3", "z_1_4", "s_3", "x_0"] {
            let v: VarId = name.parse().unwrap();
            assert_eq!(v.to_string(), name);
        }
        assert!("q_1".parse::<VarId>().is_err());
        assert!("x".parse::<VarId>().is_err());
        assert!("x_1_2_3_4".parse::<VarId>().is_err());
        assert!("xx_1".parse::<VarId>().is_err());
    }
}
