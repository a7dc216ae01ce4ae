//! Bargmann-space variables and sparse monomials.
//!
//! A variable is indexed by (axis, particle): axes 0,1,2 print as t, u, v
//! and correspond to the oscillator x, y, z directions; particles are
//! 1-based. The canonical monomial order is graded lexicographic with
//! axis-major variable order (t before u before v, particle 1 before 2).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// One Bargmann variable, e.g. t_1 = (axis 0, particle 1).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct VariableId {
    pub axis: u32,
    /// 1-based particle index.
    pub particle: u32,
}

impl VariableId {
    pub fn new(axis: u32, particle: u32) -> Self {
        assert!(particle >= 1, "particle indices are 1-based");
        VariableId { axis, particle }
    }
}

pub const AXIS_LETTERS: [char; 3] = ['t', 'u', 'v'];

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if (self.axis as usize) < AXIS_LETTERS.len() {
            write!(f, "{}{}", AXIS_LETTERS[self.axis as usize], self.particle)
        } else {
            write!(f, "x{}_{}", self.axis, self.particle)
        }
    }
}

/// Sparse exponent map; zero exponents are never stored. Total degree is
/// the number of oscillator quanta the monomial carries.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exponents: BTreeMap<VariableId, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn variable(v: VariableId) -> Self {
        let mut exponents = BTreeMap::new();
        exponents.insert(v, 1);
        Monomial { exponents }
    }

    pub fn from_exponents(pairs: impl IntoIterator<Item = (VariableId, u32)>) -> Self {
        let mut exponents = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *exponents.entry(v).or_insert(0) += e;
            }
        }
        Monomial { exponents }
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.values().sum()
    }

    pub fn exponent(&self, v: VariableId) -> u32 {
        self.exponents.get(&v).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VariableId, &u32)> {
        self.exponents.iter()
    }

    pub fn variables(&self) -> impl Iterator<Item = VariableId> + '_ {
        self.exponents.keys().copied()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exponents = self.exponents.clone();
        for (v, e) in &other.exponents {
            *exponents.entry(*v).or_insert(0) += e;
        }
        Monomial { exponents }
    }

    /// Divide by one power of `v`; None if `v` is absent.
    pub fn reduce_var(&self, v: VariableId) -> Option<Monomial> {
        let e = *self.exponents.get(&v)?;
        let mut exponents = self.exponents.clone();
        if e == 1 {
            exponents.remove(&v);
        } else {
            exponents.insert(v, e - 1);
        }
        Some(Monomial { exponents })
    }

    /// Relabel particle indices through `map` (1-based old -> new).
    pub fn map_particles(&self, map: impl Fn(u32) -> u32) -> Monomial {
        Monomial::from_exponents(
            self.exponents
                .iter()
                .map(|(v, e)| (VariableId::new(v.axis, map(v.particle)), *e)),
        )
    }
}

/// Graded lexicographic order: higher total degree is Greater; within equal
/// degree the monomial with the higher exponent on the earliest variable is
/// Greater. The leading term of a polynomial is the maximal monomial.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let mut a = self.exponents.iter();
        let mut b = other.exponents.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                // the side that still has variables has zero exponent on the
                // other's earlier variable, hence is lex-smaller there
                (Some(_), None) => return Ordering::Less,
                (None, Some(_)) => return Ordering::Greater,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    // earlier variable present only on one side: that side
                    // has the higher exponent on the earliest variable
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(eb) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in &self.exponents {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{}", v)?;
            } else {
                write!(f, "{}^{}", v, e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(axis: u32, particle: u32) -> VariableId {
        VariableId::new(axis, particle)
    }

    #[test]
    fn grlex_order() {
        let t1 = Monomial::variable(var(0, 1));
        let t2 = Monomial::variable(var(0, 2));
        let u1 = Monomial::variable(var(1, 1));
        let t1sq = t1.mul(&t1);
        assert!(t1sq > t1);
        assert!(t1 > t2);
        assert!(t2 > u1);
        assert!(t1.mul(&u1) > t2.mul(&u1));
        assert!(t1.mul(&t2) > u1.mul(&u1));
    }

    #[test]
    fn display_and_degree() {
        let m = Monomial::from_exponents([(var(0, 1), 2), (var(1, 2), 1)]);
        assert_eq!(m.to_string(), "t1^2*u2");
        assert_eq!(m.degree(), 3);
        assert_eq!(var(3, 1).to_string(), "x3_1");
    }

    #[test]
    fn reduce_removes_zero_exponent() {
        let m = Monomial::variable(var(0, 1));
        assert_eq!(m.reduce_var(var(0, 1)), Some(Monomial::one()));
        assert_eq!(m.reduce_var(var(1, 1)), None);
    }
}
