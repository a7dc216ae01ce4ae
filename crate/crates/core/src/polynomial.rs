//! Sparse multivariate polynomials over Gaussian rationals, with the
//! Bargmann inner product and a canonical form for comparing states up to
//! scale and phase.

use crate::error::Error;
use crate::gaussian::{gaussian_div_exact, gaussian_gcd, GaussInt, GaussianRational, Rational};
use crate::monomial::{Monomial, VariableId};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

// Exponents stay tiny at desk scale, but the factorial must stay correct
// for any input, so spill past the precomputed table when needed.
static FACTORIALS: Lazy<Vec<BigInt>> = Lazy::new(|| {
    let mut table = Vec::with_capacity(65);
    let mut acc = BigInt::one();
    table.push(acc.clone());
    for n in 1u32..=64 {
        acc *= BigInt::from(n);
        table.push(acc.clone());
    }
    table
});

pub fn factorial(n: u32) -> BigInt {
    if (n as usize) < FACTORIALS.len() {
        FACTORIALS[n as usize].clone()
    } else {
        let mut acc = FACTORIALS.last().unwrap().clone();
        for k in (FACTORIALS.len() as u32)..=n {
            acc *= BigInt::from(k);
        }
        acc
    }
}

/// Product of factorials of all exponents of a monomial; the Bargmann
/// weight of the monomial.
fn monomial_weight(m: &Monomial) -> BigInt {
    m.iter().map(|(_, e)| factorial(*e)).product()
}

/// A Bargmann-space wave function: finitely many monomials with nonzero
/// Gaussian-rational coefficients, iterated in ascending graded-lex order
/// (the leading term is the last, i.e. maximal, key).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Polynomial { terms }
    }

    pub fn variable(v: VariableId) -> Self {
        Polynomial::from_terms([(Monomial::variable(v), GaussianRational::one())])
    }

    pub fn monomial(m: Monomial, c: GaussianRational) -> Self {
        Polynomial::from_terms([(m, c)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, GaussianRational)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    /// Terms starting from the leading (maximal) monomial.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    /// Total degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Split into (degree, homogeneous component) pairs, ascending.
    pub fn homogeneous_components(&self) -> Vec<(u32, Polynomial)> {
        let mut by_deg: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            by_deg
                .entry(m.degree())
                .or_default()
                .add_term(m.clone(), c.clone());
        }
        by_deg.into_iter().collect()
    }

    pub fn scale(&self, c: &GaussianRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn conj(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.conj())).collect(),
        }
    }

    /// Relabel particle indices of every variable.
    pub fn map_particles(&self, map: impl Fn(u32) -> u32) -> Polynomial {
        Polynomial::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.map_particles(&map), c.clone())),
        )
    }

    /// Replace every variable by the polynomial `subst` assigns to it.
    /// Variables without an assignment are kept as themselves.
    pub fn substitute(&self, subst: &BTreeMap<VariableId, Polynomial>) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(c.clone());
            for (v, e) in m.iter() {
                let image = match subst.get(v) {
                    Some(p) => p.clone(),
                    None => Polynomial::variable(*v),
                };
                term = &term * &image.pow(*e);
            }
            acc = &acc + &term;
        }
        acc
    }

    pub fn variables(&self) -> impl Iterator<Item = VariableId> + '_ {
        let mut seen = std::collections::BTreeSet::new();
        self.terms
            .keys()
            .flat_map(|m| m.variables().collect::<Vec<_>>())
            .filter(move |v| seen.insert(*v))
    }

    /// Bargmann scalar product, antilinear in `self`:
    /// <p, q> = sum over shared monomials of conj(a) * b * m! where m! is
    /// the product of exponent factorials.
    pub fn inner_product(&self, other: &Polynomial) -> GaussianRational {
        let (small, large, conj_small) = if self.terms.len() <= other.terms.len() {
            (self, other, true)
        } else {
            (other, self, false)
        };
        let mut acc = GaussianRational::zero();
        for (m, a) in &small.terms {
            if let Some(b) = large.terms.get(m) {
                let w = GaussianRational::from_rational(Rational::from_integer(monomial_weight(m)));
                let prod = if conj_small {
                    &(&a.conj() * b) * &w
                } else {
                    &(&b.conj() * a) * &w
                };
                acc += &prod;
            }
        }
        acc
    }

    /// Squared Bargmann norm, an exact nonnegative rational.
    pub fn norm_sq(&self) -> Rational {
        let ip = self.inner_product(self);
        debug_assert!(ip.im.is_zero());
        ip.re
    }

    /// The unique Gaussian-rational scalar multiple with Gaussian-integer
    /// coefficients of collective content 1 and leading coefficient in the
    /// closed first quadrant (re > 0, im >= 0). Rejects the zero polynomial.
    pub fn canonical_form(&self) -> Result<Polynomial, Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        // clear denominators
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            lcm = lcm.lcm(c.re.denom());
            lcm = lcm.lcm(c.im.denom());
        }
        let ints: Vec<(&Monomial, GaussInt)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let re = c.re.numer() * (&lcm / c.re.denom());
                let im = c.im.numer() * (&lcm / c.im.denom());
                (m, (re, im))
            })
            .collect();
        // Gaussian-integer content
        let mut content: GaussInt = (BigInt::zero(), BigInt::zero());
        for (_, g) in &ints {
            content = gaussian_gcd(&content, g);
        }
        let mut reduced: Vec<(&Monomial, GaussInt)> = ints
            .iter()
            .map(|(m, g)| (*m, gaussian_div_exact(g, &content)))
            .collect();
        // rotate by the unit that puts the leading coefficient (maximal
        // monomial) into re > 0, im >= 0
        let lead = &reduced.last().unwrap().1;
        let unit: GaussInt = {
            let (a, b) = (lead.0.clone(), lead.1.clone());
            if a.is_positive() && !b.is_negative() {
                (BigInt::one(), BigInt::zero())
            } else if !a.is_positive() && b.is_positive() {
                // multiply by -i: (a+bi)(-i) = b - ai
                (BigInt::zero(), -BigInt::one())
            } else if a.is_negative() && !b.is_positive() {
                (-BigInt::one(), BigInt::zero())
            } else {
                (BigInt::zero(), BigInt::one())
            }
        };
        for (_, g) in reduced.iter_mut() {
            let rotated = (
                &g.0 * &unit.0 - &g.1 * &unit.1,
                &g.0 * &unit.1 + &g.1 * &unit.0,
            );
            *g = rotated;
        }
        Ok(Polynomial {
            terms: reduced
                .into_iter()
                .map(|(m, (re, im))| {
                    (
                        m.clone(),
                        GaussianRational::new(Rational::from_integer(re), Rational::from_integer(im)),
                    )
                })
                .collect(),
        })
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::text::format_polynomial(self))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(axis: u32, particle: u32) -> Polynomial {
        Polynomial::variable(VariableId::new(axis, particle))
    }

    fn t(p: u32) -> Polynomial {
        var(0, p)
    }
    fn u(p: u32) -> Polynomial {
        var(1, p)
    }
    fn v(p: u32) -> Polynomial {
        var(2, p)
    }

    fn int(n: i64) -> GaussianRational {
        GaussianRational::from_integer(n)
    }

    #[test]
    fn add_inverse_and_cancellation() {
        assert!((&t(1) + &-&t(1)).is_zero());
        let p = &(&t(1) - &t(2)) + &(&t(1) + &t(2));
        assert_eq!(p, t(1).scale(&int(2)));
    }

    #[test]
    fn add_complex_merge() {
        let psi1 = &t(1) - &t(2);
        let psi2 = &u(1) - &u(2);
        let sum = &psi1 + &psi2.scale(&GaussianRational::i());
        assert_eq!(sum.num_terms(), 4);
        assert_eq!(sum.coefficient(&Monomial::variable(VariableId::new(1, 2))),
                   -&GaussianRational::i());
    }

    #[test]
    fn mul_exponents_add() {
        let sq = &t(1) * &t(1);
        assert_eq!(sq.degree(), Some(2));
        assert_eq!(sq.num_terms(), 1);
        // binomial
        let p = &t(1) - &t(2);
        let psq = &p * &p;
        assert_eq!(psq.num_terms(), 3);
        let t1t2 = Monomial::variable(VariableId::new(0, 1))
            .mul(&Monomial::variable(VariableId::new(0, 2)));
        assert_eq!(psq.coefficient(&t1t2), int(-2));
    }

    #[test]
    fn psi4_has_eight_terms() {
        let psi4 = &(&(&t(1) - &t(2)) * &(&u(1) - &u(2))) * &(&v(1) - &v(2));
        assert_eq!(psi4.num_terms(), 8);
        assert_eq!(psi4.degree(), Some(3));
        assert_eq!(psi4.norm_sq(), Rational::from_integer(8.into()));
    }

    #[test]
    fn scalar_product_examples() {
        assert_eq!(t(1).inner_product(&t(1)), int(1));
        let t1sq = &t(1) * &t(1);
        assert_eq!(t1sq.inner_product(&t1sq), int(2));
        assert_eq!(t(1).inner_product(&u(1)), GaussianRational::zero());
        let psi1 = &t(1) - &t(2);
        assert_eq!(psi1.norm_sq(), Rational::from_integer(2.into()));
    }

    #[test]
    fn inner_product_antilinear_first() {
        let i = GaussianRational::i();
        let p = t(1);
        let q = t(1);
        assert_eq!(p.scale(&i).inner_product(&q), -&i);
        assert_eq!(p.inner_product(&q.scale(&i)), i);
    }

    #[test]
    fn canonical_form_examples() {
        let psi1 = &t(1) - &t(2);
        let scaled = psi1.scale(&int(-2));
        assert_eq!(scaled.canonical_form().unwrap(), psi1);
        let half = psi1.scale(&GaussianRational::from_ratio(1, 2));
        assert_eq!(half.canonical_form().unwrap(), psi1);
        let phase = psi1.scale(&GaussianRational::i());
        assert_eq!(phase.canonical_form().unwrap(), psi1);
        assert!(Polynomial::zero().canonical_form().is_err());
    }

    #[test]
    fn canonical_form_gaussian_content() {
        // all coefficients divisible by 1+i
        let c = GaussianRational::new(
            Rational::from_integer(1.into()),
            Rational::from_integer(1.into()),
        );
        let p = &t(1).scale(&c) + &t(2).scale(&int(2));
        let canon = p.canonical_form().unwrap();
        // content (1+i) divided out: t1 + (1-i)t2
        assert_eq!(canon.coefficient(&Monomial::variable(VariableId::new(0, 1))), int(1));
        assert_eq!(
            canon.coefficient(&Monomial::variable(VariableId::new(0, 2))),
            GaussianRational::new(
                Rational::from_integer(1.into()),
                Rational::from_integer((-1).into())
            )
        );
    }

    #[test]
    fn substitution_inverts() {
        // t1 -> (C+R)/2, t2 -> (C-R)/2 with C=t1+t2, R=t1-t2 recovers t1
        let mut fwd = BTreeMap::new();
        let half = GaussianRational::from_ratio(1, 2);
        fwd.insert(
            VariableId::new(0, 1),
            (&t(1) + &t(2)).scale(&half),
        );
        fwd.insert(
            VariableId::new(0, 2),
            (&t(1) - &t(2)).scale(&half),
        );
        let p = &(&t(1) * &t(1)) + &t(2);
        let back = {
            let mut inv = BTreeMap::new();
            inv.insert(VariableId::new(0, 1), &t(1) + &t(2));
            inv.insert(VariableId::new(0, 2), &t(1) - &t(2));
            p.substitute(&inv).substitute(&fwd)
        };
        assert_eq!(back, p);
    }
}
