//! Linear operators on Bargmann-space polynomials: formal derivations,
//! angular momentum components, ladder operators, and particle
//! permutations.
//!
//! The angular momentum components have the same form as in real space:
//! Lz = -i(t d/du - u d/dt) = L_v, and cyclically. Ladder operators carry
//! no normalization; with unnormalized states the lowering factor is
//! (l+m) and the raising factor (l-m).

use crate::error::Error;
use crate::gaussian::GaussianRational;
use crate::monomial::VariableId;
use crate::polynomial::Polynomial;
use num_bigint::BigInt;
use num_rational::BigRational;

/// Formal partial derivative of `p` with respect to `v`.
pub fn differentiate(p: &Polynomial, v: VariableId) -> Polynomial {
    Polynomial::from_terms(p.terms().filter_map(|(m, c)| {
        let e = m.exponent(v);
        if e == 0 {
            return None;
        }
        let reduced = m.reduce_var(v).unwrap();
        let factor =
            GaussianRational::from_rational(BigRational::from_integer(BigInt::from(e)));
        Some((reduced, c * &factor))
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    /// Multiply by the variable.
    Mul(VariableId),
    /// Differentiate with respect to the variable.
    Diff(VariableId),
}

impl Generator {
    fn apply(&self, p: &Polynomial) -> Polynomial {
        match self {
            Generator::Mul(v) => &Polynomial::variable(*v) * p,
            Generator::Diff(v) => differentiate(p, *v),
        }
    }
}

/// A formal sum of scalar-weighted generator compositions. Composition
/// order is significant; within a product the rightmost generator acts
/// first.
#[derive(Clone, Debug, Default)]
pub struct LinearOperator {
    terms: Vec<(GaussianRational, Vec<Generator>)>,
}

impl LinearOperator {
    pub fn zero() -> Self {
        LinearOperator::default()
    }

    pub fn identity() -> Self {
        LinearOperator {
            terms: vec![(GaussianRational::one(), vec![])],
        }
    }

    pub fn scalar(c: GaussianRational) -> Self {
        LinearOperator {
            terms: vec![(c, vec![])],
        }
    }

    pub fn multiply(v: VariableId) -> Self {
        LinearOperator {
            terms: vec![(GaussianRational::one(), vec![Generator::Mul(v)])],
        }
    }

    pub fn derivative(v: VariableId) -> Self {
        LinearOperator {
            terms: vec![(GaussianRational::one(), vec![Generator::Diff(v)])],
        }
    }

    pub fn add(&self, other: &LinearOperator) -> LinearOperator {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        LinearOperator { terms }
    }

    pub fn sub(&self, other: &LinearOperator) -> LinearOperator {
        self.add(&other.scale(&GaussianRational::from_integer(-1)))
    }

    pub fn scale(&self, c: &GaussianRational) -> LinearOperator {
        LinearOperator {
            terms: self
                .terms
                .iter()
                .map(|(a, gs)| (a * c, gs.clone()))
                .collect(),
        }
    }

    /// Operator product self . other (other acts first).
    pub fn compose(&self, other: &LinearOperator) -> LinearOperator {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, ga) in &self.terms {
            for (b, gb) in &other.terms {
                let mut gs = ga.clone();
                gs.extend(gb.iter().copied());
                terms.push((a * b, gs));
            }
        }
        LinearOperator { terms }
    }

    pub fn commutator(&self, other: &LinearOperator) -> LinearOperator {
        self.compose(other).sub(&other.compose(self))
    }

    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (c, gs) in &self.terms {
            let mut cur = p.clone();
            for g in gs.iter().rev() {
                cur = g.apply(&cur);
            }
            acc = &acc + &cur.scale(c);
        }
        acc
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    /// One particle (1-based index).
    Particle(u32),
    /// Sum over particles 1..=N.
    Total(u32),
}

fn component_one_particle(axis: u32, j: u32) -> LinearOperator {
    // L_c = -i (a d/db - b d/da) with (a, b) the cyclic successors of c
    let a = VariableId::new((axis + 1) % 3, j);
    let b = VariableId::new((axis + 2) % 3, j);
    let minus_i = -GaussianRational::i();
    LinearOperator::multiply(a)
        .compose(&LinearOperator::derivative(b))
        .sub(&LinearOperator::multiply(b).compose(&LinearOperator::derivative(a)))
        .scale(&minus_i)
}

/// The angular momentum component L_axis (axis 0,1,2 = t,u,v; L_v is Lz).
/// Only d = 3 has the cyclic structure.
pub fn angular_momentum(axis: u32, scope: Scope, dims: u32) -> Result<LinearOperator, Error> {
    if dims != 3 {
        return Err(Error::Unsupported(format!(
            "angular momentum requires d = 3, got d = {dims}"
        )));
    }
    if axis >= 3 {
        return Err(Error::Unsupported(format!("invalid axis {axis}")));
    }
    match scope {
        Scope::Particle(j) => {
            if j == 0 {
                return Err(Error::Unsupported("particle indices are 1-based".into()));
            }
            Ok(component_one_particle(axis, j))
        }
        Scope::Total(n) => {
            let mut op = LinearOperator::zero();
            for j in 1..=n {
                op = op.add(&component_one_particle(axis, j));
            }
            Ok(op)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Raise,
    Lower,
}

/// Total ladder operator: L- = L_t - i L_u, L+ = L_t + i L_u.
pub fn ladder(direction: Direction, particles: u32, dims: u32) -> Result<LinearOperator, Error> {
    let lt = angular_momentum(0, Scope::Total(particles), dims)?;
    let lu = angular_momentum(1, Scope::Total(particles), dims)?;
    let i = GaussianRational::i();
    Ok(match direction {
        Direction::Raise => lt.add(&lu.scale(&i)),
        Direction::Lower => lt.sub(&lu.scale(&i)),
    })
}

pub fn lz(particles: u32, dims: u32) -> Result<LinearOperator, Error> {
    angular_momentum(2, Scope::Total(particles), dims)
}

/// L^2 realized as L- L+ + Lz^2 + Lz.
pub fn l_squared(particles: u32, dims: u32) -> Result<LinearOperator, Error> {
    let lm = ladder(Direction::Lower, particles, dims)?;
    let lp = ladder(Direction::Raise, particles, dims)?;
    let lz = lz(particles, dims)?;
    Ok(lm.compose(&lp).add(&lz.compose(&lz)).add(&lz))
}

/// A bijection on particle indices 1..=N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    /// images[j-1] is the image of particle j.
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: u32) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn transposition(n: u32, a: u32, b: u32) -> Self {
        assert!(a >= 1 && b >= 1 && a <= n && b <= n && a != b);
        let mut p = Permutation::identity(n);
        p.images.swap((a - 1) as usize, (b - 1) as usize);
        p
    }

    pub fn from_images(images: Vec<u32>) -> Self {
        let n = images.len() as u32;
        let mut seen = vec![false; images.len()];
        for &x in &images {
            assert!(x >= 1 && x <= n && !seen[(x - 1) as usize], "not a bijection");
            seen[(x - 1) as usize] = true;
        }
        Permutation { images }
    }

    pub fn apply(&self, particle: u32) -> u32 {
        self.images[(particle - 1) as usize]
    }

    pub fn sign(&self) -> i32 {
        let mut sign = 1;
        let n = self.images.len();
        for i in 0..n {
            for j in (i + 1)..n {
                if self.images[i] > self.images[j] {
                    sign = -sign;
                }
            }
        }
        sign
    }
}

/// Relabel particle indices of every variable of `p` by the permutation.
pub fn apply_permutation(p: &Polynomial, sigma: &Permutation) -> Polynomial {
    p.map_particles(|j| sigma.apply(j))
}

/// True iff every transposition of adjacent particles negates `p`.
/// Adjacent transpositions generate the symmetric group, so this is full
/// antisymmetry.
pub fn is_antisymmetric(p: &Polynomial, particles: u32) -> bool {
    for j in 1..particles {
        let sigma = Permutation::transposition(particles, j, j + 1);
        let swapped = apply_permutation(p, &sigma);
        if &swapped + p != Polynomial::zero() {
            return false;
        }
    }
    true
}

/// True iff `p` is invariant under every particle transposition.
pub fn is_symmetric(p: &Polynomial, particles: u32) -> bool {
    for j in 1..particles {
        let sigma = Permutation::transposition(particles, j, j + 1);
        if apply_permutation(p, &sigma) != *p {
            return false;
        }
    }
    true
}

/// Check Op(p) = c p for a rational-integer eigenvalue c.
pub fn is_eigenvector(op: &LinearOperator, p: &Polynomial, eigenvalue: i64) -> bool {
    let lhs = op.apply(p);
    let rhs = p.scale(&GaussianRational::from_integer(eigenvalue));
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::generators::{psi_cartesian, psi_spherical};

    fn var(axis: u32, particle: u32) -> VariableId {
        VariableId::new(axis, particle)
    }

    fn t(p: u32) -> Polynomial {
        Polynomial::variable(var(0, p))
    }
    fn u(p: u32) -> Polynomial {
        Polynomial::variable(var(1, p))
    }
    fn v(p: u32) -> Polynomial {
        Polynomial::variable(var(2, p))
    }

    #[test]
    fn differentiate_examples() {
        let t1sq = &t(1) * &t(1);
        assert_eq!(differentiate(&t1sq, var(0, 1)), t(1).scale(&GaussianRational::from_integer(2)));
        let psi1 = &t(1) - &t(2);
        assert!(differentiate(&psi1, var(1, 1)).is_zero());
        let prod = &(&t(1) * &u(1)) * &v(1);
        assert_eq!(differentiate(&prod, var(0, 1)), &u(1) * &v(1));
    }

    #[test]
    fn lz_eigenvalues() {
        let lz = lz(2, 3).unwrap();
        let psi11 = psi_spherical(1).unwrap();
        let psi10 = psi_spherical(0).unwrap();
        assert!(is_eigenvector(&lz, &psi11, 1));
        assert!(is_eigenvector(&lz, &psi10, 0));
        assert!(is_eigenvector(&lz, &psi_spherical(-1).unwrap(), -1));
    }

    #[test]
    fn lz_additivity_over_factors() {
        use crate::fock::generators::e_spherical;
        let lz = lz(2, 3).unwrap();
        let e11 = e_spherical(1, 2).unwrap();
        let psi11 = psi_spherical(1).unwrap();
        let m3 = &(&e11 * &e11) * &psi11;
        assert!(is_eigenvector(&lz, &m3, 3));
    }

    #[test]
    fn ladder_on_ground_triplet() {
        let lminus = ladder(Direction::Lower, 2, 3).unwrap();
        let lplus = ladder(Direction::Raise, 2, 3).unwrap();
        let psi11 = psi_spherical(1).unwrap();
        let psi10 = psi_spherical(0).unwrap();
        // lowering factor (l+m) = 2 for l = 1, m = 1
        assert_eq!(
            lminus.apply(&psi11),
            psi10.scale(&GaussianRational::from_integer(2))
        );
        assert!(lplus.apply(&psi11).is_zero());
    }

    #[test]
    fn rejects_wrong_dims() {
        assert!(angular_momentum(2, Scope::Total(2), 2).is_err());
        assert!(ladder(Direction::Lower, 2, 4).is_err());
    }

    #[test]
    fn permutation_and_antisymmetry() {
        let swap = Permutation::transposition(2, 1, 2);
        assert_eq!(swap.sign(), -1);
        let psi1 = psi_cartesian(0);
        assert_eq!(apply_permutation(&psi1, &swap), -&psi1);
        let e1t = &t(1) + &t(2);
        assert_eq!(apply_permutation(&e1t, &swap), e1t);
        assert!(is_antisymmetric(&psi1, 2));
        assert!(!is_antisymmetric(&e1t, 2));
        assert!(is_symmetric(&e1t, 2));
        // odd power of an antisymmetric factor stays antisymmetric
        let psi11 = psi_spherical(1).unwrap();
        assert!(is_antisymmetric(&psi11.pow(3), 2));
        // psi4 = psi1 psi2 psi3 flips sign under swap
        let psi4 = &(&psi_cartesian(0) * &psi_cartesian(1)) * &psi_cartesian(2);
        assert_eq!(apply_permutation(&psi4, &swap), -&psi4);
    }

    #[test]
    fn su2_commutators_on_samples() {
        let lp = ladder(Direction::Raise, 2, 3).unwrap();
        let lm = ladder(Direction::Lower, 2, 3).unwrap();
        let lz_op = lz(2, 3).unwrap();
        let comm_pm = lp.commutator(&lm);
        let comm_zp = lz_op.commutator(&lp);
        let comm_zm = lz_op.commutator(&lm);
        let two = GaussianRational::from_integer(2);
        let samples = [
            t(1),
            &t(1) * &u(2),
            &(&t(1) * &t(1)) * &v(2),
            &psi_spherical(1).unwrap() * &psi_spherical(0).unwrap(),
            psi_spherical(1).unwrap().pow(3),
        ];
        for p in &samples {
            assert_eq!(comm_pm.apply(p), lz_op.apply(p).scale(&two));
            assert_eq!(comm_zp.apply(p), lp.apply(p));
            assert_eq!(comm_zm.apply(p), -&lm.apply(p));
        }
    }
}
