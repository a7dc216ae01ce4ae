//! Center-of-mass / relative-motion separation for two particles.
//!
//! The CM/RM frame is an exact linear change of variables per axis:
//! a1 = (C_a + R_a)/2, a2 = (C_a - R_a)/2 with C_a = a1 + a2 and
//! R_a = a1 - a2. In the image polynomial the particle-1 slot holds C_a
//! and the particle-2 slot holds R_a. Pure-RM states contain no C
//! variable; a general RM wave function is P t + Q u + R v + S t u v with
//! P, Q, R, S polynomials in the squares of the difference variables.

use crate::error::Error;
use crate::gaussian::GaussianRational;
use crate::monomial::VariableId;
use crate::polynomial::Polynomial;
use crate::shapes::{decompose, ShapeBasis};
use std::collections::BTreeMap;

fn check_two_particles(p: &Polynomial) -> Result<(), Error> {
    if p.variables().any(|v| v.particle > 2) {
        return Err(Error::Unsupported(
            "CM/RM separation implemented for N = 2 only".into(),
        ));
    }
    Ok(())
}

fn axes_of(p: &Polynomial) -> Vec<u32> {
    let mut axes: Vec<u32> = p.variables().map(|v| v.axis).collect();
    axes.sort_unstable();
    axes.dedup();
    axes
}

/// Rewrite `p` in the CM/RM frame (exact; denominators of 2 appear).
pub fn cm_rm_substitute(p: &Polynomial) -> Result<Polynomial, Error> {
    check_two_particles(p)?;
    let half = GaussianRational::from_ratio(1, 2);
    let mut subst = BTreeMap::new();
    for axis in axes_of(p) {
        let c = Polynomial::variable(VariableId::new(axis, 1));
        let r = Polynomial::variable(VariableId::new(axis, 2));
        subst.insert(VariableId::new(axis, 1), (&c + &r).scale(&half));
        subst.insert(VariableId::new(axis, 2), (&c - &r).scale(&half));
    }
    Ok(p.substitute(&subst))
}

/// Inverse of [`cm_rm_substitute`]: C_a -> a1 + a2, R_a -> a1 - a2.
pub fn cm_rm_back(p: &Polynomial) -> Result<Polynomial, Error> {
    check_two_particles(p)?;
    let mut subst = BTreeMap::new();
    for axis in axes_of(p) {
        let a1 = Polynomial::variable(VariableId::new(axis, 1));
        let a2 = Polynomial::variable(VariableId::new(axis, 2));
        subst.insert(VariableId::new(axis, 1), &a1 + &a2);
        subst.insert(VariableId::new(axis, 2), &a1 - &a2);
    }
    Ok(p.substitute(&subst))
}

/// True iff the CM/RM image of `p` depends on difference variables only.
pub fn is_pure_rm(p: &Polynomial) -> Result<bool, Error> {
    let sub = cm_rm_substitute(p)?;
    let pure = sub.variables().all(|v| v.particle == 2);
    Ok(pure)
}

/// The normal form P t + Q u + R v + S t u v of a pure-RM state, with
/// P, Q, R, S polynomials in the squared difference variables. Each
/// monomial is odd in exactly one difference variable (slot P, Q, or R by
/// that variable) or in all three (slot S).
#[derive(Clone, Debug)]
pub struct RmForm {
    pub p: Polynomial,
    pub q: Polynomial,
    pub r: Polynomial,
    pub s: Polynomial,
}

impl RmForm {
    /// Reassemble P t + Q u + R v + S t u v in the CM/RM frame.
    pub fn reassemble(&self) -> Polynomial {
        let t = Polynomial::variable(VariableId::new(0, 2));
        let u = Polynomial::variable(VariableId::new(1, 2));
        let v = Polynomial::variable(VariableId::new(2, 2));
        let tuv = &(&t * &u) * &v;
        &(&(&(&self.p * &t) + &(&self.q * &u)) + &(&self.r * &v)) + &(&self.s * &tuv)
    }
}

pub fn rm_form(p: &Polynomial) -> Result<RmForm, Error> {
    if !is_pure_rm(p)? {
        return Err(Error::Unsupported(
            "rm_form requires a pure relative-motion state".into(),
        ));
    }
    let sub = cm_rm_substitute(p)?;
    let mut parts = [
        Polynomial::zero(),
        Polynomial::zero(),
        Polynomial::zero(),
        Polynomial::zero(),
    ];
    for (m, c) in sub.terms() {
        let odd_axes: Vec<u32> = (0..3)
            .filter(|&axis| m.exponent(VariableId::new(axis, 2)) % 2 == 1)
            .collect();
        let (slot, reduce_axes): (usize, &[u32]) = match odd_axes.as_slice() {
            [a] => (*a as usize, odd_axes.as_slice()),
            [0, 1, 2] => (3, odd_axes.as_slice()),
            _ => {
                return Err(Error::Unsupported(
                    "rm_form requires an odd RM wave function".into(),
                ))
            }
        };
        let mut reduced = m.clone();
        for &axis in reduce_axes {
            reduced = reduced
                .reduce_var(VariableId::new(axis, 2))
                .expect("odd exponent present");
        }
        parts[slot] = &parts[slot] + &Polynomial::monomial(reduced, c.clone());
    }
    let [p_, q_, r_, s_] = parts;
    Ok(RmForm {
        p: p_,
        q: q_,
        r: r_,
        s: s_,
    })
}

/// Quanta bookkeeping of a pure-RM multiplet: n = 2 n_r + l.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RmQuanta {
    pub total_quanta: u32,
    pub l: u32,
    pub n_r: u32,
}

pub fn rm_quanta(total_quanta: u32, l: u32) -> Result<RmQuanta, Error> {
    if l > total_quanta || (total_quanta - l) % 2 != 0 {
        return Err(Error::Inconsistent(format!(
            "parity violation: n = {total_quanta}, l = {l} (each radial quantum carries two quanta)"
        )));
    }
    Ok(RmQuanta {
        total_quanta,
        l,
        n_r: (total_quanta - l) / 2,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Band {
    Rotational,
    Vibrational,
}

impl Band {
    pub fn as_str(&self) -> &'static str {
        match self {
            Band::Rotational => "rotational",
            Band::Vibrational => "vibrational",
        }
    }
}

/// Index of the pseudoscalar shape psi_4 in the basis (the unique shape
/// above shell 0 for N = 2, d = 3).
pub fn pseudoscalar_index(basis: &ShapeBasis) -> Result<usize, Error> {
    let hits: Vec<usize> = basis
        .shapes
        .iter()
        .enumerate()
        .filter(|(_, s)| s.shell > 0)
        .map(|(i, _)| i)
        .collect();
    match hits.as_slice() {
        [i] => Ok(*i),
        _ => Err(Error::Unsupported(
            "band assignment requires the N = 2, d = 3 shape basis".into(),
        )),
    }
}

/// Band of an antisymmetric state by exact pseudoscalar content: states
/// whose decomposition touches psi_4 are rotational, the rest vibrational.
/// States mixing both supports are labeled rotational.
pub fn band_assign(p: &Polynomial, basis: &ShapeBasis) -> Result<(Band, Vec<usize>), Error> {
    let idx = pseudoscalar_index(basis)?;
    let d = decompose(p, basis)?;
    let support = d.support();
    let band = if d.coefficients[idx].is_zero() {
        Band::Vibrational
    } else {
        Band::Rotational
    };
    Ok((band, support))
}

/// Joint sign flip R -> -R of the difference variables, in the CM/RM frame.
pub fn rm_parity_flip(sub: &Polynomial) -> Polynomial {
    Polynomial::from_terms(sub.terms().map(|(m, c)| {
        let odd: u32 = (0..3).map(|axis| m.exponent(VariableId::new(axis, 2))).sum();
        let sign = if odd % 2 == 1 {
            GaussianRational::from_integer(-1)
        } else {
            GaussianRational::one()
        };
        (m.clone(), c * &sign)
    }))
}
