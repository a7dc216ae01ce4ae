//! Antisymmetric shell bases (Slater determinants of Bargmann monomials)
//! and the symmetric-function side: elementary symmetric polynomials,
//! Euler-boson monomials, spherical combinations, and discriminants.

use crate::error::Error;
use crate::gaussian::GaussianRational;
use crate::monomial::{Monomial, VariableId, AXIS_LETTERS};
use crate::operators::{is_antisymmetric, Permutation};
use crate::polynomial::Polynomial;
use std::collections::BTreeMap;
use std::fmt;

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// One shell of the N-fermion oscillator: all antisymmetric states with
/// `shell` quanta above the fermionic minimum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShellSpec {
    pub particles: u32,
    pub dims: u32,
    pub shell: u32,
}

impl ShellSpec {
    pub fn new(particles: u32, dims: u32, shell: u32) -> Self {
        assert!(particles >= 1 && dims >= 1);
        ShellSpec {
            particles,
            dims,
            shell,
        }
    }

    /// Multiplicity of the single-particle level with n quanta.
    fn level_multiplicity(&self, n: u32) -> u64 {
        binomial((n + self.dims - 1) as u64, (self.dims - 1) as u64)
    }

    /// Minimal total degree of a nonzero antisymmetric polynomial,
    /// obtained by greedily filling the lowest single-particle levels.
    pub fn e_min(&self) -> u32 {
        let mut remaining = self.particles as u64;
        let mut degree: u64 = 0;
        let mut n = 0u32;
        while remaining > 0 {
            let take = self.level_multiplicity(n).min(remaining);
            degree += take * n as u64;
            remaining -= take;
            n += 1;
        }
        degree as u32
    }

    /// Total oscillator quanta E = E_min + shell.
    pub fn total_degree(&self) -> u32 {
        self.e_min() + self.shell
    }
}

/// All d-dimensional exponent vectors with the given total degree, in a
/// fixed deterministic order.
pub fn single_particle_monomials(dims: u32, degree: u32) -> Vec<Vec<u32>> {
    fn rec(dims: u32, degree: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if dims == 1 {
            prefix.push(degree);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=degree).rev() {
            prefix.push(e);
            rec(dims - 1, degree - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(dims, degree, &mut Vec::new(), &mut out);
    out
}

/// An antisymmetrized product of N distinct single-particle monomials.
#[derive(Clone, Debug)]
pub struct SlaterState {
    /// Occupied single-particle exponent vectors, in enumeration order.
    pub occupied: Vec<Vec<u32>>,
    pub polynomial: Polynomial,
}

impl SlaterState {
    pub fn degree(&self) -> u32 {
        self.occupied.iter().flatten().sum()
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn expand_determinant(occupied: &[Vec<u32>], dims: u32) -> Polynomial {
    let n = occupied.len();
    let mut acc = Polynomial::zero();
    for perm in permutations(n) {
        let sigma = Permutation::from_images(perm.iter().map(|&i| (i + 1) as u32).collect());
        let sign = sigma.sign();
        let mut mono = Monomial::one();
        for (row, &img) in perm.iter().enumerate() {
            // single-particle monomial `row` assigned to particle img+1
            for axis in 0..dims {
                let e = occupied[row][axis as usize];
                if e > 0 {
                    mono = mono.mul(&Monomial::from_exponents([(
                        VariableId::new(axis, (img + 1) as u32),
                        e,
                    )]));
                }
            }
        }
        acc = &acc + &Polynomial::monomial(mono, GaussianRational::from_integer(sign as i64));
    }
    acc
}

/// Complete linearly independent basis of the shell: one Slater state per
/// N-subset of single-particle monomials with the right total degree.
pub fn slater_basis(spec: &ShellSpec) -> Vec<SlaterState> {
    let e_total = spec.total_degree();
    let n = spec.particles as usize;
    // single-particle monomials of degree <= E, in (degree, enumeration) order
    let mut sp: Vec<Vec<u32>> = Vec::new();
    for deg in 0..=e_total {
        sp.extend(single_particle_monomials(spec.dims, deg));
    }
    let degrees: Vec<u32> = sp.iter().map(|m| m.iter().sum()).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        sp: &[Vec<u32>],
        degrees: &[u32],
        n: usize,
        target: u32,
        start: usize,
        chosen: &mut Vec<usize>,
        acc: u32,
        out: &mut Vec<Vec<usize>>,
    ) {
        if chosen.len() == n {
            if acc == target {
                out.push(chosen.clone());
            }
            return;
        }
        for i in start..sp.len() {
            let d = acc + degrees[i];
            if d > target {
                continue;
            }
            chosen.push(i);
            rec(sp, degrees, n, target, i + 1, chosen, d, out);
            chosen.pop();
        }
    }
    let mut subsets = Vec::new();
    rec(
        &sp,
        &degrees,
        n,
        e_total,
        0,
        &mut chosen,
        0,
        &mut subsets,
    );
    for subset in subsets {
        let occupied: Vec<Vec<u32>> = subset.iter().map(|&i| sp[i].clone()).collect();
        let polynomial = expand_determinant(&occupied, spec.dims);
        debug_assert!(!polynomial.is_zero());
        debug_assert!(is_antisymmetric(&polynomial, spec.particles));
        out.push(SlaterState {
            occupied,
            polynomial,
        });
    }
    out
}

/// Number of Slater states in the shell without expanding any determinant.
pub fn shell_dimension_count(spec: &ShellSpec) -> u64 {
    let e_total = spec.total_degree();
    let n = spec.particles as usize;
    let mut counts_by_degree: Vec<u64> = Vec::new();
    for deg in 0..=e_total {
        counts_by_degree.push(single_particle_monomials(spec.dims, deg).len() as u64);
    }
    // dp[(k, e)] = number of k-subsets of distinct monomials, total degree e,
    // processing one single-particle state at a time
    let mut dp = vec![vec![0u64; (e_total + 1) as usize]; n + 1];
    dp[0][0] = 1;
    for (deg, &cnt) in counts_by_degree.iter().enumerate() {
        for _ in 0..cnt {
            for k in (0..n).rev() {
                for e in 0..=(e_total as usize) {
                    if dp[k][e] > 0 && e + deg <= e_total as usize {
                        dp[k + 1][e + deg] += dp[k][e];
                    }
                }
            }
        }
    }
    dp[n][e_total as usize]
}

/// Elementary symmetric polynomial e_k in the N variables of one axis.
pub fn elementary_symmetric(axis: u32, k: u32, particles: u32) -> Result<Polynomial, Error> {
    if k < 1 || k > particles {
        return Err(Error::Unsupported(format!(
            "e_{k} undefined for N = {particles}"
        )));
    }
    fn rec(
        axis: u32,
        particles: u32,
        k: u32,
        start: u32,
        prefix: &mut Vec<u32>,
        acc: &mut Polynomial,
    ) {
        if k == 0 {
            let mono = Monomial::from_exponents(
                prefix.iter().map(|&j| (VariableId::new(axis, j), 1)),
            );
            *acc = &*acc + &Polynomial::monomial(mono, GaussianRational::one());
            return;
        }
        for j in start..=particles {
            prefix.push(j);
            rec(axis, particles, k - 1, j + 1, prefix, acc);
            prefix.pop();
        }
    }
    let mut acc = Polynomial::zero();
    rec(axis, particles, k, 1, &mut Vec::new(), &mut acc);
    Ok(acc)
}

/// The two-particle discriminant (a1 - a2)^2 = e1^2 - 4 e2 for one axis.
pub fn discriminant(axis: u32, particles: u32) -> Result<Polynomial, Error> {
    if particles != 2 {
        return Err(Error::Unsupported(
            "discriminants implemented for N = 2 only".into(),
        ));
    }
    let diff = &Polynomial::variable(VariableId::new(axis, 1))
        - &Polynomial::variable(VariableId::new(axis, 2));
    Ok(&diff * &diff)
}

/// A product of elementary-symmetric generators e_k(axis), tracked both as
/// an abstract power map and as the expanded polynomial.
#[derive(Clone, Debug)]
pub struct EulerBosonMonomial {
    /// (axis, k) -> exponent.
    pub powers: BTreeMap<(u32, u32), u32>,
    pub polynomial: Polynomial,
}

impl EulerBosonMonomial {
    pub fn degree(&self) -> u32 {
        self.powers.iter().map(|(&(_, k), &e)| k * e).sum()
    }
}

impl fmt::Display for EulerBosonMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.powers.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (&(axis, k), &e) in &self.powers {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            let axis_name = if (axis as usize) < AXIS_LETTERS.len() {
                AXIS_LETTERS[axis as usize].to_string()
            } else {
                format!("x{axis}")
            };
            write!(f, "e{k}({axis_name})")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// All Euler-boson monomials of the given total degree: products of
/// e_k(axis), k = 1..=N, over all axes. Degree 0 yields the constant 1.
pub fn euler_monomials(particles: u32, dims: u32, degree: u32) -> Vec<EulerBosonMonomial> {
    // generator list in deterministic order: axis-major, then k ascending
    let mut gens: Vec<(u32, u32)> = Vec::new();
    for axis in 0..dims {
        for k in 1..=particles {
            gens.push((axis, k));
        }
    }
    let mut out = Vec::new();
    fn rec(
        gens: &[(u32, u32)],
        idx: usize,
        remaining: u32,
        powers: &mut BTreeMap<(u32, u32), u32>,
        out: &mut Vec<BTreeMap<(u32, u32), u32>>,
    ) {
        if remaining == 0 {
            out.push(powers.clone());
            return;
        }
        if idx >= gens.len() {
            return;
        }
        let (_, k) = gens[idx];
        let max_e = remaining / k;
        for e in (0..=max_e).rev() {
            if e > 0 {
                powers.insert(gens[idx], e);
            }
            rec(gens, idx + 1, remaining - e * k, powers, out);
            powers.remove(&gens[idx]);
        }
    }
    let mut power_maps = Vec::new();
    rec(&gens, 0, degree, &mut BTreeMap::new(), &mut power_maps);
    for powers in power_maps {
        let mut polynomial = Polynomial::one();
        for (&(axis, k), &e) in &powers {
            let ek = elementary_symmetric(axis, k, particles).expect("valid generator");
            polynomial = &polynomial * &ek.pow(e);
        }
        out.push(EulerBosonMonomial { powers, polynomial });
    }
    out
}

/// Generator polynomials used throughout the N = 2, d = 3 analysis.
pub mod generators {
    use super::*;

    /// Cartesian ground-state shape component: x_axis,1 - x_axis,2.
    pub fn psi_cartesian(axis: u32) -> Polynomial {
        &Polynomial::variable(VariableId::new(axis, 1))
            - &Polynomial::variable(VariableId::new(axis, 2))
    }

    /// Spherical components of the ground-state vector (N = 2, d = 3):
    /// psi_{1,+-1} = -+psi_1 - i psi_2, psi_10 = psi_3.
    pub fn psi_spherical(m: i32) -> Result<Polynomial, Error> {
        let psi1 = psi_cartesian(0);
        let psi2 = psi_cartesian(1);
        let i = GaussianRational::i();
        match m {
            1 => Ok(&-&psi1 - &psi2.scale(&i)),
            0 => Ok(psi_cartesian(2)),
            -1 => Ok(&psi1 - &psi2.scale(&i)),
            _ => Err(Error::Unsupported(format!("invalid projection m = {m}"))),
        }
    }

    /// Spherical combinations of the e_1 bosons, mirroring the psi
    /// pattern: e_11 = -e1(t) - i e1(u), e_10 = e1(v),
    /// e_{1,-1} = e1(t) - i e1(u).
    pub fn e_spherical(m: i32, particles: u32) -> Result<Polynomial, Error> {
        let e1t = elementary_symmetric(0, 1, particles)?;
        let e1u = elementary_symmetric(1, 1, particles)?;
        let i = GaussianRational::i();
        match m {
            1 => Ok(&-&e1t - &e1u.scale(&i)),
            0 => elementary_symmetric(2, 1, particles),
            -1 => Ok(&e1t - &e1u.scale(&i)),
            _ => Err(Error::Unsupported(format!("invalid projection m = {m}"))),
        }
    }

    /// The pseudoscalar shape psi_4 = psi_1 psi_2 psi_3.
    pub fn psi4() -> Polynomial {
        &(&psi_cartesian(0) * &psi_cartesian(1)) * &psi_cartesian(2)
    }
}

/// spherical_boson from the module contract: e_{1m} for d = 3.
pub fn spherical_boson(m: i32, particles: u32, dims: u32) -> Result<Polynomial, Error> {
    if dims != 3 {
        return Err(Error::Unsupported(format!(
            "spherical bosons require d = 3, got d = {dims}"
        )));
    }
    generators::e_spherical(m, particles)
}
