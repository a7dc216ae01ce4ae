//! Shape extraction and the free-module decomposition.
//!
//! Within each shell, the shapes are the orthogonal complement (under the
//! Bargmann inner product) of the states that contain Euler bosons. The
//! complete set of N!^(d-1) shapes generates every antisymmetric state as
//! psi = sum_i phi_i psi_i with symmetric Euler-boson coefficients phi_i,
//! and that decomposition is unique.

use crate::error::Error;
use crate::exec;
use crate::fock::{euler_monomials, slater_basis, ShellSpec};
use crate::gaussian::{GaussianRational, Rational};
use crate::linalg::{orthogonalize, Matrix};
use crate::monomial::Monomial;
use crate::polynomial::Polynomial;

/// A spanning set (possibly dependent) of the trivial states of the shell:
/// every product (nonconstant Euler-boson monomial) x (antisymmetric state
/// of matching lower degree).
pub fn euler_excited_subspace(spec: &ShellSpec) -> Vec<Polynomial> {
    let mut pairs: Vec<(Polynomial, Polynomial)> = Vec::new();
    for k in 1..=spec.shell {
        let lower = ShellSpec::new(spec.particles, spec.dims, spec.shell - k);
        let lower_basis = slater_basis(&lower);
        for b in euler_monomials(spec.particles, spec.dims, k) {
            for s in &lower_basis {
                pairs.push((b.polynomial.clone(), s.polynomial.clone()));
            }
        }
    }
    exec::map_indices(pairs.len(), |i| &pairs[i].0 * &pairs[i].1)
}

/// Index map for expressing polynomials as coordinate vectors.
pub(crate) fn monomial_index(ps: &[Polynomial]) -> Vec<Monomial> {
    let mut set = std::collections::BTreeSet::new();
    for p in ps {
        for (m, _) in p.terms() {
            set.insert(m.clone());
        }
    }
    set.into_iter().collect()
}

pub(crate) fn coordinates(p: &Polynomial, index: &[Monomial]) -> Vec<GaussianRational> {
    index.iter().map(|m| p.coefficient(m)).collect()
}

/// Orthogonal basis (with squared norms) of the shape subspace of one
/// shell: the kernel of the Gram pairing against the Euler-excited
/// spanning set, orthogonalized and put in canonical form.
pub fn shape_subspace(spec: &ShellSpec) -> Vec<(Polynomial, Rational)> {
    let basis: Vec<Polynomial> = slater_basis(spec)
        .into_iter()
        .map(|s| s.polynomial)
        .collect();
    let excited = euler_excited_subspace(spec);
    let kernel_coords: Vec<Vec<GaussianRational>> = if excited.is_empty() {
        // no trivial states: the whole shell is shapes
        (0..basis.len())
            .map(|i| {
                let mut v = vec![GaussianRational::zero(); basis.len()];
                v[i] = GaussianRational::one();
                v
            })
            .collect()
    } else {
        let rows = exec::map_indices(excited.len(), |j| {
            basis
                .iter()
                .map(|s| excited[j].inner_product(s))
                .collect::<Vec<_>>()
        });
        Matrix::from_rows(rows).kernel()
    };
    let raw: Vec<Polynomial> = kernel_coords
        .iter()
        .map(|coords| {
            let mut acc = Polynomial::zero();
            for (c, s) in coords.iter().zip(&basis) {
                acc = &acc + &s.scale(c);
            }
            acc
        })
        .collect();
    let mut shapes: Vec<(Polynomial, Rational)> = orthogonalize(&raw)
        .into_iter()
        .map(|p| {
            let canon = p.canonical_form().expect("nonzero shape");
            let norm = canon.norm_sq();
            (canon, norm)
        })
        .collect();
    // stable ordering: descending leading monomial (canonical term order)
    shapes.sort_by(|(a, _), (b, _)| {
        let la = a.leading().expect("nonzero").0;
        let lb = b.leading().expect("nonzero").0;
        lb.cmp(la)
    });
    shapes
}

#[derive(Clone, Debug)]
pub struct Shape {
    pub polynomial: Polynomial,
    pub shell: u32,
    pub norm_sq: Rational,
}

/// The generating set of the free module for (N, d), gathered shell by
/// shell until N!^(d-1) shapes are found or `max_shell` is exhausted.
#[derive(Clone, Debug)]
pub struct ShapeBasis {
    pub particles: u32,
    pub dims: u32,
    pub shapes: Vec<Shape>,
    pub complete: bool,
}

pub fn module_rank(particles: u32, dims: u32) -> u64 {
    let fact: u64 = (1..=particles as u64).product();
    fact.pow(dims - 1)
}

pub fn full_shape_basis(particles: u32, dims: u32, max_shell: u32) -> ShapeBasis {
    let target = module_rank(particles, dims);
    let mut shapes = Vec::new();
    for shell in 0..=max_shell {
        if shapes.len() as u64 >= target {
            break;
        }
        let spec = ShellSpec::new(particles, dims, shell);
        for (polynomial, norm_sq) in shape_subspace(&spec) {
            shapes.push(Shape {
                polynomial,
                shell,
                norm_sq,
            });
        }
    }
    let complete = shapes.len() as u64 == target;
    ShapeBasis {
        particles,
        dims,
        shapes,
        complete,
    }
}

/// The symmetric-coefficient tuple of psi = sum_i phi_i psi_i, aligned
/// with the shape order of the basis.
#[derive(Clone, Debug)]
pub struct ModuleDecomposition {
    pub coefficients: Vec<Polynomial>,
}

impl ModuleDecomposition {
    /// Indices of shapes with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn reconstruct(&self, basis: &ShapeBasis) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (phi, shape) in self.coefficients.iter().zip(&basis.shapes) {
            acc = &acc + &(phi * &shape.polynomial);
        }
        acc
    }
}

/// Solve for the unique Euler-boson coefficients phi_i with
/// sum phi_i psi_i = p, degree by degree. Fails only if the basis is
/// incomplete or p is not antisymmetric, which is a caller bug surfaced
/// as a hard error.
pub fn decompose(p: &Polynomial, basis: &ShapeBasis) -> Result<ModuleDecomposition, Error> {
    if !basis.complete {
        return Err(Error::Inconsistent("shape basis is incomplete".into()));
    }
    if basis.particles == 2 {
        if let Some(result) = decompose_two_particles(p, basis)? {
            return Ok(result);
        }
    }
    let mut coefficients = vec![Polynomial::zero(); basis.shapes.len()];
    for (degree, component) in p.homogeneous_components() {
        decompose_homogeneous(&component, degree, basis, &mut coefficients)?;
    }
    Ok(ModuleDecomposition { coefficients })
}

/// Closed-form N = 2 decomposition. In the CM/RM frame every shape is a
/// product of difference variables over an odd-cardinality axis set, and
/// each antisymmetric monomial is odd in exactly one such set; routing by
/// that set and back-substituting the even cofactor yields the symmetric
/// coefficients without any linear algebra. Returns Ok(None) if the basis
/// is not of the difference-product form.
fn decompose_two_particles(
    p: &Polynomial,
    basis: &ShapeBasis,
) -> Result<Option<ModuleDecomposition>, Error> {
    use crate::monomial::VariableId;
    use crate::rmcm::{cm_rm_back, cm_rm_substitute};
    use std::collections::BTreeMap;

    // map axis sets to basis positions via the expanded difference products
    let mut slot_of: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    for (i, shape) in basis.shapes.iter().enumerate() {
        let axes: Vec<u32> = {
            let mut axes: Vec<u32> = shape.polynomial.variables().map(|v| v.axis).collect();
            axes.sort_unstable();
            axes.dedup();
            axes
        };
        let mut product = Polynomial::one();
        for &axis in &axes {
            let a1 = Polynomial::variable(VariableId::new(axis, 1));
            let a2 = Polynomial::variable(VariableId::new(axis, 2));
            product = &product * &(&a1 - &a2);
        }
        if product != shape.polynomial || axes.len() % 2 == 0 {
            return Ok(None);
        }
        slot_of.insert(axes, i);
    }
    let sub = cm_rm_substitute(p)?;
    let mut slots: BTreeMap<usize, Polynomial> = BTreeMap::new();
    for (m, c) in sub.terms() {
        let odd_axes: Vec<u32> = (0..basis.dims)
            .filter(|&axis| m.exponent(VariableId::new(axis, 2)) % 2 == 1)
            .collect();
        let index = slot_of.get(&odd_axes).copied().ok_or_else(|| {
            Error::Inconsistent(
                "input is not antisymmetric: even relative-motion parity".into(),
            )
        })?;
        let mut reduced = m.clone();
        for &axis in &odd_axes {
            reduced = reduced
                .reduce_var(VariableId::new(axis, 2))
                .expect("odd exponent present");
        }
        let entry = slots.entry(index).or_insert_with(Polynomial::zero);
        *entry = &*entry + &Polynomial::monomial(reduced, c.clone());
    }
    let mut coefficients = vec![Polynomial::zero(); basis.shapes.len()];
    for (index, slot) in slots {
        coefficients[index] = cm_rm_back(&slot)?;
    }
    Ok(Some(ModuleDecomposition { coefficients }))
}

fn decompose_homogeneous(
    p: &Polynomial,
    degree: u32,
    basis: &ShapeBasis,
    coefficients: &mut [Polynomial],
) -> Result<(), Error> {
    // columns: (shape index, euler monomial) with matching total degree
    let mut columns: Vec<(usize, Polynomial, Polynomial)> = Vec::new();
    for (i, shape) in basis.shapes.iter().enumerate() {
        let d_i = shape.polynomial.degree().expect("nonzero shape");
        if d_i > degree {
            continue;
        }
        for b in euler_monomials(basis.particles, basis.dims, degree - d_i) {
            let product = &b.polynomial * &shape.polynomial;
            columns.push((i, b.polynomial, product));
        }
    }
    let mut all: Vec<Polynomial> = columns.iter().map(|(_, _, prod)| prod.clone()).collect();
    all.push(p.clone());
    let index = monomial_index(&all);
    let rows: Vec<Vec<GaussianRational>> = exec::map_indices(index.len(), |r| {
        columns
            .iter()
            .map(|(_, _, prod)| prod.coefficient(&index[r]))
            .collect()
    });
    let matrix = Matrix::from_rows(rows);
    let rhs = coordinates(p, &index);
    let (solution, unique) = matrix.solve(&rhs).ok_or_else(|| {
        Error::Inconsistent(format!(
            "degree-{degree} component is outside the shape module span"
        ))
    })?;
    if !unique {
        return Err(Error::Inconsistent(format!(
            "non-unique decomposition at degree {degree}: module generators dependent"
        )));
    }
    for ((i, b_poly, _), x) in columns.iter().zip(&solution) {
        if !x.is_zero() {
            coefficients[*i] = &coefficients[*i] + &b_poly.scale(x);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::generators::{psi4, psi_cartesian, psi_spherical};
    use crate::fock::elementary_symmetric;
    use crate::linalg::gram_matrix;
    use crate::operators::is_antisymmetric;
    use num_bigint::BigInt;

    fn rat(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    #[test]
    fn shell0_shapes_are_ground_vector() {
        let shapes = shape_subspace(&ShellSpec::new(2, 3, 0));
        assert_eq!(shapes.len(), 3);
        assert_eq!(shapes[0].0, psi_cartesian(0));
        assert_eq!(shapes[1].0, psi_cartesian(1));
        assert_eq!(shapes[2].0, psi_cartesian(2));
        for (_, n) in &shapes {
            assert_eq!(*n, rat(2));
        }
    }

    #[test]
    fn shell1_has_no_shapes_and_rank9() {
        let spec = ShellSpec::new(2, 3, 1);
        let excited = euler_excited_subspace(&spec);
        let gram = gram_matrix(&excited);
        assert_eq!(gram.rank(), 9);
        assert!(shape_subspace(&spec).is_empty());
    }

    #[test]
    fn shell2_single_shape_is_psi4() {
        let spec = ShellSpec::new(2, 3, 2);
        let excited = euler_excited_subspace(&spec);
        assert_eq!(gram_matrix(&excited).rank(), 27);
        let shapes = shape_subspace(&spec);
        assert_eq!(shapes.len(), 1);
        assert_eq!(shapes[0].0, psi4().canonical_form().unwrap());
        assert_eq!(shapes[0].1, rat(8));
        // orthogonal to every trivial state, exactly
        for t in &excited {
            assert!(t.inner_product(&shapes[0].0).is_zero());
        }
    }

    #[test]
    fn full_basis_n2_d3() {
        let basis = full_shape_basis(2, 3, 2);
        assert!(basis.complete);
        assert_eq!(basis.shapes.len(), 4);
        assert_eq!(
            basis.shapes.iter().map(|s| s.shell).collect::<Vec<_>>(),
            vec![0, 0, 0, 2]
        );
        for s in &basis.shapes {
            assert!(is_antisymmetric(&s.polynomial, 2));
        }
    }

    #[test]
    fn full_basis_n2_d1() {
        let basis = full_shape_basis(2, 1, 0);
        assert!(basis.complete);
        assert_eq!(basis.shapes.len(), 1);
        assert_eq!(basis.shapes[0].polynomial, psi_cartesian(0));
    }

    #[test]
    fn decompose_basis_element_and_excitation() {
        let basis = full_shape_basis(2, 3, 2);
        let d = decompose(&psi4(), &basis).unwrap();
        assert_eq!(d.support(), vec![3]);
        assert_eq!(d.coefficients[3], Polynomial::one());

        let e1t = elementary_symmetric(0, 1, 2).unwrap();
        let p = &e1t * &psi_cartesian(0);
        let d = decompose(&p, &basis).unwrap();
        assert_eq!(d.support(), vec![0]);
        assert_eq!(d.coefficients[0], e1t);
        assert_eq!(d.reconstruct(&basis), p);
    }

    #[test]
    fn psi11_cubed_avoids_psi4() {
        let basis = full_shape_basis(2, 3, 2);
        let p = psi_spherical(1).unwrap().pow(3);
        let d = decompose(&p, &basis).unwrap();
        assert!(d.coefficients[3].is_zero());
        assert!(!d.support().is_empty());
        assert!(d.support().iter().all(|&i| i < 3));
        assert_eq!(d.reconstruct(&basis), p);
    }

    #[test]
    fn psi1_psi2_not_in_euler_span() {
        // the symmetric function psi1 psi2 is not an Euler-boson polynomial
        let p = &psi_cartesian(0) * &psi_cartesian(1);
        let bosons: Vec<Polynomial> = euler_monomials(2, 3, 2)
            .into_iter()
            .map(|b| b.polynomial)
            .collect();
        let mut all = bosons.clone();
        all.push(p.clone());
        let index = monomial_index(&all);
        let rows: Vec<Vec<GaussianRational>> = index
            .iter()
            .map(|m| bosons.iter().map(|b| b.coefficient(m)).collect())
            .collect();
        assert!(Matrix::from_rows(rows).solve(&coordinates(&p, &index)).is_none());
    }
}
