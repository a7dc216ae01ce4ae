//! Holomorphic shapes in two dimensions and the Laughlin connection.
//!
//! For d = 2 the complexified coordinate w_j = t_j + i u_j turns Bargmann
//! space into a space of functions of (w_j, conj w_j); a state is lowest
//! Landau level iff it is annihilated by every dbar_j = (d/dt_j +
//! i d/du_j)/2. Among the degree-3 shapes of N = 3 exactly one direction
//! is holomorphic, and it is the cube-root Vandermonde determinant of the
//! Laughlin wavefunction.

use crate::error::Error;
use crate::gaussian::GaussianRational;
use crate::linalg::Matrix;
use crate::monomial::VariableId;
use crate::operators::differentiate;
use crate::polynomial::Polynomial;
use crate::shapes::{coordinates, full_shape_basis, monomial_index, ShapeBasis};
use serde::Serialize;

/// dbar_j = (d/dt_j + i d/du_j) / 2, acting on d = 2 polynomials.
pub fn dbar(p: &Polynomial, particle: u32) -> Polynomial {
    let dt = differentiate(p, VariableId::new(0, particle));
    let du = differentiate(p, VariableId::new(1, particle));
    (&dt + &du.scale(&GaussianRational::i())).scale(&GaussianRational::from_ratio(1, 2))
}

/// True iff every dbar_j annihilates `p`.
pub fn is_holomorphic(p: &Polynomial, particles: u32) -> bool {
    (1..=particles).all(|j| dbar(p, j).is_zero())
}

/// prod_{j<k} (w_j - w_k) with w_j = t_j + i u_j.
pub fn vandermonde(particles: u32) -> Polynomial {
    let w = |j: u32| {
        &Polynomial::variable(VariableId::new(0, j))
            + &Polynomial::variable(VariableId::new(1, j)).scale(&GaussianRational::i())
    };
    let mut acc = Polynomial::one();
    for j in 1..=particles {
        for k in (j + 1)..=particles {
            acc = &acc * &(&w(j) - &w(k));
        }
    }
    acc
}

/// Basis of the holomorphic subspace of the span of `states`, as
/// canonical combinations in deterministic kernel order.
pub fn holomorphic_subspace(
    states: &[Polynomial],
    particles: u32,
) -> Result<Vec<Polynomial>, Error> {
    let mut images: Vec<Vec<Polynomial>> = Vec::new();
    for p in states {
        images.push((1..=particles).map(|j| dbar(p, j)).collect());
    }
    // stack the coordinate rows of all particle images
    let flat: Vec<Polynomial> = images.iter().flatten().cloned().collect();
    let index = monomial_index(&flat);
    let mut rows = Vec::new();
    for j in 0..particles as usize {
        for m in &index {
            rows.push(
                images
                    .iter()
                    .map(|per_particle| per_particle[j].coefficient(m))
                    .collect::<Vec<_>>(),
            );
        }
    }
    let matrix = if rows.is_empty() {
        Matrix::zeros(0, states.len())
    } else {
        Matrix::from_rows(rows)
    };
    matrix
        .kernel()
        .into_iter()
        .map(|coords| {
            let mut acc = Polynomial::zero();
            for (c, s) in coords.iter().zip(states) {
                acc = &acc + &s.scale(c);
            }
            acc.canonical_form()
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ShapeSummary {
    pub shell: u32,
    pub degree: u32,
    pub holomorphic: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LaughlinReport {
    pub particles: u32,
    pub dims: u32,
    pub shape_count: usize,
    pub shapes: Vec<ShapeSummary>,
    pub holomorphic_dimension: usize,
    pub holomorphic_shape: String,
    pub vandermonde_match: bool,
}

/// Shape census for N = 3, d = 2 and the identification of the unique
/// holomorphic degree-3 shape direction with the Vandermonde determinant.
pub fn laughlin_report() -> Result<LaughlinReport, Error> {
    let basis: ShapeBasis = full_shape_basis(3, 2, 4);
    if !basis.complete {
        return Err(Error::Inconsistent(
            "shape basis for N = 3, d = 2 did not close".into(),
        ));
    }
    let shapes: Vec<ShapeSummary> = basis
        .shapes
        .iter()
        .map(|s| ShapeSummary {
            shell: s.shell,
            degree: s.polynomial.degree().unwrap_or(0),
            holomorphic: is_holomorphic(&s.polynomial, 3),
        })
        .collect();
    let degree3: Vec<Polynomial> = basis
        .shapes
        .iter()
        .filter(|s| s.polynomial.degree() == Some(3))
        .map(|s| s.polynomial.clone())
        .collect();
    let holomorphic = holomorphic_subspace(&degree3, 3)?;
    let shape = holomorphic
        .first()
        .cloned()
        .unwrap_or_else(Polynomial::zero);
    let vand = vandermonde(3).canonical_form()?;
    let vandermonde_match = holomorphic.len() == 1 && shape == vand;
    Ok(LaughlinReport {
        particles: 3,
        dims: 2,
        shape_count: basis.shapes.len(),
        shapes,
        holomorphic_dimension: holomorphic.len(),
        holomorphic_shape: crate::text::format_polynomial(&shape),
        vandermonde_match,
    })
}

/// True iff `p` lies in the span of the degree-3 shapes of (3, 2); used
/// to confirm the Vandermonde determinant sits inside the shape space.
pub fn in_degree3_shape_span(p: &Polynomial) -> bool {
    let basis = full_shape_basis(3, 2, 4);
    let mut degree3: Vec<Polynomial> = basis
        .shapes
        .iter()
        .filter(|s| s.polynomial.degree() == Some(3))
        .map(|s| s.polynomial.clone())
        .collect();
    let index = {
        let mut all = degree3.clone();
        all.push(p.clone());
        monomial_index(&all)
    };
    let rows: Vec<Vec<GaussianRational>> = index
        .iter()
        .map(|m| degree3.iter().map(|q| q.coefficient(m)).collect())
        .collect();
    let target = coordinates(p, &index);
    degree3.clear();
    Matrix::from_rows(rows).solve(&target).is_some()
}
