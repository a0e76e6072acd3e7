use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::{Matrix, Rat, Subspace};

use super::algebra::AlgebraRef;
use super::morphism::AlgebraMorphism;
use super::present::algebra_from_multiplication;

/// Subspace of an algebra closed under multiplication by every element on
/// both sides.
#[derive(Clone, Debug)]
pub struct TwoSidedIdeal {
    parent: AlgebraRef,
    space: Subspace,
}

impl TwoSidedIdeal {
    /// Wrap a subspace after verifying two-sided closure.
    pub fn new(parent: AlgebraRef, space: Subspace) -> Result<Self> {
        if space.ambient_dim() != parent.dim() {
            return Err(Error::Dimension(format!(
                "ideal ambient {} vs algebra dimension {}",
                space.ambient_dim(),
                parent.dim()
            )));
        }
        for b in 0..parent.dim() {
            let eb = parent.unit_vector(b);
            for v in space.basis_vectors() {
                if !space.contains(&parent.multiply(&eb, &v))
                    || !space.contains(&parent.multiply(&v, &eb))
                {
                    return Err(Error::NotAnIdeal(format!(
                        "not closed under multiplication by {}",
                        parent.label(b)
                    )));
                }
            }
        }
        Ok(TwoSidedIdeal { parent, space })
    }

    /// Smallest two-sided ideal containing the given elements.
    pub fn generated_by(parent: AlgebraRef, elements: &[Vec<Rat>]) -> Self {
        let dim = parent.dim();
        let mut vecs: Vec<Vec<Rat>> = elements.to_vec();
        let mut space = Subspace::from_vectors(dim, &vecs);
        loop {
            let mut grew = false;
            let mut new_vecs = Vec::new();
            for v in &vecs {
                for b in 0..dim {
                    let eb = parent.unit_vector(b);
                    for w in [parent.multiply(&eb, v), parent.multiply(v, &eb)] {
                        if !space.contains(&w) {
                            new_vecs.push(w);
                        }
                    }
                }
            }
            if !new_vecs.is_empty() {
                vecs.extend(new_vecs);
                let bigger = Subspace::from_vectors(dim, &vecs);
                if bigger.dim() > space.dim() {
                    space = bigger;
                    grew = true;
                }
                vecs = space.basis_vectors();
            }
            if !grew {
                break;
            }
        }
        TwoSidedIdeal { parent, space }
    }

    pub fn zero(parent: AlgebraRef) -> Self {
        let dim = parent.dim();
        TwoSidedIdeal {
            parent,
            space: Subspace::zero(dim),
        }
    }

    pub fn parent(&self) -> &AlgebraRef {
        &self.parent
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Basis vectors rendered over the parent's labels.
    pub fn basis_labels(&self) -> Vec<String> {
        self.space
            .basis_vectors()
            .iter()
            .map(|v| self.parent.element_display(v))
            .collect()
    }
}

/// Quotient by a two-sided ideal, re-presented over its own Gabriel quiver.
///
/// Vertices of the quotient are the surviving idempotents; the projection
/// onto the new basis is returned as a surjective morphism.
pub fn factor_algebra(
    algebra: &AlgebraRef,
    ideal: &TwoSidedIdeal,
) -> Result<(AlgebraRef, AlgebraMorphism)> {
    if !algebra.same_algebra(ideal.parent()) {
        return Err(Error::Category(
            "ideal does not live in the algebra being factored".into(),
        ));
    }
    let dim = algebra.dim();
    let full = Subspace::full(dim);
    let q = full.quotient_coords(ideal.space())?;
    let new_dim = q.rank;

    let section = |x: &[Rat]| -> Vec<Rat> {
        let mut out = vec![Rat::zero(); dim];
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                for (j, s) in q.section.row(i).iter().enumerate() {
                    out[j] = &out[j] + c * s;
                }
            }
        }
        out
    };
    let mult = |x: &[Rat], y: &[Rat]| -> Vec<Rat> {
        q.map.apply(&algebra.multiply(&section(x), &section(y)))
    };

    let mut vertex_names = Vec::new();
    let mut idem_vecs = Vec::new();
    for v in 0..algebra.vertex_count() {
        let img = q.map.apply(&algebra.idempotent(v));
        if img.iter().any(|x| !x.is_zero()) {
            vertex_names.push(algebra.quiver().vertex_name(v).to_string());
            idem_vecs.push(img);
        }
    }

    let label_hint = |x: &[Rat]| -> Option<String> {
        let pulled = section(x);
        let nonzero: Vec<usize> = (0..dim).filter(|&i| !pulled[i].is_zero()).collect();
        match nonzero.as_slice() {
            [i] if pulled[*i].is_one() => Some(algebra.label(*i).to_string()),
            _ => None,
        }
    };

    let (quotient, to_final) =
        algebra_from_multiplication(vertex_names, idem_vecs, new_dim, &mult, &label_hint)?;
    let matrix = &to_final * &q.map;
    let morphism = AlgebraMorphism::new(algebra.clone(), quotient.clone(), matrix)?;
    debug_assert_eq!(quotient.dim(), dim - ideal.dim());
    Ok((quotient, morphism))
}

/// The radical as a two-sided ideal; convenience for tests and reports.
pub fn radical_ideal(algebra: &AlgebraRef) -> TwoSidedIdeal {
    TwoSidedIdeal {
        parent: algebra.clone(),
        space: algebra.radical(),
    }
}

/// Annihilator-style helper: the kernel of a morphism as an ideal.
pub fn kernel_ideal(morphism: &AlgebraMorphism) -> Result<TwoSidedIdeal> {
    TwoSidedIdeal::new(morphism.source().clone(), morphism.kernel())
}

pub fn ideal_from_matrix(parent: AlgebraRef, rows: Matrix) -> Result<TwoSidedIdeal> {
    TwoSidedIdeal::new(parent, Subspace::from_rows(&rows))
}
