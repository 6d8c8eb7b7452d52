use serde::{Deserialize, Serialize};

use super::{GroupElement, Root};
use crate::error::{Error, Result};
use crate::gf2::FieldElement;

/// Coordinates of x_a(t_a)·x_b(t_b)·x_{a+b}(t_ab)·x_{2a+b}(t_2ab).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnipotentCoords {
    pub t_a: FieldElement,
    pub t_b: FieldElement,
    pub t_ab: FieldElement,
    pub t_2ab: FieldElement,
}

impl UnipotentCoords {
    pub fn new(t_a: FieldElement, t_b: FieldElement, t_ab: FieldElement, t_2ab: FieldElement) -> Self {
        UnipotentCoords {
            t_a,
            t_b,
            t_ab,
            t_2ab,
        }
    }

    pub fn zero(m: u32) -> Self {
        let z = FieldElement::zero(m);
        Self::new(z, z, z, z)
    }

    pub fn compose(&self) -> GroupElement {
        GroupElement::x(Root::A, self.t_a)
            .mul(&GroupElement::x(Root::B, self.t_b))
            .mul(&GroupElement::x(Root::AB, self.t_ab))
            .mul(&GroupElement::x(Root::TwoAB, self.t_2ab))
    }

    /// Inverse of [`compose`](Self::compose) on U.
    pub fn of(u: &GroupElement) -> Result<Self> {
        if !u.is_unipotent_upper() {
            return Err(Error::NotInBorel);
        }
        let g = u.matrix();
        let (a, b, c) = (g[0][1], g[1][2], g[1][3]);
        Ok(Self::new(a, b, c, g[0][3] + a * c))
    }
}

/// b = u·h(z1, z2) for b upper triangular.
pub fn unipotent_decompose(
    b: &GroupElement,
) -> Result<(UnipotentCoords, FieldElement, FieldElement)> {
    if !b.is_upper_triangular() {
        return Err(Error::NotInBorel);
    }
    let g = b.matrix();
    let (z1, z2) = (g[0][0], g[1][1]);
    let h = GroupElement::h(z1, z2)?;
    let u = b.mul(&h.inverse());
    Ok((UnipotentCoords::of(&u)?, z1, z2))
}
