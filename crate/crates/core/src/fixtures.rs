//! Standard small examples.

use crate::error::Result;
use crate::exact::{int, Matrix, Scalar};
use crate::lie::{LieAlgebra, Representation};

/// `sl(2)` in the basis `(h, e, f)`: `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_brackets(&["h", "e", "f"], &[(0, 1, 1, int(2)), (0, 2, 2, int(-2)), (1, 2, 0, int(1))])
        .expect("sl2 is a Lie algebra")
}

/// Upper Borel subalgebra `span(h, e)` of `sl(2)`.
pub fn borel() -> LieAlgebra {
    LieAlgebra::from_brackets(&["h", "e"], &[(0, 1, 1, int(2))]).expect("Lie algebra")
}

/// Two-dimensional non-abelian algebra `[e0, e1] = e0`.
pub fn aff1() -> LieAlgebra {
    LieAlgebra::from_brackets(&["e0", "e1"], &[(0, 1, 0, int(1))]).expect("Lie algebra")
}

/// `gl(2)` in the basis of matrix units `E11, E12, E21, E22`.
pub fn gl2() -> LieAlgebra {
    let units = gl2_units();
    let mut table = Vec::new();
    for a in 0..4 {
        for b in a + 1..4 {
            let br = units[a].commutator(&units[b]).expect("square");
            for (k, u) in units.iter().enumerate() {
                let (i, j) = (k / 2, k % 2);
                if br[(i, j)] != int(0) && u[(i, j)] == int(1) {
                    table.push((a, b, k, br[(i, j)].clone()));
                }
            }
        }
    }
    LieAlgebra::from_brackets(&["E11", "E12", "E21", "E22"], &table).expect("gl2 is a Lie algebra")
}

/// The matrix units `E11, E12, E21, E22`.
pub fn gl2_units() -> Vec<Matrix> {
    (0..4)
        .map(|k| {
            let mut m = Matrix::zeros(2, 2);
            m[(k / 2, k % 2)] = int(1);
            m
        })
        .collect()
}

/// Defining two-dimensional module of `sl(2)`: `h v0 = v0`, `f v0 = v1`,
/// `e v1 = v0`, `h v1 = -v1`.
pub fn sl2_fundamental() -> Representation {
    let h = Matrix::from_ints(&[&[1, 0], &[0, -1]]);
    let e = Matrix::from_ints(&[&[0, 1], &[0, 0]]);
    let f = Matrix::from_ints(&[&[0, 0], &[1, 0]]);
    Representation::from_matrices(&sl2(), &[h, e, f]).expect("sl2 module")
}

/// Defining module of `gl(2)`.
pub fn gl2_fundamental() -> Representation {
    Representation::from_matrices(&gl2(), &gl2_units()).expect("gl2 module")
}

/// The family `O(v0) = c1 h + c2 f`, `O(v1) = c1 f` from the defining module
/// into `sl(2)`.
pub fn sl2_o_family_a(c1: &Scalar, c2: &Scalar) -> Matrix {
    let mut o = Matrix::zeros(3, 2);
    o[(0, 0)] = c1.clone();
    o[(2, 0)] = c2.clone();
    o[(2, 1)] = c1.clone();
    o
}

/// The family `O(v0) = c3 e`, `O(v1) = -c3 h + c4 e`.
pub fn sl2_o_family_b(c3: &Scalar, c4: &Scalar) -> Matrix {
    let mut o = Matrix::zeros(3, 2);
    o[(1, 0)] = c3.clone();
    o[(0, 1)] = -c3;
    o[(1, 1)] = c4.clone();
    o
}

/// Inclusion `sl(2) → gl(2)`: `h ↦ E11 - E22`, `e ↦ E12`, `f ↦ E21`.
pub fn sl2_into_gl2() -> Matrix {
    Matrix::from_ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, 0, 0]])
}

/// Inclusion of the Borel subalgebra into `sl(2)`.
pub fn borel_into_sl2() -> Matrix {
    Matrix::from_ints(&[&[1, 0], &[0, 1], &[0, 0]])
}

/// `r = h ∧ e = h⊗e - e⊗h` on `sl(2)`, a solution of the classical
/// Yang-Baxter equation.
pub fn sl2_r_he() -> Matrix {
    Matrix::from_ints(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]])
}

/// Conjugation `X ↦ g X g⁻¹` on `gl(2)` in the matrix-unit basis.
pub fn gl2_conjugation(g: &Matrix) -> Result<Matrix> {
    let gi = g.inverse()?;
    let units = gl2_units();
    let mut phi = Matrix::zeros(4, 4);
    for (col, u) in units.iter().enumerate() {
        let img = Matrix::chain(&[g, u, &gi])?;
        for k in 0..4 {
            phi[(k, col)] = img[(k / 2, k % 2)].clone();
        }
    }
    Ok(phi)
}
