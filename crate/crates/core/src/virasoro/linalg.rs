//! Fraction-free elimination for the bilinear forms `x · G⁻¹ · y`.

use heunblock_algebra::{AlgebraError, Ring};

/// `Σ x_λ (G⁻¹)_{λμ} y_μ`, or `None` when `G` is singular.
///
/// Runs Bareiss elimination on the bordered matrix `[[G, y], [xᵀ, 0]]`;
/// the last two pivots are `±det G` and `±det` of the bordered matrix,
/// whose ratio is `−x·G⁻¹·y`.
pub fn inverse_form<C: Ring>(g: &[Vec<C>], x: &[C], y: &[C]) -> Result<Option<C>, AlgebraError> {
    let n = g.len();
    if n == 0 {
        return Ok(Some(C::zero()));
    }
    let mut m: Vec<Vec<C>> = Vec::with_capacity(n + 1);
    for (i, row) in g.iter().enumerate() {
        let mut r = row.clone();
        r.push(y[i].clone());
        m.push(r);
    }
    let mut last = x.to_vec();
    last.push(C::zero());
    m.push(last);

    let mut prev = C::one();
    for k in 0..n {
        // Pivot search stays inside the G block so that the leading minors
        // remain those of G.
        let pivot = match (k..n).find(|&i| !m[i][k].is_zero()) {
            Some(p) => p,
            None => return Ok(None),
        };
        m.swap(k, pivot);
        for i in k + 1..=n {
            for j in k + 1..=n {
                let v = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.try_div(&prev)?;
            }
            m[i][k] = C::zero();
        }
        prev = m[k][k].clone();
    }
    let det_g = &m[n - 1][n - 1];
    let det_b = &m[n][n];
    Ok(Some(det_b.neg().try_div(det_g)?))
}

/// Determinant by the same elimination.
pub fn determinant<C: Ring>(g: &[Vec<C>]) -> Result<C, AlgebraError> {
    let n = g.len();
    if n == 0 {
        return Ok(C::one());
    }
    let mut m = g.to_vec();
    let mut prev = C::one();
    let mut sign = false;
    for k in 0..n {
        let pivot = match (k..n).find(|&i| !m[i][k].is_zero()) {
            Some(p) => p,
            None => return Ok(C::zero()),
        };
        if pivot != k {
            m.swap(k, pivot);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.try_div(&prev)?;
            }
            m[i][k] = C::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if sign { d.neg() } else { d })
}
