use super::GeomError;

/// Side length `C` of the hyperbolic triangle with angles `alpha`, `beta` and
/// an ideal (zero-angle) third vertex, from the hyperbolic cosine rule:
/// `cosh C = (cos α cos β + 1) / (sin α sin β)`.
pub fn ideal_triangle_side(alpha: f64, beta: f64) -> Result<f64, GeomError> {
    check_angles(alpha, beta)?;
    let c = (alpha.cos() * beta.cos() + 1.0) / (alpha.sin() * beta.sin());
    Ok(c.max(1.0).acosh())
}

/// Same side length through the sine form
/// `sinh C = (cos α + cos β) / (sin α sin β)`.
pub fn ideal_triangle_side_sinh(alpha: f64, beta: f64) -> Result<f64, GeomError> {
    check_angles(alpha, beta)?;
    Ok(((alpha.cos() + beta.cos()) / (alpha.sin() * beta.sin()))
        .asinh()
        .max(0.0))
}

/// Same side length through `tan(α/2) tan(β/2) = e^{-C}`.
pub fn ideal_triangle_tan_product(alpha: f64, beta: f64) -> Result<f64, GeomError> {
    check_angles(alpha, beta)?;
    Ok((-((alpha / 2.0).tan() * (beta / 2.0).tan()).ln()).max(0.0))
}

fn check_angles(alpha: f64, beta: f64) -> Result<(), GeomError> {
    // The boundary sum alpha + beta = pi is the degenerate triangle with
    // C = 0 (two right angles at an asymptotic pair); it is admitted.
    let sum = alpha + beta;
    if alpha <= 0.0 || beta <= 0.0 || sum > std::f64::consts::PI + 1e-12 {
        return Err(GeomError::IdealAngleSum { sum });
    }
    Ok(())
}

/// A solved triangle with one ideal vertex: the two finite angles and the
/// side connecting them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdealTriangleSolve {
    pub alpha: f64,
    pub beta: f64,
    pub c: f64,
}

impl IdealTriangleSolve {
    pub fn solve(alpha: f64, beta: f64) -> Result<Self, GeomError> {
        Ok(Self {
            alpha,
            beta,
            c: ideal_triangle_side(alpha, beta)?,
        })
    }
}
