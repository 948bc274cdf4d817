use super::VerifyError;

/// The piecewise angle bound behind the half-plane configuration check, as
/// a function of the endpoint angle `a` of the crossing boundary.
///
/// `phi2hat` is the critical visual angle, `tan(phi2hat/2) = 1/sinh(L)`.
/// First branch `2 atan(e^L tan(a/2))` on `[0, phi2hat/2]`, second branch
/// `acos(-sin(a) sinh(L) + cos(a))` on `[phi2hat/2, phi2hat]`; continuous,
/// strictly increasing, onto `[0, π]` with value π/2 at the breakpoint.
pub fn angle_case_function(a: f64, l: f64, phi2hat: f64) -> Result<f64, VerifyError> {
    if l <= 0.0 {
        return Err(VerifyError::ConfigInvalid {
            detail: format!("L = {l} must be positive"),
        });
    }
    let rel = ((phi2hat / 2.0).tan() * l.sinh() - 1.0).abs();
    if rel > 1e-9 {
        return Err(VerifyError::ConfigInvalid {
            detail: format!("tan(phi2hat/2) sinh(L) = 1 violated by {rel:.3e}"),
        });
    }
    if !(-1e-12..=phi2hat + 1e-12).contains(&a) {
        return Err(VerifyError::ConfigInvalid {
            detail: format!("a = {a} outside [0, phi2hat = {phi2hat}]"),
        });
    }
    let a = a.clamp(0.0, phi2hat);
    if a <= phi2hat / 2.0 {
        Ok(2.0 * (l.exp() * (a / 2.0).tan()).atan())
    } else {
        Ok((-a.sin() * l.sinh() + a.cos()).clamp(-1.0, 1.0).acos())
    }
}
