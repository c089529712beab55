use super::{Family, FamilySpec};
use crate::error::Result;
use crate::quadrature::{integrate_1d_dual, integrate_cube, QuadConfig, QuadResult};

/// Evaluates a pendant through its defining integral.
///
/// Two variables use the adaptive 1-D engine on `[0, 1]`; `k > 2` variables
/// use the cube `[0, 1]^{k-1}` with weights `t₁, …, t_{k-1}, 1 - Σtᵢ`.
/// For Add2, Log1 and Log2 with `k > 2` this integral is the definition.
pub fn pendant_integral(spec: FamilySpec, point: &[f64], config: &QuadConfig) -> Result<QuadResult> {
    spec.check_point(point)?;
    let shifted: Vec<f64> = point.iter().map(|x| x - 1.0).collect();

    if spec.arity == 2 {
        let (x, y) = (point[0], point[1]);
        let (a, b) = (shifted[0], shifted[1]);
        return match spec.family {
            Family::EulerExp => integrate_1d_dual(|t, s| t.powf(a) * s.powf(b), config),
            Family::Mult => {
                let (la, lb) = (a.ln(), b.ln());
                integrate_1d_dual(|t, s| (t * la + s * lb).exp(), config)
            }
            Family::Add1 => integrate_1d_dual(|t, s| t * a * (s * b), config),
            Family::Add2 => integrate_1d_dual(|t, s| t * a + s * b, config),
            Family::Log1 => {
                let (la, lb) = (a.ln(), b.ln());
                integrate_1d_dual(|t, s| t * la * (s * lb), config)
            }
            Family::Log2 => {
                let (la, lb) = (a.ln(), b.ln());
                integrate_1d_dual(|t, s| t * la + s * lb, config)
            }
            Family::SineAdd => {
                let (sx, cx, sy, cy) = (x.sin(), x.cos(), y.sin(), y.cos());
                integrate_1d_dual(|t, s| t * sx * cy + s * sy * cx, config)
            }
        };
    }

    let dim = spec.arity - 1;
    let (&last, head) = shifted.split_last().unwrap();
    match spec.family {
        Family::Mult => {
            let logs: Vec<f64> = head.iter().map(|a| a.ln()).collect();
            let ll = last.ln();
            integrate_cube(
                |t: &[f64]| {
                    let rest = 1.0 - t.iter().sum::<f64>();
                    (t.iter().zip(&logs).map(|(t, l)| t * l).sum::<f64>() + rest * ll).exp()
                },
                dim,
                config,
            )
        }
        Family::Add1 | Family::Log1 => {
            let factors = coordinates(spec.family, head, last);
            let (head, last) = (&factors[..dim], factors[dim]);
            integrate_cube(
                |t: &[f64]| {
                    let rest = 1.0 - t.iter().sum::<f64>();
                    t.iter().zip(head).map(|(t, a)| t * a).product::<f64>() * rest * last
                },
                dim,
                config,
            )
        }
        Family::Add2 | Family::Log2 => {
            let terms = coordinates(spec.family, head, last);
            let (head, last) = (&terms[..dim], terms[dim]);
            integrate_cube(
                |t: &[f64]| {
                    let rest = 1.0 - t.iter().sum::<f64>();
                    t.iter().zip(head).map(|(t, a)| t * a).sum::<f64>() + rest * last
                },
                dim,
                config,
            )
        }
        // Arity is capped at 2 for these by FamilySpec.
        Family::EulerExp | Family::SineAdd => unreachable!("arity checked by FamilySpec"),
    }
}

/// Shifted coordinates `xᵢ - 1`, or their logarithms for the Log families.
fn coordinates(family: Family, head: &[f64], last: f64) -> Vec<f64> {
    let all = head.iter().copied().chain(std::iter::once(last));
    match family {
        Family::Log1 | Family::Log2 => all.map(f64::ln).collect(),
        _ => all.collect(),
    }
}
