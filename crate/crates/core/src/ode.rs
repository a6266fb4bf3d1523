//! Fixed-step classical Runge-Kutta for second-order linear ODEs written as
//! `y = (f, f')`.

pub(crate) type State = [f64; 2];

/// Magnitude at which a linear solution is rescaled to stay finite.
const RESCALE_ABOVE: f64 = 1e150;

#[inline]
fn axpy(y: State, h: f64, k: State) -> State {
    [y[0] + h * k[0], y[1] + h * k[1]]
}

#[inline]
pub(crate) fn rk4_step<F>(rhs: &F, t: f64, y: State, h: f64) -> State
where
    F: Fn(f64, State) -> State,
{
    let k1 = rhs(t, y);
    let k2 = rhs(t + 0.5 * h, axpy(y, 0.5 * h, k1));
    let k3 = rhs(t + 0.5 * h, axpy(y, 0.5 * h, k2));
    let k4 = rhs(t + h, axpy(y, h, k3));
    [
        y[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
        y[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]),
    ]
}

/// Integrate a linear system from `t0` to `t1` in `steps` equal steps.
///
/// The solution is rescaled by positive factors whenever it grows large, so
/// only ratios and signs of the result are meaningful. `visit` sees every
/// intermediate state with its time.
pub(crate) fn integrate_linear<F, V>(
    rhs: F,
    t0: f64,
    t1: f64,
    steps: usize,
    mut y: State,
    mut visit: V,
) -> State
where
    F: Fn(f64, State) -> State,
    V: FnMut(f64, State),
{
    let h = (t1 - t0) / steps as f64;
    for k in 0..steps {
        let t = t0 + k as f64 * h;
        y = rk4_step(&rhs, t, y, h);
        let size = y[0].abs().max(y[1].abs());
        if size > RESCALE_ABOVE {
            y = [y[0] / size, y[1] / size];
        }
        visit(t0 + (k + 1) as f64 * h, y);
    }
    y
}

/// Number of equal steps of size close to `h` covering `span`.
pub(crate) fn step_count(span: f64, h: f64) -> usize {
    ((span.abs() / h).round() as usize).max(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_oscillator_fourth_order() {
        // f'' = -f, f(0) = 0, f'(0) = 1 -> sin t.
        let err = |steps: usize| {
            let y = integrate_linear(|_, y| [y[1], -y[0]], 0.0, 1.0, steps, [0.0, 1.0], |_, _| {});
            (y[0] - 1f64.sin()).abs()
        };
        let ratio = err(10) / err(20);
        assert!((14.0..18.0).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn rescaling_keeps_ratio() {
        // f'' = 400 f grows like e^{20 t}; over t in [0, 40] it would overflow.
        let y = integrate_linear(
            |_, y| [y[1], 400.0 * y[0]],
            0.0,
            40.0,
            40_000,
            [1.0, 20.0],
            |_, _| {},
        );
        assert!(y[0].is_finite() && y[1].is_finite());
        assert!((y[1] / y[0] - 20.0).abs() < 1e-9);
    }
}
