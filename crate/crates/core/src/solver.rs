//! Shared optimization back-ends: a symmetric positive-definite solve for
//! low-dimensional M-steps, limited-memory quasi-Newton minimization for
//! high-dimensional sparse objectives, and a finite-difference gradient
//! checker used as the ground truth for hand-derived gradients.

use nalgebra::{Cholesky, DMatrix, DVector};

use crate::error::Error;
use crate::Result;

/// A ridge-regularized quadratic minimization `min_w 1/2 w' (G + R) w - rhs' w`
/// written as the normal equations `(G + R) w = rhs`, with `G` the data Gram
/// matrix and `R = diag(ridge)`.
///
/// Per-coordinate ridge entries let the offset coordinate stay unregularized
/// (its ridge entry is zero); positive entries elsewhere keep the system
/// positive definite.
#[derive(Debug, Clone)]
pub struct QuadraticProblem {
    pub gram: DMatrix<f64>,
    pub rhs: DVector<f64>,
    pub ridge: Vec<f64>,
}

impl QuadraticProblem {
    pub fn dim(&self) -> usize {
        self.rhs.len()
    }

    fn system_matrix(&self) -> DMatrix<f64> {
        let mut a = self.gram.clone();
        for (d, r) in self.ridge.iter().enumerate() {
            a[(d, d)] += r;
        }
        a
    }

    fn residual_norm(&self, x: &DVector<f64>) -> f64 {
        let a = self.system_matrix();
        (&a * x - &self.rhs).norm()
    }
}

/// Solution of a [`QuadraticProblem`].
#[derive(Debug, Clone)]
pub struct Solve {
    pub x: Vec<f64>,
    /// True when the Cholesky factorization failed (numerically indefinite
    /// system) and the quasi-Newton fallback produced the answer.
    pub fell_back: bool,
}

/// Solves the normal equations via a Cholesky factorization plus iterative
/// refinement. Never forms an explicit inverse. On factorization failure the
/// quasi-Newton path takes over and the result is flagged.
pub fn solve_normal_equations(p: &QuadraticProblem) -> Result<Solve> {
    let n = p.dim();
    if p.gram.nrows() != n || p.gram.ncols() != n || p.ridge.len() != n {
        return Err(Error::dim(format!(
            "normal equations: gram {}x{}, rhs {}, ridge {}",
            p.gram.nrows(),
            p.gram.ncols(),
            n,
            p.ridge.len()
        )));
    }
    let a = p.system_matrix();
    match Cholesky::new(a.clone()) {
        Some(chol) => {
            let mut x = chol.solve(&p.rhs);
            // A couple of refinement sweeps squeeze out conditioning noise.
            let rhs_norm = p.rhs.norm();
            for _ in 0..3 {
                let resid = &p.rhs - &a * &x;
                if resid.norm() <= 1e-10 * rhs_norm.max(1e-300) {
                    break;
                }
                x += chol.solve(&resid);
            }
            Ok(Solve { x: x.as_slice().to_vec(), fell_back: false })
        }
        None => {
            log::warn!("normal-equation factorization failed; falling back to L-BFGS");
            let obj = QuadraticObjective { a: &a, b: &p.rhs };
            let opts = LbfgsOptions { tol: 1e-10, max_iter: 10 * n.max(100), ..Default::default() };
            let res = minimize_lbfgs(&obj, &vec![0.0; n], &opts);
            if !res.value.is_finite() {
                return Err(Error::Numeric("quadratic fallback diverged".into()));
            }
            Ok(Solve { x: res.x, fell_back: true })
        }
    }
}

struct QuadraticObjective<'a> {
    a: &'a DMatrix<f64>,
    b: &'a DVector<f64>,
}

impl SmoothObjective for QuadraticObjective<'_> {
    fn dim(&self) -> usize {
        self.b.len()
    }

    fn eval(&self, x: &[f64], grad: &mut [f64]) -> f64 {
        let xv = DVector::from_column_slice(x);
        let ax = self.a * &xv;
        let g = &ax - self.b;
        grad.copy_from_slice(g.as_slice());
        0.5 * xv.dot(&ax) - self.b.dot(&xv)
    }
}

/// A differentiable objective: fills `grad` and returns the value at `x`.
pub trait SmoothObjective {
    fn dim(&self) -> usize;
    fn eval(&self, x: &[f64], grad: &mut [f64]) -> f64;
}

/// Knobs for [`minimize_lbfgs`].
#[derive(Debug, Clone)]
pub struct LbfgsOptions {
    /// History size of the two-loop recursion.
    pub memory: usize,
    /// Stop when the gradient infinity norm drops below this.
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for LbfgsOptions {
    fn default() -> Self {
        LbfgsOptions { memory: 10, tol: 1e-5, max_iter: 200 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LbfgsStatus {
    /// Gradient tolerance reached.
    Converged,
    /// Iteration budget exhausted.
    MaxIter,
    /// Backtracking could not find a decrease; best iterate returned.
    LineSearchFailed,
}

#[derive(Debug, Clone)]
pub struct LbfgsResult {
    pub x: Vec<f64>,
    pub value: f64,
    pub grad_inf_norm: f64,
    pub iterations: usize,
    pub status: LbfgsStatus,
}

/// Limited-memory BFGS with an Armijo backtracking line search.
///
/// Accepted iterates are monotone nonincreasing in objective value, so the
/// result never has a value above `f(x0)`.
pub fn minimize_lbfgs(
    obj: &impl SmoothObjective,
    x0: &[f64],
    opts: &LbfgsOptions,
) -> LbfgsResult {
    let n = obj.dim();
    debug_assert_eq!(x0.len(), n);
    let mut x = x0.to_vec();
    let mut grad = vec![0.0; n];
    let mut f = obj.eval(&x, &mut grad);

    let mut s_hist: Vec<Vec<f64>> = Vec::new();
    let mut y_hist: Vec<Vec<f64>> = Vec::new();
    let mut rho_hist: Vec<f64> = Vec::new();

    let inf_norm = |v: &[f64]| v.iter().fold(0.0_f64, |m, &g| m.max(g.abs()));
    let mut status = LbfgsStatus::MaxIter;
    let mut iterations = 0;

    for iter in 0..opts.max_iter {
        iterations = iter;
        if inf_norm(&grad) <= opts.tol {
            status = LbfgsStatus::Converged;
            break;
        }

        // Two-loop recursion for the search direction.
        let mut q = grad.clone();
        let m = s_hist.len();
        let mut alphas = vec![0.0; m];
        for i in (0..m).rev() {
            let a = rho_hist[i] * dot(&s_hist[i], &q);
            alphas[i] = a;
            axpy(&mut q, -a, &y_hist[i]);
        }
        // Scale the initial Hessian by the most recent curvature pair.
        if let (Some(s), Some(y)) = (s_hist.last(), y_hist.last()) {
            let sy = dot(s, y);
            let yy = dot(y, y);
            if yy > 0.0 {
                let scale = sy / yy;
                for v in q.iter_mut() {
                    *v *= scale;
                }
            }
        }
        for i in 0..m {
            let b = rho_hist[i] * dot(&y_hist[i], &q);
            axpy(&mut q, alphas[i] - b, &s_hist[i]);
        }
        let mut dir: Vec<f64> = q.iter().map(|v| -v).collect();
        let mut slope = dot(&grad, &dir);
        if !slope.is_finite() || slope >= 0.0 {
            // Not a descent direction; restart from steepest descent.
            dir = grad.iter().map(|g| -g).collect();
            slope = -dot(&grad, &grad);
            s_hist.clear();
            y_hist.clear();
            rho_hist.clear();
        }

        // Armijo backtracking.
        let mut step = if s_hist.is_empty() {
            // First step: conservative scaling by the gradient magnitude.
            (1.0 / inf_norm(&grad).max(1.0)).min(1.0)
        } else {
            1.0
        };
        let mut x_new = vec![0.0; n];
        let mut grad_new = vec![0.0; n];
        let mut accepted = false;
        for _ in 0..60 {
            for i in 0..n {
                x_new[i] = x[i] + step * dir[i];
            }
            let f_new = obj.eval(&x_new, &mut grad_new);
            if f_new.is_finite() && f_new <= f + 1e-4 * step * slope {
                // Curvature pair from the accepted step.
                let s: Vec<f64> = (0..n).map(|i| x_new[i] - x[i]).collect();
                let y: Vec<f64> = (0..n).map(|i| grad_new[i] - grad[i]).collect();
                let sy = dot(&s, &y);
                if sy > 1e-10 * norm2(&s) * norm2(&y) {
                    if s_hist.len() == opts.memory {
                        s_hist.remove(0);
                        y_hist.remove(0);
                        rho_hist.remove(0);
                    }
                    rho_hist.push(1.0 / sy);
                    s_hist.push(s);
                    y_hist.push(y);
                }
                x.copy_from_slice(&x_new);
                grad.copy_from_slice(&grad_new);
                f = f_new;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if !accepted {
            log::warn!("L-BFGS line search failed at iteration {iter}; returning best iterate");
            status = LbfgsStatus::LineSearchFailed;
            break;
        }
    }

    if status == LbfgsStatus::MaxIter && inf_norm(&grad) <= opts.tol {
        status = LbfgsStatus::Converged;
    }
    LbfgsResult { value: f, grad_inf_norm: inf_norm(&grad), iterations, status, x }
}

/// Central-difference gradient check. Returns the maximum relative error over
/// coordinates, with denominator `max(|analytic|, |numeric|, 1e-8)`.
pub fn check_gradient(obj: &impl SmoothObjective, x: &[f64], h: f64) -> f64 {
    let n = obj.dim();
    let mut grad = vec![0.0; n];
    obj.eval(x, &mut grad);
    let mut scratch = vec![0.0; n];
    let mut pt = x.to_vec();
    let mut worst = 0.0_f64;
    for i in 0..n {
        pt[i] = x[i] + h;
        let fp = obj.eval(&pt, &mut scratch);
        pt[i] = x[i] - h;
        let fm = obj.eval(&pt, &mut scratch);
        pt[i] = x[i];
        let numeric = (fp - fm) / (2.0 * h);
        let denom = grad[i].abs().max(numeric.abs()).max(1e-8);
        worst = worst.max((grad[i] - numeric).abs() / denom);
    }
    worst
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

fn norm2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

fn axpy(y: &mut [f64], a: f64, x: &[f64]) {
    for (yi, xi) in y.iter_mut().zip(x.iter()) {
        *yi += a * xi;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_system() {
        // gram=I (ridge already folded in by the caller), rhs=(3,4) -> (3,4).
        let p = QuadraticProblem {
            gram: DMatrix::identity(2, 2),
            rhs: DVector::from_column_slice(&[3.0, 4.0]),
            ridge: vec![0.0, 0.0],
        };
        let s = solve_normal_equations(&p).unwrap();
        assert!(!s.fell_back);
        assert!((s.x[0] - 3.0).abs() < 1e-12 && (s.x[1] - 4.0).abs() < 1e-12);
    }

    #[test]
    fn one_dimensional_m_step_matches_hand_computation() {
        // Single example, one feature: ((2/c^2) + gamma * E[x~^2]) w = gamma * yh * mu.
        let (c, gamma, mu, var, yh) = (2.0_f64, 0.7, 1.5, 0.9, 1.3);
        let e_xx = mu * mu + var;
        let p = QuadraticProblem {
            gram: DMatrix::from_element(1, 1, gamma * e_xx),
            rhs: DVector::from_element(1, gamma * yh * mu),
            ridge: vec![2.0 / (c * c)],
        };
        let s = solve_normal_equations(&p).unwrap();
        let hand = gamma * yh * mu / (2.0 / (c * c) + gamma * e_xx);
        assert!((s.x[0] - hand).abs() < 1e-14);
    }

    #[test]
    fn random_spd_residual_small() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let n = 20;
        let b = DMatrix::from_fn(n, n, |_, _| rng.random::<f64>() - 0.5);
        let gram = &b * b.transpose();
        let rhs = DVector::from_fn(n, |_, _| rng.random::<f64>() - 0.5);
        let p = QuadraticProblem { gram, rhs: rhs.clone(), ridge: vec![0.5; n] };
        let s = solve_normal_equations(&p).unwrap();
        let x = DVector::from_column_slice(&s.x);
        assert!(p.residual_norm(&x) <= 1e-8 * rhs.norm());
    }

    struct Bowl {
        target: Vec<f64>,
    }

    impl SmoothObjective for Bowl {
        fn dim(&self) -> usize {
            self.target.len()
        }
        fn eval(&self, x: &[f64], grad: &mut [f64]) -> f64 {
            let mut f = 0.0;
            for i in 0..x.len() {
                let d = x[i] - self.target[i];
                f += d * d;
                grad[i] = 2.0 * d;
            }
            f
        }
    }

    #[test]
    fn quadratic_bowl_converges() {
        let obj = Bowl { target: vec![1.0, 2.0, 3.0] };
        let res = minimize_lbfgs(&obj, &[0.0; 3], &LbfgsOptions { tol: 1e-9, ..Default::default() });
        assert_eq!(res.status, LbfgsStatus::Converged);
        for (xi, ti) in res.x.iter().zip(obj.target.iter()) {
            assert!((xi - ti).abs() < 1e-6);
        }
    }

    struct Rosenbrock;

    impl SmoothObjective for Rosenbrock {
        fn dim(&self) -> usize {
            2
        }
        fn eval(&self, x: &[f64], grad: &mut [f64]) -> f64 {
            let (a, b) = (x[0], x[1]);
            grad[0] = -2.0 * (1.0 - a) - 400.0 * a * (b - a * a);
            grad[1] = 200.0 * (b - a * a);
            (1.0 - a).powi(2) + 100.0 * (b - a * a).powi(2)
        }
    }

    #[test]
    fn rosenbrock_standard_start() {
        let res = minimize_lbfgs(
            &Rosenbrock,
            &[-1.2, 1.0],
            &LbfgsOptions { tol: 1e-10, max_iter: 2000, ..Default::default() },
        );
        assert!((res.x[0] - 1.0).abs() < 1e-4 && (res.x[1] - 1.0).abs() < 1e-4);
    }

    #[test]
    fn lbfgs_never_goes_above_start() {
        let obj = Bowl { target: vec![5.0; 4] };
        let mut g = vec![0.0; 4];
        let f0 = obj.eval(&[0.0; 4], &mut g);
        let res = minimize_lbfgs(&obj, &[0.0; 4], &LbfgsOptions::default());
        assert!(res.value <= f0);
    }

    #[test]
    fn gradient_check_exact_for_quadratic() {
        let obj = Bowl { target: vec![0.3, -0.7] };
        assert!(check_gradient(&obj, &[1.0, 2.0], 1e-5) <= 1e-6);
    }

    struct CorruptedBowl;

    impl SmoothObjective for CorruptedBowl {
        fn dim(&self) -> usize {
            2
        }
        fn eval(&self, x: &[f64], grad: &mut [f64]) -> f64 {
            grad[0] = 2.0 * x[0] * 2.0; // deliberately doubled
            grad[1] = 2.0 * x[1];
            x[0] * x[0] + x[1] * x[1]
        }
    }

    #[test]
    fn gradient_check_detects_corruption() {
        assert!(check_gradient(&CorruptedBowl, &[1.0, 1.0], 1e-5) >= 0.3);
    }
}
