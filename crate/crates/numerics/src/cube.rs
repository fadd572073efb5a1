use mpl_core::{LiSymbol, Symbol};

use crate::NumError;

/// A double-precision quadrature value with an error estimate from successive step sizes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CubeValue {
    pub re: f64,
    pub im: f64,
    pub err: f64,
}

#[derive(Clone, Copy)]
struct C64 {
    re: f64,
    im: f64,
}

impl C64 {
    fn mul(self, o: C64) -> C64 {
        C64 { re: self.re * o.re - self.im * o.im, im: self.re * o.im + self.im * o.re }
    }
    fn div(self, o: C64) -> C64 {
        let n = o.re * o.re + o.im * o.im;
        C64 { re: (self.re * o.re + self.im * o.im) / n, im: (self.im * o.re - self.re * o.im) / n }
    }
}

/// Layout of the integrand of a symbol in cube coordinates `t_j = u_j u_{j+1} ... u_w`.
struct Layout {
    /// exponent of `u_k` in the Jacobian divided by the `t_j` of the zero letters
    exps: Vec<i32>,
    /// (position of the block start, y_i = x_i ... x_m)
    blocks: Vec<(usize, C64, bool)>,
}

fn layout(s: &LiSymbol) -> Layout {
    let w = s.weight();
    let n = s.level() as f64;
    let m = s.depth();
    let mut suffix = vec![0u64; m + 1];
    for i in (0..m).rev() {
        suffix[i] = suffix[i + 1] + s.args()[i] as u64;
    }
    let mut exps: Vec<i32> = (0..w as i32).collect();
    let mut blocks = Vec::with_capacity(m);
    let mut pos = 0;
    for (i, &ni) in s.idx().iter().enumerate() {
        let k = suffix[i] % s.level() as u64;
        let th = 2.0 * std::f64::consts::PI * k as f64 / n;
        blocks.push((pos, C64 { re: th.cos(), im: th.sin() }, k == 0));
        for j in pos + 1..pos + ni as usize {
            // dt_j / t_j removes one power of u_j .. u_w
            for e in exps.iter_mut().skip(j) {
                *e -= 1;
            }
        }
        pos += ni as usize;
    }
    Layout { exps, blocks }
}

/// `1 - Π (1 - c_k)` computed from the complements.
fn one_minus_prod(cs: &[f64]) -> f64 {
    let l: f64 = cs.iter().map(|c| (-c).ln_1p()).sum();
    -l.exp_m1()
}

fn integrand(lay: &Layout, u: &[f64], c: &[f64]) -> C64 {
    let w = u.len();
    let mut jac = 1.0;
    for (k, &e) in lay.exps.iter().enumerate() {
        jac *= u[k].powi(e);
    }
    let mut v = C64 { re: jac, im: 0.0 };
    for &(p, y, is_one) in &lay.blocks {
        let t: f64 = u[p..w].iter().product();
        let den = if is_one {
            C64 { re: one_minus_prod(&c[p..w]), im: 0.0 }
        } else {
            C64 { re: 1.0 - y.re * t, im: -y.im * t }
        };
        v = v.mul(y.div(den));
    }
    v
}

/// The integrand of `Li_n(x)` over `[0,1]^w` at the point `u`.
pub fn cube_integrand(s: &LiSymbol, u: &[f64]) -> (f64, f64) {
    assert_eq!(u.len(), s.weight(), "point dimension must equal the weight");
    let lay = layout(s);
    let c: Vec<f64> = u.iter().map(|x| 1.0 - x).collect();
    let v = integrand(&lay, u, &c);
    (v.re, v.im)
}

/// tanh-sinh nodes on `[0,1]`: (x, 1 - x, weight).
fn nodes(h: f64) -> Vec<(f64, f64, f64)> {
    let half_pi = std::f64::consts::FRAC_PI_2;
    let kmax = (4.0 / h).ceil() as i64;
    let mut out = Vec::new();
    for k in -kmax..=kmax {
        let tau = k as f64 * h;
        let a = half_pi * tau.sinh();
        let x = 1.0 / (1.0 + (-2.0 * a).exp());
        let cx = 1.0 / (1.0 + (2.0 * a).exp());
        let wt = h * half_pi * tau.cosh() / (2.0 * a.cosh().powi(2));
        if wt > 0.0 && x > 0.0 && cx > 0.0 {
            out.push((x, cx, wt));
        }
    }
    out
}

fn quadrature(lay: &Layout, w: usize, h: f64) -> C64 {
    let nd = nodes(h);
    let mut u = vec![0.0; w];
    let mut c = vec![0.0; w];
    let mut acc = C64 { re: 0.0, im: 0.0 };
    let mut idx = vec![0usize; w];
    loop {
        let mut wt = 1.0;
        for k in 0..w {
            let (x, cx, a) = nd[idx[k]];
            u[k] = x;
            c[k] = cx;
            wt *= a;
        }
        let v = integrand(lay, &u, &c);
        acc.re += wt * v.re;
        acc.im += wt * v.im;
        let mut k = 0;
        loop {
            if k == w {
                return acc;
            }
            idx[k] += 1;
            if idx[k] < nd.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Product tanh-sinh quadrature of the cube representation, weight at most 3.
/// The error estimate is the change between the last two step sizes.
pub fn eval_cube_integral(s: &LiSymbol, digits: usize) -> Result<CubeValue, NumError> {
    let w = s.weight();
    if w == 0 || w > 3 {
        return Err(NumError::CubeWeight(w));
    }
    if !s.is_admissible() {
        return Err(NumError::NotAdmissible(s.to_string()));
    }
    let lay = layout(s);
    let steps: &[f64] = if w == 3 { &[1.0 / 16.0, 1.0 / 32.0] } else { &[1.0 / 32.0, 1.0 / 64.0] };
    let a = quadrature(&lay, w, steps[0]);
    let b = quadrature(&lay, w, steps[1]);
    let err = (a.re - b.re).hypot(a.im - b.im);
    let tol = 10f64.powi(-(digits as i32));
    if err > tol {
        return Err(NumError::Tolerance(err));
    }
    Ok(CubeValue { re: b.re, im: b.im, err })
}
