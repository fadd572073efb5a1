use mpl_core::Rational;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A 1-form `a dv1 + b dv2` with coefficients evaluated at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneForm {
    pub dv1: Rational,
    pub dv2: Rational,
}

impl OneForm {
    pub fn dv1() -> Self {
        OneForm { dv1: Rational::one(), dv2: Rational::zero() }
    }

    pub fn dv2() -> Self {
        OneForm { dv1: Rational::zero(), dv2: Rational::one() }
    }

    /// `d(v1 v2) = v2 dv1 + v1 dv2`.
    pub fn d_product(v1: &Rational, v2: &Rational) -> Self {
        OneForm { dv1: v2.clone(), dv2: v1.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        OneForm { dv1: &self.dv1 * c, dv2: &self.dv2 * c }
    }

    /// Coefficient of `dv1 ∧ dv2`.
    pub fn wedge(&self, o: &OneForm) -> Rational {
        &self.dv1 * &o.dv2 - &self.dv2 * &o.dv1
    }
}

#[derive(Clone, Debug)]
pub struct FormCheck {
    pub points: Vec<(Rational, Rational)>,
    pub lhs: Vec<Rational>,
    pub rhs: Vec<Rational>,
    pub resampled: usize,
    pub holds: bool,
}

/// Both sides as `dv1 ∧ dv2` coefficients, or `None` at a pole.
pub fn form_sides(v1: &Rational, v2: &Rational) -> Option<(Rational, Rational)> {
    let one = Rational::one();
    let p = v1 * v2;
    if *v1 == one || *v2 == one || p == one {
        return None;
    }
    let a = OneForm::dv1().scale(&(&one / (&one - v1)));
    let b = OneForm::dv2().scale(&(&one / (&one - v2)));
    let dp = OneForm::d_product(v1, v2).scale(&(&one / (&one - &p)));
    let lhs = a.wedge(&b);
    let rhs = dp.wedge(&b) - dp.wedge(&a) + &one / (&one - &p);
    Some((lhs, rhs))
}

/// Checks the two-variable form identity at `points` seeded random rational points.
pub fn verify_form_identity(seed: u64, points: usize) -> FormCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = FormCheck { points: vec![], lhs: vec![], rhs: vec![], resampled: 0, holds: true };
    while out.points.len() < points {
        let mut draw = || {
            let n: i64 = rng.gen_range(-50..=50);
            let d: i64 = rng.gen_range(1..=50);
            Rational::new(BigInt::from(n), BigInt::from(d))
        };
        let (v1, v2) = (draw(), draw());
        match form_sides(&v1, &v2) {
            None => out.resampled += 1,
            Some((l, r)) => {
                out.holds &= l == r;
                out.points.push((v1, v2));
                out.lhs.push(l);
                out.rhs.push(r);
            }
        }
    }
    out
}
