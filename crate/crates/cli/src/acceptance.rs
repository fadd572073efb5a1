//! The acceptance suite behind `mpl selftest`: one outcome per criterion.

use std::time::Instant;

use mpl_core::{li_symbols, q, LiSymbol, LinComb};
use mpl_hopf::{coassociator, coproduct_li, coproduct_li_series, reduced_coproduct};
use mpl_numerics::{certify_comparison, eval_cube_integral, eval_lincomb, verify_form_identity, Evaluator};
use mpl_products::{delannoy, enumerate_generalized_shuffles};
use mpl_regularization::{compare, RegPoly, Regularizer};
use mpl_relations::{all_families, coideal_check, dimension_formulas, generate, quotient_dim, zagier_bound, Mode, Query};
use serde_json::{json, Value};

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub pass: bool,
    pub detail: String,
    pub seconds: f64,
}

impl Outcome {
    pub fn line(&self) -> String {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        format!("[{tag}] {} {}: {} ({:.2} s)", self.id, self.title, self.detail, self.seconds)
    }

    pub fn to_json(&self) -> Value {
        json!({"id": self.id, "title": self.title, "pass": self.pass, "detail": self.detail})
    }
}

fn timed(id: u8, title: &'static str, f: impl FnOnce() -> (bool, String)) -> Outcome {
    let t = Instant::now();
    let (pass, detail) = f();
    Outcome { id, title, pass, detail, seconds: t.elapsed().as_secs_f64() }
}

fn li(level: u32, idx: &[u32], args: &[u32]) -> LiSymbol {
    LiSymbol::new(level, idx.to_vec(), args.to_vec()).expect("valid symbol")
}

fn admissible(n: u32, w: u32) -> Vec<LiSymbol> {
    li_symbols(n, w, None).into_iter().filter(|s| s.is_admissible()).collect()
}

pub fn regularization_examples() -> Outcome {
    timed(1, "regularization examples", || {
        let reg = Regularizer::new(1, 3);
        let unit = |c| LinComb::from_term(LiSymbol::unit(1), c);
        let two = reg.stuffle(&li(1, &[1, 1], &[0, 0])).expect("weight 2");
        let want2 = RegPoly::from_coeffs(1, vec![LinComb::from_term(li(1, &[2], &[0]), q(-1, 2)), LinComb::new(1), unit(q(1, 2))]);
        let three = reg.stuffle(&li(1, &[1, 1, 1], &[0, 0, 0])).expect("weight 3");
        let want3 = RegPoly::from_coeffs(
            1,
            vec![
                LinComb::from_term(li(1, &[3], &[0]), q(1, 3)),
                LinComb::from_term(li(1, &[2], &[0]), q(1, 2)),
                LinComb::new(1),
                unit(q(-1, 6)),
            ],
        );
        (two == want2 && three == want3, format!("Li_(1,1)(1,1) -> {two}; Li_(1,1,1)(1,1,1) -> {three}"))
    })
}

pub fn comparison() -> Outcome {
    timed(2, "comparison of regularizations", || {
        let ev = Evaluator::new(30);
        let (mut total, mut exact, mut numeric) = (0, 0, 0);
        let mut worst: f64 = 0.0;
        for n in [1u32, 2, 3, 6] {
            let reg = Regularizer::new(n, 5);
            for w in 1..=5 {
                for s in li_symbols(n, w, None) {
                    let c = compare(&reg, &s).expect("within the regularizer bound");
                    total += 1;
                    if c.exact_equal {
                        exact += 1;
                        numeric += 1;
                        continue;
                    }
                    let cert = certify_comparison(&ev, &c).expect("evaluable");
                    worst = worst.max(cert.max_residual);
                    if cert.numeric_equal {
                        numeric += 1;
                    }
                }
            }
        }
        (
            exact == total,
            format!("{total} symbols; formally identical {exact}; equal at 30 digits {numeric} (largest residual {worst:.1e})"),
        )
    })
}

pub fn depth_graded_dims() -> Outcome {
    timed(3, "depth-graded dimensions", || {
        let dim = |p: u32, w: usize| {
            quotient_dim(&Query { level: p, weight: w, depth: Some(w), mode: Mode::DepthGraded, families: all_families() })
                .expect("small basis")
                .dim as u64
        };
        let mut pass = true;
        let mut parts = vec![];
        for p in [5u32, 7, 11] {
            let (got, want) = (dim(p, 2), dimension_formulas(p as u64).d22);
            pass &= got == want;
            parts.push(format!("(2,2) p={p}: {got}/{want}"));
        }
        for p in [7u32, 11] {
            let (got, want) = (dim(p, 3), dimension_formulas(p as u64).d33);
            pass &= got == want;
            parts.push(format!("(3,3) p={p}: {got}/{want}"));
        }
        (pass, format!("computed/expected {}", parts.join(", ")))
    })
}

pub fn weight_one_dims() -> Outcome {
    timed(4, "weight-one dimensions", || {
        let mut pass = true;
        let mut parts = vec![];
        for p in [5u32, 7, 11, 13] {
            let r = quotient_dim(&Query { level: p, weight: 1, depth: None, mode: Mode::ModTorsion, families: all_families() })
                .expect("small basis");
            let want = (p as usize - 1) / 2;
            pass &= r.dim == want;
            parts.push(format!("p={p}: {}/{want}", r.dim));
        }
        (pass, parts.join(", "))
    })
}

pub fn level_one_dims() -> Outcome {
    timed(5, "level-one dimensions", || {
        let bound = zagier_bound(8);
        let mut pass = true;
        let mut got = vec![];
        for w in 2..=8 {
            let r = quotient_dim(&Query { level: 1, weight: w, depth: None, mode: Mode::Exact, families: all_families() })
                .expect("small basis");
            pass &= r.dim as u64 == bound[w];
            got.push(r.dim.to_string());
        }
        let want: Vec<String> = bound[2..].iter().map(u64::to_string).collect();
        (pass, format!("w=2..8: [{}], bound [{}]", got.join(", "), want.join(", ")))
    })
}

pub fn numerical_vanishing() -> Outcome {
    timed(6, "numerical vanishing of relations", || {
        let ev = Evaluator::new(30);
        let (mut rows, mut bad) = (0, 0);
        let mut worst: f64 = 0.0;
        for n in 1..=6u32 {
            for w in 1..=4 {
                let reg = Regularizer::new(n, w);
                for r in generate(&reg, w, None, Mode::Exact, &all_families(), &mut vec![]) {
                    let v = eval_lincomb(&ev, &r.row).expect("evaluable").abs_f64();
                    rows += 1;
                    worst = worst.max(v);
                    if v >= 1e-25 {
                        bad += 1;
                    }
                }
            }
        }
        (bad == 0, format!("{rows} exact rows at N<=6, w<=4; {bad} above 1e-25; largest {worst:.1e}"))
    })
}

pub fn hopf_suite() -> Outcome {
    timed(7, "Hopf properties", || {
        let mut notes = vec![];
        let mut pass = true;
        let mut coassoc = 0;
        for n in [1u32, 5] {
            for w in 1..=4 {
                for s in admissible(n, w) {
                    coassoc += 1;
                    if !coassociator(&s).is_empty() {
                        pass = false;
                        notes.push(format!("not coassociative on {s}"));
                    }
                }
            }
        }
        let mut coideal_rows = 0;
        for (n, max_w) in [(1u32, 5usize), (2, 5), (3, 4), (5, 3)] {
            for w in 2..=max_w {
                let c = coideal_check(n, w).expect("small basis");
                coideal_rows += c.rows;
                if !c.failures.is_empty() {
                    pass = false;
                    notes.push(format!("coideal fails at N={n}, w={w} ({} rows)", c.failures.len()));
                }
            }
        }
        let mut consistent = 0;
        for n in [1u32, 2, 3, 5] {
            for w in 1..=4 {
                for s in admissible(n, w) {
                    consistent += 1;
                    let a = coproduct_li_series(&s, 4).expect("within cutoff").canonical();
                    if !a.sub(&coproduct_li(&s).canonical()).is_empty() {
                        pass = false;
                        notes.push(format!("series and words differ on {s}"));
                    }
                }
            }
        }
        let mut primitive = 0;
        for p in [5u32, 7] {
            for w in 1..=5 {
                for k in 1..p {
                    primitive += 1;
                    if !reduced_coproduct(&coproduct_li(&li(p, &[w], &[k])).canonical()).is_empty() {
                        pass = false;
                        notes.push(format!("Li_{w}(ζ_{p}^{k}) is not primitive"));
                    }
                }
            }
        }
        notes.truncate(3);
        let mut detail = format!(
            "coassociative on {coassoc} symbols, coideal over {coideal_rows} rows, series = words on {consistent} symbols, {primitive} primitive classical polylogs"
        );
        if !notes.is_empty() {
            detail += &format!("; {}", notes.join("; "));
        }
        (pass, detail)
    })
}

pub fn forms_and_cube(seed: u64) -> Outcome {
    timed(8, "form identity and cube integrals", || {
        let f = verify_form_identity(seed, 20);
        let ev = Evaluator::new(20);
        let symbols = [
            li(1, &[2], &[0]),
            li(2, &[1], &[1]),
            li(3, &[2], &[1]),
            li(2, &[3], &[1]),
            li(1, &[1, 2], &[0, 0]),
            li(5, &[1, 1], &[2, 1]),
            li(6, &[1, 1], &[1, 4]),
            li(4, &[2, 1], &[1, 2]),
            li(6, &[1, 1, 1], &[1, 2, 3]),
            li(3, &[1, 2], &[2, 0]),
        ];
        let mut worst: f64 = 0.0;
        let mut ok = true;
        for s in &symbols {
            match (eval_cube_integral(s, 10), ev.eval_li(s)) {
                (Ok(c), Ok(v)) => worst = worst.max((c.re - v.re_f64()).hypot(c.im - v.im_f64())),
                _ => ok = false,
            }
        }
        let pass = f.holds && f.points.len() == 20 && ok && worst < 1e-10;
        (pass, format!("form identity at {} points: {}; cube vs series on {} symbols, largest gap {worst:.1e}", f.points.len(), f.holds, symbols.len()))
    })
}

pub fn delannoy_counts() -> Outcome {
    timed(9, "generalized shuffle counts", || {
        let mut pass = delannoy(1, 1) == 3;
        for p in 0..=5 {
            for q in 0..=5 {
                pass &= enumerate_generalized_shuffles(p, q).len() as u128 == delannoy(p, q);
            }
        }
        (pass, format!("p, q <= 5 match Delannoy numbers; D(1,1) = {}, D(5,5) = {}", delannoy(1, 1), delannoy(5, 5)))
    })
}

pub fn run_all(seed: u64) -> Vec<Outcome> {
    vec![
        regularization_examples(),
        comparison(),
        depth_graded_dims(),
        weight_one_dims(),
        level_one_dims(),
        numerical_vanishing(),
        hopf_suite(),
        forms_and_cube(seed),
        delannoy_counts(),
    ]
}
