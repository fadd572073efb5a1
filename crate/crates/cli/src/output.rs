use mpl_core::{format_rational, LiSymbol, LinComb, Symbol};
use mpl_hopf::TensorComb;
use mpl_regularization::RegPoly;
use serde_json::{json, Value};

fn show(s: &LiSymbol) -> String {
    if s.is_unit() {
        "1".into()
    } else {
        s.to_string()
    }
}

pub fn lincomb<S: Symbol>(lc: &LinComb<S>) -> Value {
    let terms: Vec<Value> = lc.iter().map(|(s, c)| json!({"coeff": format_rational(c), "symbol": s.to_string()})).collect();
    json!({"terms": terms, "text": lc.to_string()})
}

pub fn li_lincomb(lc: &LinComb<LiSymbol>) -> Value {
    let terms: Vec<Value> = lc.iter().map(|(s, c)| json!({"coeff": format_rational(c), "symbol": show(s)})).collect();
    json!({"terms": terms, "text": lc.to_string()})
}

pub fn regpoly(p: &RegPoly) -> Value {
    let coeffs: Vec<Value> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| json!({"power": k, "value": li_lincomb(c)}))
        .collect();
    json!({"coeffs": coeffs, "text": p.to_string()})
}

pub fn tensor(t: &TensorComb) -> Value {
    Value::Array(
        t.iter()
            .map(|(l, r, c)| json!({"coeff": format_rational(c), "left": show(l), "right": r.iter().map(show).collect::<Vec<_>>()}))
            .collect(),
    )
}
