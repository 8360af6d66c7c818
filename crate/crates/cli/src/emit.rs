//! JSON and CSV rendering. Doubles print as shortest round-trip numbers, rationals as
//! `"p/q"` strings.

use bidiag::io::TextScalar;
use bidiag::solve::{ChainSolve, ErrorBudget};
use bidiag::{Matrix, Rational, Scalar};
use serde_json::{json, Value};

/// A scalar the CLI can read exactly from gallery data and render as JSON.
pub trait Num: TextScalar {
    fn from_exact(r: &Rational) -> Self;
    fn emit(&self) -> Value;
}

impl Num for f64 {
    fn from_exact(r: &Rational) -> Self {
        r.to_f64()
    }

    fn emit(&self) -> Value {
        // Non-finite values have no JSON number form.
        serde_json::Number::from_f64(*self).map_or(Value::Null, Value::Number)
    }
}

impl Num for Rational {
    fn from_exact(r: &Rational) -> Self {
        r.clone()
    }

    fn emit(&self) -> Value {
        Value::String(self.to_text())
    }
}

pub fn vector<T: Num>(v: &[T]) -> Value {
    Value::Array(v.iter().map(Num::emit).collect())
}

pub fn matrix<T: Num>(a: &Matrix<T>) -> Value {
    Value::Array((0..a.rows()).map(|i| vector(a.row(i))).collect())
}

pub fn csv<T: Num>(a: &Matrix<T>) -> String {
    let mut out = String::new();
    for i in 0..a.rows() {
        let row: Vec<String> = a.row(i).iter().map(TextScalar::to_text).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn budget<T: Num>(b: &ErrorBudget<T>) -> Value {
    json!({
        "kind": serde_json::to_value(b.kind).expect("budget kinds serialize"),
        "coefficient": b.coefficient.emit(),
        "first_order": b.first_order.emit(),
        "envelope": vector(&b.envelope),
        "bound": vector(&b.bound()),
        "norm_bound": b.norm_bound().emit(),
        "tight": b.tight,
    })
}

pub fn chain_solve<T: Num>(s: &ChainSolve<T>) -> Value {
    json!({
        "x": vector(&s.x),
        "residual": budget(&s.residual),
        "forward": budget(&s.forward),
    })
}

pub fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use bidiag::scalar::ratio;

    #[test]
    fn scalars() {
        assert_eq!(0.1f64.emit(), json!(0.1));
        assert_eq!(f64::NAN.emit(), Value::Null);
        assert_eq!(ratio(-3, 6).emit(), json!("-1/2"));
        assert_eq!(ratio(4, 1).emit(), json!("4"));
    }

    #[test]
    fn csv_rows() {
        let a = Matrix::from_rows(vec![vec![ratio(1, 3), ratio(0, 1)], vec![ratio(2, 1), ratio(-1, 2)]]).unwrap();
        assert_eq!(csv(&a), "1/3,0\n2,-1/2\n");
        assert_eq!(csv(&a.to_f64()).lines().next().unwrap(), "0.3333333333333333,0");
    }
}
