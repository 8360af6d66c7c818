//! Subcommand implementations; each returns the rendered output and a pass flag.

use std::path::Path;
use std::str::FromStr;

use bidiag::condnum::{chain_inf_norm, chain_inv_inf_norm};
use bidiag::experiment::{self, ExperimentId};
use bidiag::funcs::{func_of_bidiagonal, NamedFunction};
use bidiag::gallery::{self, GalleryMatrix, GalleryName};
use bidiag::io::{parse_factor_file, parse_matrix_json, parse_tn_file, parse_vector, write_factor_file, write_tn_file, TextScalar};
use bidiag::oracle::{exact_det, exact_inf_norm, exact_inverse, find_negative_minor};
use bidiag::solve::{solve_inverse_chain, solve_product_chain};
use bidiag::svals::singular_values;
use bidiag::tn::{random_tn, tn_expand, tn_kinf, TNFactorization};
use bidiag::{Factor, FactorChain, Matrix, Rational, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::emit::{self, Num};
use crate::{Format, OracleOp, Source};

pub struct Output {
    pub text: String,
    pub pass: bool,
}

type CmdResult = Result<Output, String>;

/// Largest order accepted by `oracle tn-check` (minor enumeration is exponential).
const TN_CHECK_MAX_N: usize = 10;

fn ok(v: Value) -> CmdResult {
    Ok(Output { text: emit::pretty(&v), pass: true })
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

/// `path: message`, so parse errors name the file they came from.
fn in_file(path: &Path) -> impl Fn(bidiag::Error) -> String + '_ {
    move |e| format!("{}: {e}", path.display())
}

fn parse_gallery(spec: &[String]) -> Result<GalleryMatrix, String> {
    let name = GalleryName::from_str(&spec[0]).map_err(err)?;
    let n: usize = spec[1].parse().map_err(|_| format!("gallery order must be a positive integer, got {:?}", spec[1]))?;
    let params = spec[2..].iter().map(|p| Rational::parse_text(p)).collect::<bidiag::Result<Vec<_>>>().map_err(err)?;
    gallery::by_name(name, n, &params).map_err(err)
}

fn gallery_chain<T: Num>(g: &GalleryMatrix) -> Result<FactorChain<T>, String> {
    let c = g.exact_chain.as_ref().ok_or_else(|| format!("{} has no factor chain for these parameters", g.name))?;
    Ok(c.map(T::from_exact))
}

fn load_chain<T: Num>(source: &Source) -> Result<FactorChain<T>, String> {
    match (&source.factors, &source.gallery) {
        (Some(path), _) => parse_factor_file(&read(path)?).map_err(in_file(path)),
        (None, Some(spec)) => gallery_chain(&parse_gallery(spec)?),
        (None, None) => Err("give --factors FILE or --gallery NAME N [PARAMS]".into()),
    }
}

pub fn experiment(table: &str, timing: bool) -> CmdResult {
    let ids: Vec<ExperimentId> = if table == "all" {
        ExperimentId::ALL.to_vec()
    } else {
        vec![ExperimentId::from_str(table).map_err(err)?]
    };
    let reports = ids.into_iter().map(|id| experiment::run(id, timing)).collect::<bidiag::Result<Vec<_>>>().map_err(err)?;
    let pass = reports.iter().all(|r| r.pass);
    let value = if reports.len() == 1 {
        serde_json::to_value(&reports[0])
    } else {
        serde_json::to_value(&reports)
    }
    .map_err(err)?;
    Ok(Output { text: emit::pretty(&value), pass })
}

pub fn gallery(name: &str, n: usize, params: &[String], chain: bool, tn: bool, exact: bool, format: Format) -> CmdResult {
    let mut spec = vec![name.to_string(), n.to_string()];
    spec.extend(params.iter().cloned());
    let g = parse_gallery(&spec)?;
    if chain {
        let text = if exact { write_factor_file(&gallery_chain::<Rational>(&g)?) } else { write_factor_file(&gallery_chain::<f64>(&g)?) };
        return Ok(Output { text, pass: true });
    }
    if tn {
        let f = g.tn.as_ref().ok_or_else(|| format!("{} is not supplied with TN parameters", g.name))?;
        let text = if exact { write_tn_file(f) } else { write_tn_file(&f.to_f64()) };
        return Ok(Output { text, pass: true });
    }
    if format == Format::Csv {
        let text = if exact { emit::csv(&g.exact) } else { emit::csv(&g.dense) };
        return Ok(Output { text, pass: true });
    }
    ok(json!({
        "name": g.name.as_str(),
        "n": g.n,
        "parameters": emit::vector(&g.parameters),
        "representable": g.representable,
        "matrix": if exact { emit::matrix(&g.exact) } else { emit::matrix(&g.dense) },
    }))
}

fn norms_json<T: Num>(method: &str, n: usize, alpha: T, beta: T) -> Value {
    let kinf = alpha.clone() * beta.clone();
    json!({
        "method": method,
        "n": n,
        "kinf": kinf.emit(),
        "norm_inf": alpha.emit(),
        "inv_norm_inf": beta.emit(),
    })
}

/// Exact norms of a dense matrix and its inverse, by the oracle.
fn oracle_norms(method: &str, a: &Matrix<Rational>) -> Result<Value, String> {
    let inv = exact_inverse(a).map_err(err)?;
    let mut v = norms_json(method, a.rows(), exact_inf_norm(a), exact_inf_norm(&inv));
    v["kinf_f64"] = (exact_inf_norm(a) * exact_inf_norm(&inv)).to_f64().emit();
    Ok(v)
}

fn tn_cond(f: &TNFactorization<f64>, dense: Option<&Matrix<f64>>) -> Result<Value, String> {
    let chain = tn_expand(f).map_err(err)?;
    let alpha = match dense {
        Some(a) => a.inf_norm(),
        None => chain_inf_norm(&chain).map_err(err)?,
    };
    let beta = chain_inv_inf_norm(&chain).map_err(err)?;
    let v = norms_json("tn", f.n(), alpha, beta);
    debug_assert_eq!(v["kinf"], tn_kinf(f, dense).map_err(err)?.emit());
    Ok(v)
}

pub fn cond(source: &Source, tn: Option<&Path>, random: Option<usize>, seed: u64, exact: bool) -> CmdResult {
    if let Some(path) = tn {
        let text = read(path)?;
        return ok(if exact {
            let f: TNFactorization<Rational> = parse_tn_file(&text).map_err(in_file(path))?;
            oracle_norms("oracle", &tn_expand(&f).map_err(err)?.dense().map_err(err)?)?
        } else {
            tn_cond(&parse_tn_file(&text).map_err(in_file(path))?, None)?
        });
    }
    if let Some(n) = random {
        let f: TNFactorization<f64> = random_tn(n, &mut ChaCha8Rng::seed_from_u64(seed)).map_err(err)?;
        let mut v = if exact {
            oracle_norms("oracle", &tn_expand(&f.map(|&x| Rational::from_f64(x))).map_err(err)?.dense().map_err(err)?)?
        } else {
            tn_cond(&f, None)?
        };
        v["seed"] = json!(seed);
        return ok(v);
    }
    if let Some(spec) = &source.gallery {
        let g = parse_gallery(spec)?;
        if exact {
            return ok(oracle_norms("oracle", &g.exact)?);
        }
        if let Some(f) = &g.tn {
            return ok(tn_cond(&f.to_f64(), Some(&g.dense))?);
        }
    }
    if exact {
        let c: FactorChain<Rational> = load_chain(source)?;
        return ok(oracle_norms("oracle", &c.dense().map_err(err)?)?);
    }
    let c: FactorChain<f64> = load_chain(source)?;
    let alpha = chain_inf_norm(&c).map_err(err)?;
    let beta = chain_inv_inf_norm(&c).map_err(err)?;
    ok(norms_json("chain", c.n(), alpha, beta))
}

fn solve_with<T: Num>(source: &Source, rhs: Option<&Path>, seed: u64, inverse: bool) -> Result<Value, String> {
    let c: FactorChain<T> = load_chain(source)?;
    let b: Vec<T> = match rhs {
        Some(path) => parse_vector(&read(path)?).map_err(in_file(path))?,
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..c.n()).map(|_| if rng.random_bool(0.5) { T::one() } else { -T::one() }).collect()
        }
    };
    if b.len() != c.n() {
        return Err(format!("right-hand side has {} entries, the chain has order {}", b.len(), c.n()));
    }
    let s = if inverse { solve_inverse_chain(&c, &b) } else { solve_product_chain(&c, &b) }.map_err(err)?;
    let mut v = emit::chain_solve(&s);
    v["b"] = emit::vector(&b);
    v["pattern"] = serde_json::to_value(c.pattern()).map_err(err)?;
    Ok(v)
}

pub fn solve(source: &Source, rhs: Option<&Path>, seed: u64, inverse: bool, exact: bool) -> CmdResult {
    ok(if exact { solve_with::<Rational>(source, rhs, seed, inverse)? } else { solve_with::<f64>(source, rhs, seed, inverse)? })
}

pub fn svd(source: &Source, tol: f64) -> CmdResult {
    let c: FactorChain<f64> = load_chain(source)?;
    let f: &Factor<f64> = c.factors().first().ok_or("the chain has no factors")?;
    let mut s = singular_values(&f.matrix, tol).map_err(err)?;
    if f.inverted {
        s = s.iter().rev().map(|x| 1.0 / x).collect();
    }
    ok(json!({
        "factor": 0,
        "of": c.len(),
        "inverted": f.inverted,
        "tol": tol,
        "singular_values": emit::vector(&s),
    }))
}

fn single_factor<T: Num>(source: &Source) -> Result<bidiag::Bidiagonal<T>, String> {
    let c: FactorChain<T> = load_chain(source)?;
    match (c.factors(), c.scale()) {
        ([f], None) if !f.inverted => Ok(f.matrix.clone()),
        _ => Err("func needs a chain holding exactly one non-inverted bidiagonal factor".into()),
    }
}

fn func_with<T: Num>(f: NamedFunction, source: &Source, format: Format) -> CmdResult {
    let b: bidiag::Bidiagonal<T> = single_factor(source)?;
    let m = func_of_bidiagonal(&f, &b).map_err(err)?;
    if format == Format::Csv {
        return Ok(Output { text: emit::csv(&m), pass: true });
    }
    ok(json!({ "function": f.to_string(), "n": b.n(), "matrix": emit::matrix(&m) }))
}

pub fn func(function: &str, source: &Source, exact: bool, format: Format) -> CmdResult {
    let f = NamedFunction::from_str(function).map_err(err)?;
    if exact {
        func_with::<Rational>(f, source, format)
    } else {
        func_with::<f64>(f, source, format)
    }
}

pub fn oracle(op: OracleOp, path: &Path, format: Format) -> CmdResult {
    let a: Matrix<Rational> = parse_matrix_json(&read(path)?).map_err(in_file(path))?;
    if !a.is_square() {
        return Err(format!("{}: matrix is {}x{}, not square", path.display(), a.rows(), a.cols()));
    }
    match op {
        OracleOp::Inverse => {
            let inv = exact_inverse(&a).map_err(err)?;
            if format == Format::Csv {
                return Ok(Output { text: emit::csv(&inv), pass: true });
            }
            ok(json!({ "n": a.rows(), "inverse": emit::matrix(&inv) }))
        }
        OracleOp::Kinf => ok(oracle_norms("oracle", &a)?),
        OracleOp::Det => {
            let d = exact_det(&a).map_err(err)?;
            ok(json!({ "n": a.rows(), "det": d.emit(), "det_f64": d.to_f64().emit() }))
        }
        OracleOp::TnCheck => {
            let minor = find_negative_minor(&a, TN_CHECK_MAX_N).map_err(err)?;
            // Index sets are reported one-based.
            let minor_json = minor.as_ref().map(|m| {
                json!({
                    "rows": m.rows.iter().map(|i| i + 1).collect::<Vec<_>>(),
                    "cols": m.cols.iter().map(|j| j + 1).collect::<Vec<_>>(),
                    "value": m.value.emit(),
                })
            });
            ok(json!({ "n": a.rows(), "totally_nonnegative": minor.is_none(), "negative_minor": minor_json }))
        }
    }
}
