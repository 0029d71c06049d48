//! JSON records printed by the commands and their `--pretty` text form.

use std::fmt::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use siegel_core::construct::ConstructedForm;
use siegel_core::covariant::CovariantJson;
use siegel_core::fourier::VectorJson;
use siegel_core::harder::CongruenceCheck;
use siegel_core::hecke::HeckeMatrix;
use siegel_core::poly::{squarefree_part, UPoly};
use siegel_core::scalar::format_rational;

use crate::cache::CacheEntry;
use crate::CliError;

pub trait Pretty {
    fn pretty(&self) -> String;
}

pub fn render<T: Serialize + Pretty>(value: &T, pretty: bool) -> Result<String, CliError> {
    if pretty {
        Ok(value.pretty())
    } else {
        Ok(serde_json::to_string(value)? + "\n")
    }
}

/// Integers without a denominator, other rationals as `n/d`.
pub fn short(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn strip_one(s: &str) -> &str {
    s.strip_suffix("/1").unwrap_or(s)
}

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out += &line(r.iter().map(|s| s.as_str()).collect());
    }
    out
}

#[derive(Serialize)]
pub struct SeedReport {
    pub prec: u32,
    pub cache_dir: String,
    pub artifacts: Vec<CacheEntry>,
}

impl Pretty for SeedReport {
    fn pretty(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .artifacts
            .iter()
            .map(|e| vec![e.artifact.clone(), e.prec.to_string(), e.checksum.clone(), e.payload.clone()])
            .collect();
        format!("cache: {}\n", self.cache_dir) + &table(&["artifact", "N", "sha256", "payload"], &rows)
    }
}

#[derive(Serialize)]
pub struct DecompositionRow {
    pub lambda: [u32; 2],
    pub multiplicity: usize,
    pub weight: (u32, u32),
}

#[derive(Serialize)]
pub struct Decomposition {
    pub d: u32,
    pub slots: Vec<DecompositionRow>,
}

impl Pretty for Decomposition {
    fn pretty(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .slots
            .iter()
            .map(|s| {
                vec![
                    format!("[{},{}]", s.lambda[0], s.lambda[1]),
                    s.multiplicity.to_string(),
                    format!("({},{})", s.weight.0, s.weight.1),
                ]
            })
            .collect();
        format!("Sym^{}(Sym^6)\n", self.d) + &table(&["lambda", "mult", "weight"], &rows)
    }
}

#[derive(Serialize)]
#[serde(transparent)]
pub struct CovariantList(pub Vec<CovariantJson>);

fn monomial_text(e: &[u8; 7]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| if k == 1 { format!("a{i}") } else { format!("a{i}^{k}") })
        .collect();
    parts.join("*")
}

impl Pretty for CovariantList {
    fn pretty(&self) -> String {
        let mut out = String::new();
        for (n, c) in self.0.iter().enumerate() {
            let _ = writeln!(out, "covariant {n}: d = {}, lambda = [{},{}]", c.d, c.lambda[0], c.lambda[1]);
            for (i, entry) in c.entries.iter().enumerate() {
                let terms: Vec<String> = entry.iter().map(|(e, v)| format!("{} {}", strip_one(v), monomial_text(e))).collect();
                let _ = writeln!(out, "  [{i}] {}", terms.join(" + "));
            }
        }
        out
    }
}

#[derive(Serialize)]
pub struct FormReport {
    pub d: u32,
    pub lambda: [u32; 2],
    pub weight: (u32, i32),
    pub character: u8,
    pub divisions: u32,
    pub combination: Vec<String>,
    pub form: VectorJson,
}

impl From<&ConstructedForm> for FormReport {
    fn from(f: &ConstructedForm) -> Self {
        FormReport {
            d: f.d,
            lambda: [f.lambda.0, f.lambda.1],
            weight: f.weight(),
            character: f.character().bit(),
            divisions: f.divisions,
            combination: f.combination.iter().map(format_rational).collect(),
            form: VectorJson::from(&f.form),
        }
    }
}

#[derive(Serialize)]
#[serde(transparent)]
pub struct FormList(pub Vec<FormReport>);

impl Pretty for FormList {
    fn pretty(&self) -> String {
        let mut out = String::new();
        for f in &self.0 {
            let _ = writeln!(
                out,
                "weight ({},{}) character {} from [{},{}] in degree {}, divided by chi5^{}",
                f.weight.0, f.weight.1, f.character, f.lambda[0], f.lambda[1], f.d, f.divisions
            );
            let _ = writeln!(out, "  combination: {}", f.combination.iter().map(|c| strip_one(c)).collect::<Vec<_>>().join(", "));
            let lowest = f
                .form
                .entries
                .iter()
                .flatten()
                .map(|(a, b, _, _)| a + b)
                .min();
            if let Some(s) = lowest {
                for (i, entry) in f.form.entries.iter().enumerate() {
                    let terms: Vec<String> = entry
                        .iter()
                        .filter(|(a, b, _, _)| a + b == s)
                        .map(|(a, b, c, v)| format!("{} Q1^{a} Q2^{b} R^{c}", strip_one(v)))
                        .collect();
                    let _ = writeln!(out, "  [{i}] {}", if terms.is_empty() { "0".into() } else { terms.join(" + ") });
                }
            }
        }
        out
    }
}

/// Roots of a monic quadratic written as `a ± b√D`, `D` squarefree.
fn quadratic_roots(f: &UPoly<BigRational>) -> Option<(BigRational, BigRational, BigInt)> {
    if f.degree() != Some(2) || !f.is_monic() {
        return None;
    }
    let (c0, c1) = (f.coeff(0), f.coeff(1));
    let a = -&c1 / BigRational::from_integer(2.into());
    let disc = &c1 * &c1 - &c0 * BigRational::from_integer(4.into());
    if !disc.is_integer() || disc.is_zero() {
        return None;
    }
    let disc = disc.to_integer();
    let d = squarefree_part(&disc);
    let s = (&disc / &d).sqrt();
    let b = BigRational::new(s, 2.into());
    Some((a, b, d))
}

fn quadratic_text(a: &BigRational, b: &BigRational, d: &BigInt, sign: &str) -> String {
    if *d == BigInt::from(1) {
        return format!("{}, {}", short(&(a + b)), short(&(a - b)));
    }
    format!("{} {sign} {}√{}", short(a), short(b), d)
}

/// Human-readable eigenvalues of `T(p)` when they are rational or quadratic.
pub fn eigenvalue_text(m: &HeckeMatrix) -> Vec<String> {
    let f = m.charpoly();
    match f.degree() {
        Some(1) => vec![short(&-f.coeff(0))],
        Some(2) => quadratic_roots(&f)
            .map(|(a, b, d)| vec![quadratic_text(&a, &b, &d, "±")])
            .unwrap_or_default(),
        _ => Vec::new(),
    }
}

#[derive(Serialize)]
pub struct HeckeReport {
    pub space: (u32, i32),
    pub p: u32,
    pub prec: u32,
    pub matrix: Vec<Vec<String>>,
    pub charpoly: Vec<String>,
    pub eigenvalues: Vec<String>,
}

impl HeckeReport {
    pub fn new(m: &HeckeMatrix, prec: u32) -> Self {
        HeckeReport {
            space: (m.j, m.k),
            p: m.p,
            prec,
            matrix: m.matrix.to_rows().iter().map(|r| r.iter().map(format_rational).collect()).collect(),
            charpoly: m.charpoly().coeffs().iter().map(format_rational).collect(),
            eigenvalues: eigenvalue_text(m),
        }
    }
}

impl Pretty for HeckeReport {
    fn pretty(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .matrix
            .iter()
            .map(|r| r.iter().map(|s| strip_one(s).to_string()).collect())
            .collect();
        let header: Vec<String> = (0..rows.len()).map(|i| format!("F{i}")).collect();
        let header: Vec<&str> = header.iter().map(|s| s.as_str()).collect();
        let mut out = format!("T({}) on S_{},{} (precision {})\n", self.p, self.space.0, self.space.1, self.prec);
        out += &table(&header, &rows);
        let coeffs: Vec<&str> = self.charpoly.iter().map(|s| strip_one(s)).collect();
        let _ = writeln!(out, "charpoly coefficients (constant first): {}", coeffs.join(", "));
        for e in &self.eigenvalues {
            let _ = writeln!(out, "eigenvalues: {e}");
        }
        out
    }
}

#[derive(Serialize)]
pub struct HarderCheck {
    pub p: u32,
    pub resultant: String,
    pub divisible: bool,
}

impl From<CongruenceCheck> for HarderCheck {
    fn from(c: CongruenceCheck) -> Self {
        HarderCheck {
            p: c.p,
            resultant: c.resultant.to_string(),
            divisible: c.divisible,
        }
    }
}

#[derive(Serialize)]
pub struct HarderReport {
    pub j: u32,
    pub k: u32,
    pub ell: u64,
    pub checks: Vec<HarderCheck>,
}

impl Pretty for HarderReport {
    fn pretty(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .checks
            .iter()
            .map(|c| vec![c.p.to_string(), if c.divisible { "yes" } else { "no" }.into(), c.resultant.clone()])
            .collect();
        format!("(j,k) = ({},{}), ell = {}\n", self.j, self.k, self.ell)
            + &table(&["p", "divisible", "resultant"], &rows)
    }
}

#[derive(Serialize)]
pub struct EigenRow {
    pub space: (u32, i32),
    pub p: u32,
    pub value: String,
    pub charpoly: Vec<String>,
}

impl EigenRow {
    /// With `reference = T(2)` on a 2-dimensional space, the sign of the
    /// square root follows the eigenvector of `T(2)` (`∓` when reversed).
    pub fn new(j: u32, k: i32, p: u32, m: &HeckeMatrix, reference: Option<&HeckeMatrix>) -> Self {
        let f = m.charpoly();
        let value = match (quadratic_roots(&f), reference) {
            (Some((a, b, d)), Some(t2)) => {
                let sign = match pairing_sign(t2, m) {
                    Some(true) => "±",
                    Some(false) => "∓",
                    None => "±",
                };
                quadratic_text(&a, &b, &d, sign)
            }
            _ => eigenvalue_text(m).join("; "),
        };
        EigenRow {
            space: (j, k),
            p,
            value,
            charpoly: f.coeffs().iter().map(format_rational).collect(),
        }
    }
}

/// For commuting 2×2 matrices with `T = α + β·T2`, whether `β > 0`.
fn pairing_sign(t2: &HeckeMatrix, t: &HeckeMatrix) -> Option<bool> {
    let (a, b) = (&t2.matrix, &t.matrix);
    if a.nrows() != 2 {
        return None;
    }
    for (i, j) in [(0, 1), (1, 0)] {
        let x = a.get(i, j);
        if !x.is_zero() {
            let beta = b.get(i, j) / x;
            return Some(beta.is_positive());
        }
    }
    None
}

#[derive(Serialize)]
pub struct EigenTable {
    pub rows: Vec<EigenRow>,
}

impl Pretty for EigenTable {
    fn pretty(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| vec![format!("({},{})", r.space.0, r.space.1), r.p.to_string(), r.value.clone()])
            .collect();
        table(&["(j,k)", "p", "lambda_p"], &rows)
    }
}

#[derive(Serialize)]
pub struct OrdersRow {
    pub lambda: [u32; 2],
    pub multiplicity: usize,
    pub weight: (u32, u32),
    pub orders: Vec<u32>,
}

#[derive(Serialize)]
pub struct OrdersTable {
    pub d: u32,
    pub rows: Vec<OrdersRow>,
}

impl Pretty for OrdersTable {
    fn pretty(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| {
                let orders: Vec<String> = r.orders.iter().map(|o| o.to_string()).collect();
                vec![
                    format!("[{},{}]", r.lambda[0], r.lambda[1]),
                    r.multiplicity.to_string(),
                    format!("({},{})", r.weight.0, r.weight.1),
                    orders.join(","),
                ]
            })
            .collect();
        format!("d = {}\n", self.d) + &table(&["[m,n]", "mult", "weight", "order"], &rows)
    }
}
