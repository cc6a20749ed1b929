//! Stirling numbers of the second kind, Bell numbers, falling factorials,
//! power sums, and the approximation factor `Λ_d`.
//!
//! `Λ_d = Σ_{j=1}^{d} (j+2)/(j+1) · S(d,j)` and its load-dependent version
//!
//! ```text
//! Λ_d(y) = Σ_j S(d,j) (y^{j+1}/(j+1) + y^j)  /  Σ_j S(d,j) (y+1)_{j+1}/(j+1)
//! ```
//!
//! are exact rationals. The Poisson-weighted series `ρ` is evaluated in
//! floating point with an explicit truncation rule.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// `S(d, k)` for all `0 ≤ k ≤ d ≤ max`.
#[derive(Clone, Debug)]
pub struct StirlingTable {
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    pub fn new(max: u32) -> Self {
        let max = max as usize;
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max + 1);
        rows.push(vec![BigInt::one()]);
        for d in 1..=max {
            let prev = &rows[d - 1];
            let mut row = vec![BigInt::zero(); d + 1];
            for k in 1..=d {
                let stay = if k < d {
                    &prev[k] * BigInt::from(k)
                } else {
                    BigInt::zero()
                };
                row[k] = stay + &prev[k - 1];
            }
            rows.push(row);
        }
        StirlingTable { rows }
    }

    pub fn max_d(&self) -> u32 {
        (self.rows.len() - 1) as u32
    }

    /// `S(d, k)`; zero when `k > d`. Panics if `d` exceeds the table.
    pub fn get(&self, d: u32, k: u32) -> BigInt {
        self.rows[d as usize].get(k as usize).cloned().unwrap_or_default()
    }

    pub fn row(&self, d: u32) -> &[BigInt] {
        &self.rows[d as usize]
    }
}

/// Number of partitions of a `d`-set into `k` non-empty blocks.
pub fn stirling2(d: u32, k: u32) -> Result<BigInt> {
    if k > d {
        return Err(Error::Domain(format!("S({d}, {k}) needs k ≤ d")));
    }
    Ok(StirlingTable::new(d).get(d, k))
}

/// `B_d = Σ_k S(d, k)`.
pub fn bell(d: u32) -> BigInt {
    StirlingTable::new(d).row(d).iter().sum()
}

/// `(i)_j = i (i−1) ⋯ (i−j+1)`, with `(i)_0 = 1`.
pub fn falling_factorial(i: u64, j: u32) -> BigInt {
    if j as u64 > i {
        return BigInt::zero();
    }
    (0..j as u64).map(|k| BigInt::from(i - k)).product()
}

/// `Σ_{h=1}^{y} h^d`, computed directly and through
/// `Σ_{j=1}^{d} S(d,j) (y+1)_{j+1} / (j+1)`; the two must agree.
pub fn sum_powers(y: u64, d: u32) -> Result<BigInt> {
    if d == 0 {
        return Err(Error::Domain("power sums need d ≥ 1".into()));
    }
    let direct: BigInt = (1..=y).map(|h| BigInt::from(h).pow(d)).sum();
    let table = StirlingTable::new(d);
    let identity: BigInt = (1..=d)
        .map(|j| table.get(d, j) * falling_factorial(y + 1, j + 1) / BigInt::from(j + 1))
        .sum();
    assert_eq!(direct, identity, "power-sum identity failed at y={y}, d={d}");
    Ok(direct)
}

fn check_d(d: u32) -> Result<()> {
    if d == 0 {
        return Err(Error::Domain("Λ_d needs d ≥ 1".into()));
    }
    Ok(())
}

/// `Λ_d = Σ_{j=1}^{d} (j+2)/(j+1) · S(d, j)`.
pub fn lambda_d(d: u32) -> Result<Rational> {
    check_d(d)?;
    let table = StirlingTable::new(d);
    Ok((1..=d).fold(Rational::zero(), |acc, j| {
        acc + Rational::new(BigInt::from(j + 2) * table.get(d, j), BigInt::from(j + 1))
    }))
}

/// Numerator and denominator of `Λ_d(y)`; the denominator equals
/// `Σ_{h≤y} h^d`.
pub fn lambda_parts(d: u32, y: u64) -> Result<(Rational, Rational)> {
    check_d(d)?;
    if y == 0 {
        return Err(Error::Domain("Λ_d(y) needs y ≥ 1".into()));
    }
    let table = StirlingTable::new(d);
    let yy = BigInt::from(y);
    let mut num = Rational::zero();
    let mut den = Rational::zero();
    for j in 1..=d {
        let s = table.get(d, j);
        let j1 = BigInt::from(j + 1);
        num += Rational::new(&s * yy.pow(j + 1), j1.clone()) + Rational::from_integer(&s * yy.pow(j));
        den += Rational::new(s * falling_factorial(y + 1, j + 1), j1);
    }
    Ok((num, den))
}

pub fn lambda_d_y(d: u32, y: u64) -> Result<Rational> {
    let (num, den) = lambda_parts(d, y)?;
    Ok(num / den)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SeriesValue {
    pub value: f64,
    /// Number of terms summed (`x = 0..terms`).
    pub terms: usize,
}

fn check_tolerance(tol: f64) -> Result<()> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    Ok(())
}

/// Sums `Σ_x f(x) · y^x e^{−y} / x!` until the crude bound
/// `x^{d+1} y^x e^{−y}/x!` on the next term has stayed below `tol/10` for
/// five consecutive terms past the Poisson mode. `f` must satisfy
/// `f(x) ≤ x^{d+1}`.
fn poisson_series(d: u32, y: u64, tol: f64, f: impl Fn(u64) -> f64) -> SeriesValue {
    let yf = y as f64;
    let mut pmf = (-yf).exp();
    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut quiet = 0;
    let mut x = 0u64;
    loop {
        let term = f(x) * pmf;
        // compensated summation keeps the result accurate to ~1e-15 relative
        let t = term - comp;
        let s = sum + t;
        comp = (s - sum) - t;
        sum = s;
        x += 1;
        pmf *= yf / x as f64;
        let bound = (x as f64).powi(d as i32 + 1) * pmf;
        if x > y + d as u64 + 1 && bound < tol / 10.0 {
            quiet += 1;
            if quiet == 5 {
                return SeriesValue {
                    value: sum,
                    terms: x as usize,
                };
            }
        } else {
            quiet = 0;
        }
    }
}

/// `ρ_d(y) = Σ_{x≥0} (Σ_{h≤x} h^d) · y^x/(x! e^y)  /  Σ_{h≤y} h^d`,
/// truncated as in [`poisson_series`]. Equals `Λ_d(y)`.
pub fn rho_truncated(d: u32, y: u64, tol: f64) -> Result<SeriesValue> {
    check_d(d)?;
    if y == 0 {
        return Err(Error::Domain("ρ needs y ≥ 1".into()));
    }
    check_tolerance(tol)?;
    let power_sum = |x: u64| (1..=x).map(|h| (h as f64).powi(d as i32)).sum::<f64>();
    let denominator = sum_powers(y, d)?.to_f64().unwrap_or(f64::INFINITY);
    let series = poisson_series(d, y, tol, power_sum);
    Ok(SeriesValue {
        value: series.value / denominator,
        terms: series.terms,
    })
}

/// Dobinski's formula `B_d = Σ_{x≥0} x^d / (x! e)`, truncated.
pub fn dobinski_classic(d: u32, tol: f64) -> Result<SeriesValue> {
    check_tolerance(tol)?;
    Ok(poisson_series(d.max(1), 1, tol, |x| (x as f64).powi(d as i32)))
}

#[derive(Clone, Debug, Serialize)]
pub struct DobinskiRow {
    pub d: u32,
    /// Exact `Λ_d`, as `"p/q"`.
    pub lambda: String,
    pub series: f64,
    pub series_terms: usize,
    pub variant_error: f64,
    pub bell: String,
    pub classic: f64,
    pub classic_error: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DobinskiReport {
    pub tolerance: f64,
    pub rows: Vec<DobinskiRow>,
    pub all_pass: bool,
}

impl DobinskiReport {
    pub fn failures(&self) -> impl Iterator<Item = &DobinskiRow> {
        self.rows.iter().filter(|r| !r.pass)
    }
}

/// For `d = 1..=d_max`, compares the series `ρ_d(1)` with the exact `Λ_d`
/// and the classic Dobinski series with `B_d`.
pub fn verify_dobinski_variant(d_max: u32, tol: f64) -> Result<DobinskiReport> {
    check_tolerance(tol)?;
    let mut rows = Vec::new();
    for d in 1..=d_max {
        let lambda = lambda_d(d)?;
        let series = rho_truncated(d, 1, tol)?;
        let exact = crate::rational::to_f64(&lambda);
        let variant_error = (series.value - exact).abs();
        let b = bell(d);
        let classic = dobinski_classic(d, tol)?;
        let classic_error = (classic.value - b.to_f64().unwrap_or(f64::INFINITY)).abs();
        rows.push(DobinskiRow {
            d,
            lambda: crate::rational::format(&lambda),
            series: series.value,
            series_terms: series.terms,
            variant_error,
            bell: b.to_string(),
            classic: classic.value,
            classic_error,
            pass: variant_error < tol && classic_error < tol,
        });
    }
    let all_pass = rows.iter().all(|r| r.pass);
    Ok(DobinskiReport {
        tolerance: tol,
        rows,
        all_pass,
    })
}

/// One column of the `Λ_d` versus `B_{d+1}` comparison table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableColumn {
    pub d: u32,
    pub lambda: Rational,
    pub bell_next: BigInt,
}

pub fn lambda_bell_table(d_max: u32) -> Result<Vec<TableColumn>> {
    let table = StirlingTable::new(d_max + 1);
    (1..=d_max)
        .map(|d| {
            Ok(TableColumn {
                d,
                lambda: lambda_d(d)?,
                bell_next: table.row(d + 1).iter().sum(),
            })
        })
        .collect()
}
