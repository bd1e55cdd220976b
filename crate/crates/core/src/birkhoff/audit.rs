//! Fixed-point audit of the first-return map on the genus-one section.
//!
//! The return map `f` is `W`, so `f^m` has `tr(Wᵐ) − 2` fixed points counted
//! on the torus. A periodic orbit of `RW` meeting the section `i` times away
//! from its boundary contributes `i` of them whenever `i | m`. Whatever is left
//! over must come from the boundary circles: a circle returned to itself after
//! `p` iterates adds one fixed point to every `f^m` with `p | m`. The audit
//! fits such periods to the residuals and reports whether they are consistent.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::surface::genus_one_section;
use crate::error::{Error, Result};
use crate::sl2z::{word_to_matrix, IntMatrix2, RLWord};
use crate::torus::enumerate_periodic_orbits;

pub const DEFAULT_AUDIT_CAP: u32 = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditRow {
    pub m: u32,
    #[serde(serialize_with = "ser_display")]
    pub lhs: BigInt,
    pub interior_sum: u64,
    #[serde(serialize_with = "ser_display")]
    pub residual: BigInt,
}

fn ser_display<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditTable {
    pub word: RLWord,
    pub circle_count: u32,
    pub rows: Vec<AuditRow>,
    /// `(p, number of boundary circles of period p)`, for `p` with a nonzero count.
    pub fitted_periods: Vec<(u32, i64)>,
    pub consistent: bool,
}

impl AuditTable {
    pub fn to_text(&self) -> String {
        let header = ["m", "lhs", "interior_sum", "residual"];
        let cells: Vec<[String; 4]> = self
            .rows
            .iter()
            .map(|r| [r.m.to_string(), r.lhs.to_string(), r.interior_sum.to_string(), r.residual.to_string()])
            .collect();
        let mut width = header.map(str::len);
        for row in &cells {
            for (w, c) in width.iter_mut().zip(row) {
                *w = (*w).max(c.len());
            }
        }
        let mut out = String::new();
        let line = |out: &mut String, row: [&str; 4]| {
            let parts: Vec<String> = row.iter().zip(width).map(|(c, w)| format!("{c:>w$}")).collect();
            writeln!(out, "{}", parts.join("  ")).unwrap();
        };
        line(&mut out, header);
        for row in &cells {
            line(&mut out, [&row[0], &row[1], &row[2], &row[3]]);
        }
        let fitted: Vec<String> = self.fitted_periods.iter().map(|(p, c)| format!("{c}x{p}")).collect();
        writeln!(out, "boundary circles: {}", self.circle_count).unwrap();
        writeln!(out, "fitted periods: {}", if fitted.is_empty() { "-".into() } else { fitted.join(" ") }).unwrap();
        writeln!(out, "consistent: {}", self.consistent).unwrap();
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,lhs,interior_sum,residual\n");
        for r in &self.rows {
            writeln!(out, "{},{},{},{}", r.m, r.lhs, r.interior_sum, r.residual).unwrap();
        }
        out
    }
}

/// Counts `e(p)` of boundary circles with period `p` so that
/// `residual(m) = Σ_{p | m} e(p)`, by Möbius-style peeling.
pub fn fit_periods(residuals: &[BigInt]) -> Vec<BigInt> {
    let mut e: Vec<BigInt> = Vec::with_capacity(residuals.len());
    for p in 1..=residuals.len() {
        let below: BigInt = (1..p).filter(|q| p % q == 0).map(|q| e[q - 1].clone()).sum();
        e.push(&residuals[p - 1] - below);
    }
    e
}

pub fn lefschetz_audit(w: &RLWord, max_m: u32) -> Result<AuditTable> {
    lefschetz_audit_capped(w, max_m, DEFAULT_AUDIT_CAP)
}

pub fn lefschetz_audit_capped(w: &RLWord, max_m: u32, cap: u32) -> Result<AuditTable> {
    w.require_mixed()?;
    if max_m == 0 || max_m > cap {
        return Err(Error::InvalidArgument(format!("period bound {max_m} outside 1..={cap}")));
    }
    let circle_count = genus_one_section(w)?.boundary_circle_count();
    let mat = word_to_matrix(w);
    let rw = &IntMatrix2::r() * &mat;
    let orbits = enumerate_periodic_orbits(&rw, max_m)?;

    let mut rows = Vec::new();
    for m in 1..=max_m {
        let lhs = mat.pow(m).trace() - BigInt::from(2);
        let interior_sum: u64 = orbits
            .iter()
            .filter(|o| !o.boundary_flag && m % o.intersection == 0)
            .map(|o| o.intersection as u64)
            .sum();
        let residual = &lhs - BigInt::from(interior_sum);
        rows.push(AuditRow { m, lhs, interior_sum, residual });
    }

    let residuals: Vec<BigInt> = rows.iter().map(|r| r.residual.clone()).collect();
    let e = fit_periods(&residuals);
    let circles = BigInt::from(circle_count);
    let in_range = residuals.iter().all(|r| !r.is_negative() && *r <= circles);
    let nonneg = e.iter().all(|x| !x.is_negative());
    let total: BigInt = e.iter().sum();
    let consistent = in_range && nonneg && total <= circles;
    let fitted_periods = e
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i as u32 + 1, c.to_i64().unwrap_or(i64::MAX)))
        .collect();
    Ok(AuditTable { word: w.clone(), circle_count, rows, fitted_periods, consistent })
}
