//! First-return map of the suspension flow of `RW` on the genus-one section.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sl2z::{word_to_matrix, IntMatrix2, RLWord};

/// The return map together with the homology classes used to compute it:
/// `α = (d, −c)` and `β = (d − b, a − c)` on `𝕋²_{2/3}`, whose images under
/// `RW` are `α' = (1, 0)` and `β' = (1, 1)`.
#[derive(Clone, Debug, Serialize)]
pub struct FirstReturn {
    pub matrix: IntMatrix2,
    #[serde(serialize_with = "ser_pair")]
    pub alpha: (BigInt, BigInt),
    #[serde(serialize_with = "ser_pair")]
    pub beta: (BigInt, BigInt),
    #[serde(serialize_with = "ser_pair")]
    pub alpha_image: (BigInt, BigInt),
    #[serde(serialize_with = "ser_pair")]
    pub beta_image: (BigInt, BigInt),
}

fn ser_pair<S: serde::Serializer>(p: &(BigInt, BigInt), s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&format_args!("({},{})", p.0, p.1))
}

fn apply(m: &IntMatrix2, v: &(BigInt, BigInt)) -> (BigInt, BigInt) {
    (m.a() * &v.0 + m.b() * &v.1, m.c() * &v.0 + m.d() * &v.1)
}

pub fn first_return_matrix(w: &RLWord) -> Result<FirstReturn> {
    w.require_mixed()?;
    let rw = &IntMatrix2::r() * &word_to_matrix(w);
    let (a, b, c, d) = (rw.a(), rw.b(), rw.c(), rw.d());
    let alpha = (d.clone(), -c);
    let beta = (d - b, a - c);
    let alpha_image = apply(&rw, &alpha);
    let beta_image = apply(&rw, &beta);
    let one = BigInt::from(1);
    let zero = BigInt::from(0);
    if alpha_image != (one.clone(), zero) || beta_image != (one.clone(), one) {
        return Err(Error::CertificateFailure(format!(
            "RW = {rw} sends α to {alpha_image:?} and β to {beta_image:?}"
        )));
    }
    // columns α, β; the return map is its inverse
    let basis = IntMatrix2::sl2(alpha.0.clone(), beta.0.clone(), alpha.1.clone(), beta.1.clone())
        .map_err(|e| Error::CertificateFailure(format!("basis is not unimodular: {e}")))?;
    let matrix = basis.inverse();
    let expect = IntMatrix2::sl2(a - c, b - d, c.clone(), d.clone())
        .map_err(|e| Error::CertificateFailure(e.to_string()))?;
    if matrix != expect || matrix != word_to_matrix(w) {
        return Err(Error::CertificateFailure(format!("first return {matrix} differs from W for {w}")));
    }
    Ok(FirstReturn { matrix, alpha, beta, alpha_image, beta_image })
}
