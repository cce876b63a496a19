//! Normalized Hecke-eigenvalue datasets: generators and CSV storage.

mod csv_io;
mod elliptic;
mod primes;
mod sato_tate;
mod tau;

pub use csv_io::{read_csv, read_csv_from, write_csv, write_csv_to};
pub use elliptic::{ec_ap, ec_ap_curve, Weierstrass, EC_CAP};
pub use primes::{first_primes, is_prime, primes_up_to};
pub use sato_tate::{sample_angle, sato_tate_cdf, sato_tate_sample};
pub use tau::{tau_ap, tau_coefficients, TAU_CAP};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::repring::RAMANUJAN_EXPONENT;

/// One unramified prime with its unitarily normalized eigenvalue.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenvalueRecord {
    pub p: u64,
    pub a: Complex64,
    /// ω(p); `None` means 1.
    pub omega_p: Option<Complex64>,
    /// Unnormalized integer eigenvalue, when the source has one.
    pub raw: Option<i128>,
}

impl EigenvalueRecord {
    pub fn new(p: u64, a: Complex64) -> Self {
        EigenvalueRecord { p, a, omega_p: None, raw: None }
    }

    pub fn real(p: u64, a: f64) -> Self {
        Self::new(p, Complex64::new(a, 0.0))
    }

    pub fn with_raw(mut self, raw: i128) -> Self {
        self.raw = Some(raw);
        self
    }

    pub fn omega(&self) -> Complex64 {
        self.omega_p.unwrap_or(Complex64::new(1.0, 0.0))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DatasetHeader {
    pub source: String,
    pub self_dual: bool,
    /// Truncation point: every record has p ≤ x.
    pub x: u64,
    pub omega_trivial: bool,
    /// Primes ≤ x deliberately left out (bad reduction).
    pub skipped: Vec<u64>,
}

/// Records are always stored unitarily normalized.
#[derive(Clone, Debug, PartialEq)]
pub struct Dataset {
    pub header: DatasetHeader,
    pub records: Vec<EigenvalueRecord>,
}

impl Dataset {
    pub fn new(header: DatasetHeader, records: Vec<EigenvalueRecord>) -> Result<Self> {
        if header.x < 2 {
            return Err(Error::InvalidArgument(format!("X = {} is below 2", header.x)));
        }
        for (i, r) in records.iter().enumerate() {
            if !is_prime(r.p) {
                return Err(Error::InvalidArgument(format!("p = {} is not prime", r.p)));
            }
            if r.p > header.x {
                return Err(Error::InvalidArgument(format!("p = {} exceeds X = {}", r.p, header.x)));
            }
            if i > 0 && records[i - 1].p >= r.p {
                return Err(Error::InvalidArgument(format!("primes not strictly increasing at p = {}", r.p)));
            }
        }
        let ds = Dataset { header, records };
        for w in ds.warnings() {
            log::warn!("{w}");
        }
        Ok(ds)
    }

    /// Soft checks: |a_p| ≤ 2 p^{7/64}.
    pub fn warnings(&self) -> Vec<String> {
        self.records
            .iter()
            .filter(|r| r.a.norm() > 2.0 * (r.p as f64).powf(RAMANUJAN_EXPONENT) + 1e-12)
            .map(|r| format!("|a_p| = {} exceeds 2·p^(7/64) at p = {}", r.a.norm(), r.p))
            .collect()
    }

    /// The same dataset with every eigenvalue multiplied by e^{iφ}.
    pub fn rotated(&self, phi: f64) -> Dataset {
        let rot = Complex64::from_polar(1.0, phi);
        let records = self.records.iter().map(|r| EigenvalueRecord { a: r.a * rot, ..r.clone() }).collect();
        Dataset { header: DatasetHeader { self_dual: false, ..self.header.clone() }, records }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn header(x: u64) -> DatasetHeader {
        DatasetHeader { source: "test".into(), self_dual: true, x, omega_trivial: true, skipped: vec![] }
    }

    #[test]
    fn invariants_enforced() {
        assert!(Dataset::new(header(10), vec![EigenvalueRecord::real(4, 0.0)]).is_err());
        assert!(Dataset::new(header(10), vec![EigenvalueRecord::real(11, 0.0)]).is_err());
        assert!(Dataset::new(header(10), vec![EigenvalueRecord::real(3, 0.0), EigenvalueRecord::real(2, 0.0)]).is_err());
        assert!(Dataset::new(header(1), vec![]).is_err());
        assert!(Dataset::new(header(10), vec![EigenvalueRecord::real(2, 0.0), EigenvalueRecord::real(7, 1.0)]).is_ok());
    }

    #[test]
    fn oversized_eigenvalue_is_only_a_warning() {
        let ds = Dataset::new(header(10), vec![EigenvalueRecord::real(2, 5.0)]).unwrap();
        assert_eq!(ds.warnings().len(), 1);
    }
}
