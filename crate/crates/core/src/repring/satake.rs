use std::collections::BTreeMap;

use num_complex::Complex64;

use super::atom::{Atom, Base};
use super::virtual_rep::VirtualRep;
use crate::error::{Error, Result};

/// Exponent of the unconditional bound |α|, |β| ≤ p^{7/64}.
pub const RAMANUJAN_EXPONENT: f64 = 7.0 / 64.0;

/// Local data at one prime: the Satake parameters and values of the auxiliary characters.
#[derive(Clone, Debug, PartialEq)]
pub struct SatakePoint {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub omega_value: Complex64,
    pub aux_values: BTreeMap<String, Complex64>,
    /// Character values of opaque labels, keyed by label name.
    pub opaque_values: BTreeMap<String, Complex64>,
    pub prime: Option<u64>,
}

impl SatakePoint {
    pub fn new(alpha: Complex64, beta: Complex64) -> Self {
        SatakePoint {
            alpha,
            beta,
            omega_value: alpha * beta,
            aux_values: BTreeMap::new(),
            opaque_values: BTreeMap::new(),
            prime: None,
        }
    }

    pub fn with_aux(mut self, name: &str, value: Complex64) -> Self {
        self.aux_values.insert(name.to_string(), value);
        self
    }

    pub fn with_opaque(mut self, name: &str, value: Complex64) -> Self {
        self.opaque_values.insert(name.to_string(), value);
        self
    }

    pub fn at_prime(mut self, p: u64) -> Self {
        self.prime = Some(p);
        self
    }

    /// Warnings for violated soft invariants; empty when everything holds.
    pub fn validate(&self) -> Vec<String> {
        let mut warnings = Vec::new();
        let product = self.alpha * self.beta;
        if (self.omega_value - product).norm() > 1e-9 * product.norm().max(1.0) {
            warnings.push(format!("ω(p) = {} differs from αβ = {}", self.omega_value, product));
        }
        for (name, v) in &self.aux_values {
            if (v.norm() - 1.0).abs() > 1e-9 {
                warnings.push(format!("aux value {name} = {v} is off the unit circle"));
            }
        }
        if let Some(p) = self.prime {
            let bound = (p as f64).powf(RAMANUJAN_EXPONENT) * (1.0 + 1e-12);
            if self.alpha.norm() > bound || self.beta.norm() > bound {
                warnings.push(format!("Satake parameters exceed p^(7/64) at p = {p}"));
            }
        }
        warnings
    }

    fn sym_trace(&self, k: u32) -> Complex64 {
        (0..=k).map(|j| self.alpha.powu(k - j) * self.beta.powu(j)).sum()
    }

    pub fn eval_atom(&self, atom: &Atom) -> Result<Complex64> {
        let base = match &atom.base {
            Base::Sym(k) => self.sym_trace(*k),
            Base::Gl1 => Complex64::new(1.0, 0.0),
            Base::Opaque(l) => *self.opaque_values.get(&l.name).ok_or_else(|| Error::MissingValue(format!("opaque:{}", l.name)))?,
        };
        let mut value = base * self.omega_value.powi(atom.omega as i32);
        for (sym, e) in atom.aux.iter() {
            let v = self.aux_values.get(sym.name()).ok_or_else(|| Error::MissingValue(sym.name().to_string()))?;
            value *= v.powu(e);
        }
        Ok(value)
    }
}

/// Character of a virtual representation at a Satake point.
pub fn eval_char(v: &VirtualRep, s: &SatakePoint) -> Result<Complex64> {
    v.terms().try_fold(Complex64::new(0.0, 0.0), |acc, (a, m)| Ok(acc + s.eval_atom(a)? * m as f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repring::atom::{AuxChar, AuxSymbol};

    #[test]
    fn trace_of_pi_at_identity() {
        let s = SatakePoint::new(Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0));
        assert_eq!(eval_char(&VirtualRep::from_atom(Atom::pi()), &s).unwrap(), Complex64::new(2.0, 0.0));
    }

    #[test]
    fn sym2_on_unit_circle() {
        for theta in [0.1, 0.7, 2.0, 3.0] {
            let s = SatakePoint::new(Complex64::from_polar(1.0, theta), Complex64::from_polar(1.0, -theta));
            let v = eval_char(&VirtualRep::from_atom(Atom::sym(2)), &s).unwrap();
            assert!((v - Complex64::new(1.0 + 2.0 * (2.0 * theta).cos(), 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn missing_aux_value_is_named() {
        let s = SatakePoint::new(Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0));
        let a = Atom::pi().twist_aux(&AuxChar::power(&AuxSymbol::mu(), 1));
        match s.eval_atom(&a) {
            Err(Error::MissingValue(name)) => assert_eq!(name, "mu"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn validation_flags_large_parameters() {
        let s = SatakePoint::new(Complex64::new(3.0, 0.0), Complex64::new(0.5, 0.0)).at_prime(5);
        assert_eq!(s.validate().len(), 1);
        let ok = SatakePoint::new(Complex64::from_polar(1.0, 0.3), Complex64::from_polar(1.0, -0.3)).at_prime(5);
        assert!(ok.validate().is_empty());
    }
}
