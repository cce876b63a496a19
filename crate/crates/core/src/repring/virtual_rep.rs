use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::atom::{Atom, AuxChar, Base};
use super::cg_pair;
use super::text::AuxGroup;
use crate::assumption::{RepType, TypeAssumption};
use crate::error::{Error, Result};

/// Integer combination of atoms; zero multiplicities are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VirtualRep {
    terms: BTreeMap<Atom, i64>,
}

#[derive(Serialize, Deserialize)]
struct Term {
    atom: String,
    mult: i64,
}

impl VirtualRep {
    pub fn zero() -> Self {
        VirtualRep::default()
    }

    pub fn from_atom(atom: Atom) -> Self {
        let mut v = VirtualRep::zero();
        v.add_atom(atom, 1);
        v
    }

    pub fn add_atom(&mut self, atom: Atom, mult: i64) {
        if mult == 0 {
            return;
        }
        let slot = self.terms.entry(atom).or_insert(0);
        *slot += mult;
        if *slot == 0 {
            self.terms.retain(|_, m| *m != 0);
        }
    }

    pub fn add(&mut self, other: &VirtualRep) {
        self.add_scaled(other, 1);
    }

    pub fn add_scaled(&mut self, other: &VirtualRep, factor: i64) {
        for (atom, m) in &other.terms {
            self.add_atom(atom.clone(), m * factor);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Atom, i64)> {
        self.terms.iter().map(|(a, m)| (a, *m))
    }

    pub fn multiplicity(&self, atom: &Atom) -> i64 {
        self.terms.get(atom).copied().unwrap_or(0)
    }

    /// Σ multiplicity × dim(atom).
    pub fn dim(&self) -> i64 {
        self.terms.iter().map(|(a, m)| m * a.dim() as i64).sum()
    }

    pub fn twist(&self, omega: i64, aux: &AuxChar) -> VirtualRep {
        let mut out = VirtualRep::zero();
        for (a, m) in &self.terms {
            out.add_atom(a.clone().twist(omega, aux), *m);
        }
        out
    }

    /// Tensor product, decomposing Sym^a ⊗ Sym^b by Clebsch–Gordan.
    pub fn tensor(&self, other: &VirtualRep) -> Result<VirtualRep> {
        let mut out = VirtualRep::zero();
        for (x, mx) in &self.terms {
            for (y, my) in &other.terms {
                out.add_scaled(&tensor_atoms(x, y)?, mx * my);
            }
        }
        Ok(out)
    }

    /// Rewrite every atom in the canonical form for isomorphism under `t`.
    pub fn canonical_under(&self, t: &TypeAssumption) -> VirtualRep {
        let mut out = VirtualRep::zero();
        for (a, m) in &self.terms {
            out.add_atom(canonical_atom(a, t), *m);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<Term> = self.terms.iter().map(|(a, m)| Term { atom: a.to_string(), mult: *m }).collect();
        serde_json::to_value(terms).expect("terms serialize")
    }

    pub fn from_json(value: &serde_json::Value, group: &AuxGroup) -> Result<VirtualRep> {
        let terms: Vec<Term> = serde_json::from_value(value.clone())
            .map_err(|e| Error::Parse { input: value.to_string(), reason: e.to_string() })?;
        let mut out = VirtualRep::zero();
        for t in terms {
            out.add_atom(group.parse_atom(&t.atom)?, t.mult);
        }
        Ok(out)
    }
}

impl FromIterator<(Atom, i64)> for VirtualRep {
    fn from_iter<I: IntoIterator<Item = (Atom, i64)>>(iter: I) -> Self {
        let mut v = VirtualRep::zero();
        for (a, m) in iter {
            v.add_atom(a, m);
        }
        v
    }
}

impl fmt::Display for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (a, m)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ⊕ ")?;
            }
            match m {
                1 => write!(f, "{a}")?,
                m => write!(f, "{m}·{a}")?,
            }
        }
        Ok(())
    }
}

fn tensor_atoms(x: &Atom, y: &Atom) -> Result<VirtualRep> {
    let omega = x.omega + y.omega;
    let aux = x.aux.mul(&y.aux);
    match (&x.base, &y.base) {
        (Base::Gl1, _) => Ok(VirtualRep::from_atom(y.untwisted().twist(omega, &aux))),
        (_, Base::Gl1) => Ok(VirtualRep::from_atom(x.untwisted().twist(omega, &aux))),
        (Base::Sym(a), Base::Sym(b)) => Ok(cg_pair(*a, *b).twist(omega, &aux)),
        _ => Err(Error::UnsupportedTensor(x.to_string(), y.to_string())),
    }
}

/// ω exponents are reduced modulo ord(ω). For tetrahedral π the adjoint lift
/// satisfies Sym²π ⊗ μ ≅ Sym²π, so μ-twists on Sym² are absorbed.
pub(crate) fn canonical_atom(a: &Atom, t: &TypeAssumption) -> Atom {
    let mut out = a.clone();
    out.omega = t.reduce_omega(a.omega);
    if t.rep_type == RepType::Tetrahedral && a.base == Base::Sym(2) {
        let mu_free: Vec<_> = out.aux.iter().filter(|(s, _)| s.name() != "mu").map(|(s, e)| (s.clone(), e)).collect();
        out.aux = mu_free.iter().fold(AuxChar::identity(), |acc, (s, e)| acc.mul(&AuxChar::power(s, *e as i64)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_multiplicities_are_dropped() {
        let mut v = VirtualRep::from_atom(Atom::pi());
        v.add_atom(Atom::pi(), -1);
        assert!(v.is_empty());
        assert_eq!(v, VirtualRep::zero());
    }

    #[test]
    fn tensor_with_character_is_twist() {
        let w = VirtualRep::from_atom(Atom::omega_power(2));
        let p = VirtualRep::from_atom(Atom::sym(3));
        assert_eq!(w.tensor(&p).unwrap(), VirtualRep::from_atom(Atom::sym(3).twist_omega(2)));
    }

    #[test]
    fn opaque_tensor_sym_is_unsupported() {
        let o = VirtualRep::from_atom(Atom::opaque(super::super::atom::OpaqueLabel::monomial_pi_chi(true)));
        let p = VirtualRep::from_atom(Atom::pi());
        assert!(matches!(o.tensor(&p), Err(Error::UnsupportedTensor(..))));
    }

    #[test]
    fn display() {
        let v: VirtualRep = [(Atom::sym(3), 1), (Atom::pi().twist_omega(1), 2)].into_iter().collect();
        assert_eq!(v.to_string(), "Sym3(pi) ⊕ 2·pi*w");
        assert_eq!(VirtualRep::zero().to_string(), "0");
    }

    #[test]
    fn json_roundtrip() {
        let v: VirtualRep = [(Atom::sym(4), 1), (Atom::omega_power(2), 2)].into_iter().collect();
        let j = v.to_json();
        assert_eq!(j.to_string(), r#"[{"atom":"Sym4(pi)","mult":1},{"atom":"w^2","mult":2}]"#);
        assert_eq!(VirtualRep::from_json(&j, &AuxGroup::default()).unwrap(), v);
    }
}
