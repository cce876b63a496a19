//! Symbolic algebra of tensor and symmetric powers of the standard GL(2) object π,
//! and numeric evaluation of their characters at Satake parameters.

mod atom;
mod satake;
mod text;
mod virtual_rep;

pub use atom::{Atom, AtomKind, AuxChar, AuxSymbol, Base, OpaqueLabel};
pub use satake::{eval_char, SatakePoint, RAMANUJAN_EXPONENT};
pub use text::AuxGroup;
pub use virtual_rep::VirtualRep;

pub(crate) use virtual_rep::canonical_atom;

use num_complex::Complex64;

use crate::assumption::{RepType, TypeAssumption};
use crate::error::{Error, Result};

/// Clebsch–Gordan: Sym^a π ⊗ Sym^b π = ⊕_{j=0}^{min(a,b)} Sym^{a+b-2j} π ⊗ ω^j.
pub fn cg_pair(a: u32, b: u32) -> VirtualRep {
    (0..=a.min(b)).map(|j| (Atom::sym(a + b - 2 * j).twist_omega(j as i64), 1)).collect()
}

/// Decomposition of π^{⊗k}, 1 ≤ k ≤ 4.
pub fn tensor_power(k: u32) -> Result<VirtualRep> {
    if !(1..=4).contains(&k) {
        return Err(Error::UnsupportedDegree(k));
    }
    let pi = VirtualRep::from_atom(Atom::pi());
    let mut acc = pi.clone();
    for _ in 1..k {
        acc = acc.tensor(&pi)?;
    }
    Ok(acc)
}

/// Contragredient. For GL(2), π^∨ ≅ π ⊗ ω⁻¹, hence (Sym^k π)^∨ ≅ Sym^k π ⊗ ω^{-k}.
pub fn dual(a: &Atom) -> Atom {
    let aux = a.aux.inverse();
    match &a.base {
        Base::Sym(k) => Atom::sym(*k).twist(-(*k as i64) - a.omega, &aux),
        Base::Gl1 => Atom::trivial().twist(-a.omega, &aux),
        Base::Opaque(l) => Atom::opaque(l.dual_label()).twist(-a.omega, &aux),
    }
}

/// Replace non-cuspidal symmetric powers by their isobaric decompositions under `t`.
///
/// Tetrahedral: Sym³π ⊗ ω⁻¹ ≃ π⊗μ ⊞ π⊗μ² and Sym⁴π ⊗ ω⁻¹ ≃ Sym²π ⊞ ωμ ⊞ ωμ².
/// Octahedral: Sym⁴π ⊗ ω⁻¹ ≃ π(χ⁻¹)⊗ω ⊞ Sym²π.
pub fn reduce(a: &Atom, t: &TypeAssumption) -> Result<VirtualRep> {
    let Some(k) = a.sym_degree() else {
        return Ok(VirtualRep::from_atom(a.clone()));
    };
    let unsupported = || Error::UnsupportedReduction { atom: a.to_string(), rep_type: t.rep_type };
    // untwisted pieces of Sym^k π ⊗ ω^{-1}; the atom's own twist times ω is applied afterwards
    let pieces: Vec<Atom> = match (t.rep_type, k) {
        (RepType::GeneralNonSolvable, _) | (_, 1) => return Ok(VirtualRep::from_atom(a.clone())),
        (RepType::Dihedral, _) => return Err(Error::MonomialExcluded),
        (_, k) if k >= 5 => return Err(unsupported()),
        (RepType::Tetrahedral, 3) => {
            let mu = AuxSymbol::mu();
            vec![Atom::pi().twist_aux(&AuxChar::power(&mu, 1)), Atom::pi().twist_aux(&AuxChar::power(&mu, 2))]
        }
        (RepType::Tetrahedral, 4) => {
            let mu = AuxSymbol::mu();
            vec![
                Atom::sym(2),
                Atom::omega_power(1).twist_aux(&AuxChar::power(&mu, 1)),
                Atom::omega_power(1).twist_aux(&AuxChar::power(&mu, 2)),
            ]
        }
        (RepType::Octahedral, 4) => {
            vec![Atom::opaque(OpaqueLabel::monomial_pi_chi(t.self_dual)).twist_omega(1), Atom::sym(2)]
        }
        _ => return Ok(VirtualRep::from_atom(a.clone())),
    };
    Ok(pieces.into_iter().map(|p| (p.twist(a.omega + 1, &a.aux), 1)).collect())
}

/// Termwise [`reduce`].
pub fn reduce_rep(v: &VirtualRep, t: &TypeAssumption) -> Result<VirtualRep> {
    let mut out = VirtualRep::zero();
    for (a, m) in v.terms() {
        out.add_scaled(&reduce(a, t)?, m);
    }
    Ok(out)
}

/// p_k = α^k + β^k from a_p = α + β and ω(p) = αβ via Newton's recurrence
/// p_k = a_p p_{k-1} − ω(p) p_{k-2}.
pub fn power_sum(a_p: Complex64, omega_p: Complex64, k: u32) -> Complex64 {
    let (mut prev, mut cur) = (Complex64::new(2.0, 0.0), a_p);
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = a_p * cur - omega_p * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// a_p^m expanded as Σ_j C(m, j) ω(p)^j p_{m-2j}, where the middle term of an
/// even power is C(m, m/2) ω(p)^{m/2} rather than a multiple of p_0 = 2.
pub fn binomial_power_expansion(a_p: Complex64, omega_p: Complex64, m: u32) -> Complex64 {
    let mut binom = 1.0f64;
    let mut total = Complex64::new(0.0, 0.0);
    for j in 0..=m / 2 {
        let idx = m - 2 * j;
        let term = if idx == 0 { Complex64::new(1.0, 0.0) } else { power_sum(a_p, omega_p, idx) };
        total += term * omega_p.powu(j) * binom;
        binom = binom * (m - j) as f64 / (j + 1) as f64;
    }
    total
}
