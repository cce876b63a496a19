//! Pole orders at s = 1 of partial L-functions of virtual representations.
//!
//! Finitely many Euler factors (the ramified places and the archimedean place)
//! never change the order at s = 1, so every identity here is for the partial
//! L-functions and the bad set is not modelled.

use std::collections::BTreeMap;

use serde_json::json;

use crate::assumption::{RepType, TypeAssumption};
use crate::error::{Error, Result};
use crate::repring::{canonical_atom, dual, reduce_rep, tensor_power, Atom, Base, VirtualRep};

/// One factor L(s, left × right)^multiplicity, or L(s, left)^multiplicity when `right` is `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleFactor {
    pub left: Atom,
    pub right: Option<Atom>,
    pub multiplicity: i64,
    /// 0 or 1: every factor has at most a simple pole at s = 1.
    pub pole_contrib: u8,
}

impl PoleFactor {
    pub fn render(&self) -> String {
        let inner = match &self.right {
            Some(r) => format!("{}×{}", self.left.short(), r.short()),
            None => self.left.short(),
        };
        match self.multiplicity {
            1 => format!("L({inner})"),
            m => format!("L({inner})^{m}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleCertificate {
    pub factors: Vec<PoleFactor>,
    pub total_order: i64,
    pub assumption: TypeAssumption,
    pub note: Option<String>,
}

impl PoleCertificate {
    fn from_factors(map: BTreeMap<(Atom, Option<Atom>), (i64, u8)>, assumption: TypeAssumption) -> Self {
        let factors: Vec<PoleFactor> = map
            .into_iter()
            .filter(|(_, (m, _))| *m != 0)
            .map(|((left, right), (multiplicity, pole_contrib))| PoleFactor { left, right, multiplicity, pole_contrib })
            .collect();
        let total_order = factors.iter().map(|f| f.multiplicity * f.pole_contrib as i64).sum();
        PoleCertificate { factors, total_order, assumption, note: None }
    }

    pub fn multiplicities(&self) -> Vec<i64> {
        self.factors.iter().map(|f| f.multiplicity).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let factors: Vec<_> = self
            .factors
            .iter()
            .map(|f| {
                json!({
                    "left": f.left.to_string(),
                    "right": f.right.as_ref().map(|r| r.to_string()),
                    "mult": f.multiplicity,
                    "pole": f.pole_contrib,
                })
            })
            .collect();
        json!({ "factors": factors, "total": self.total_order })
    }
}

/// Canonical-order rendering, e.g. `L(Sym3) · L(pi⊗w)^2`.
pub fn certificate_render(c: &PoleCertificate) -> String {
    c.factors.iter().map(PoleFactor::render).collect::<Vec<_>>().join(" · ")
}

fn check_cuspidal(a: &Atom, t: &TypeAssumption) -> Result<()> {
    let max_degree = match t.rep_type {
        RepType::GeneralNonSolvable => 4,
        RepType::Octahedral => 3,
        RepType::Tetrahedral => 2,
        RepType::Dihedral => return Err(Error::MonomialExcluded),
    };
    match a.base {
        Base::Sym(k) if k > max_degree => Err(Error::UnknownCuspidality(a.to_string())),
        _ => Ok(()),
    }
}

fn gl1_trivial(a: &Atom, t: &TypeAssumption) -> bool {
    let c = canonical_atom(a, t);
    c.omega == 0 && c.aux.is_identity()
}

/// Fold L(s, x × y) into canonical form: twists move onto the right-hand atom and a
/// GL(1) partner folds into the standard L-function of the other atom.
fn pair_factor(x: &Atom, y: &Atom, t: &TypeAssumption) -> Result<((Atom, Option<Atom>), u8)> {
    for a in [x, y] {
        if !a.is_gl1() {
            check_cuspidal(a, t)?;
        }
    }
    let factor = match (x.is_gl1(), y.is_gl1()) {
        (true, true) | (true, false) | (false, true) => {
            let (chi, other) = if x.is_gl1() { (x, y) } else { (y, x) };
            let left = canonical_atom(&other.clone().twist(chi.omega, &chi.aux), t);
            let pole = u8::from(left.is_gl1() && gl1_trivial(&left, t));
            ((left, None), pole)
        }
        (false, false) => {
            let (l, r) = if x.untwisted() <= y.untwisted() { (x, y) } else { (y, x) };
            let left = l.untwisted();
            let right = canonical_atom(&r.clone().twist(l.omega, &l.aux), t);
            let pole = u8::from(right == canonical_atom(&dual(&left), t));
            ((left, Some(right)), pole)
        }
    };
    Ok(factor)
}

fn guard(t: &TypeAssumption) -> Result<()> {
    if t.rep_type == RepType::Dihedral {
        return Err(Error::MonomialExcluded);
    }
    Ok(())
}

/// Order at s = 1 of L(s, A × B), expanded bilinearly over reduced atoms.
pub fn rs_pole_order(a: &VirtualRep, b: &VirtualRep, t: &TypeAssumption) -> Result<PoleCertificate> {
    guard(t)?;
    let (a, b) = (reduce_rep(a, t)?.canonical_under(t), reduce_rep(b, t)?.canonical_under(t));
    let mut map: BTreeMap<(Atom, Option<Atom>), (i64, u8)> = BTreeMap::new();
    for (x, mx) in a.terms() {
        for (y, my) in b.terms() {
            let (key, pole) = pair_factor(x, y, t)?;
            map.entry(key).or_insert((0, pole)).0 += mx * my;
        }
    }
    Ok(PoleCertificate::from_factors(map, *t))
}

/// Order at s = 1 of the standard L-function L(s, A).
pub fn std_pole_order(a: &VirtualRep, t: &TypeAssumption) -> Result<PoleCertificate> {
    guard(t)?;
    let a = reduce_rep(a, t)?.canonical_under(t);
    let mut map: BTreeMap<(Atom, Option<Atom>), (i64, u8)> = BTreeMap::new();
    for (x, m) in a.terms() {
        let pole = if x.is_gl1() {
            u8::from(gl1_trivial(x, t))
        } else {
            check_cuspidal(x, t)?;
            0
        };
        map.entry((x.clone(), None)).or_insert((0, pole)).0 += m;
    }
    Ok(PoleCertificate::from_factors(map, *t))
}

/// ord_{s=1} L(s, π^{×k}) for 2 ≤ k ≤ 8.
///
/// For k ≤ 4 the certificate is the full decomposition of π^{⊗k} (standard
/// L-functions), cross-checked against the Rankin–Selberg split. For k ≥ 5 it is
/// L(s, π^{⊗⌈k/2⌉} × π^{⊗⌊k/2⌋}).
pub fn tensor_power_pole(k: u32, t: &TypeAssumption) -> Result<PoleCertificate> {
    guard(t)?;
    if !(2..=8).contains(&k) {
        return Err(Error::InvalidArgument(format!("k = {k} is outside 2..=8")));
    }
    // The displayed octahedral relation leaves the Sym² constituent of Sym⁴ only
    // up to a quadratic twist, which decides Sym² × Sym² pairings at k = 8.
    if k == 8 && t.rep_type == RepType::Octahedral {
        return Err(Error::Undecided(
            "Sym2(pi) against the Sym2 constituent of Sym4(pi) for octahedral π".into(),
        ));
    }
    let rs = rs_pole_order(&tensor_power(k.div_ceil(2))?, &tensor_power(k / 2)?, t)?;
    let mut cert = if k <= 4 {
        let direct = std_pole_order(&tensor_power(k)?, t)?;
        if direct.total_order != rs.total_order {
            return Err(Error::Inconsistent(format!(
                "k = {k}: standard route gives {}, Rankin–Selberg route gives {}",
                direct.total_order, rs.total_order
            )));
        }
        direct
    } else {
        rs
    };
    cert.note = match (k, t.rep_type) {
        (5, _) => Some("k = 5 derived here; outside the reference table".into()),
        (6, RepType::Octahedral) | (8, RepType::Tetrahedral) => {
            Some(format!("derived for {} π; outside the reference table", t.rep_type))
        }
        _ => None,
    };
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repring::{AuxChar, AuxSymbol};

    fn general() -> TypeAssumption {
        TypeAssumption::self_dual(RepType::GeneralNonSolvable)
    }

    fn one(a: Atom) -> VirtualRep {
        VirtualRep::from_atom(a)
    }

    #[test]
    fn rankin_selberg_of_pi_with_itself() {
        assert_eq!(rs_pole_order(&one(Atom::pi()), &one(Atom::pi()), &general()).unwrap().total_order, 1);
        let nsd = TypeAssumption::non_self_dual(RepType::GeneralNonSolvable);
        assert_eq!(rs_pole_order(&one(Atom::pi()), &one(Atom::pi()), &nsd).unwrap().total_order, 0);
    }

    // Oracle: (π⊗μ ⊕ π⊗μ²)^{×2} has a pole exactly for pairs whose μ-exponents sum to 0 mod 3,
    // i.e. (μ, μ²) and (μ², μ).
    #[test]
    fn tetrahedral_sym3_square() {
        let tetra = TypeAssumption::self_dual(RepType::Tetrahedral);
        let mut brute = 0;
        for e1 in [1, 2] {
            for e2 in [1, 2] {
                brute += i64::from((e1 + e2) % 3 == 0);
            }
        }
        let c = rs_pole_order(&one(Atom::sym(3)), &one(Atom::sym(3)), &tetra).unwrap();
        assert_eq!(c.total_order, brute);
        assert_eq!(brute, 2);
    }

    #[test]
    fn distinct_cuspidal_atoms_have_no_pole() {
        let c = rs_pole_order(&one(Atom::sym(4)), &one(Atom::sym(2).twist_omega(1)), &general()).unwrap();
        assert_eq!(c.total_order, 0);
    }

    #[test]
    fn standard_l_functions() {
        assert_eq!(std_pole_order(&one(Atom::omega_power(2)), &general()).unwrap().total_order, 1);
        assert_eq!(std_pole_order(&one(Atom::sym(3).twist_omega(3)), &general()).unwrap().total_order, 0);
        let cubic = TypeAssumption::new(RepType::GeneralNonSolvable, false, Some(3)).unwrap();
        assert_eq!(std_pole_order(&one(Atom::omega_power(1)), &cubic).unwrap().total_order, 0);
        assert_eq!(std_pole_order(&one(Atom::omega_power(3)), &cubic).unwrap().total_order, 1);
    }

    #[test]
    fn unknown_cuspidality_and_dihedral() {
        assert!(matches!(
            rs_pole_order(&one(Atom::sym(5)), &one(Atom::pi()), &general()),
            Err(Error::UnknownCuspidality(_))
        ));
        let dihedral = TypeAssumption::new(RepType::Dihedral, true, Some(2)).unwrap();
        assert!(matches!(tensor_power_pole(4, &dihedral), Err(Error::MonomialExcluded)));
        assert!(matches!(std_pole_order(&one(Atom::pi()), &dihedral), Err(Error::MonomialExcluded)));
    }

    #[test]
    fn pole_table() {
        let g = general();
        let tetra = TypeAssumption::self_dual(RepType::Tetrahedral);
        let octa = TypeAssumption::self_dual(RepType::Octahedral);
        let nsd = TypeAssumption::non_self_dual(RepType::GeneralNonSolvable);
        let order = |k, t: &TypeAssumption| tensor_power_pole(k, t).unwrap().total_order;
        assert_eq!(order(2, &g), 1);
        assert_eq!(order(2, &nsd), 0);
        assert_eq!(order(3, &g), 0);
        assert_eq!(order(3, &nsd), 0);
        assert_eq!(order(4, &g), 2);
        assert_eq!(order(5, &g), 0);
        assert_eq!(order(6, &g), 5);
        assert_eq!(order(6, &tetra), 6);
        for t in [g, tetra, octa] {
            assert_eq!(order(7, &t), 0);
        }
        assert_eq!(order(8, &g), 14);
    }

    // Haar moments E[tr^k] over SU(2) are the Catalan numbers; over the binary
    // tetrahedral (order 24) and binary octahedral (order 48) groups they are
    // class sums of tr^k. These count the trivial constituents of π^{⊗k}.
    #[test]
    fn pole_orders_match_group_moments() {
        let catalan = [(2, 1), (4, 2), (6, 5), (8, 14)];
        for (k, c) in catalan {
            assert_eq!(tensor_power_pole(k, &general()).unwrap().total_order, c);
        }
        // (class size, trace)
        let binary_tetrahedral: [(f64, f64); 5] = [(1.0, 2.0), (1.0, -2.0), (6.0, 0.0), (8.0, -1.0), (8.0, 1.0)];
        let s2 = std::f64::consts::SQRT_2;
        let binary_octahedral: [(f64, f64); 8] =
            [(1.0, 2.0), (1.0, -2.0), (6.0, 0.0), (6.0, s2), (6.0, -s2), (8.0, -1.0), (8.0, 1.0), (12.0, 0.0)];
        let moment = |classes: &[(f64, f64)], order: f64, k: i32| -> i64 {
            (classes.iter().map(|(n, tr)| n * tr.powi(k)).sum::<f64>() / order).round() as i64
        };
        let tetra = TypeAssumption::self_dual(RepType::Tetrahedral);
        let octa = TypeAssumption::self_dual(RepType::Octahedral);
        for k in 2..=8u32 {
            assert_eq!(tensor_power_pole(k, &tetra).unwrap().total_order, moment(&binary_tetrahedral, 24.0, k as i32), "tetrahedral k={k}");
            if k < 8 {
                assert_eq!(tensor_power_pole(k, &octa).unwrap().total_order, moment(&binary_octahedral, 48.0, k as i32), "octahedral k={k}");
            }
        }
        assert!(matches!(tensor_power_pole(8, &octa), Err(Error::Undecided(_))));
    }

    #[test]
    fn certificate_multiplicities() {
        let g = general();
        let mults = |k| {
            let mut m = tensor_power_pole(k, &g).unwrap().multiplicities();
            m.sort();
            m
        };
        let sorted = |mut v: Vec<i64>| {
            v.sort();
            v
        };
        assert_eq!(mults(3), sorted(vec![1, 2]));
        assert_eq!(mults(4), sorted(vec![1, 3, 2]));
        assert_eq!(mults(6), sorted(vec![1, 4, 4]));
        assert_eq!(mults(7), sorted(vec![1, 2, 3, 2, 6, 4]));
        assert_eq!(mults(8), sorted(vec![1, 6, 9, 4, 12, 4]));
    }

    #[test]
    fn renderings() {
        let g = general();
        let nsd = TypeAssumption::non_self_dual(RepType::GeneralNonSolvable);
        assert_eq!(certificate_render(&tensor_power_pole(3, &nsd).unwrap()), "L(Sym3) · L(pi⊗w)^2");
        assert_eq!(certificate_render(&tensor_power_pole(4, &nsd).unwrap()), "L(Sym4) · L(Sym2⊗w)^3 · L(w^2)^2");
        assert_eq!(
            certificate_render(&tensor_power_pole(8, &nsd).unwrap()),
            "L(Sym4×Sym4) · L(Sym4×Sym2⊗w) · L(Sym4⊗w^2)^4 · L(Sym2×Sym2⊗w^2)^9 · L(Sym2⊗w^3)^12 · L(w^4)^4"
                .replace("L(Sym4×Sym2⊗w)", "L(Sym4×Sym2⊗w)^6")
        );
        // under trivial ω the twists collapse
        assert_eq!(certificate_render(&tensor_power_pole(3, &g).unwrap()), "L(Sym3) · L(pi)^2");
        let empty = std_pole_order(&VirtualRep::zero(), &g).unwrap();
        assert_eq!(certificate_render(&empty), "");
        assert_eq!(empty.total_order, 0);
    }

    #[test]
    fn tetrahedral_k6_certificate_shows_mu_twists() {
        let tetra = TypeAssumption::self_dual(RepType::Tetrahedral);
        let c = tensor_power_pole(6, &tetra).unwrap();
        let mu = AuxSymbol::mu();
        let trivial_twist = c.factors.iter().find(|f| f.right == Some(Atom::pi())).unwrap();
        assert_eq!((trivial_twist.multiplicity, trivial_twist.pole_contrib), (6, 1));
        let mu_twist = c.factors.iter().find(|f| f.right == Some(Atom::pi().twist_aux(&AuxChar::power(&mu, 1)))).unwrap();
        assert_eq!(mu_twist.pole_contrib, 0);
    }

    #[test]
    fn octahedral_opaque_pairs_with_itself_only_when_self_dual() {
        use crate::repring::OpaqueLabel;
        let octa = TypeAssumption::self_dual(RepType::Octahedral);
        let o = one(Atom::opaque(OpaqueLabel::monomial_pi_chi(true)));
        assert_eq!(rs_pole_order(&o, &o, &octa).unwrap().total_order, 1);
        assert_eq!(rs_pole_order(&o, &one(Atom::pi()), &octa).unwrap().total_order, 0);
    }

    #[test]
    fn json_schema() {
        let c = tensor_power_pole(8, &general()).unwrap();
        let j = c.to_json();
        assert_eq!(j["total"], 14);
        let f = &j["factors"][0];
        for key in ["left", "right", "mult", "pole"] {
            assert!(f.get(key).is_some());
        }
    }

    #[test]
    fn k_out_of_range() {
        assert!(tensor_power_pole(1, &general()).is_err());
        assert!(tensor_power_pole(9, &general()).is_err());
    }
}
