use std::cmp::{Ordering, Reverse};
use std::fmt;

use crate::error::{Error, Result};

/// A generator of the auxiliary finite-order character group (e.g. the cubic μ).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AuxSymbol {
    name: String,
    order: u32,
}

impl AuxSymbol {
    pub fn new(name: impl Into<String>, order: u32) -> Result<Self> {
        let name = name.into();
        if order < 2 {
            return Err(Error::InvalidArgument(format!("symbol `{name}` needs order ≥ 2")));
        }
        if !is_identifier(&name) || matches!(name.as_str(), "w" | "pi" | "opaque") || name.starts_with("Sym") {
            return Err(Error::InvalidArgument(format!("`{name}` is not a usable symbol name")));
        }
        Ok(AuxSymbol { name, order })
    }

    /// The order-three Hecke character μ attached to a tetrahedral π.
    pub fn mu() -> Self {
        AuxSymbol { name: "mu".into(), order: 3 }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> u32 {
        self.order
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Element of the formal abelian group generated by the auxiliary symbols.
/// Stored sorted by symbol name with exponents reduced into `1..order`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AuxChar(Vec<(AuxSymbol, u32)>);

impl AuxChar {
    pub fn identity() -> Self {
        AuxChar(Vec::new())
    }

    pub fn power(symbol: &AuxSymbol, exponent: i64) -> Self {
        let e = exponent.rem_euclid(symbol.order as i64) as u32;
        if e == 0 {
            AuxChar::identity()
        } else {
            AuxChar(vec![(symbol.clone(), e)])
        }
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&AuxSymbol, u32)> {
        self.0.iter().map(|(s, e)| (s, *e))
    }

    pub fn exponent(&self, name: &str) -> u32 {
        self.0.iter().find(|(s, _)| s.name == name).map_or(0, |(_, e)| *e)
    }

    pub fn mul(&self, other: &AuxChar) -> AuxChar {
        let mut out: Vec<(AuxSymbol, u32)> = self.0.clone();
        for (sym, e) in &other.0 {
            match out.iter_mut().find(|(s, _)| s.name == sym.name) {
                Some(slot) => slot.1 = (slot.1 + e) % sym.order,
                None => out.push((sym.clone(), *e)),
            }
        }
        out.retain(|(_, e)| *e != 0);
        out.sort();
        AuxChar(out)
    }

    pub fn inverse(&self) -> AuxChar {
        AuxChar(self.0.iter().map(|(s, e)| (s.clone(), (s.order - e) % s.order)).collect())
    }
}

/// A cuspidal representation known only by name, with a declared dual and dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpaqueLabel {
    pub name: String,
    pub dual: String,
    pub dim: u32,
}

impl OpaqueLabel {
    pub fn new(name: impl Into<String>, dual: impl Into<String>, dim: u32) -> Result<Self> {
        let (name, dual) = (name.into(), dual.into());
        if !is_identifier(&name) || !is_identifier(&dual) {
            return Err(Error::InvalidArgument(format!("bad opaque label `{name}` / `{dual}`")));
        }
        if dim == 0 {
            return Err(Error::InvalidArgument("opaque label needs dimension ≥ 1".into()));
        }
        Ok(OpaqueLabel { name, dual, dim })
    }

    /// The monomial GL(2) representation π(χ⁻¹) occurring in Sym⁴ of an octahedral π.
    /// It is its own dual when π is self-dual.
    pub fn monomial_pi_chi(self_dual: bool) -> Self {
        let dual = if self_dual { "pi_chi" } else { "pi_chi_dual" };
        OpaqueLabel { name: "pi_chi".into(), dual: dual.into(), dim: 2 }
    }

    pub fn is_self_dual(&self) -> bool {
        self.name == self.dual
    }

    pub fn dual_label(&self) -> OpaqueLabel {
        OpaqueLabel { name: self.dual.clone(), dual: self.name.clone(), dim: self.dim }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AtomKind {
    SymPow,
    OpaqueCuspidal,
    Gl1Char,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    /// Sym^k π with k ≥ 1.
    Sym(u32),
    Opaque(OpaqueLabel),
    /// The trivial GL(1) character; twists make it ω^a · η.
    Gl1,
}

/// An irreducible object: a base twisted by ω^omega and an auxiliary character.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Atom {
    pub base: Base,
    pub omega: i64,
    pub aux: AuxChar,
}

impl Atom {
    /// Sym^k π; `k = 0` gives the trivial character.
    pub fn sym(k: u32) -> Atom {
        let base = if k == 0 { Base::Gl1 } else { Base::Sym(k) };
        Atom { base, omega: 0, aux: AuxChar::identity() }
    }

    pub fn pi() -> Atom {
        Atom::sym(1)
    }

    pub fn trivial() -> Atom {
        Atom::sym(0)
    }

    /// The GL(1) character ω^a.
    pub fn omega_power(a: i64) -> Atom {
        Atom::trivial().twist_omega(a)
    }

    pub fn opaque(label: OpaqueLabel) -> Atom {
        Atom { base: Base::Opaque(label), omega: 0, aux: AuxChar::identity() }
    }

    pub fn twist_omega(mut self, a: i64) -> Atom {
        self.omega += a;
        self
    }

    pub fn twist_aux(mut self, aux: &AuxChar) -> Atom {
        self.aux = self.aux.mul(aux);
        self
    }

    /// Twist by ω^a ⊗ η in one go.
    pub fn twist(self, omega: i64, aux: &AuxChar) -> Atom {
        self.twist_omega(omega).twist_aux(aux)
    }

    pub fn kind(&self) -> AtomKind {
        match self.base {
            Base::Sym(_) => AtomKind::SymPow,
            Base::Opaque(_) => AtomKind::OpaqueCuspidal,
            Base::Gl1 => AtomKind::Gl1Char,
        }
    }

    pub fn sym_degree(&self) -> Option<u32> {
        match self.base {
            Base::Sym(k) => Some(k),
            _ => None,
        }
    }

    pub fn is_gl1(&self) -> bool {
        self.base == Base::Gl1
    }

    /// The same base with no twist.
    pub fn untwisted(&self) -> Atom {
        Atom { base: self.base.clone(), omega: 0, aux: AuxChar::identity() }
    }

    pub fn dim(&self) -> u64 {
        match &self.base {
            Base::Sym(k) => *k as u64 + 1,
            Base::Opaque(l) => l.dim as u64,
            Base::Gl1 => 1,
        }
    }

    /// Short form used in pole certificates, e.g. `Sym2⊗w^3`, `pi⊗w`, `w^4`.
    pub fn short(&self) -> String {
        let twist = self.twist_text();
        let base = match &self.base {
            Base::Sym(1) => "pi".to_string(),
            Base::Sym(k) => format!("Sym{k}"),
            Base::Opaque(l) => l.name.clone(),
            Base::Gl1 => return if twist.is_empty() { "1".into() } else { twist },
        };
        if twist.is_empty() {
            base
        } else {
            format!("{base}⊗{twist}")
        }
    }

    fn twist_text(&self) -> String {
        let mut parts = Vec::new();
        match self.omega {
            0 => {}
            1 => parts.push("w".to_string()),
            a => parts.push(format!("w^{a}")),
        }
        for (sym, e) in self.aux.iter() {
            if e == 1 {
                parts.push(sym.name().to_string());
            } else {
                parts.push(format!("{}^{e}", sym.name()));
            }
        }
        parts.join("*")
    }

    fn sort_key(&self) -> (AtomKind, Reverse<u32>, Option<&OpaqueLabel>, i64, &AuxChar) {
        let (deg, label) = match &self.base {
            Base::Sym(k) => (*k, None),
            Base::Opaque(l) => (0, Some(l)),
            Base::Gl1 => (0, None),
        };
        (self.kind(), Reverse(deg), label, self.omega, &self.aux)
    }
}

impl Ord for Atom {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Atom {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical text syntax: `Sym3(pi)*w^-1*mu^2`, `pi*w`, `w^2`, `opaque:pi_chi`, `1`.
impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let twist = self.twist_text();
        let base = match &self.base {
            Base::Sym(1) => "pi".to_string(),
            Base::Sym(k) => format!("Sym{k}(pi)"),
            Base::Opaque(l) => format!("opaque:{}", l.name),
            Base::Gl1 => return f.write_str(if twist.is_empty() { "1" } else { &twist }),
        };
        if twist.is_empty() {
            f.write_str(&base)
        } else {
            write!(f, "{base}*{twist}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aux_exponents_reduce_mod_order() {
        let mu = AuxSymbol::mu();
        assert_eq!(AuxChar::power(&mu, 3), AuxChar::identity());
        assert_eq!(AuxChar::power(&mu, -1), AuxChar::power(&mu, 2));
        let m2 = AuxChar::power(&mu, 2);
        assert_eq!(m2.mul(&m2), AuxChar::power(&mu, 1));
        assert!(m2.mul(&m2.inverse()).is_identity());
    }

    #[test]
    fn dimensions() {
        assert_eq!(Atom::sym(4).dim(), 5);
        assert_eq!(Atom::omega_power(3).dim(), 1);
        assert_eq!(Atom::opaque(OpaqueLabel::monomial_pi_chi(true)).dim(), 2);
        assert_eq!(Atom::sym(0).kind(), AtomKind::Gl1Char);
        assert_eq!(Atom::sym(0).sym_degree(), None);
    }

    #[test]
    fn canonical_order() {
        let mut v = [Atom::omega_power(2), Atom::pi().twist_omega(1), Atom::sym(4), Atom::sym(2).twist_omega(1)];
        v.sort();
        let names: Vec<String> = v.iter().map(|a| a.to_string()).collect();
        assert_eq!(names, ["Sym4(pi)", "Sym2(pi)*w", "pi*w", "w^2"]);
    }

    #[test]
    fn text_forms() {
        let mu = AuxSymbol::mu();
        let a = Atom::sym(3).twist(-1, &AuxChar::power(&mu, 2));
        assert_eq!(a.to_string(), "Sym3(pi)*w^-1*mu^2");
        assert_eq!(a.short(), "Sym3⊗w^-1*mu^2");
        assert_eq!(Atom::trivial().to_string(), "1");
        assert_eq!(Atom::omega_power(1).twist_aux(&AuxChar::power(&mu, 1)).to_string(), "w*mu");
        assert_eq!(Atom::opaque(OpaqueLabel::monomial_pi_chi(true)).to_string(), "opaque:pi_chi");
    }

    #[test]
    fn symbol_names_validated() {
        assert!(AuxSymbol::new("w", 2).is_err());
        assert!(AuxSymbol::new("eta", 1).is_err());
        assert!(AuxSymbol::new("eta", 2).is_ok());
    }
}
