use std::collections::BTreeMap;

use super::atom::{is_identifier, Atom, AuxChar, AuxSymbol, OpaqueLabel};
use crate::assumption::{RepType, TypeAssumption};
use crate::error::{Error, Result};

/// The auxiliary symbols and opaque labels declared for a session.
/// Atom text mentioning anything else is rejected.
#[derive(Clone, Debug, Default)]
pub struct AuxGroup {
    symbols: BTreeMap<String, AuxSymbol>,
    opaque: BTreeMap<String, OpaqueLabel>,
}

impl AuxGroup {
    /// Symbols the reductions under `t` introduce: μ for tetrahedral π, π(χ⁻¹) for octahedral π.
    pub fn for_assumption(t: &TypeAssumption) -> Self {
        let mut g = AuxGroup::default();
        match t.rep_type {
            RepType::Tetrahedral => g.declare_symbol(AuxSymbol::mu()),
            RepType::Octahedral => g.declare_opaque(OpaqueLabel::monomial_pi_chi(t.self_dual)),
            _ => {}
        }
        g
    }

    pub fn declare_symbol(&mut self, symbol: AuxSymbol) {
        self.symbols.insert(symbol.name().to_string(), symbol);
    }

    pub fn declare_opaque(&mut self, label: OpaqueLabel) {
        if !label.is_self_dual() {
            let d = label.dual_label();
            self.opaque.insert(d.name.clone(), d);
        }
        self.opaque.insert(label.name.clone(), label);
    }

    pub fn symbol(&self, name: &str) -> Option<&AuxSymbol> {
        self.symbols.get(name)
    }

    /// Parse the atom syntax `Sym3(pi)*w^-1*mu^2`, `pi`, `w^2`, `opaque:pi_chi`, `1`.
    pub fn parse_atom(&self, input: &str) -> Result<Atom> {
        let err = |reason: String| Error::Parse { input: input.to_string(), reason };
        let mut base: Option<Atom> = None;
        let mut omega = 0i64;
        let mut aux = AuxChar::identity();
        for raw in input.split('*') {
            let tok = raw.trim();
            if tok.is_empty() {
                return Err(err("empty factor".into()));
            }
            if let Some(b) = self.parse_base(tok).map_err(err)? {
                if base.replace(b).is_some() {
                    return Err(err("more than one base factor".into()));
                }
                continue;
            }
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => (n.trim(), e.trim().parse::<i64>().map_err(|_| err(format!("bad exponent in `{tok}`")))?),
                None => (tok, 1),
            };
            if name == "w" {
                omega += exp;
            } else if let Some(sym) = self.symbols.get(name) {
                aux = aux.mul(&AuxChar::power(sym, exp));
            } else {
                return Err(err(format!("unknown symbol `{name}`")));
            }
        }
        Ok(base.unwrap_or_else(Atom::trivial).twist(omega, &aux))
    }

    fn parse_base(&self, tok: &str) -> std::result::Result<Option<Atom>, String> {
        if tok == "pi" {
            return Ok(Some(Atom::pi()));
        }
        if tok == "1" {
            return Ok(Some(Atom::trivial()));
        }
        if let Some(label) = tok.strip_prefix("opaque:") {
            return match self.opaque.get(label.trim()) {
                Some(l) => Ok(Some(Atom::opaque(l.clone()))),
                None if is_identifier(label.trim()) => Err(format!("undeclared opaque label `{label}`")),
                None => Err(format!("bad opaque label `{label}`")),
            };
        }
        if let Some(rest) = tok.strip_prefix("Sym") {
            let deg = rest
                .strip_suffix("(pi)")
                .and_then(|d| d.trim().parse::<u32>().ok())
                .ok_or_else(|| format!("expected SymK(pi), got `{tok}`"))?;
            return Ok(Some(Atom::sym(deg)));
        }
        Ok(None)
    }
}
