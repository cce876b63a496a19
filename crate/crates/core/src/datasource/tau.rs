use super::primes::primes_up_to;
use super::{Dataset, DatasetHeader, EigenvalueRecord};
use crate::error::{Error, Result};

pub const TAU_CAP: u64 = 10_000;

/// Π_{n≥1} (1 − qⁿ) up to q^{len−1}, by Euler's pentagonal number theorem.
/// Returned sparsely as (exponent, ±1).
fn euler_product_sparse(len: usize) -> Vec<(usize, i128)> {
    let mut terms = vec![(0usize, 1i128)];
    for k in 1i64.. {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let g1 = (k * (3 * k - 1) / 2) as usize;
        let g2 = (k * (3 * k + 1) / 2) as usize;
        if g1 >= len {
            break;
        }
        terms.push((g1, sign));
        if g2 < len {
            terms.push((g2, sign));
        }
    }
    terms.sort();
    terms
}

fn mul_sparse(dense: &[i128], sparse: &[(usize, i128)]) -> Result<Vec<i128>> {
    let len = dense.len();
    let mut out = vec![0i128; len];
    for (i, &c) in dense.iter().enumerate() {
        if c == 0 {
            continue;
        }
        for &(e, s) in sparse {
            if i + e >= len {
                break;
            }
            let term = c.checked_mul(s).ok_or(Error::Overflow("τ series"))?;
            out[i + e] = out[i + e].checked_add(term).ok_or(Error::Overflow("τ series"))?;
        }
    }
    Ok(out)
}

/// τ(n) for 0 ≤ n ≤ `n_max` from Δ = q Π (1 − qⁿ)²⁴ (index 0 holds 0).
///
/// Coefficients reach about 10²⁴ at n = 10⁴, beyond i64 but far inside i128;
/// every operation is overflow-checked.
pub fn tau_coefficients(n_max: usize) -> Result<Vec<i128>> {
    if n_max == 0 {
        return Ok(vec![0]);
    }
    let euler = euler_product_sparse(n_max);
    let mut power = vec![0i128; n_max];
    power[0] = 1;
    for _ in 0..24 {
        power = mul_sparse(&power, &euler)?;
    }
    let mut tau = Vec::with_capacity(n_max + 1);
    tau.push(0);
    tau.extend(power);
    Ok(tau)
}

/// Normalized τ(p)/p^{11/2} for primes p ≤ X.
pub fn tau_ap(x: u64) -> Result<Dataset> {
    if x > TAU_CAP {
        return Err(Error::AboveCap { x, cap: TAU_CAP });
    }
    if x < 2 {
        return Err(Error::InvalidArgument(format!("X = {x} is below 2")));
    }
    let tau = tau_coefficients(x as usize)?;
    // Hecke multiplicativity at coprime indices
    if x >= 6 && tau[6] != tau[2] * tau[3] {
        return Err(Error::Inconsistent(format!("τ(6) = {} but τ(2)τ(3) = {}", tau[6], tau[2] * tau[3])));
    }
    let records = primes_up_to(x)
        .into_iter()
        .map(|p| {
            let t = tau[p as usize];
            EigenvalueRecord::real(p, t as f64 / (p as f64).powf(5.5)).with_raw(t)
        })
        .collect();
    let header = DatasetHeader { source: "tau".into(), self_dual: true, x, omega_trivial: true, skipped: Vec::new() };
    Dataset::new(header, records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    // Independent oracle: expand Π_{n<N} (1 − qⁿ)²⁴ factor by factor in big integers.
    fn tau_oracle(n_max: usize) -> Vec<BigInt> {
        let mut series = vec![BigInt::from(0); n_max];
        series[0] = BigInt::from(1);
        for n in 1..n_max {
            for _ in 0..24 {
                for i in (n..n_max).rev() {
                    let prev = series[i - n].clone();
                    series[i] -= prev;
                }
            }
        }
        let mut tau = vec![BigInt::from(0)];
        tau.extend(series);
        tau
    }

    #[test]
    fn matches_direct_product_expansion() {
        let fast = tau_coefficients(60).unwrap();
        let slow = tau_oracle(60);
        for n in 1..=60 {
            assert_eq!(BigInt::from(fast[n]), slow[n], "τ({n})");
        }
    }

    #[test]
    fn known_values() {
        let t = tau_coefficients(10).unwrap();
        assert_eq!(&t[1..=6], &[1, -24, 252, -1472, 4830, -6048]);
        assert_eq!(t[6], t[2] * t[3]);
    }

    #[test]
    fn deligne_bound() {
        let ds = tau_ap(2000).unwrap();
        assert_eq!(ds.records.len(), 303);
        assert!(ds.records.iter().all(|r| r.a.re.abs() <= 2.0));
    }

    #[test]
    fn cap() {
        assert!(matches!(tau_ap(10_001), Err(Error::AboveCap { .. })));
    }
}
