use rayon::prelude::*;

use super::primes::primes_up_to;
use super::{Dataset, DatasetHeader, EigenvalueRecord};
use crate::error::{Error, Result};

pub const EC_CAP: u64 = 100_000;

/// y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Weierstrass {
    pub a1: i64,
    pub a2: i64,
    pub a3: i64,
    pub a4: i64,
    pub a6: i64,
}

impl Weierstrass {
    /// y² = x³ + A·x + B
    pub fn short(a: i64, b: i64) -> Self {
        Weierstrass { a1: 0, a2: 0, a3: 0, a4: a, a6: b }
    }

    /// The curve 11a1: y² + y = x³ − x² − 10x − 20.
    pub fn curve_11a1() -> Self {
        Weierstrass { a1: 0, a2: -1, a3: 1, a4: -10, a6: -20 }
    }

    fn b_invariants(&self) -> (i128, i128, i128, i128) {
        let [a1, a2, a3, a4, a6] = [self.a1, self.a2, self.a3, self.a4, self.a6].map(i128::from);
        let b2 = a1 * a1 + 4 * a2;
        let b4 = 2 * a4 + a1 * a3;
        let b6 = a3 * a3 + 4 * a6;
        let b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        (b2, b4, b6, b8)
    }

    pub fn discriminant(&self) -> i128 {
        let (b2, b4, b6, b8) = self.b_invariants();
        -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    }

    /// #E(F_p) including the point at infinity, for p ∤ Δ.
    pub fn count_points(&self, p: u64) -> u64 {
        if p == 2 {
            return self.count_points_naive(p);
        }
        // (2y + a1 x + a3)² = 4x³ + b2 x² + 2 b4 x + b6
        let (b2, b4, b6, _) = self.b_invariants();
        let pi = p as i128;
        let m = |v: i128| v.rem_euclid(pi) as u64;
        let (c2, c1, c0) = (m(b2), m(2 * b4), m(b6));
        let mut square = vec![false; p as usize];
        for y in 0..p {
            square[(y * y % p) as usize] = true;
        }
        let mut total: i64 = 0;
        for x in 0..p {
            let f = ((4 * x % p * x % p * x) % p + c2 * x % p * x % p + c1 * x % p + c0) % p;
            total += match f {
                0 => 1,
                v if square[v as usize] => 2,
                _ => 0,
            };
        }
        total as u64 + 1
    }

    /// Enumerate all affine (x, y) ∈ F_p².
    pub fn count_points_naive(&self, p: u64) -> u64 {
        let pi = p as i128;
        let [a1, a2, a3, a4, a6] = [self.a1, self.a2, self.a3, self.a4, self.a6].map(i128::from);
        let mut count = 1;
        for x in 0..pi {
            for y in 0..pi {
                let lhs = y * y + a1 * x * y + a3 * y;
                let rhs = x * x * x + a2 * x * x + a4 * x + a6;
                if (lhs - rhs).rem_euclid(pi) == 0 {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn a_p(&self, p: u64) -> i64 {
        p as i64 + 1 - self.count_points(p) as i64
    }

    fn label(&self) -> String {
        format!("ec({} {} {} {} {})", self.a1, self.a2, self.a3, self.a4, self.a6)
    }
}

/// Normalized a_p/√p for good primes p ≤ X of the short model y² = x³ + Ax + B
/// (p ∤ 2·disc, so p = 2 is always skipped).
pub fn ec_ap(a: i64, b: i64, x: u64) -> Result<Dataset> {
    ec_ap_curve(&Weierstrass::short(a, b), x)
}

/// Normalized a_p/√p for every prime p ≤ X not dividing the discriminant.
pub fn ec_ap_curve(curve: &Weierstrass, x: u64) -> Result<Dataset> {
    let disc = curve.discriminant();
    if disc == 0 {
        return Err(Error::SingularCurve);
    }
    if x < 5 {
        return Err(Error::InvalidArgument(format!("X = {x} is below 5")));
    }
    if x > EC_CAP {
        return Err(Error::AboveCap { x, cap: EC_CAP });
    }
    let (good, bad): (Vec<u64>, Vec<u64>) = primes_up_to(x).into_iter().partition(|&p| disc % p as i128 != 0);
    let records: Vec<EigenvalueRecord> = good
        .par_iter()
        .map(|&p| {
            let ap = curve.a_p(p);
            EigenvalueRecord::real(p, ap as f64 / (p as f64).sqrt()).with_raw(ap as i128)
        })
        .collect();
    let header = DatasetHeader {
        source: curve.label(),
        self_dual: true,
        x,
        omega_trivial: true,
        skipped: bad,
    };
    Dataset::new(header, records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_11a1_small_primes() {
        let e = Weierstrass::curve_11a1();
        assert_eq!(e.discriminant(), -161051); // −11⁵
        assert_eq!(e.a_p(2), -2);
        assert_eq!(e.a_p(3), -1);
        assert_eq!(e.a_p(5), 1);
        assert_eq!(e.a_p(7), -2);
        assert_eq!(e.a_p(13), 4);
    }

    #[test]
    fn legendre_count_matches_enumeration() {
        let curves = [Weierstrass::curve_11a1(), Weierstrass::short(-1, 1), Weierstrass { a1: 1, a2: 0, a3: 1, a4: 4, a6: -6 }];
        for e in curves {
            for p in primes_up_to(200) {
                if e.discriminant() % p as i128 != 0 {
                    assert_eq!(e.count_points(p), e.count_points_naive(p), "p = {p}");
                }
            }
        }
    }

    #[test]
    fn short_model_of_11a1_agrees_away_from_2_and_3() {
        // completing the square and cube: y² = x³ − 27c4·x − 54c6 with c4 = 496, c6 = 20008
        let short = Weierstrass::short(-27 * 496, -54 * 20008);
        let ds = ec_ap(short.a4, short.a6, 500).unwrap();
        assert!(ds.header.skipped.contains(&2) && ds.header.skipped.contains(&3) && ds.header.skipped.contains(&11));
        let e = Weierstrass::curve_11a1();
        for r in &ds.records {
            assert_eq!(r.raw, Some(e.a_p(r.p) as i128), "p = {}", r.p);
        }
    }

    #[test]
    fn bad_primes_absent_and_hasse_holds() {
        let ds = ec_ap_curve(&Weierstrass::curve_11a1(), 2000).unwrap();
        assert_eq!(ds.header.skipped, vec![11]);
        assert!(ds.records.iter().all(|r| r.p != 11));
        for r in &ds.records {
            let raw = r.raw.unwrap();
            assert!(raw * raw <= 4 * r.p as i128);
            assert!(r.a.re.abs() <= 2.0);
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(ec_ap(0, 0, 100), Err(Error::SingularCurve)));
        assert!(matches!(ec_ap(-1, 1, 200_000), Err(Error::AboveCap { .. })));
        assert!(ec_ap(-1, 1, 3).is_err());
    }
}
