//! Number-theoretic utilities: Fibonacci numbers, golden-mean rational
//! approximants, and the modular congruence that labels spectral gaps.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A reduced rational flux p/q approximating the incommensurability of
/// the chain. q is the period of the potential and the number of bands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalFlux {
    p: u64,
    q: u64,
}

impl RationalFlux {
    /// Build a flux, enforcing gcd(p, q) = 1 and 0 < p < q.
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p == 0 || p >= q {
            return Err(Error::InvalidArgument(format!(
                "flux requires 0 < p < q, got {p}/{q}"
            )));
        }
        if gcd(p, q) != 1 {
            return Err(Error::InvalidArgument(format!(
                "flux {p}/{q} is not in lowest terms (gcd = {})",
                gcd(p, q)
            )));
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The flux as a float, p/q.
    pub fn value(&self) -> f64 {
        self.p as f64 / self.q as f64
    }

    /// Multiplicative inverse of p modulo q.
    pub fn p_inverse(&self) -> u64 {
        mod_inverse(self.p, self.q).expect("p coprime to q by construction")
    }
}

impl std::fmt::Display for RationalFlux {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// Largest index for which F_n fits comfortably in 64 bits.
const MAX_FIBONACCI_INDEX: u64 = 90;

/// F_n with F_0 = 0, F_1 = F_2 = 1.
pub fn fibonacci(n: u64) -> Result<u64> {
    if n > MAX_FIBONACCI_INDEX {
        return Err(Error::Overflow(format!(
            "fibonacci({n}) exceeds the 64-bit guard (n <= {MAX_FIBONACCI_INDEX})"
        )));
    }
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        let next = a + b;
        a = b;
        b = next;
    }
    Ok(a)
}

/// The golden-mean approximant F_{n-1}/F_n, valid for n >= 3.
///
/// Successive approximants alternate around (sqrt(5) - 1)/2.
pub fn golden_approximant(n: u64) -> Result<RationalFlux> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "golden_approximant requires n >= 3, got {n}"
        )));
    }
    RationalFlux::new(fibonacci(n - 1)?, fibonacci(n)?)
}

/// Euclid's algorithm.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// Inverse of a modulo m (extended Euclid), if gcd(a, m) = 1.
fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i64, (a % m) as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let quot = r0 / r1;
        (r0, r1) = (r1, r0 - quot * r1);
        (t0, t1) = (t1, t0 - quot * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i64) as u64)
}

/// Solve p*C = r (mod q) for the unique C with -q/2 < C < q/2.
///
/// This is the gap-labeling congruence: gap index r determines the
/// integer label C. For odd q the representative is always unique; for
/// even q a solution landing exactly on |C| = q/2 is rejected as
/// ambiguous rather than silently assigned a sign.
pub fn mod_solve(p: u64, q: u64, r: u64) -> Result<i64> {
    if q < 2 || gcd(p % q, q) != 1 {
        return Err(Error::InvalidArgument(format!(
            "mod_solve requires q >= 2 and gcd(p, q) = 1, got p = {p}, q = {q}"
        )));
    }
    if r == 0 || r >= q {
        return Err(Error::InvalidArgument(format!(
            "gap index must satisfy 1 <= r <= q - 1, got r = {r} for q = {q}"
        )));
    }
    let inv = mod_inverse(p, q).expect("checked coprime above");
    let c = (inv as u128 * r as u128 % q as u128) as u64;
    // Map the residue into (-q/2, q/2], then reject the q/2 boundary.
    let q_i = q as i64;
    let mut label = c as i64;
    if 2 * label > q_i {
        label -= q_i;
    }
    if q % 2 == 0 && 2 * label.unsigned_abs() as i64 == q_i {
        return Err(Error::AmbiguousLabel {
            q: q_i,
            half_q: q_i / 2,
        });
    }
    Ok(label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn fibonacci_base_cases() {
        assert_eq!(fibonacci(0).unwrap(), 0);
        assert_eq!(fibonacci(1).unwrap(), 1);
        assert_eq!(fibonacci(2).unwrap(), 1);
        assert_eq!(fibonacci(7).unwrap(), 13);
        assert_eq!(fibonacci(10).unwrap(), 55);
    }

    #[test]
    fn fibonacci_overflow_guard() {
        assert_eq!(fibonacci(90).unwrap(), 2_880_067_194_370_816_120);
        assert!(matches!(fibonacci(91), Err(Error::Overflow(_))));
    }

    #[test]
    fn golden_approximants() {
        let f = golden_approximant(7).unwrap();
        assert_eq!((f.p(), f.q()), (8, 13));
        let f = golden_approximant(10).unwrap();
        assert_eq!((f.p(), f.q()), (34, 55));
        let f = golden_approximant(3).unwrap();
        assert_eq!((f.p(), f.q()), (1, 2));
        assert!(golden_approximant(2).is_err());
    }

    #[test]
    fn golden_converges_alternating() {
        let sigma = (5.0_f64.sqrt() - 1.0) / 2.0;
        let mut prev_err = f64::INFINITY;
        let mut prev_sign = 0.0;
        for n in 3..=20 {
            let f = golden_approximant(n).unwrap();
            let err = f.value() - sigma;
            assert!(err.abs() < prev_err, "convergence must be monotone");
            if prev_sign != 0.0 {
                assert!(err * prev_sign < 0.0, "approximants must alternate sides");
            }
            prev_err = err.abs();
            prev_sign = err;
        }
    }

    #[test]
    fn mod_solve_known_labels() {
        // Brute-force-checkable cases: p*C = r (mod q) with |C| < q/2.
        assert_eq!(mod_solve(1, 3, 1).unwrap(), 1);
        assert_eq!(mod_solve(8, 13, 3).unwrap(), 2);
        assert_eq!(mod_solve(8, 13, 5).unwrap(), -1);
        assert_eq!(mod_solve(8, 13, 1).unwrap(), 5);
        assert_eq!(mod_solve(8, 13, 12).unwrap(), -5);
    }

    #[test]
    fn mod_solve_matches_brute_force() {
        for &(p, q) in &[(1u64, 3u64), (2, 5), (5, 8), (8, 13), (34, 55)] {
            for r in 1..q {
                let c = mod_solve(p, q, r).unwrap();
                let brute = (-((q as i64) / 2)..=(q as i64) / 2)
                    .find(|&c| (p as i64 * c - r as i64).rem_euclid(q as i64) == 0)
                    .unwrap();
                assert_eq!(c, brute, "p={p} q={q} r={r}");
            }
        }
    }

    #[test]
    fn mod_solve_even_q_ambiguity() {
        // q = 2, r = 1: only |C| = 1 = q/2 solves it.
        assert!(matches!(
            mod_solve(1, 2, 1),
            Err(Error::AmbiguousLabel { .. })
        ));
        // q = 8, p = 3: r = 4 forces C = +-4.
        assert!(matches!(
            mod_solve(3, 8, 4),
            Err(Error::AmbiguousLabel { .. })
        ));
        // but other gaps of q = 8 are fine.
        assert_eq!(mod_solve(3, 8, 3).unwrap(), 1);
    }

    #[test]
    fn flux_invariants() {
        assert!(RationalFlux::new(2, 4).is_err());
        assert!(RationalFlux::new(0, 5).is_err());
        assert!(RationalFlux::new(5, 5).is_err());
        assert!(RationalFlux::new(7, 5).is_err());
        let f = RationalFlux::new(8, 13).unwrap();
        assert_eq!(f.p_inverse(), 5); // 8 * 5 = 40 = 3 * 13 + 1
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn mod_solve_satisfies_congruence(q in 3u64..500, p in 1u64..500, r in 1u64..500) {
            let p = p % q;
            let r = 1 + r % (q - 1);
            prop_assume!(p > 0 && gcd(p, q) == 1);
            if let Ok(c) = mod_solve(p, q, r) {
                let lhs = (p as i64 * c).rem_euclid(q as i64);
                prop_assert_eq!(lhs, (r as i64).rem_euclid(q as i64));
                prop_assert!(2 * c.abs() < q as i64);
            }
        }

        #[test]
        fn mod_solve_antisymmetric_odd_q(q in 1u64..250, p in 1u64..500, r in 1u64..500) {
            let q = 2 * q + 1;
            let p = 1 + p % (q - 1);
            let r = 1 + r % (q - 1);
            prop_assume!(gcd(p, q) == 1);
            let c = mod_solve(p, q, r).unwrap();
            let c_mirror = mod_solve(p, q, q - r).unwrap();
            prop_assert_eq!(c, -c_mirror);
        }
    }
}
