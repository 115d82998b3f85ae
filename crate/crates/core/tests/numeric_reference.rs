//! The numeric oracle and the exact zeta values against an independent
//! arbitrary-precision library.

use astro_float::{BigFloat as AstroFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use trigsum::arith::{rat, zeta_even_ratio, PiScaled, Rational};
use trigsum::oracle::{bits_for_digits, eval_pi_scaled, pi_value, sin_pi, BigFloat};

const RM: RoundingMode = RoundingMode::ToEven;
const PREC: usize = 512;

fn astro(r: &Rational, cc: &mut Consts) -> AstroFloat {
    let n = AstroFloat::parse(&r.numer().to_string(), Radix::Dec, PREC, RM, cc);
    let d = AstroFloat::parse(&r.denom().to_string(), Radix::Dec, PREC, RM, cc);
    n.div(&d, PREC, RM)
}

fn ours(x: &BigFloat, cc: &mut Consts) -> AstroFloat {
    astro(&x.to_rational(), cc)
}

/// `|a - b| <= 10^-digits |b|`.
fn agree(a: &AstroFloat, b: &AstroFloat, digits: i32, cc: &mut Consts) -> bool {
    let diff = a.sub(b, PREC, RM).abs();
    let tol = AstroFloat::parse(&format!("1e-{digits}"), Radix::Dec, PREC, RM, cc);
    let scale = b.abs();
    diff <= tol.mul(&scale, PREC, RM)
}

#[test]
fn pi_agrees_with_astro_float() {
    let mut cc = Consts::new().unwrap();
    let reference = cc.pi(PREC, RM);
    for digits in [20u32, 60, 100] {
        assert!(
            agree(
                &ours(&pi_value(digits), &mut cc),
                &reference,
                digits as i32,
                &mut cc
            ),
            "{digits} digits"
        );
    }
}

#[test]
fn sine_agrees_with_astro_float() {
    let mut cc = Consts::new().unwrap();
    let pi = cc.pi(PREC, RM);
    let prec = bits_for_digits(80);
    for (p, q) in [
        (1i64, 7i64),
        (3, 8),
        (5, 13),
        (11, 12),
        (13, 10),
        (-4, 9),
        (1, 200),
    ] {
        let r = rat(p, q);
        let arg = astro(&r, &mut cc).mul(&pi, PREC, RM);
        let reference = arg.sin(PREC, RM, &mut cc);
        assert!(
            agree(&ours(&sin_pi(&r, prec), &mut cc), &reference, 75, &mut cc),
            "sin({p}pi/{q})"
        );
    }
}

/// Bernoulli numbers by the Akiyama-Tanigawa algorithm (`B_1 = +1/2`).
fn bernoulli_at(n_max: usize) -> Vec<Rational> {
    let mut out = Vec::new();
    let mut a: Vec<Rational> = Vec::new();
    for m in 0..=n_max {
        a.push(Rational::new(BigInt::one(), BigInt::from(m + 1)));
        for j in (1..=m).rev() {
            a[j - 1] = Rational::from_integer(BigInt::from(j)) * (&a[j - 1] - &a[j]);
        }
        out.push(a[0].clone());
    }
    out
}

/// `zeta(s)` for even `s` by Euler-Maclaurin: the sum to `n - 1`, then the
/// integral, the half term and `terms` correction terms at `n`.
fn zeta_euler_maclaurin(s: u32, n: u64, terms: usize) -> Rational {
    let b = bernoulli_at(2 * terms);
    let nn = Rational::from_integer(BigInt::from(n));
    let inv_pow = |x: &Rational, e: u32| Rational::one() / num_traits::pow(x.clone(), e as usize);
    let mut total = (1..n).fold(Rational::zero(), |acc, k| {
        acc + inv_pow(&Rational::from_integer(k.into()), s)
    });
    total += inv_pow(&nn, s - 1) / Rational::from_integer(BigInt::from(s - 1));
    total += inv_pow(&nn, s) / Rational::from_integer(BigInt::from(2));
    // d^(2j-1)/dn^(2j-1) n^-s = -(s)_(2j-1) n^(-s-2j+1)
    let mut rising = Rational::from_integer(BigInt::from(s));
    let mut fact = Rational::from_integer(BigInt::from(2));
    for j in 1..=terms {
        let term = &b[2 * j] / &fact * &rising * inv_pow(&nn, s + 2 * j as u32 - 1);
        total += term;
        let k = 2 * j as u32;
        rising *= Rational::from_integer(BigInt::from((s + k - 1) * (s + k)));
        fact *= Rational::from_integer(BigInt::from((k + 1) * (k + 2)));
    }
    total
}

#[test]
fn even_zeta_ratios_match_euler_maclaurin() {
    let mut cc = Consts::new().unwrap();
    let pi = cc.pi(PREC, RM);
    for k in 1..=10u32 {
        let em = astro(&zeta_euler_maclaurin(2 * k, 40, 24), &mut cc);
        let mut exact = astro(&zeta_even_ratio(k), &mut cc);
        for _ in 0..2 * k {
            exact = exact.mul(&pi, PREC, RM);
        }
        assert!(agree(&em, &exact, 40, &mut cc), "zeta({})", 2 * k);
        let ours_exact = eval_pi_scaled(&PiScaled::new(zeta_even_ratio(k), 2 * k as i64), 60);
        assert!(
            agree(&ours(&ours_exact, &mut cc), &exact, 55, &mut cc),
            "zeta({})",
            2 * k
        );
    }
}

#[test]
fn euler_maclaurin_helper_is_sane() {
    let b = bernoulli_at(4);
    assert_eq!(b[1], rat(1, 2));
    assert_eq!(b[2], rat(1, 6));
    assert_eq!(b[4], rat(-1, 30));
    let z2: BigRational = zeta_euler_maclaurin(2, 30, 20);
    let approx = BigRational::new(
        BigInt::from(16449340668482264i64),
        BigInt::from(10i64).pow(16),
    );
    assert!((&z2 - approx).abs() < rat(1, 1_000_000_000_000_000));
}
