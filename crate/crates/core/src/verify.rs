//! Verification suites: each collects exact identity checks, reference-table
//! comparisons or numeric cross-checks into a report.

use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::arith::{int, rat, PiScaled, Rational};
use crate::cosecant::{even_route_checks, ladder_identity_checks};
use crate::error::Error;
use crate::oracle::{
    self, cc_crosscheck, check_exact_vs_numeric, csc_crosscheck, eval_pi_scaled, raw_trig_sum,
    ts_crosscheck, SumKind,
};
use crate::poly::RationalPolynomial;
use crate::report::{Check, VerificationReport};
use crate::series::norlund_poly_value;
use crate::sums::{
    asymptotic_ratio, asymptotic_ratio_normalized, cc_polynomial, cc_polynomial_by_coefficients,
    cc_sum, dowker_q_checks, gf_c_checks, gf_p_checks, low_order_checks, norlund_identity_check,
    ts_sum,
};
use crate::symfun::{bridge_identity_check, sym_closed_form_checks, sym_direct, sym_table};
use crate::tables::{golden_checks, three_way_checks, worked_golden, TableKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Identities,
    Tables,
    Norlund,
    Asymptotic,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Identities,
        Suite::Tables,
        Suite::Norlund,
        Suite::Asymptotic,
        Suite::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Tables => "tables",
            Suite::Norlund => "norlund",
            Suite::Asymptotic => "asymptotic",
            Suite::Oracle => "oracle",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Runs one suite. `v_max` bounds the identity and Nörlund suites; `digits`
/// is the oracle precision.
pub fn run_suite(suite: Suite, v_max: u32, digits: u32) -> VerificationReport {
    let checks = match suite {
        Suite::Identities => identity_checks(v_max),
        Suite::Tables => table_checks(15),
        Suite::Norlund => norlund_checks(v_max.min(8)),
        Suite::Asymptotic => asymptotic_checks(200, &[2, 3, 4], digits),
        Suite::Oracle => oracle_checks(digits),
    };
    VerificationReport::new(suite.name(), checks)
}

/// The bounded exact identities: symmetric-polynomial closed forms and
/// enumeration, the cosecant/symmetric bridge, the Gardner-Fisher and
/// Dowker coefficient characterizations, the even recurrence, the ladder
/// identities, the low-order closed forms and the cot-csc/tan-sec
/// reductions.
pub fn identity_checks(v_max: u32) -> Vec<Check> {
    let mut out = sym_closed_form_checks(v_max);
    out.extend(sym_enumeration_checks(v_max.min(12)));
    out.extend(bridge_identity_check(v_max));
    for v in 1..=v_max {
        out.extend(gf_p_checks(v));
        out.extend(gf_c_checks(v));
        out.extend(dowker_q_checks(v));
    }
    out.extend(even_route_checks(6, 12));
    out.extend(ladder_identity_checks(4, 10));
    out.extend(low_order_checks(20));
    out.extend(cc_route_checks(v_max.min(9)));
    out.extend(ts_reduction_checks(8, 9));
    out
}

/// Recurrence table against subset enumeration.
pub fn sym_enumeration_checks(v_max: u32) -> Vec<Check> {
    let t = sym_table(v_max);
    let mut out = Vec::new();
    for v in 1..=v_max {
        for n in 0..v {
            out.push(Check::exact(
                format!("s({v},{n}) enumeration"),
                "recurrence vs subset enumeration",
                || (t.get(v, n), sym_direct(v, n).expect("v <= 12")),
            ));
        }
    }
    out
}

/// Table route and coefficient route for the cot-csc polynomial, plus the
/// polynomial against the direct sum.
pub fn cc_route_checks(total_max: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for ell in [1u32, 2] {
        for w in 1..=total_max {
            for v in 0..=total_max - w {
                out.push(Check::exact(
                    format!("cc routes v={v} w={w} l={ell}"),
                    "cot-csc polynomial: table vs coefficient route",
                    || {
                        (
                            cc_polynomial(v, w, ell).expect("w >= 1"),
                            cc_polynomial_by_coefficients(v, w, ell).expect("w >= 1"),
                        )
                    },
                ));
                out.push(Check::exact(
                    format!("cc at m=6 v={v} w={w} l={ell}"),
                    "cot-csc polynomial vs sum",
                    || {
                        (
                            cc_polynomial(v, w, ell).expect("w >= 1").eval(&int(36)),
                            cc_sum(6, v, w, ell).expect("valid"),
                        )
                    },
                ));
            }
        }
    }
    out
}

/// `S^TS_{2n,v,w} = 2 S^CC_{n,v,w,2}` and rejection of odd moduli.
pub fn ts_reduction_checks(n_max: u64, total_max: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for total in 1..=total_max {
            for v in 0..=total {
                let w = total - v;
                out.push(Check::exact(
                    format!("ts m={} v={v} w={w}", 2 * n),
                    "tan-sec reduction to cot-csc",
                    || {
                        (
                            ts_sum(2 * n, v, w).expect("even m"),
                            int(2) * cc_sum(n, v, w, 2).expect("valid"),
                        )
                    },
                ));
            }
        }
    }
    for m in [1u64, 3, 7, 15] {
        let start = Instant::now();
        let got = ts_sum(m, 1, 1);
        let ok = got == Err(Error::OddModulus(m));
        out.push(Check::verdict(
            format!("ts odd m={m}"),
            "odd modulus rejected",
            ok,
            format!("{got:?}"),
            format!("{:?}", Err::<Rational, _>(Error::OddModulus(m))),
            start.elapsed().as_secs_f64() * 1e3,
        ));
    }
    out
}

/// Reference tables, the three-way agreement for the report-only rows, and
/// the worked cot-csc polynomials.
pub fn table_checks(k_max: u32) -> Vec<Check> {
    let mut out = golden_checks(TableKind::Cosecant, k_max);
    out.extend(three_way_checks(13, k_max.max(13)));
    out.extend(golden_checks(TableKind::Gf, k_max));
    out.extend(golden_checks(TableKind::Dowker, k_max));
    out.extend(worked_polynomial_checks());
    out
}

pub fn worked_polynomial_checks() -> Vec<Check> {
    worked_golden()
        .into_iter()
        .map(|g| {
            Check::exact(
                format!("worked cc v={} w={} l={}", g.v, g.w, g.ell),
                "worked cot-csc polynomial",
                || (cc_polynomial(g.v, g.w, g.ell).expect("w >= 1"), g.poly()),
            )
        })
        .collect()
}

/// Nörlund values and the reconstruction of `q_v`, plus the single value
/// `B^(4)_2(2) = -1/3`.
pub fn norlund_checks(v_max: u32) -> Vec<Check> {
    let mut out = norlund_identity_check(v_max);
    out.push(Check::exact(
        "B^(4)_2(2)",
        "Norlund value from the generating function",
        || (norlund_poly_value(4, 2, &int(2)), rat(-1, 3)),
    ));
    out
}

/// The leading large-`m` correction: `(S_{m,v}/pi^(2v) - Z(v)) 12 m^2 /
/// (v Z(v-1))` lies in `[0.99, 1.01]`. The same ratio built from `zeta(2v)`
/// and `zeta(2v-2)` themselves tends to `pi^2`; its test against 1 is kept
/// as a report-only discrepancy.
pub fn asymptotic_checks(m: u64, vs: &[u32], digits: u32) -> Vec<Check> {
    let in_band = |x: &Rational| x >= &rat(99, 100) && x <= &rat(101, 100);
    let mut out = Vec::new();
    for &v in vs {
        let start = Instant::now();
        let normalized = PiScaled::rational(asymptotic_ratio_normalized(m, v));
        let value = eval_pi_scaled(&normalized, digits);
        out.push(Check::verdict(
            format!("asymptotic m={m} v={v}"),
            "leading correction v Z(v-1)/(12 m^2)",
            in_band(&value.to_rational()),
            value.to_decimal(20),
            "[0.99, 1.01]".to_string(),
            start.elapsed().as_secs_f64() * 1e3,
        ));
        let start = Instant::now();
        let literal = eval_pi_scaled(&asymptotic_ratio(m, v), digits);
        out.push(
            Check::verdict(
                format!("asymptotic zeta form m={m} v={v}"),
                "leading correction v zeta(2v-2)/(12 m^2) without pi^2",
                in_band(&literal.to_rational()),
                literal.to_decimal(20),
                "[0.99, 1.01]".to_string(),
                start.elapsed().as_secs_f64() * 1e3,
            )
            .report_only(),
        );
    }
    out
}

pub const ORACLE_MODULI: [u64; 5] = [2, 3, 5, 8, 13];
pub const ORACLE_CC_PAIRS: [(u32, u32); 4] = [(1, 1), (2, 1), (5, 4), (6, 3)];

/// Raw numeric sums against the closed forms, the worked polynomials at
/// `m = 7`, and a precision-doubling sanity check.
pub fn oracle_checks(digits: u32) -> Vec<Check> {
    let mut out = csc_crosscheck(&ORACLE_MODULI, 8, digits);
    out.extend(cc_crosscheck(&[5, 7], &ORACLE_CC_PAIRS, digits));
    out.extend(ts_crosscheck(&[2, 3, 4], &[(1, 1), (2, 1), (0, 2)], digits));
    out.extend(worked_numeric_checks(7, digits));
    out.push(convergence_check(7, 3));
    out
}

/// Worked polynomials evaluated at `m` against the raw sum.
pub fn worked_numeric_checks(m: u64, digits: u32) -> Vec<Check> {
    worked_golden()
        .into_iter()
        .map(|g| {
            let start = Instant::now();
            let exact = PiScaled::rational(g.poly().eval(&(int(m) * int(m))));
            let id = format!("worked cc v={} w={} l={} at m={m}", g.v, g.w, g.ell);
            match raw_trig_sum(m, g.v, g.w, g.ell, SumKind::Cc, digits) {
                Ok(raw) => {
                    let verdict = check_exact_vs_numeric(&exact, &raw, digits);
                    Check::verdict(
                        id,
                        "worked cot-csc polynomial vs raw sum",
                        verdict.pass,
                        verdict.exact,
                        format!(
                            "{} (rel diff {})",
                            verdict.numeric, verdict.relative_difference
                        ),
                        start.elapsed().as_secs_f64() * 1e3,
                    )
                }
                Err(e) => Check::verdict(
                    id,
                    "worked cot-csc polynomial vs raw sum",
                    false,
                    exact.to_string(),
                    e.to_string(),
                    0.0,
                ),
            }
        })
        .collect()
}

/// Going from 40 to 80 digits shrinks the raw-sum error by at least `10^30`.
pub fn convergence_check(m: u64, v: u32) -> Check {
    let start = Instant::now();
    let coarse = oracle::raw_error(m, v, 40);
    let fine = oracle::raw_error(m, v, 80);
    let factor = num_traits::pow(int(10), 30);
    let ok =
        &fine * &factor <= coarse || (coarse == Rational::from_integer(0.into()) && fine == coarse);
    let show = |r: &Rational| oracle::BigFloat::from_rational(r, 64).to_decimal(3);
    Check::verdict(
        format!("convergence m={m} v={v}"),
        "error at 80 digits vs 40 digits",
        ok,
        show(&fine),
        show(&coarse),
        start.elapsed().as_secs_f64() * 1e3,
    )
}

/// Check that a polynomial, read back from its JSON rendering, is unchanged.
pub fn json_round_trip(p: &RationalPolynomial) -> bool {
    serde_json::to_string(p)
        .ok()
        .and_then(|s| serde_json::from_str::<RationalPolynomial>(&s).ok())
        .is_some_and(|q| &q == p)
}
