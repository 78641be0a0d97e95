//! Invariant suites run by `flowloop verify`. Each check reports a name,
//! pass/fail and a short diagnostic.

use std::fmt;

use crate::braid::{alexander_classical, BraidWord};
use crate::lawrence::{self, graded_trace, unknot_closure_check, Convention};
use crate::matrix::GradedMatrix;
use crate::ring::{period_doubling_identity, qbinom, saddle_node_identity, Framing, QLaurent, XSeries};
use crate::template::{build_template, enumerate_orbits, necklace_counts, zeta_classical, zeta_multiloop};
use crate::verma::{self, kohno_check, Highest};
use crate::zhat::{
    closed_form, phi, phi_homogeneous, phi_positive, phi_positive_cutoff, zhat, ClosedForm, PhiOptions,
    ZhatOptions,
};

/// Homogeneous knot braids used throughout the suites.
pub const CORPUS: &[(&str, &str)] = &[
    ("unknot", "1"),
    ("unknot_b3", "1 2"),
    ("trefoil", "1 1 1"),
    ("figure_eight", "1 -2 1 -2"),
    ("trefoil_stabilized", "1 1 1 2"),
    ("trefoil_neg_stabilized", "1 1 1 -2"),
    ("cinquefoil", "1 1 1 1 1"),
    ("knot_6_2", "1 1 1 -2 1 -2"),
    ("knot_6_3", "1 1 -2 1 -2 -2"),
    ("square_knot", "1 1 1 -2 -2 -2"),
    ("knot_7_7", "1 -2 1 -2 3 -2 3"),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Ring,
    Lawrence,
    Verma,
    Zhat,
    Template,
    All,
}

impl std::str::FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "ring" => Suite::Ring,
            "lawrence" => Suite::Lawrence,
            "verma" => Suite::Verma,
            "zhat" => Suite::Zhat,
            "template" => Suite::Template,
            "all" => Suite::All,
            _ => return Err(format!("unknown suite {s:?}")),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}::{}", self.suite, self.name)?;
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

struct Report {
    suite: &'static str,
    checks: Vec<Check>,
}

impl Report {
    fn new(suite: &'static str) -> Self {
        Self { suite, checks: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { suite: self.suite, name: name.into(), passed, detail: detail.into() });
    }

    fn result<T: PartialEq + fmt::Display>(&mut self, name: impl Into<String>, got: crate::Result<T>, want: &T) {
        match got {
            Ok(v) if &v == want => self.check(name, true, ""),
            Ok(v) => self.check(name, false, format!("got {v}, expected {want}")),
            Err(e) => self.check(name, false, e.to_string()),
        }
    }
}

fn word(s: &str) -> BraidWord {
    BraidWord::parse(s).expect("corpus words parse")
}

/// Runs the selected suites.
pub fn run(suite: Suite) -> Vec<Check> {
    let mut out = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Ring {
        out.extend(ring_suite());
    }
    if all || suite == Suite::Lawrence {
        out.extend(lawrence_suite());
    }
    if all || suite == Suite::Verma {
        out.extend(verma_suite());
    }
    if all || suite == Suite::Zhat {
        out.extend(zhat_suite());
    }
    if all || suite == Suite::Template {
        out.extend(template_suite());
    }
    out
}

/// Deterministic test series with mixed signs and half-integer powers.
fn sample_series(seed: i64, order: i64) -> XSeries {
    let terms = (0..=order).map(|e| {
        let c = qbinom(seed % 5 + e % 4, e % 3).shift((seed * e) % 7 - 3);
        (e, if (seed + e) % 3 == 0 { -c } else { c })
    });
    XSeries::from_terms(terms, order)
}

fn ring_suite() -> Vec<Check> {
    let mut r = Report::new("ring");
    let pascal = (-6..=6).all(|n| {
        (0..=6).all(|k| qbinom(n, k) == &qbinom(n - 1, k - 1) + &qbinom(n - 1, k).shift(2 * k))
    });
    r.check("q_pascal", pascal, "n in -6..=6, k in 0..=6");
    let classical = (-6..=6i64).all(|n| {
        (0..=6i64).all(|k| {
            let c: i64 = (0..k).fold((1i64, 1i64), |(num, den), j| (num * (n - j), den * (j + 1))).0
                / (1..=k).product::<i64>().max(1);
            qbinom(n, k).eval_one() == c.into()
        })
    });
    r.check("classical_binomial", classical, "");
    let consistent = (1..=6).all(|seed| {
        let (a, b) = (sample_series(seed, 16), sample_series(seed + 7, 16));
        (&a * &b).truncate(8) == &a.truncate(8) * &b.truncate(8)
    });
    r.check("truncation_consistency", consistent, "");
    for f in [-2, -1, 0, 1, 2, 4] {
        let fr = Framing::from_half_units(f);
        let sn = saddle_node_identity(fr, 24);
        r.check(format!("saddle_node f={fr}"), sn.is_one(), if sn.is_one() { String::new() } else { sn.to_string() });
        let (a, b) = period_doubling_identity(fr, 24);
        r.check(format!("period_doubling f={fr}"), a == b, "");
    }
    r.checks
}

fn relation_checks(r: &mut Report, conv: Convention) {
    let name = format!("{conv:?}").to_lowercase();
    let mut braid = true;
    let mut far = true;
    let mut inverse = true;
    let mut weight = true;
    let mut dims = true;
    for n in 2..=4usize {
        for m in 0..=4u32 {
            let g = |i: usize, s: i8| lawrence::generator_matrix(n, m, i, s, conv).unwrap();
            let expected = (0..m as u64).fold(1u64, |acc, j| acc * (m as u64 + n as u64 - 2 - j) / (j + 1));
            dims &= g(1, 1).dim() as u64 == expected;
            for i in 1..n {
                let (p, q) = (g(i, 1), g(i, -1));
                inverse &= p.compose(&q).is_identity() && q.compose(&p).is_identity();
                weight &= conserves_weight(&p) && conserves_weight(&q);
                if i + 1 < n {
                    let b = g(i + 1, 1);
                    braid &= p.compose(&b).compose(&p) == b.compose(&p).compose(&b);
                }
                for j in i + 2..n {
                    let c = g(j, 1);
                    far &= p.compose(&c) == c.compose(&p);
                }
            }
        }
    }
    r.check(format!("braid_relation {name}"), braid, "n<=4, m<=4");
    r.check(format!("far_commutation {name}"), far, "n<=4, m<=4");
    r.check(format!("inverse {name}"), inverse, "n<=4, m<=4");
    r.check(format!("weight_conservation {name}"), weight, "");
    r.check(format!("dimension {name}"), dims, "");
}

fn conserves_weight(g: &GradedMatrix) -> bool {
    g.entries().all(|(a, b, _)| a.iter().sum::<u32>() == b.iter().sum::<u32>())
}

fn lawrence_suite() -> Vec<Check> {
    let mut r = Report::new("lawrence");
    relation_checks(&mut r, Convention::Half);
    relation_checks(&mut r, Convention::Under);
    let one_minus_z = XSeries::from_terms([(0, QLaurent::one()), (2, QLaurent::from(-1))], 12);
    for w in ["1", "1 2", "1 1 1", "1 -2 1 -2"] {
        r.result(format!("unknot_closure {w}"), unknot_closure_check(&word(w), 6), &one_minus_z);
    }
    let f8 = word("1 -2 1 -2");
    r.check(
        "trace_rotation",
        graded_trace(&f8, 3, Convention::Half) == graded_trace(&f8.rotated(1), 3, Convention::Half),
        "",
    );
    for w in ["1 -2 1 -2", "1 1 1", "1 2 1 2 -3 2"] {
        let b = word(w);
        r.check(
            format!("conventions_agree {w}"),
            graded_trace(&b, 3, Convention::Half) == graded_trace(&b, 3, Convention::Under),
            "",
        );
    }
    r.checks
}

fn verma_suite() -> Vec<Check> {
    let mut r = Report::new("verma");
    for hw in [Highest::X, Highest::XInv] {
        let yb = (0..=3).all(|m| verma::yang_baxter_holds(3, m, 1, hw));
        r.check(format!("yang_baxter {hw:?}"), yb, "n=3, m<=3");
    }
    r.check("inverse_mirror", verma::mirror_inverse_holds(), "n<=3, m<=3");
    for w in ["1", "1 1 1", "1 -2 1 -2", "1 2", "-1"] {
        let rep = kohno_check(&word(w), 3);
        let detail = rep.first_mismatch().map(|m| format!("differs at z^{m}")).unwrap_or_default();
        r.check(format!("kohno {w}"), rep.holds(), detail);
    }
    r.checks
}

fn zhat_suite() -> Vec<Check> {
    let mut r = Report::new("zhat");
    let opts = ZhatOptions::default();
    let tref = closed_form(ClosedForm::TrefoilBraid, 10);
    r.result("trefoil_positive", phi_positive(&word("1 1 1"), 10, Convention::Half), &tref);
    r.check("trefoil_closed_forms", tref == closed_form(ClosedForm::TrefoilDirect, 10), "");
    let f8 = closed_form(ClosedForm::Fig8Direct, 4);
    r.result("figure_eight_state_sum", phi_homogeneous(&word("1 -2 1 -2"), 4, PhiOptions::default()), &f8);
    r.check("figure_eight_closed_forms", f8 == closed_form(ClosedForm::Fig8Braid, 4), "");
    for (name, w) in CORPUS {
        let b = word(w);
        match (phi(&b, 8, opts), alexander_classical(&b, 16)) {
            (Ok(p), Ok(a)) => r.check(format!("classical_limit {name}"), p.at_q_one() == a.inv_delta, ""),
            (Err(e), _) | (_, Err(e)) => r.check(format!("classical_limit {name}"), false, e.to_string()),
        }
    }
    for w in ["1 1 1", "1 1 1 1 1", "1 1 1 2"] {
        let b = word(w);
        let a = phi_homogeneous(&b, 6, PhiOptions::default());
        r.result(format!("state_sum_matches_traces {w}"), a, &phi_positive(&b, 6, Convention::Half).unwrap());
    }
    match (zhat(&word("1 1 1"), 8, opts), zhat(&word("1 1 1 2"), 8, opts)) {
        (Ok(a), Ok(b)) => r.check("stabilization_invariance", a.zhat == b.zhat, ""),
        _ => r.check("stabilization_invariance", false, "pipeline error"),
    }
    for (name, w) in CORPUS {
        let b = word(w);
        let stable = if b.analyze().cr_minus == 0 {
            phi_positive_cutoff(&b, 6, 6, Convention::Half).ok() == phi_positive_cutoff(&b, 6, 8, Convention::Half).ok()
        } else {
            let lo = PhiOptions { cap: Some(6), skip_stability: true, ..Default::default() };
            let hi = PhiOptions { cap: Some(8), skip_stability: true, ..Default::default() };
            phi_homogeneous(&b, 6, lo).ok() == phi_homogeneous(&b, 6, hi).ok()
        };
        r.check(format!("cutoff_stability {name}"), stable, "");
    }
    r.checks
}

fn template_suite() -> Vec<Check> {
    let mut r = Report::new("template");
    for (name, w) in CORPUS {
        let b = word(w);
        let t = build_template(&b).expect("corpus braids are homogeneous");
        let z = zeta_classical(&t, 8);
        let alex = alexander_classical(&b, 16).map(|a| a.inv_delta);
        let ok = matches!((&z, &alex), (Ok(z), Ok(a)) if z == a);
        r.check(format!("zeta_equals_alexander {name}"), ok, "");
        let ml = zeta_multiloop(&t, 6);
        let z6 = zeta_classical(&t, 6);
        r.check(format!("multiloop_expansion {name}"), ml.is_ok() && ml == z6, "");
        let by_degree = enumerate_orbits(&t, 6).map(|os| {
            (1..=6u32).map(|d| os.iter().filter(|o| o.degree == d).count().into()).collect::<Vec<_>>()
        });
        r.check(format!("necklace_counts {name}"), by_degree.ok() == Some(necklace_counts(&t, 6)), "");
    }
    r.checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_suite_passes() {
        for c in ring_suite() {
            assert!(c.passed, "{c}");
        }
    }

    #[test]
    fn suite_names_parse() {
        for s in ["ring", "lawrence", "verma", "zhat", "template", "all"] {
            assert!(s.parse::<Suite>().is_ok());
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
