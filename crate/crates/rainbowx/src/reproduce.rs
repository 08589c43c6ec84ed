//! A reproduction report: recomputes the small closed-form values for
//! complete graphs, cycles, trees, stars, and hairy cliques, and
//! compares each against its expected value. One row per check; failed
//! checks become verdicts, never panics.

use std::time::Duration;

use crate::error::Result;
use crate::graph::{build_named, enumerate_connected, NamedFamily};
use crate::metrics::sdiam3;
use crate::solver::rx3_exact;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Match,
    Mismatch,
    BoundSatisfied,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::BoundSatisfied => "bound-satisfied",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ReproRow {
    pub claim: String,
    pub params: String,
    pub expected: String,
    pub computed: String,
    pub verdict: Verdict,
    pub note: String,
}

fn row(claim: &str, params: String, expected: String, computed: String, note: &str) -> ReproRow {
    ReproRow {
        claim: claim.into(),
        params,
        verdict: if expected == computed {
            Verdict::Match
        } else {
            Verdict::Mismatch
        },
        expected,
        computed,
        note: note.into(),
    }
}

/// Recomputes every desk-scale closed-form value and returns one row per
/// check. Two deviations are expected and carry explanatory notes: the
/// cycle Steiner-diameter rows where the ceiling form `ceil(2t/3)`
/// overshoots the computed value by one (t not divisible by 3), and the
/// hairy-clique index lower bound `t + 2`, which is asymptotic and fails
/// at t = 4 (an oracle-verified 5-coloring exists).
pub fn reproduce_report(budget: Duration) -> Result<Vec<ReproRow>> {
    let mut rows = Vec::new();
    let rx3 = |fam: NamedFamily| -> Result<usize> {
        Ok(rx3_exact(&build_named(fam)?, budget)?.value)
    };
    let sd3 = |fam: NamedFamily| -> Result<usize> { sdiam3(&build_named(fam)?) };

    for n in 3..=7 {
        let expected = if n <= 5 { 2 } else { 3 };
        rows.push(row(
            "rx3(K_n)",
            format!("n={n}"),
            expected.to_string(),
            rx3(NamedFamily::Complete(n))?.to_string(),
            "2 for 3 <= n <= 5, else 3",
        ));
    }
    for n in 4..=7 {
        rows.push(row(
            "rx3(C_n)",
            format!("n={n}"),
            (n - 2).to_string(),
            rx3(NamedFamily::Cycle(n))?.to_string(),
            "n - 2 for n >= 4",
        ));
    }
    for n in 3..=6 {
        let trees: Vec<_> = enumerate_connected(n, false)?
            .into_iter()
            .filter(|g| g.edge_count() == n - 1)
            .collect();
        let count = trees.len();
        let off = trees
            .into_iter()
            .filter(|t| !matches!(rx3_exact(t, budget), Ok(r) if r.value == n - 1))
            .count();
        rows.push(row(
            "rx3(T) over all labeled trees",
            format!("n={n}, {count} trees"),
            format!("all equal {}", n - 1),
            if off == 0 {
                format!("all equal {}", n - 1)
            } else {
                format!("{off} trees deviate")
            },
            "trees attain the n - 1 upper bound",
        ));
    }
    for t in 3..=6 {
        rows.push(row(
            "rx3(K_{1,t})",
            format!("t={t}"),
            t.to_string(),
            rx3(NamedFamily::Star(t))?.to_string(),
            "",
        ));
        rows.push(row(
            "sdiam3(K_{1,t})",
            format!("t={t}"),
            "3".into(),
            sd3(NamedFamily::Star(t))?.to_string(),
            "",
        ));
    }
    for t in 3..=6 {
        rows.push(row(
            "sdiam3(K_t^h)",
            format!("t={t}"),
            "5".into(),
            sd3(NamedFamily::HairyClique(t))?.to_string(),
            "",
        ));
    }
    rows.push(row(
        "rx3(K_3^h)",
        "t=3".into(),
        "5".into(),
        rx3(NamedFamily::HairyClique(3))?.to_string(),
        "lower bound t + 2 meets the n - 1 upper bound",
    ));
    {
        let v = rx3(NamedFamily::HairyClique(4))?;
        rows.push(ReproRow {
            claim: "rx3(K_4^h) >= t + 2".into(),
            params: "t=4".into(),
            expected: ">= 6".into(),
            computed: v.to_string(),
            verdict: if v >= 6 {
                Verdict::BoundSatisfied
            } else {
                Verdict::Mismatch
            },
            note: "the t + 2 lower bound is asymptotic; at t=4 an \
                   oracle-verified 5-coloring exists, so this small case \
                   deviates"
                .into(),
        });
    }
    for t in 4..=12 {
        let computed = sd3(NamedFamily::Cycle(t))?;
        let ceiling_form = (2 * t).div_ceil(3);
        rows.push(ReproRow {
            claim: "sdiam3(C_t)".into(),
            params: format!("t={t}"),
            expected: format!("ceil(2t/3) = {ceiling_form}"),
            computed: computed.to_string(),
            verdict: if computed == ceiling_form {
                Verdict::Match
            } else {
                Verdict::Mismatch
            },
            note: if computed == ceiling_form {
                "ceiling form agrees when 3 divides t".into()
            } else {
                format!(
                    "computed value follows t - ceil(t/3) = floor(2t/3); \
                     the ceiling form overshoots by one when t is not divisible by 3"
                )
            },
        });
    }
    Ok(rows)
}

fn csv_quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn to_csv(rows: &[ReproRow]) -> String {
    let mut out = String::from("claim,params,expected,computed,verdict,note\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            csv_quote(&r.claim),
            csv_quote(&r.params),
            csv_quote(&r.expected),
            csv_quote(&r.computed),
            r.verdict.as_str(),
            csv_quote(&r.note),
        ));
    }
    out
}

pub fn to_text(rows: &[ReproRow]) -> String {
    let mut out = String::new();
    for r in rows {
        out.push_str(&format!(
            "{:<32} {:<18} expected {:<22} computed {:<10} {}{}\n",
            r.claim,
            r.params,
            r.expected,
            r.computed,
            r.verdict.as_str(),
            if r.note.is_empty() {
                String::new()
            } else {
                format!("  ({})", r.note)
            }
        ));
    }
    out
}
