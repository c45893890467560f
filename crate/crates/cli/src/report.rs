use posetlab_core::analysis::{format_poly, Outcome, PropertyReport};
use posetlab_core::whitney::{LogConcavityWitness, SymmetryWitness, UnimodalityWitness};
use posetlab_core::analysis::{NormalityWitness, SpernerWitness};
use posetlab_core::{Poset, WhitneyProfile};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetSummary {
    pub size: usize,
    pub max_rank: Option<usize>,
    pub whitney: Option<WhitneyProfile>,
    pub rank_polynomial: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub expression: String,
    pub poset: PosetSummary,
    pub properties: PropertyReport,
}

impl ReportDocument {
    pub fn build(expression: &str, p: &Poset) -> ReportDocument {
        let whitney = p.whitney().ok();
        ReportDocument {
            expression: expression.to_string(),
            poset: PosetSummary {
                size: p.len(),
                max_rank: p.max_rank(),
                rank_polynomial: whitney.as_ref().map(|w| format_poly(w.counts())),
                whitney,
            },
            properties: PropertyReport::analyze(p),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Two-column plain-text table, labels resolved against `p`.
    pub fn to_table(&self, p: &Poset) -> String {
        let s = &self.poset;
        let props = &self.properties;
        let opt = |v: Option<String>| v.unwrap_or_else(|| "not graded".to_string());
        let rows: Vec<(&str, String)> = vec![
            ("expression", self.expression.clone()),
            ("size", s.size.to_string()),
            ("max rank", opt(s.max_rank.map(|r| r.to_string()))),
            ("whitney", opt(s.whitney.as_ref().map(ToString::to_string))),
            ("rank polynomial", opt(s.rank_polynomial.clone())),
            ("graded", props.graded.to_string()),
            ("rank_symmetric", row(&props.rank_symmetric, describe_symmetry)),
            ("rank_unimodal", row(&props.rank_unimodal, describe_unimodality)),
            ("rank_log_concave", row(&props.rank_log_concave, describe_log_concavity)),
            ("normal", row(&props.normal, |w| describe_normality(w, p))),
            ("strongly_sperner", row(&props.strongly_sperner, |w| describe_sperner(w, p))),
        ];
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
    }
}

fn row<W>(o: &Outcome<W>, describe: impl Fn(&W) -> String) -> String {
    match o {
        Outcome::False(w) => format!("false  {}", describe(w)),
        other => other.verdict().to_string(),
    }
}

fn levels(c: &[u64]) -> String {
    WhitneyProfile::new(c.to_vec()).to_string()
}

pub fn describe_symmetry(w: &SymmetryWitness) -> String {
    format!(
        "levels {} and {} differ: {} != {} in {}",
        w.low, w.high, w.levels[w.low], w.levels[w.high], levels(&w.levels)
    )
}

pub fn describe_unimodality(w: &UnimodalityWitness) -> String {
    let [a, b, c] = w.triple;
    format!(
        "witness triple ({a},{b},{c}): {} > {} < {} in {}",
        w.levels[a], w.levels[b], w.levels[c], levels(&w.levels)
    )
}

pub fn describe_log_concavity(w: &LogConcavityWitness) -> String {
    let [a, b, c] = w.triple;
    let (x, y, z) = (w.levels[a], w.levels[b], w.levels[c]);
    format!("witness triple ({a},{b},{c}): {y}^2 = {} < {x}*{z} = {} in {}", y * y, x * z, levels(&w.levels))
}

fn names(p: &Poset, ids: &[usize]) -> String {
    let v: Vec<&str> = ids.iter().map(|&x| p.label(x)).collect();
    format!("{{{}}}", v.join(", "))
}

pub fn describe_normality(w: &NormalityWitness, p: &Poset) -> String {
    format!("level {}: A = {} has shadow {}", w.level, names(p, &w.subset), names(p, &w.shadow))
}

pub fn describe_sperner(w: &SpernerWitness, p: &Poset) -> String {
    let fam: Vec<String> = w.antichains.iter().filter(|a| !a.is_empty()).map(|a| names(p, a)).collect();
    let size: usize = w.antichains.iter().map(Vec::len).sum();
    format!("j = {}: {size} > {} using {}", w.j, w.bound, fam.join(" + "))
}
