use serde::{Deserialize, Serialize};

use super::normality::{normality_violation, NormalityWitness};
use super::sperner::{strong_sperner_violation, SpernerWitness};
use crate::error::{PosetError, Result};
use crate::poset::Poset;
use crate::whitney::{LogConcavityWitness, SymmetryWitness, UnimodalityWitness};

/// Verdict for one property. Serialized as `{"verdict": "true"}`,
/// `{"verdict": "false", "witness": {...}}` or `{"verdict": "not_graded"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "witness", rename_all = "snake_case")]
pub enum Outcome<W> {
    True,
    False(W),
    NotGraded,
}

impl<W> Outcome<W> {
    fn from_check(r: Result<Option<W>>) -> Outcome<W> {
        match r {
            Ok(None) => Outcome::True,
            Ok(Some(w)) => Outcome::False(w),
            Err(PosetError::NotGraded) => Outcome::NotGraded,
            Err(e) => unreachable!("checker failed on a valid poset: {e}"),
        }
    }

    pub fn holds(&self) -> bool {
        matches!(self, Outcome::True)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Outcome::False(w) => Some(w),
            _ => None,
        }
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            Outcome::True => "true",
            Outcome::False(_) => "false",
            Outcome::NotGraded => "not graded",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub graded: bool,
    pub rank_symmetric: Outcome<SymmetryWitness>,
    pub rank_unimodal: Outcome<UnimodalityWitness>,
    pub rank_log_concave: Outcome<LogConcavityWitness>,
    pub normal: Outcome<NormalityWitness>,
    pub strongly_sperner: Outcome<SpernerWitness>,
}

impl PropertyReport {
    /// Runs every check. The flow-based checks run on separate threads.
    pub fn analyze(p: &Poset) -> PropertyReport {
        let whitney = p.whitney();
        let (normal, strongly_sperner) = std::thread::scope(|s| {
            let normal = s.spawn(|| Outcome::from_check(normality_violation(p)));
            let sperner = Outcome::from_check(strong_sperner_violation(p));
            (normal.join().expect("normality thread"), sperner)
        });
        let (rank_symmetric, rank_unimodal, rank_log_concave) = match &whitney {
            Ok(w) => (
                w.symmetry_violation().map_or(Outcome::True, Outcome::False),
                w.unimodality_violation().map_or(Outcome::True, Outcome::False),
                w.log_concavity_violation().map_or(Outcome::True, Outcome::False),
            ),
            Err(_) => (Outcome::NotGraded, Outcome::NotGraded, Outcome::NotGraded),
        };
        PropertyReport { graded: p.is_graded(), rank_symmetric, rank_unimodal, rank_log_concave, normal, strongly_sperner }
    }

    /// Whether every `false` verdict carries a witness that holds on `p`,
    /// and `not graded` appears exactly when `p` is ungraded.
    pub fn witnesses_valid(&self, p: &Poset) -> bool {
        let graded_ok = self.graded == p.is_graded();
        let not_graded = [
            matches!(self.rank_symmetric, Outcome::NotGraded),
            matches!(self.rank_unimodal, Outcome::NotGraded),
            matches!(self.rank_log_concave, Outcome::NotGraded),
            matches!(self.normal, Outcome::NotGraded),
            matches!(self.strongly_sperner, Outcome::NotGraded),
        ];
        if !graded_ok || not_graded.iter().any(|&ng| ng == p.is_graded()) {
            return false;
        }
        let Ok(w) = p.whitney() else {
            return true;
        };
        let counts = w.counts();
        self.rank_symmetric.witness().is_none_or(|x| x.holds_for(counts))
            && self.rank_unimodal.witness().is_none_or(|x| x.holds_for(counts))
            && self.rank_log_concave.witness().is_none_or(|x| x.holds_for(counts))
            && self.normal.witness().is_none_or(|x| x.validate(p))
            && self.strongly_sperner.witness().is_none_or(|x| x.validate(p))
    }
}
