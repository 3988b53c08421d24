use super::level::{critical_pairs, ThresholdPair};
use super::FunctionAutomaton;
use crate::error::Result;
use crate::games::MealyStrategy;
use crate::wadge::{side_leq, GameMode, SideSpec};

/// Verdict of the level-pair search: every threshold pair of `f` must embed
/// into some threshold pair of `g` by one continuous map.
#[derive(Clone, Debug)]
pub struct MRealOutcome {
    pub reducible: bool,
    /// One entry per pair of `f`: the chosen pair of `g` and the witness.
    pub certificate: Vec<(ThresholdPair, ThresholdPair, MealyStrategy)>,
    pub failing_pair: Option<ThresholdPair>,
}

/// The for-all-exists reduction over representative threshold pairs; sound
/// because level sets and the strict test sets are constant between
/// consecutive range values.
pub fn m_reducible(f: &FunctionAutomaton, g: &FunctionAutomaton) -> Result<MRealOutcome> {
    let f_pairs = critical_pairs(f);
    let g_pairs = critical_pairs(g);
    let mut certificate = Vec::new();
    for fp in &f_pairs {
        let f_side = SideSpec::Level {
            fun: f,
            low: fp.low,
            high: fp.high,
        };
        let mut found = false;
        for gp in &g_pairs {
            let g_side = SideSpec::Level {
                fun: g,
                low: gp.low,
                high: gp.high,
            };
            let out = side_leq(&f_side, &g_side, GameMode::Wadge)?;
            if out.reducible {
                certificate.push((*fp, *gp, out.witness));
                found = true;
                break;
            }
        }
        if !found {
            return Ok(MRealOutcome {
                reducible: false,
                certificate,
                failing_pair: Some(*fp),
            });
        }
    }
    Ok(MRealOutcome {
        reducible: true,
        certificate,
        failing_pair: None,
    })
}
