//! Which era grammars accept a given numeral.

use serde::Serialize;

use crate::era::EraId;
use crate::morpheme::{Morpheme, Script};
use crate::parser::{parse, EraMode, Features, ParseError};
use crate::tokenize::{tokenize_with, TokenizeOptions};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Accepts { value: u64 },
    Rejects { error: ParseError },
}

impl Verdict {
    pub fn value(&self) -> Option<u64> {
        match self {
            Verdict::Accepts { value } => Some(*value),
            Verdict::Rejects { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EraVerdict {
    pub era: EraId,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EraConsistencyReport {
    pub input_tokens: Vec<Morpheme>,
    pub input: String,
    /// One verdict per era, in chronological order.
    pub verdicts: Vec<EraVerdict>,
    pub consistent: Vec<EraId>,
    pub earliest: Option<EraId>,
    pub latest: Option<EraId>,
    pub features: Features,
    pub notes: Vec<String>,
}

impl EraConsistencyReport {
    pub fn accepts(&self, era: EraId) -> bool {
        self.consistent.contains(&era)
    }

    pub fn verdict(&self, era: EraId) -> &Verdict {
        &self.verdicts[era as usize].verdict
    }
}

/// Feature vector of `tokens`, independent of any one era's value.
pub fn feature_profile(tokens: &[Morpheme]) -> Features {
    if let Ok(outcome) = parse(tokens, EraMode::Lenient) {
        return outcome.features;
    }
    let leading_one = matches!(tokens, [Morpheme::Digit(d), Morpheme::Pivot(_), ..] if d.get() == 1);
    Features {
        uses_you: tokens.contains(&Morpheme::You),
        uses_ling: tokens.iter().any(|m| m.is_ling_like()),
        uses_dan_or_lingalt: tokens.iter().any(|m| matches!(m, Morpheme::Dan | Morpheme::LingAlt)),
        liang_present: tokens.contains(&Morpheme::LiangTwo),
        leading_one_before_highest: leading_one,
        ..Features::default()
    }
}

pub fn feature_profile_text(text: &str) -> Result<Features, ParseError> {
    let tokenized = tokenize_with(text, TokenizeOptions::default())?;
    Ok(feature_profile(&tokenized.tokens))
}

/// Runs the strict grammar of every era over `tokens`.
pub fn classify(tokens: &[Morpheme]) -> EraConsistencyReport {
    let verdicts: Vec<EraVerdict> = EraId::ALL
        .iter()
        .map(|&era| EraVerdict {
            era,
            verdict: match parse(tokens, EraMode::Strict(era)) {
                Ok(outcome) => Verdict::Accepts { value: outcome.value },
                Err(error) => Verdict::Rejects { error },
            },
        })
        .collect();
    let consistent: Vec<EraId> = verdicts
        .iter()
        .filter(|v| matches!(v.verdict, Verdict::Accepts { .. }))
        .map(|v| v.era)
        .collect();
    let features = feature_profile(tokens);
    let notes = notes(&features, &consistent);
    EraConsistencyReport {
        input_tokens: tokens.to_vec(),
        input: crate::morpheme::render_tokens(tokens, Script::TokenList).unwrap_or_default(),
        earliest: consistent.first().copied(),
        latest: consistent.last().copied(),
        verdicts,
        consistent,
        features,
        notes,
    }
}

pub fn classify_text(text: &str) -> Result<EraConsistencyReport, ParseError> {
    let tokenized = tokenize_with(text, TokenizeOptions::default())?;
    Ok(classify(&tokenized.tokens))
}

fn notes(f: &Features, consistent: &[EraId]) -> Vec<String> {
    let mut notes = Vec::new();
    if f.uses_you {
        notes.push("contains yòu: pattern of the 13th to 3rd centuries BCE, gone by the early 2nd century BCE".to_owned());
    }
    let early = consistent
        .iter()
        .any(|e| matches!(e, EraId::ShangOracle | EraId::ZhouBronze | EraId::WarringStates));
    if early {
        notes.push(
            "Shang, Zhou and Warring States share one grammar; yòu between tens and units occurs in about 5% (Shang), 98% (Zhou) and 8% (Warring States) of attested cases"
                .to_owned(),
        );
    }
    if f.uses_dan_or_lingalt {
        notes.push("contains dān or 另: 13th-century variants of líng".to_owned());
    }
    if f.uses_ling {
        notes.push(
            "contains líng: 12th–13th c. CE onward; later disused, revived in the late 19th or early 20th centuries"
                .to_owned(),
        );
    }
    if f.liang_present {
        notes.push("contains liǎng in an exact numeral: 20th c. onward (from the late 19th or early 20th centuries)".to_owned());
    }
    if f.elliptic {
        notes.push("elliptic reading with the last pivot dropped: Contemporary only".to_owned());
    }
    if f.leading_one_before_highest {
        notes.push("[1] before the highest pivot: general from the 7th c. CE".to_owned());
    }
    if f.one_before_inner_multiplicand {
        notes.push("[1] before an inner pivot multiplying wàn or yì: 7th c. CE onward".to_owned());
    }
    if consistent.is_empty() {
        notes.push("no era grammar accepts this expression".to_owned());
    }
    notes
}
