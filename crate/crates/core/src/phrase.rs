//! Numerals in context: classifier phrases, ordinals, prices and durations.
//!
//! These only exist for the Contemporary grammar.

use serde::{Serialize, Serializer};

use crate::era::{EraId, EraProfile};
use crate::generator::{render_integer, NumeralExpression, RenderError};
use crate::morpheme::{join_surface, Morpheme, Script};
use crate::options::RenderOptions;

/// Non-numeral words that appear next to numerals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Word {
    Yuan,
    Jiao,
    Fen,
    Nian,
    Ge,
    Yue,
    Di,
    Ling,
    Classifier(String),
}

// (traditional, simplified, pinyin)
const CLASSIFIERS: &[(&str, &str, &str)] = &[
    ("個", "个", "ge"),
    ("兩", "两", "liǎng"),
    ("層", "层", "céng"),
    ("人", "人", "rén"),
    ("本", "本", "běn"),
    ("張", "张", "zhāng"),
    ("隻", "只", "zhī"),
    ("條", "条", "tiáo"),
    ("件", "件", "jiàn"),
    ("次", "次", "cì"),
    ("天", "天", "tiān"),
    ("位", "位", "wèi"),
    ("塊", "块", "kuài"),
    ("斤", "斤", "jīn"),
    ("尺", "尺", "chǐ"),
    ("年", "年", "nián"),
    ("元", "元", "yuán"),
];

fn classifier_forms(text: &str) -> Option<&'static (&'static str, &'static str, &'static str)> {
    CLASSIFIERS.iter().find(|(t, s, _)| *t == text || *s == text)
}

/// Whether `text` is the weight unit liǎng (50 g).
fn is_liang_unit(text: &str) -> bool {
    matches!(text, "兩" | "两" | "liǎng" | "liang")
}

impl Word {
    pub fn surface(&self, script: Script) -> String {
        let (t, s, p) = match self {
            Word::Yuan => ("元", "元", "yuán"),
            Word::Jiao => ("角", "角", "jiǎo"),
            Word::Fen => ("分", "分", "fēn"),
            Word::Nian => ("年", "年", "nián"),
            Word::Ge => ("個", "个", "ge"),
            Word::Yue => ("月", "月", "yuè"),
            Word::Di => ("第", "第", "dì"),
            Word::Ling => ("零", "零", "líng"),
            Word::Classifier(text) => match classifier_forms(text) {
                Some(&(t, s, p)) => (t, s, p),
                None => return text.clone(),
            },
        };
        match script {
            Script::Traditional => t,
            Script::Simplified => s,
            Script::Pinyin | Script::TokenList => p,
        }
        .to_owned()
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.surface(Script::Pinyin))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PhrasePart {
    Numeral(NumeralExpression),
    Word(Word),
}

/// A sequence of numerals and unit words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Phrase {
    pub parts: Vec<PhrasePart>,
}

impl Phrase {
    pub fn surface(&self, script: Script) -> String {
        let pieces = self.parts.iter().map(|part| match part {
            PhrasePart::Numeral(n) => n.surface(script),
            PhrasePart::Word(w) => w.surface(script),
        });
        match script {
            Script::TokenList => pieces.collect::<Vec<_>>().join(" "),
            _ => join_surface(script, pieces),
        }
    }

    pub fn numerals(&self) -> impl Iterator<Item = &NumeralExpression> {
        self.parts.iter().filter_map(|p| match p {
            PhrasePart::Numeral(n) => Some(n),
            PhrasePart::Word(_) => None,
        })
    }
}

fn require_contemporary(era: &EraProfile, what: &'static str) -> Result<(), RenderError> {
    if era.era_id == EraId::Contemporary {
        Ok(())
    } else {
        Err(RenderError::StyleNotAllowed { era: era.era_id, what })
    }
}

/// The cardinal numeral used before a classifier: always the full form,
/// with a bare 2 as liǎng unless the classifier is the unit liǎng itself.
fn quantity_numeral(n: u64, classifier: &str, era: &EraProfile) -> Result<NumeralExpression, RenderError> {
    let mut numeral = render_integer(n, era, &RenderOptions::default())?;
    if n == 2 && !is_liang_unit(classifier) {
        numeral.tokens = vec![Morpheme::LiangTwo];
    }
    Ok(numeral)
}

/// `n` followed by `classifier`.
pub fn render_quantity(n: u64, classifier: &str, era: &EraProfile) -> Result<Phrase, RenderError> {
    require_contemporary(era, "classifier phrase")?;
    let numeral = quantity_numeral(n, classifier, era)?;
    Ok(Phrase {
        parts: vec![
            PhrasePart::Numeral(numeral),
            PhrasePart::Word(Word::Classifier(classifier.to_owned())),
        ],
    })
}

/// Ordinal: èr in every position, optionally prefixed with dì.
pub fn render_ordinal(n: u64, era: &EraProfile, with_di: bool) -> Result<Phrase, RenderError> {
    require_contemporary(era, "ordinal")?;
    if n == 0 {
        return Err(RenderError::ValueOutOfRange {
            value: 0,
            min: 1,
            max: era.max_value,
        });
    }
    let numeral = render_integer(n, era, &RenderOptions::default())?;
    let mut parts = Vec::with_capacity(2);
    if with_di {
        parts.push(PhrasePart::Word(Word::Di));
    }
    parts.push(PhrasePart::Numeral(numeral));
    Ok(Phrase { parts })
}

/// A price in yuán, jiǎo and fēn.
///
/// `terse` drops the trailing fēn after jiǎo or líng.
pub fn render_currency(yuan: u64, jiao: u8, fen: u8, terse: bool) -> Result<Phrase, RenderError> {
    if yuan == 0 && jiao == 0 && fen == 0 {
        return Err(RenderError::AllZeroAmount);
    }
    let era = EraId::Contemporary.profile();
    for sub in [jiao, fen] {
        if sub > 9 {
            return Err(RenderError::ValueOutOfRange {
                value: u64::from(sub),
                min: 0,
                max: 9,
            });
        }
    }
    let num = |v: u64| render_integer(v, &era, &RenderOptions::default()).map(PhrasePart::Numeral);
    let mut parts = Vec::new();
    if yuan > 0 {
        parts.push(num(yuan)?);
        parts.push(PhrasePart::Word(Word::Yuan));
    }
    if jiao > 0 {
        parts.push(num(u64::from(jiao))?);
        parts.push(PhrasePart::Word(Word::Jiao));
    }
    if fen > 0 {
        let after_ling = yuan > 0 && jiao == 0;
        if after_ling {
            parts.push(PhrasePart::Word(Word::Ling));
        }
        parts.push(num(u64::from(fen))?);
        if !(terse && (jiao > 0 || after_ling)) {
            parts.push(PhrasePart::Word(Word::Fen));
        }
    }
    Ok(Phrase { parts })
}

/// Years and months, always linked by líng.
pub fn render_duration(years: u64, months: u32) -> Result<Phrase, RenderError> {
    if !(1..=11).contains(&months) {
        return Err(RenderError::MonthOutOfRange(months));
    }
    let era = EraId::Contemporary.profile();
    if years == 0 {
        return Err(RenderError::ValueOutOfRange {
            value: 0,
            min: 1,
            max: era.max_value,
        });
    }
    Ok(Phrase {
        parts: vec![
            PhrasePart::Numeral(quantity_numeral(years, "年", &era)?),
            PhrasePart::Word(Word::Nian),
            PhrasePart::Word(Word::Ling),
            PhrasePart::Numeral(quantity_numeral(u64::from(months), "個", &era)?),
            PhrasePart::Word(Word::Ge),
            PhrasePart::Word(Word::Yue),
        ],
    })
}
