//! Morpheme inventory, the pivot scale, and surface-form tables.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// Whether a pivot sits below or above the first gap in the decimal scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RankClass {
    Inner,
    Outer,
}

/// A multiplicative pivot: 10, 10², 10³, 10⁴ or 10⁸.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rank {
    Ten,
    Hundred,
    Thousand,
    Myriad,
    HundredMillion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("no pivot exists for 10^{0}")]
pub struct UnsupportedRank(pub u32);

impl Rank {
    /// Every rank, ascending.
    pub const ALL: [Rank; 5] = [
        Rank::Ten,
        Rank::Hundred,
        Rank::Thousand,
        Rank::Myriad,
        Rank::HundredMillion,
    ];

    pub const fn exponent(self) -> u32 {
        match self {
            Rank::Ten => 1,
            Rank::Hundred => 2,
            Rank::Thousand => 3,
            Rank::Myriad => 4,
            Rank::HundredMillion => 8,
        }
    }

    pub const fn value(self) -> u64 {
        10u64.pow(self.exponent())
    }

    pub const fn class(self) -> RankClass {
        match self {
            Rank::Myriad | Rank::HundredMillion => RankClass::Outer,
            _ => RankClass::Inner,
        }
    }

    pub const fn is_outer(self) -> bool {
        matches!(self.class(), RankClass::Outer)
    }

    /// Looks up the pivot for a power of ten. Only the five attested
    /// exponents are accepted.
    pub fn from_exponent(exponent: u32) -> Result<Rank, UnsupportedRank> {
        match exponent {
            1 => Ok(Rank::Ten),
            2 => Ok(Rank::Hundred),
            3 => Ok(Rank::Thousand),
            4 => Ok(Rank::Myriad),
            8 => Ok(Rank::HundredMillion),
            other => Err(UnsupportedRank(other)),
        }
    }

    /// Inner pivot for a position inside a myriad group (1..=3).
    pub(crate) fn inner(position: u32) -> Option<Rank> {
        match position {
            1 => Some(Rank::Ten),
            2 => Some(Rank::Hundred),
            3 => Some(Rank::Thousand),
            _ => None,
        }
    }

    /// Outer pivot closing myriad group `group` (1 → wàn, 2 → yì).
    pub(crate) fn outer(group: u32) -> Option<Rank> {
        match group {
            1 => Some(Rank::Myriad),
            2 => Some(Rank::HundredMillion),
            _ => None,
        }
    }

    /// Myriad group index closed by an outer pivot.
    pub(crate) fn group(self) -> u32 {
        self.exponent() / 4
    }
}

/// A digit morpheme, 1 through 9.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Digit(u8);

impl Digit {
    pub const fn new(value: u8) -> Option<Digit> {
        if value >= 1 && value <= 9 {
            Some(Digit(value))
        } else {
            None
        }
    }

    pub const fn get(self) -> u8 {
        self.0
    }
}

/// One token of a numeral expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Morpheme {
    Digit(Digit),
    /// liǎng, the variant form of 2.
    LiangTwo,
    Pivot(Rank),
    Ling,
    You,
    /// dān 單, a historical stand-in for líng. Parse only.
    Dan,
    /// líng written 另. Parse only.
    LingAlt,
}

impl Morpheme {
    /// Digit morpheme for `value`.
    ///
    /// Panics if `value` is not in 1..=9.
    pub fn digit(value: u8) -> Morpheme {
        Morpheme::Digit(Digit::new(value).expect("digit out of range 1..=9"))
    }

    pub const fn pivot(rank: Rank) -> Morpheme {
        Morpheme::Pivot(rank)
    }

    /// Numeric value of a digit, liǎng, or pivot.
    pub fn numeric_value(self) -> Option<u64> {
        match self {
            Morpheme::Digit(d) => Some(u64::from(d.get())),
            Morpheme::LiangTwo => Some(2),
            Morpheme::Pivot(r) => Some(r.value()),
            _ => None,
        }
    }

    /// Digit value for `Digit` and `LiangTwo`.
    pub fn digit_value(self) -> Option<u8> {
        match self {
            Morpheme::Digit(d) => Some(d.get()),
            Morpheme::LiangTwo => Some(2),
            _ => None,
        }
    }

    pub fn is_generable(self) -> bool {
        !matches!(self, Morpheme::Dan | Morpheme::LingAlt)
    }

    /// Ling and its historical equivalents.
    pub fn is_ling_like(self) -> bool {
        matches!(self, Morpheme::Ling | Morpheme::Dan | Morpheme::LingAlt)
    }

    pub fn is_link(self) -> bool {
        self.is_ling_like() || self == Morpheme::You
    }
}

impl fmt::Display for Morpheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Morpheme::Digit(d) => write!(f, "[{}]", d.get()),
            Morpheme::LiangTwo => f.write_str("[2ᵥ]"),
            Morpheme::Pivot(r) => f.write_str(match r {
                Rank::Ten => "[10]",
                Rank::Hundred => "[10²]",
                Rank::Thousand => "[10³]",
                Rank::Myriad => "[10⁴]",
                Rank::HundredMillion => "[10⁸]",
            }),
            Morpheme::Ling => f.write_str("líng"),
            Morpheme::You => f.write_str("yòu"),
            Morpheme::Dan => f.write_str("dān"),
            Morpheme::LingAlt => f.write_str("líng(另)"),
        }
    }
}

impl Serialize for Morpheme {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Output script for a numeral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Script {
    #[default]
    Traditional,
    Simplified,
    Pinyin,
    /// Bracket notation, e.g. `[1][10²] líng [5]`.
    TokenList,
}

/// The three written forms of one morpheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceForm {
    pub morpheme: Morpheme,
    pub traditional: &'static str,
    pub simplified: &'static str,
    pub pinyin: &'static str,
}

const fn form(
    morpheme: Morpheme,
    traditional: &'static str,
    simplified: &'static str,
    pinyin: &'static str,
) -> SurfaceForm {
    SurfaceForm {
        morpheme,
        traditional,
        simplified,
        pinyin,
    }
}

const fn d(value: u8) -> Morpheme {
    Morpheme::Digit(Digit(value))
}

/// Surface forms of every generable morpheme.
pub static GENERABLE_FORMS: [SurfaceForm; 17] = [
    form(d(1), "一", "一", "yī"),
    form(d(2), "二", "二", "èr"),
    form(d(3), "三", "三", "sān"),
    form(d(4), "四", "四", "sì"),
    form(d(5), "五", "五", "wǔ"),
    form(d(6), "六", "六", "liù"),
    form(d(7), "七", "七", "qī"),
    form(d(8), "八", "八", "bā"),
    form(d(9), "九", "九", "jiǔ"),
    form(Morpheme::LiangTwo, "兩", "两", "liǎng"),
    form(Morpheme::Pivot(Rank::Ten), "十", "十", "shí"),
    form(Morpheme::Pivot(Rank::Hundred), "百", "百", "bǎi"),
    form(Morpheme::Pivot(Rank::Thousand), "千", "千", "qiān"),
    form(Morpheme::Pivot(Rank::Myriad), "萬", "万", "wàn"),
    form(Morpheme::Pivot(Rank::HundredMillion), "億", "亿", "yì"),
    form(Morpheme::Ling, "零", "零", "líng"),
    form(Morpheme::You, "有", "又", "yòu"),
];

/// Forms recognized on input but never produced.
pub static PARSE_ONLY_FORMS: [SurfaceForm; 2] = [
    form(Morpheme::Dan, "單", "单", "dān"),
    form(Morpheme::LingAlt, "另", "另", "líng"),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("{0} is recognized on input but never generated")]
    NonGenerableMorpheme(Morpheme),
}

pub(crate) fn lookup(morpheme: Morpheme) -> &'static SurfaceForm {
    GENERABLE_FORMS
        .iter()
        .chain(PARSE_ONLY_FORMS.iter())
        .find(|f| f.morpheme == morpheme)
        .expect("every morpheme has a surface form")
}

/// Renders one morpheme in `script`.
pub fn surface(morpheme: Morpheme, script: Script) -> Result<String, SurfaceError> {
    if script == Script::TokenList {
        return Ok(morpheme.to_string());
    }
    if !morpheme.is_generable() {
        return Err(SurfaceError::NonGenerableMorpheme(morpheme));
    }
    let f = lookup(morpheme);
    Ok(match script {
        Script::Traditional => f.traditional,
        Script::Simplified => f.simplified,
        Script::Pinyin => f.pinyin,
        Script::TokenList => unreachable!(),
    }
    .to_owned())
}

/// Joins already-rendered pieces the way each script expects.
pub(crate) fn join_surface<I: IntoIterator<Item = String>>(script: Script, pieces: I) -> String {
    let pieces: Vec<String> = pieces.into_iter().collect();
    match script {
        Script::Traditional | Script::Simplified => pieces.concat(),
        Script::Pinyin => pieces.join(" "),
        Script::TokenList => {
            // brackets abut, words are spaced: [1][10²] líng [5]
            let mut out = String::new();
            for piece in pieces {
                let bracket = piece.starts_with('[');
                let prev_bracket = out.ends_with(']');
                if !out.is_empty() && !(bracket && prev_bracket) {
                    out.push(' ');
                }
                out.push_str(&piece);
            }
            out
        }
    }
}

/// Renders a token sequence.
pub fn render_tokens(tokens: &[Morpheme], script: Script) -> Result<String, SurfaceError> {
    let pieces = tokens
        .iter()
        .map(|&m| surface(m, script))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(join_surface(script, pieces))
}
