//! Historical stages of the numeral grammar.
//!
//! Each [`EraProfile`] fixes how compounds are linked (yòu, líng), when the
//! digit [1] is said before a pivot, and which Contemporary-only variants
//! (liǎng, elliptic forms, standalone zero) exist.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::morpheme::Rank;

/// The eight grammar stages, in chronological order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EraId {
    #[serde(rename = "shang")]
    ShangOracle,
    #[serde(rename = "zhou")]
    ZhouBronze,
    #[serde(rename = "warring")]
    WarringStates,
    SuanShuShu,
    Dunhuang,
    NineChapters,
    SongQin,
    Contemporary,
}

impl EraId {
    pub const ALL: [EraId; 8] = [
        EraId::ShangOracle,
        EraId::ZhouBronze,
        EraId::WarringStates,
        EraId::SuanShuShu,
        EraId::Dunhuang,
        EraId::NineChapters,
        EraId::SongQin,
        EraId::Contemporary,
    ];

    /// Short identifier used on the command line and in JSON.
    pub const fn key(self) -> &'static str {
        match self {
            EraId::ShangOracle => "shang",
            EraId::ZhouBronze => "zhou",
            EraId::WarringStates => "warring",
            EraId::SuanShuShu => "suanshushu",
            EraId::Dunhuang => "dunhuang",
            EraId::NineChapters => "ninechapters",
            EraId::SongQin => "songqin",
            EraId::Contemporary => "contemporary",
        }
    }

    pub const fn description(self) -> &'static str {
        match self {
            EraId::ShangOracle => "Shang oracle bones (13th-11th c. BCE)",
            EraId::ZhouBronze => "Zhou bronzes (11th-5th c. BCE)",
            EraId::WarringStates => "Warring States bronzes (5th-3rd c. BCE)",
            EraId::SuanShuShu => "Suàn shù shū and Han strips (2nd c. BCE-1st c. CE)",
            EraId::Dunhuang => "Dunhuang mathematical manuscripts (1st-10th c. CE)",
            EraId::NineChapters => "Nine Chapters, 7th c. CE edition",
            EraId::SongQin => "Qin Jiushao and later líng users (13th c. CE onward)",
            EraId::Contemporary => "Contemporary standard Chinese",
        }
    }

    /// The script of these eras hides whether [1] preceded a pivot, so
    /// parsing accepts it either way.
    pub const fn leading_one_unattested(self) -> bool {
        matches!(self, EraId::ShangOracle | EraId::ZhouBronze | EraId::WarringStates)
    }

    pub fn profile(self) -> EraProfile {
        era_profile(self)
    }
}

impl fmt::Display for EraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown era `{0}` (expected one of shang, zhou, warring, suanshushu, dunhuang, ninechapters, songqin, contemporary)")]
pub struct UnknownEra(pub String);

impl FromStr for EraId {
    type Err = UnknownEra;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .map(|c| c.to_ascii_lowercase())
            .collect();
        Ok(match key.as_str() {
            "shang" | "shangoracle" => EraId::ShangOracle,
            "zhou" | "zhoubronze" => EraId::ZhouBronze,
            "warring" | "warringstates" => EraId::WarringStates,
            "suanshushu" | "han" => EraId::SuanShuShu,
            "dunhuang" => EraId::Dunhuang,
            "ninechapters" => EraId::NineChapters,
            "songqin" | "song" => EraId::SongQin,
            "contemporary" | "modern" => EraId::Contemporary,
            _ => return Err(UnknownEra(s.to_owned())),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "policy")]
pub enum YouPolicy {
    Forbidden,
    Optional { default_on: bool },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LingPolicy {
    Forbidden,
    Required,
}

/// Whether [1] is said before the first pivot of a numeral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LeadingOnePolicy {
    OmitBeforeHighestPivot,
    RequiredAllPivots,
    RequiredExceptLeadingTen,
}

/// [1] before an inner pivot that itself multiplies wàn or yì,
/// as in [10²][10⁴] versus [1][10²][10⁴].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InnerMultiplicandOne {
    OmitOne,
    RequireOne,
}

/// Resolved rule for one [1] slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OneRule {
    Omit,
    Say,
    /// Either form is grammatical; generation follows `leading_ten_one`.
    Optional,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EraProfile {
    pub era_id: EraId,
    pub you_policy: YouPolicy,
    pub ling_policy: LingPolicy,
    pub leading_one_policy: LeadingOnePolicy,
    pub inner_before_outer_one_policy: InnerMultiplicandOne,
    pub liang_allowed: bool,
    pub elliptic_allowed: bool,
    pub zero_expressible: bool,
    pub max_value: u64,
}

const EARLY_MAX: u64 = 99_999_999;
const LATE_MAX: u64 = 999_999_999_999;

const fn early(era_id: EraId, you_policy: YouPolicy, leading: LeadingOnePolicy, inner: InnerMultiplicandOne) -> EraProfile {
    EraProfile {
        era_id,
        you_policy,
        ling_policy: LingPolicy::Forbidden,
        leading_one_policy: leading,
        inner_before_outer_one_policy: inner,
        liang_allowed: false,
        elliptic_allowed: false,
        zero_expressible: false,
        max_value: EARLY_MAX,
    }
}

static PROFILES: [EraProfile; 8] = [
    early(
        EraId::ShangOracle,
        YouPolicy::Optional { default_on: false },
        LeadingOnePolicy::OmitBeforeHighestPivot,
        InnerMultiplicandOne::OmitOne,
    ),
    early(
        EraId::ZhouBronze,
        YouPolicy::Optional { default_on: true },
        LeadingOnePolicy::OmitBeforeHighestPivot,
        InnerMultiplicandOne::OmitOne,
    ),
    early(
        EraId::WarringStates,
        YouPolicy::Optional { default_on: false },
        LeadingOnePolicy::OmitBeforeHighestPivot,
        InnerMultiplicandOne::OmitOne,
    ),
    early(
        EraId::SuanShuShu,
        YouPolicy::Forbidden,
        LeadingOnePolicy::OmitBeforeHighestPivot,
        InnerMultiplicandOne::OmitOne,
    ),
    early(
        EraId::Dunhuang,
        YouPolicy::Forbidden,
        LeadingOnePolicy::RequiredExceptLeadingTen,
        InnerMultiplicandOne::OmitOne,
    ),
    early(
        EraId::NineChapters,
        YouPolicy::Forbidden,
        LeadingOnePolicy::RequiredAllPivots,
        InnerMultiplicandOne::RequireOne,
    ),
    EraProfile {
        era_id: EraId::SongQin,
        you_policy: YouPolicy::Forbidden,
        ling_policy: LingPolicy::Required,
        leading_one_policy: LeadingOnePolicy::RequiredAllPivots,
        inner_before_outer_one_policy: InnerMultiplicandOne::RequireOne,
        liang_allowed: false,
        elliptic_allowed: false,
        zero_expressible: false,
        max_value: LATE_MAX,
    },
    EraProfile {
        era_id: EraId::Contemporary,
        you_policy: YouPolicy::Forbidden,
        ling_policy: LingPolicy::Required,
        leading_one_policy: LeadingOnePolicy::RequiredExceptLeadingTen,
        inner_before_outer_one_policy: InnerMultiplicandOne::RequireOne,
        liang_allowed: true,
        elliptic_allowed: true,
        zero_expressible: true,
        max_value: LATE_MAX,
    },
];

/// The fixed profile for `era_id`.
pub fn era_profile(era_id: EraId) -> EraProfile {
    PROFILES[era_id as usize]
}

impl EraProfile {
    pub fn you_allowed(&self) -> bool {
        matches!(self.you_policy, YouPolicy::Optional { .. })
    }

    pub fn you_default(&self) -> bool {
        matches!(self.you_policy, YouPolicy::Optional { default_on: true })
    }

    pub fn ling_required(&self) -> bool {
        self.ling_policy == LingPolicy::Required
    }

    /// Smallest value this era can name.
    pub fn min_value(&self) -> u64 {
        u64::from(!self.zero_expressible)
    }

    /// Rule for a [1] in front of the first pivot of the numeral.
    ///
    /// `multiplies_outer` is set when `pivot` is inner and its compound is
    /// the coefficient of a following wàn or yì.
    pub fn leading_one(&self, pivot: Rank, multiplies_outer: bool) -> OneRule {
        if multiplies_outer && pivot != Rank::Ten {
            return match self.inner_before_outer_one_policy {
                InnerMultiplicandOne::OmitOne => OneRule::Omit,
                InnerMultiplicandOne::RequireOne => OneRule::Say,
            };
        }
        match (self.leading_one_policy, pivot) {
            (LeadingOnePolicy::OmitBeforeHighestPivot, _) => OneRule::Omit,
            (LeadingOnePolicy::RequiredAllPivots, _) => OneRule::Say,
            (LeadingOnePolicy::RequiredExceptLeadingTen, Rank::Ten) => OneRule::Optional,
            (LeadingOnePolicy::RequiredExceptLeadingTen, _) => OneRule::Say,
        }
    }
}
