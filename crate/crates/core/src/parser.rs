//! Token sequences to values, strictly under one era or leniently.
//!
//! A numeral is read as a list of *items*: a digit with its inner pivot
//! ([5][10²]), an implicit-one pivot ([10²]), or a bare digit (a unit, the
//! coefficient of a following outer pivot, or an elliptic final digit).
//! Outer pivots close myriad groups. Links (líng, dān, 另, yòu) sit between
//! items. Each item gets an absolute decimal position, and the era's
//! rules are then checked against positions and links.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::era::{EraId, EraProfile, OneRule};
use crate::morpheme::{Morpheme, Rank};
use crate::tokenize::{tokenize_with, TokenizeOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ParseErrorKind {
    UnknownCharacter,
    EmptyInput,
    MisplacedLing,
    MisplacedYou,
    LiangBeforeShi,
    LiangInUnitSlot,
    RankOrderViolation,
    DigitRunWithoutPivot,
    OutOfEraMorpheme,
    AmbiguousElliptic,
    Overflow,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[error("{kind} at token {position}: {message}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Index of the first offending token (token count for end of input).
    pub position: usize,
    /// Byte offset in the source text, when parsing text.
    pub offset: Option<usize>,
    pub message: String,
    /// Set when the missing link is a líng dropped right after wàn or yì.
    #[serde(skip)]
    pub(crate) ling_dropped_after_outer: bool,
}

impl ParseError {
    pub fn new(kind: ParseErrorKind, position: usize, message: impl Into<String>) -> Self {
        ParseError {
            kind,
            position,
            offset: None,
            message: message.into(),
            ling_dropped_after_outer: false,
        }
    }

    pub fn at_offset(mut self, offset: usize) -> Self {
        self.offset = Some(offset);
        self
    }
}

/// Which grammar a parse was checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EraMode {
    Strict(EraId),
    Lenient,
}

impl Default for EraMode {
    fn default() -> Self {
        EraMode::Strict(EraId::Contemporary)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Features {
    pub uses_you: bool,
    /// líng, dān or 另 occurs.
    pub uses_ling: bool,
    pub uses_dan_or_lingalt: bool,
    pub liang_present: bool,
    pub elliptic: bool,
    pub leading_one_before_highest: bool,
    pub one_before_inner_multiplicand: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagnosticKind {
    /// líng missing right after wàn or yì, as some Zhejiang speakers say it.
    ZhejiangLingDrop,
    /// líng missing at an inner gap.
    InnerLingMissing,
    AmbiguousElliptic,
    DanOrLingAlt,
    OmittedNonLeadingOne,
    TonelessPinyin,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub kind: DiagnosticKind,
    pub position: Option<usize>,
    pub message: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub candidates: Vec<u64>,
}

impl Diagnostic {
    fn at(kind: DiagnosticKind, position: usize, message: impl Into<String>) -> Self {
        Diagnostic {
            kind,
            position: Some(position),
            message: message.into(),
            candidates: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParseOutcome {
    pub value: u64,
    pub era_checked: EraMode,
    pub features: Features,
    pub diagnostics: Vec<Diagnostic>,
}

// ---------------------------------------------------------------------------
// grammar

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum LingRule {
    Forbidden,
    Required,
    /// Accepted at gaps; a missing one only warns.
    Optional,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum LeadingRule {
    Profile(EraProfile),
    Either,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum EllipticRule {
    /// A trailing bare digit is always the unit.
    UnitReading,
    Elliptic,
    /// Elliptic only when the input otherwise looks Contemporary.
    IfLingOrLiang,
}

#[derive(Debug, Clone, Copy)]
struct Grammar {
    mode: EraMode,
    max: u64,
    zero: bool,
    you: bool,
    ling: LingRule,
    dan: bool,
    liang: bool,
    leading: LeadingRule,
    implicit_inner_one: bool,
    elliptic: EllipticRule,
}

impl Grammar {
    fn strict(era: EraProfile) -> Self {
        Grammar {
            mode: EraMode::Strict(era.era_id),
            max: era.max_value,
            zero: era.zero_expressible,
            you: era.you_allowed(),
            ling: if era.ling_required() {
                LingRule::Required
            } else {
                LingRule::Forbidden
            },
            // dān and 另 are attested in the 13th century, not today
            dan: era.era_id == EraId::SongQin,
            liang: era.liang_allowed,
            leading: if era.era_id.leading_one_unattested() {
                LeadingRule::Either
            } else {
                LeadingRule::Profile(era)
            },
            implicit_inner_one: false,
            elliptic: if era.elliptic_allowed {
                EllipticRule::Elliptic
            } else {
                EllipticRule::UnitReading
            },
        }
    }

    fn permissive() -> Self {
        let latest = EraId::Contemporary.profile();
        Grammar {
            mode: EraMode::Lenient,
            max: latest.max_value,
            zero: true,
            you: true,
            ling: LingRule::Optional,
            dan: true,
            liang: true,
            leading: LeadingRule::Either,
            implicit_inner_one: true,
            elliptic: EllipticRule::IfLingOrLiang,
        }
    }
}

// ---------------------------------------------------------------------------
// structure

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Link {
    Ling(Morpheme),
    You,
}

#[derive(Debug, Clone, Copy)]
struct Item {
    digit: u8,
    digit_tok: Option<usize>,
    liang: bool,
    inner: Option<Rank>,
    pivot_tok: Option<usize>,
    /// Myriad group, 0..=2. Assigned when the group closes.
    group: u32,
    /// Position within the group.
    rank: u32,
    link: Option<(Link, usize)>,
    /// Last item of a group closed by wàn or yì.
    closes_outer: bool,
    /// Bare final digit read one rank below the preceding pivot.
    elliptic: bool,
}

impl Item {
    fn first_tok(&self) -> usize {
        self.digit_tok.or(self.pivot_tok).unwrap_or(0)
    }

    fn position(&self) -> u32 {
        self.group * 4 + self.rank
    }
}

struct Structure {
    items: Vec<Item>,
    /// Token index of each group's outer pivot, when present.
    outer_tok: [Option<usize>; 3],
}

fn err(kind: ParseErrorKind, position: usize, message: impl Into<String>) -> ParseError {
    ParseError::new(kind, position, message)
}

/// Splits tokens into items, links and groups.
fn structure(tokens: &[Morpheme]) -> Result<Structure, ParseError> {
    let mut items: Vec<Item> = Vec::new();
    let mut outer_tok = [None; 3];
    let mut pending: Option<(Link, usize)> = None;
    let mut open_from = 0usize;
    let mut last_group: Option<u32> = None;
    let mut i = 0;

    let new_item = |digit: u8, digit_tok: Option<usize>, liang: bool, inner: Option<Rank>, pivot_tok: Option<usize>| Item {
        digit,
        digit_tok,
        liang,
        inner,
        pivot_tok,
        group: 0,
        rank: inner.map_or(0, Rank::exponent),
        link: None,
        closes_outer: false,
        elliptic: false,
    };

    while i < tokens.len() {
        let tok = tokens[i];
        match tok {
            Morpheme::Ling | Morpheme::Dan | Morpheme::LingAlt | Morpheme::You => {
                let kind = if tok == Morpheme::You {
                    ParseErrorKind::MisplacedYou
                } else {
                    ParseErrorKind::MisplacedLing
                };
                if pending.is_some() {
                    return Err(err(kind, i, format!("{tok} directly after another link")));
                }
                if items.is_empty() {
                    return Err(err(kind, i, format!("{tok} cannot begin a numeral")));
                }
                let link = if tok == Morpheme::You { Link::You } else { Link::Ling(tok) };
                pending = Some((link, i));
                i += 1;
            }
            Morpheme::Digit(_) | Morpheme::LiangTwo => {
                let digit = tok.digit_value().unwrap_or(0);
                let liang = tok == Morpheme::LiangTwo;
                let mut item = match tokens.get(i + 1) {
                    Some(Morpheme::Pivot(r)) if !r.is_outer() => {
                        let item = new_item(digit, Some(i), liang, Some(*r), Some(i + 1));
                        i += 2;
                        item
                    }
                    Some(Morpheme::Digit(_)) | Some(Morpheme::LiangTwo) => {
                        return Err(err(
                            ParseErrorKind::DigitRunWithoutPivot,
                            i + 1,
                            "two digits in a row without a pivot",
                        ));
                    }
                    _ => {
                        let item = new_item(digit, Some(i), liang, None, None);
                        i += 1;
                        item
                    }
                };
                item.link = pending.take();
                items.push(item);
            }
            Morpheme::Pivot(r) if !r.is_outer() => {
                let mut item = new_item(1, None, false, Some(r), Some(i));
                item.link = pending.take();
                items.push(item);
                i += 1;
            }
            Morpheme::Pivot(outer) => {
                if let Some((link, at)) = pending {
                    let kind = match link {
                        Link::You => ParseErrorKind::MisplacedYou,
                        Link::Ling(_) => ParseErrorKind::MisplacedLing,
                    };
                    return Err(err(kind, at, format!("link directly before {}", Morpheme::Pivot(outer))));
                }
                let group = outer.group();
                if last_group.is_some_and(|g| g <= group) {
                    return Err(err(
                        ParseErrorKind::RankOrderViolation,
                        i,
                        format!("{} after an equal or lower outer pivot", Morpheme::Pivot(outer)),
                    ));
                }
                if open_from == items.len() {
                    if i == 0 {
                        // a leading bare outer pivot: one wàn / one yì
                        let mut item = new_item(1, None, false, None, Some(i));
                        item.rank = 0;
                        items.push(item);
                    } else {
                        return Err(err(
                            ParseErrorKind::RankOrderViolation,
                            i,
                            format!("{} has no coefficient", Morpheme::Pivot(outer)),
                        ));
                    }
                }
                for item in &mut items[open_from..] {
                    item.group = group;
                }
                if let Some(last) = items.last_mut() {
                    last.closes_outer = true;
                    if last.inner.is_none() {
                        last.pivot_tok = Some(i);
                    }
                }
                outer_tok[group as usize] = Some(i);
                open_from = items.len();
                last_group = Some(group);
                i += 1;
            }
        }
    }
    if let Some((link, at)) = pending {
        let kind = match link {
            Link::You => ParseErrorKind::MisplacedYou,
            Link::Ling(_) => ParseErrorKind::MisplacedLing,
        };
        return Err(err(kind, at, "a numeral cannot end with a link"));
    }

    // ranks strictly descend inside each group
    for pair in items.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        if a.group == b.group && b.rank >= a.rank {
            return Err(err(
                ParseErrorKind::RankOrderViolation,
                b.first_tok(),
                "pivot not lower than the one before it",
            ));
        }
    }
    Ok(Structure { items, outer_tok })
}

// ---------------------------------------------------------------------------
// strict / permissive checking

fn parse_with(tokens: &[Morpheme], g: &Grammar) -> Result<ParseOutcome, ParseError> {
    if tokens.is_empty() {
        return Err(err(ParseErrorKind::EmptyInput, 0, "no tokens"));
    }
    let mut features = Features {
        uses_you: tokens.contains(&Morpheme::You),
        uses_ling: tokens.iter().any(|m| m.is_ling_like()),
        uses_dan_or_lingalt: tokens.iter().any(|m| matches!(m, Morpheme::Dan | Morpheme::LingAlt)),
        liang_present: tokens.contains(&Morpheme::LiangTwo),
        ..Features::default()
    };
    let mut diagnostics = Vec::new();

    if tokens == [Morpheme::Ling] {
        return if g.zero {
            Ok(ParseOutcome {
                value: 0,
                era_checked: g.mode,
                features,
                diagnostics,
            })
        } else {
            Err(err(ParseErrorKind::OutOfEraMorpheme, 0, "no standalone zero in this era"))
        };
    }

    let Structure { mut items, outer_tok } = structure(tokens)?;
    let mut errors: Vec<ParseError> = Vec::new();

    // elliptic final digit
    let n = items.len();
    if n >= 2 {
        let (prev, last) = (items[n - 2], items[n - 1]);
        let bare_final = last.inner.is_none() && last.group == 0 && last.link.is_none();
        if bare_final && prev.group == 0 && prev.rank >= 2 {
            let elliptic = match g.elliptic {
                EllipticRule::UnitReading => false,
                EllipticRule::Elliptic => true,
                EllipticRule::IfLingOrLiang => features.uses_ling || features.liang_present,
            };
            if elliptic {
                items[n - 1].rank = prev.rank - 1;
                items[n - 1].elliptic = true;
                features.elliptic = true;
            }
        }
    }

    // links and gaps
    for k in 1..items.len() {
        let (prev, cur) = (items[k - 1], items[k]);
        let prev_position = if prev.closes_outer && prev.group > 0 {
            prev.group * 4
        } else {
            prev.position()
        };
        let gap = cur.position() + 1 < prev_position;
        match cur.link {
            Some((Link::Ling(m), at)) => {
                if g.ling == LingRule::Forbidden || (m != Morpheme::Ling && !g.dan) {
                    errors.push(err(ParseErrorKind::OutOfEraMorpheme, at, format!("{m} is not used in this era")));
                } else if !gap {
                    errors.push(err(ParseErrorKind::MisplacedLing, at, format!("{m} where no rank is skipped")));
                } else if m != Morpheme::Ling {
                    diagnostics.push(Diagnostic::at(
                        DiagnosticKind::DanOrLingAlt,
                        at,
                        format!("{m} read as líng"),
                    ));
                }
            }
            Some((Link::You, at)) => {
                if !g.you {
                    errors.push(err(ParseErrorKind::OutOfEraMorpheme, at, "yòu is not used in this era"));
                }
            }
            None if gap => {
                let after_outer = prev.closes_outer && prev.group > 0;
                match g.ling {
                    LingRule::Forbidden => {}
                    LingRule::Required => {
                        let mut e = err(ParseErrorKind::MisplacedLing, cur.first_tok(), "missing líng at a rank gap");
                        e.ling_dropped_after_outer = after_outer;
                        errors.push(e);
                    }
                    LingRule::Optional if after_outer => diagnostics.push(Diagnostic::at(
                        DiagnosticKind::ZhejiangLingDrop,
                        cur.first_tok(),
                        "líng dropped after an outer pivot",
                    )),
                    LingRule::Optional => diagnostics.push(Diagnostic::at(
                        DiagnosticKind::InnerLingMissing,
                        cur.first_tok(),
                        "no líng at an inner rank gap",
                    )),
                }
            }
            None => {}
        }
    }

    // [1] before pivots
    if let Some(first) = items.first() {
        let pivot = first.inner.or_else(|| {
            (first.closes_outer && first.group > 0).then(|| Rank::outer(first.group)).flatten()
        });
        if let Some(pivot) = pivot {
            let explicit = first.digit_tok.is_some();
            if first.digit == 1 {
                features.leading_one_before_highest = explicit;
                let multiplies_outer = first.inner.is_some() && first.group > 0;
                features.one_before_inner_multiplicand = explicit && multiplies_outer;
                let rule = match g.leading {
                    LeadingRule::Either => OneRule::Optional,
                    LeadingRule::Profile(era) => era.leading_one(pivot, multiplies_outer),
                };
                let at = first.first_tok();
                match (rule, explicit) {
                    (OneRule::Omit, true) => errors.push(err(
                        ParseErrorKind::OutOfEraMorpheme,
                        at,
                        "[1] before the highest pivot is not said in this era",
                    )),
                    (OneRule::Say, false) => errors.push(err(
                        ParseErrorKind::OutOfEraMorpheme,
                        at,
                        "[1] is required before the highest pivot in this era",
                    )),
                    _ => {}
                }
            }
        }
    }
    for item in items.iter().skip(1) {
        if item.digit_tok.is_none() {
            let at = item.first_tok();
            if g.implicit_inner_one {
                diagnostics.push(Diagnostic::at(
                    DiagnosticKind::OmittedNonLeadingOne,
                    at,
                    "[1] omitted before a non-leading pivot",
                ));
            } else {
                errors.push(err(
                    ParseErrorKind::OutOfEraMorpheme,
                    at,
                    "[1] is required before every pivot but the first",
                ));
            }
        }
    }

    // liǎng
    for (k, item) in items.iter().enumerate() {
        if !item.liang {
            continue;
        }
        let at = item.first_tok();
        if !g.liang {
            errors.push(err(ParseErrorKind::OutOfEraMorpheme, at, "liǎng is not used in exact numerals of this era"));
        } else if item.inner == Some(Rank::Ten) || (item.elliptic && item.rank == 1) {
            errors.push(err(ParseErrorKind::LiangBeforeShi, at, "only èr is used with [10]"));
        } else if item.inner.is_none() && !item.elliptic {
            // the final unit competes with everything above it; an outer
            // coefficient only with its own group
            let crowded = if item.closes_outer && item.group > 0 {
                items.iter().enumerate().any(|(j, o)| j != k && o.group == item.group)
            } else {
                items.len() > 1
            };
            if crowded {
                errors.push(err(
                    ParseErrorKind::LiangInUnitSlot,
                    at,
                    "only èr is used in a unit slot with digits above it",
                ));
            }
        }
    }

    if let Some(first_error) = errors.into_iter().min_by_key(|e| e.position) {
        return Err(first_error);
    }

    let value = items
        .iter()
        .fold(0u64, |acc, it| acc + u64::from(it.digit) * 10u64.pow(it.position()));
    if value > g.max {
        let at = outer_tok.iter().rev().flatten().next().copied().unwrap_or(0);
        return Err(err(ParseErrorKind::Overflow, at, format!("{value} exceeds {}", g.max)));
    }
    Ok(ParseOutcome {
        value,
        era_checked: g.mode,
        features,
        diagnostics,
    })
}

/// Parses `tokens` under one era's strict grammar or leniently.
///
/// Lenient mode first tries every era. If they agree, that value wins; if
/// they disagree (a trailing digit read as a unit by líng-free eras and as
/// an elliptic digit by Contemporary), the Contemporary reading is returned
/// with both candidates in the diagnostics. Input no single era accepts is
/// read by a grammar that mixes all eras and drops líng with a warning.
pub fn parse(tokens: &[Morpheme], mode: EraMode) -> Result<ParseOutcome, ParseError> {
    match mode {
        EraMode::Strict(era) => parse_with(tokens, &Grammar::strict(era.profile())),
        EraMode::Lenient => parse_lenient(tokens),
    }
}

fn parse_lenient(tokens: &[Morpheme]) -> Result<ParseOutcome, ParseError> {
    let verdicts: Vec<(EraId, Result<ParseOutcome, ParseError>)> = EraId::ALL
        .iter()
        .map(|&era| (era, parse(tokens, EraMode::Strict(era))))
        .collect();
    let accepted: Vec<(EraId, &ParseOutcome)> = verdicts
        .iter()
        .filter_map(|(era, r)| r.as_ref().ok().map(|o| (*era, o)))
        .collect();

    let Some(&(latest_era, latest)) = accepted.last() else {
        return parse_with(tokens, &Grammar::permissive());
    };

    let mut values: Vec<u64> = accepted.iter().map(|(_, o)| o.value).collect();
    values.sort_unstable();
    values.dedup();

    let (chosen_era, chosen) = accepted
        .iter()
        .find(|(era, _)| *era == EraId::Contemporary)
        .copied()
        .unwrap_or((latest_era, latest));
    let mut outcome = chosen.clone();
    outcome.era_checked = EraMode::Lenient;

    if values.len() > 1 {
        outcome.diagnostics.push(Diagnostic {
            kind: DiagnosticKind::AmbiguousElliptic,
            position: Some(tokens.len() - 1),
            message: format!(
                "readings differ by era ({}); returning the {} reading",
                values.iter().map(u64::to_string).collect::<Vec<_>>().join(" / "),
                chosen_era.key()
            ),
            candidates: values,
        });
    }
    let contemporary = &verdicts[EraId::Contemporary as usize].1;
    if let Err(e) = contemporary {
        if e.ling_dropped_after_outer {
            outcome.diagnostics.push(Diagnostic::at(
                DiagnosticKind::ZhejiangLingDrop,
                e.position,
                "líng dropped after an outer pivot; standard Contemporary requires it",
            ));
        }
    }
    Ok(outcome)
}

/// Tokenizes and parses `text`.
pub fn parse_text(text: &str, mode: EraMode) -> Result<ParseOutcome, ParseError> {
    parse_text_with(text, mode, TokenizeOptions::default())
}

pub fn parse_text_with(text: &str, mode: EraMode, options: TokenizeOptions) -> Result<ParseOutcome, ParseError> {
    let tokenized = tokenize_with(text, options)?;
    match parse(&tokenized.tokens, mode) {
        Ok(mut outcome) => {
            outcome.diagnostics.extend(
                tokenized
                    .warnings
                    .into_iter()
                    .map(|w| Diagnostic {
                        kind: DiagnosticKind::TonelessPinyin,
                        position: None,
                        message: w,
                        candidates: Vec::new(),
                    }),
            );
            Ok(outcome)
        }
        Err(mut e) => {
            e.offset = tokenized.spans.get(e.position).map(|s| s.start).or(Some(text.len()));
            Err(e)
        }
    }
}
