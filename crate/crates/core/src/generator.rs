//! Integer to morpheme-sequence rendering.

use serde::Serialize;
use thiserror::Error;

use crate::era::{EraId, EraProfile, OneRule};
use crate::morpheme::{render_tokens, Morpheme, Rank, Script};
use crate::options::{RenderOptions, TwoStyle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("{value} is outside the range {min}..={max} of this era")]
    ValueOutOfRange { value: u64, min: u64, max: u64 },
    #[error("{0} has no word for zero")]
    ZeroInexpressible(EraId),
    #[error("{what} is not available in {era}")]
    StyleNotAllowed { era: EraId, what: &'static str },
    #[error("{0} has no elliptic form")]
    EllipsisUnavailable(u64),
    #[error("the amount is zero")]
    AllZeroAmount,
    #[error("month count {0} is outside 1..=11")]
    MonthOutOfRange(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExpressionFlags {
    pub elliptic: bool,
    /// Usable directly before a classifier.
    pub incorporable: bool,
}

/// A rendered numeral.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NumeralExpression {
    pub tokens: Vec<Morpheme>,
    pub era_id: EraId,
    pub flags: ExpressionFlags,
}

impl NumeralExpression {
    pub fn surface(&self, script: Script) -> String {
        render_tokens(&self.tokens, script).expect("generated tokens are always renderable")
    }

    pub fn ling_count(&self) -> usize {
        self.tokens.iter().filter(|&&m| m == Morpheme::Ling).count()
    }
}

/// Renders `n` under `era`.
///
/// With `opts.elliptic` the final pivot is dropped when the value has an
/// elliptic form; otherwise the full form is returned unchanged.
pub fn render_integer(n: u64, era: &EraProfile, opts: &RenderOptions) -> Result<NumeralExpression, RenderError> {
    opts.validate(era)?;
    let full = render_full(n, era, opts)?;
    if opts.elliptic {
        Ok(elide(&full).unwrap_or(full))
    } else {
        Ok(full)
    }
}

/// The elliptic form of `n`: its full form minus the final pivot.
pub fn render_elliptic(n: u64, era: &EraProfile, opts: &RenderOptions) -> Result<NumeralExpression, RenderError> {
    let opts = opts.elliptic(true);
    opts.validate(era)?;
    let full = render_full(n, era, &opts)?;
    elide(&full).ok_or(RenderError::EllipsisUnavailable(n))
}

fn check_range(n: u64, era: &EraProfile) -> Result<(), RenderError> {
    if n > era.max_value {
        return Err(RenderError::ValueOutOfRange {
            value: n,
            min: era.min_value(),
            max: era.max_value,
        });
    }
    if n == 0 && !era.zero_expressible {
        return Err(RenderError::ZeroInexpressible(era.era_id));
    }
    Ok(())
}

/// One non-zero digit with its place inside the numeral.
#[derive(Clone, Copy)]
struct Place {
    /// Myriad group: 0 units, 1 wàn, 2 yì.
    group: u32,
    /// Position inside the group, 0..=3.
    rank: u32,
}

impl Place {
    fn position(self) -> u32 {
        self.group * 4 + self.rank
    }
}

fn group_coefficient(n: u64, group: u32) -> u64 {
    let c = n / 10_000u64.pow(group);
    if group == 2 {
        c
    } else {
        c % 10_000
    }
}

pub(crate) fn render_full(n: u64, era: &EraProfile, opts: &RenderOptions) -> Result<NumeralExpression, RenderError> {
    check_range(n, era)?;
    let mut tokens = Vec::new();
    if n == 0 {
        tokens.push(Morpheme::Ling);
        return Ok(expression(tokens, era, false));
    }

    let ling = era.ling_required();
    let you = opts.you_on(era);
    let liang = opts.two_style == TwoStyle::PreferLiang;
    // position after which the next compound is measured for a rank gap
    let mut prev_position: Option<u32> = None;
    let mut prev_place: Option<Place> = None;

    for group in (0..=2).rev() {
        let coef = group_coefficient(n, group);
        if coef == 0 {
            continue;
        }
        for rank in (0..=3).rev() {
            let digit = ((coef / 10u64.pow(rank)) % 10) as u8;
            if digit == 0 {
                continue;
            }
            let place = Place { group, rank };

            if let Some(prev) = prev_position {
                if ling && place.position() + 1 < prev {
                    tokens.push(Morpheme::Ling);
                } else if you && you_junction(prev_place, place) {
                    tokens.push(Morpheme::You);
                }
            }

            let pivot = Rank::inner(rank).or_else(|| Rank::outer(group));
            let say_digit = match (digit, pivot) {
                (1, Some(pivot)) if prev_place.is_none() => {
                    let multiplies_outer = rank > 0 && group > 0;
                    match era.leading_one(pivot, multiplies_outer) {
                        OneRule::Omit => false,
                        OneRule::Say => true,
                        OneRule::Optional => opts.leading_ten_one,
                    }
                }
                _ => true,
            };
            if say_digit {
                let liang_slot = rank >= 2 || (rank == 0 && group > 0 && coef == 2);
                tokens.push(if digit == 2 && liang && liang_slot {
                    Morpheme::LiangTwo
                } else {
                    Morpheme::digit(digit)
                });
            }
            if let Some(inner) = Rank::inner(rank) {
                tokens.push(Morpheme::Pivot(inner));
            }
            prev_position = Some(place.position());
            prev_place = Some(place);
        }
        if let Some(outer) = Rank::outer(group) {
            tokens.push(Morpheme::Pivot(outer));
            prev_position = Some(group * 4);
        }
    }
    Ok(expression(tokens, era, false))
}

/// yòu links hundreds to tens and tens or hundreds to units.
fn you_junction(prev: Option<Place>, next: Place) -> bool {
    match prev {
        Some(prev) if prev.group == 0 && next.group == 0 => {
            matches!((prev.rank, next.rank), (2, 1) | (2, 0) | (1, 0))
        }
        _ => false,
    }
}

fn expression(tokens: Vec<Morpheme>, era: &EraProfile, elliptic: bool) -> NumeralExpression {
    NumeralExpression {
        tokens,
        era_id: era.era_id,
        flags: ExpressionFlags {
            elliptic,
            incorporable: !elliptic,
        },
    }
}

/// Drops the final pivot of `[d][P][d'][P/10]` when `P` is 10² or 10³.
pub(crate) fn elide(full: &NumeralExpression) -> Option<NumeralExpression> {
    let t = &full.tokens;
    let n = t.len();
    if n < 4 {
        return None;
    }
    let (Morpheme::Pivot(last), Some(_), Morpheme::Pivot(upper)) = (t[n - 1], t[n - 2].digit_value(), t[n - 3]) else {
        return None;
    };
    if last.is_outer() || upper.is_outer() || upper.exponent() != last.exponent() + 1 {
        return None;
    }
    Some(NumeralExpression {
        tokens: t[..n - 1].to_vec(),
        era_id: full.era_id,
        flags: ExpressionFlags {
            elliptic: true,
            incorporable: false,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::era::era_profile;
    use crate::morpheme::Rank::*;

    fn p(r: Rank) -> Morpheme {
        Morpheme::Pivot(r)
    }
    fn d(v: u8) -> Morpheme {
        Morpheme::digit(v)
    }
    const L: Morpheme = Morpheme::Ling;
    const Y: Morpheme = Morpheme::You;
    const V: Morpheme = Morpheme::LiangTwo;

    fn render(n: u64, era: EraId, opts: RenderOptions) -> Vec<Morpheme> {
        render_integer(n, &era_profile(era), &opts).unwrap().tokens
    }

    fn plain(n: u64, era: EraId) -> Vec<Morpheme> {
        render(n, era, RenderOptions::default())
    }

    #[test]
    fn contemporary_outer_gaps() {
        let got = render_integer(1_305_000_080, &era_profile(EraId::Contemporary), &RenderOptions::default()).unwrap();
        assert_eq!(
            got.tokens,
            vec![p(Ten), d(3), p(HundredMillion), L, d(5), p(Hundred), p(Myriad), L, d(8), p(Ten)]
        );
        assert_eq!(got.surface(Script::Traditional), "十三億零五百萬零八十");
        assert_eq!(got.surface(Script::Pinyin), "shí sān yì líng wǔ bǎi wàn líng bā shí");
        assert_eq!(got.ling_count(), 2);
    }

    #[test]
    fn contemporary_small_values() {
        use EraId::Contemporary as C;
        assert_eq!(plain(105, C), vec![d(1), p(Hundred), L, d(5)]);
        assert_eq!(plain(150, C), vec![d(1), p(Hundred), d(5), p(Ten)]);
        assert_eq!(plain(1001, C), vec![d(1), p(Thousand), L, d(1)]);
        assert_eq!(plain(0, C), vec![L]);
        assert_eq!(plain(7, C), vec![d(7)]);
        assert_eq!(plain(15, C), vec![p(Ten), d(5)]);
        assert_eq!(render(15, C, RenderOptions::new().leading_ten_one(true)), vec![d(1), p(Ten), d(5)]);
        assert_eq!(plain(1010, C), vec![d(1), p(Thousand), L, d(1), p(Ten)]);
        // wàn followed by qiān needs no líng even across zero digits
        assert_eq!(plain(1_001_000, C), vec![d(1), p(Hundred), p(Myriad), d(1), p(Thousand)]);
        assert_eq!(plain(100_000_023, C), vec![d(1), p(HundredMillion), L, d(2), p(Ten), d(3)]);
        assert_eq!(plain(100_000, C), vec![p(Ten), p(Myriad)]);
    }

    #[test]
    fn suanshushu_strips() {
        use EraId::SuanShuShu as S;
        assert_eq!(plain(2016, S), vec![d(2), p(Thousand), d(1), p(Ten), d(6)]);
        assert_eq!(plain(1089, S), vec![p(Thousand), d(8), p(Ten), d(9)]);
        assert_eq!(
            plain(11520, S),
            vec![p(Myriad), d(1), p(Thousand), d(5), p(Hundred), d(2), p(Ten)]
        );
        assert_eq!(plain(11100, S), vec![p(Myriad), d(1), p(Thousand), d(1), p(Hundred)]);
        assert_eq!(plain(105, S), vec![p(Hundred), d(5)]);
        assert_eq!(plain(1_000_000, S), vec![p(Hundred), p(Myriad)]);
    }

    #[test]
    fn dunhuang_and_nine_chapters() {
        assert_eq!(
            render(115_000, EraId::Dunhuang, RenderOptions::new().leading_ten_one(true)),
            vec![d(1), p(Ten), d(1), p(Myriad), d(5), p(Thousand)]
        );
        assert_eq!(plain(100_000, EraId::Dunhuang), vec![p(Ten), p(Myriad)]);
        assert_eq!(plain(1_000_000, EraId::Dunhuang), vec![p(Hundred), p(Myriad)]);
        assert_eq!(plain(100, EraId::Dunhuang), vec![d(1), p(Hundred)]);
        assert_eq!(plain(100_000, EraId::NineChapters), vec![d(1), p(Ten), p(Myriad)]);
        assert_eq!(plain(15, EraId::NineChapters), vec![d(1), p(Ten), d(5)]);
    }

    #[test]
    fn liang_placement() {
        let opts = RenderOptions::new().two_style(TwoStyle::PreferLiang);
        use EraId::Contemporary as C;
        assert_eq!(render(2222, C, opts), vec![V, p(Thousand), V, p(Hundred), d(2), p(Ten), d(2)]);
        assert_eq!(render(20_000, C, opts), vec![V, p(Myriad)]);
        assert_eq!(render(120_000, C, opts), vec![p(Ten), d(2), p(Myriad)]);
        assert_eq!(render(2, C, opts), vec![d(2)]);
        assert_eq!(render(2222, C, RenderOptions::new().two_style(TwoStyle::ReadingStyle)), plain(2222, C));
    }

    #[test]
    fn you_junctions() {
        let on = RenderOptions::new().use_you(true);
        assert_eq!(render(15, EraId::ZhouBronze, RenderOptions::default()), vec![p(Ten), Y, d(5)]);
        assert_eq!(render(105, EraId::ShangOracle, on), vec![p(Hundred), Y, d(5)]);
        assert_eq!(render(150, EraId::ShangOracle, on), vec![p(Hundred), Y, d(5), p(Ten)]);
        assert_eq!(plain(15, EraId::ShangOracle), vec![p(Ten), d(5)]);
        assert_eq!(render(1005, EraId::ZhouBronze, on), vec![p(Thousand), d(5)]);
    }

    #[test]
    fn elliptic_forms() {
        let c = era_profile(EraId::Contemporary);
        let opts = RenderOptions::default();
        let e = render_elliptic(150, &c, &opts).unwrap();
        assert_eq!(e.tokens, vec![d(1), p(Hundred), d(5)]);
        assert_eq!(e.flags, ExpressionFlags { elliptic: true, incorporable: false });
        assert_eq!(render_elliptic(105, &c, &opts), Err(RenderError::EllipsisUnavailable(105)));
        assert_eq!(render_elliptic(2_500_000, &c, &opts), Err(RenderError::EllipsisUnavailable(2_500_000)));
        assert_eq!(render_elliptic(15_000, &c, &opts), Err(RenderError::EllipsisUnavailable(15_000)));
        assert_eq!(render_elliptic(12_500, &c, &opts).unwrap().surface(Script::Traditional), "一萬二千五");
        // render_integer falls back to the full form
        assert_eq!(render(105, EraId::Contemporary, opts.elliptic(true)), plain(105, EraId::Contemporary));
    }

    #[test]
    fn errors() {
        let han = era_profile(EraId::SuanShuShu);
        let opts = RenderOptions::default();
        assert_eq!(render_integer(0, &han, &opts), Err(RenderError::ZeroInexpressible(EraId::SuanShuShu)));
        assert!(matches!(
            render_integer(100_000_000, &han, &opts),
            Err(RenderError::ValueOutOfRange { .. })
        ));
        assert!(matches!(
            render_integer(5, &han, &opts.two_style(TwoStyle::PreferLiang)),
            Err(RenderError::StyleNotAllowed { .. })
        ));
        assert!(matches!(
            render_integer(5, &han, &opts.use_you(true)),
            Err(RenderError::StyleNotAllowed { .. })
        ));
        assert!(matches!(
            render_elliptic(150, &era_profile(EraId::SongQin), &opts),
            Err(RenderError::StyleNotAllowed { .. })
        ));
        let c = era_profile(EraId::Contemporary);
        assert!(render_integer(999_999_999_999, &c, &opts).is_ok());
        assert!(render_integer(1_000_000_000_000, &c, &opts).is_err());
    }
}
