//! Worked examples and the round-trip self check.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::era::EraId;
use crate::generator::render_integer;
use crate::morpheme::Script;
use crate::options::{RenderOptions, TwoStyle};
use crate::parser::{parse, EraMode};
use crate::phrase::{render_currency, render_duration};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExampleInput {
    Integer { value: u64, era: EraId, options: RenderOptions },
    Elliptic { value: u64 },
    Currency { yuan: u64, jiao: u8, fen: u8 },
    Duration { years: u64, months: u32 },
}

/// One expected rendering. `tokens` uses bracket notation and is empty for
/// phrases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Example {
    pub label: &'static str,
    pub input: ExampleInput,
    pub han: &'static str,
    pub tokens: &'static str,
}

const PLAIN: RenderOptions = RenderOptions {
    script: Script::Traditional,
    two_style: TwoStyle::AlwaysEr,
    use_you: None,
    elliptic: false,
    leading_ten_one: false,
};

const fn int(label: &'static str, value: u64, era: EraId, han: &'static str, tokens: &'static str) -> Example {
    Example {
        label,
        input: ExampleInput::Integer { value, era, options: PLAIN },
        han,
        tokens,
    }
}

const fn with(mut e: Example, options: RenderOptions) -> Example {
    if let ExampleInput::Integer { value, era, .. } = e.input {
        e.input = ExampleInput::Integer { value, era, options };
    }
    e
}

const YOU: RenderOptions = RenderOptions { use_you: Some(true), ..PLAIN };
const LIANG: RenderOptions = RenderOptions { two_style: TwoStyle::PreferLiang, ..PLAIN };
const TEN_ONE: RenderOptions = RenderOptions { leading_ten_one: true, ..PLAIN };

use EraId::*;

pub static EXAMPLES: &[Example] = &[
    Example { label: "price 3.85", input: ExampleInput::Currency { yuan: 3, jiao: 8, fen: 5 }, han: "三元八角五分", tokens: "" },
    Example { label: "price 3.05", input: ExampleInput::Currency { yuan: 3, jiao: 0, fen: 5 }, han: "三元零五分", tokens: "" },
    Example { label: "1 year 5 months", input: ExampleInput::Duration { years: 1, months: 5 }, han: "一年零五個月", tokens: "" },
    Example { label: "1 year 11 months", input: ExampleInput::Duration { years: 1, months: 11 }, han: "一年零十一個月", tokens: "" },
    int("1305000080", 1_305_000_080, Contemporary, "十三億零五百萬零八十", "[10][3][10⁸] líng [5][10²][10⁴] líng [8][10]"),
    int("strip 210", 210, SuanShuShu, "二百一十", "[2][10²][1][10]"),
    int("strip 2016", 2016, SuanShuShu, "二千一十六", "[2][10³][1][10][6]"),
    int("strip 150", 150, SuanShuShu, "百五十", "[10²][5][10]"),
    int("strip 7129", 7129, SuanShuShu, "七千一百二十九", "[7][10³][1][10²][2][10][9]"),
    int("strip 1089", 1089, SuanShuShu, "千八十九", "[10³][8][10][9]"),
    int("strip 11520", 11_520, SuanShuShu, "萬一千五百二十", "[10⁴][1][10³][5][10²][2][10]"),
    int("total 11100", 11_100, SuanShuShu, "萬一千一百", "[10⁴][1][10³][1][10²]"),
    int("Dunhuang 10", 10, Dunhuang, "十", "[10]"),
    int("Dunhuang 100", 100, Dunhuang, "一百", "[1][10²]"),
    with(int("Dunhuang 115000", 115_000, Dunhuang, "一十一萬五千", "[1][10][1][10⁴][5][10³]"), TEN_ONE),
    int("Dunhuang 115000 short", 115_000, Dunhuang, "十一萬五千", "[10][1][10⁴][5][10³]"),
    int("2222 èr", 2222, Contemporary, "二千二百二十二", "[2][10³][2][10²][2][10][2]"),
    with(int("2222 liǎng", 2222, Contemporary, "兩千兩百二十二", "[2ᵥ][10³][2ᵥ][10²][2][10][2]"), LIANG),
    int("105 Shang", 105, ShangOracle, "百五", "[10²][5]"),
    int("150 Shang", 150, ShangOracle, "百五十", "[10²][5][10]"),
    with(int("105 Zhou", 105, ZhouBronze, "百有五", "[10²] yòu [5]"), YOU),
    with(int("150 Zhou", 150, ZhouBronze, "百有五十", "[10²] yòu [5][10]"), YOU),
    int("105 Suàn shù shū", 105, SuanShuShu, "百五", "[10²][5]"),
    int("150 Suàn shù shū", 150, SuanShuShu, "百五十", "[10²][5][10]"),
    int("105 Nine Chapters", 105, NineChapters, "一百五", "[1][10²][5]"),
    int("150 Nine Chapters", 150, NineChapters, "一百五十", "[1][10²][5][10]"),
    int("105 Qin Jiushao", 105, SongQin, "一百零五", "[1][10²] líng [5]"),
    int("150 Qin Jiushao", 150, SongQin, "一百五十", "[1][10²][5][10]"),
    int("105 Contemporary", 105, Contemporary, "一百零五", "[1][10²] líng [5]"),
    int("150 Contemporary", 150, Contemporary, "一百五十", "[1][10²][5][10]"),
    Example { label: "150 elliptic", input: ExampleInput::Elliptic { value: 150 }, han: "一百五", tokens: "[1][10²][5]" },
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub max: u64,
    pub examples_checked: usize,
    pub values_checked: u64,
    pub failure_count: u64,
    /// The first few failures.
    pub failures: Vec<Counterexample>,
    #[serde(serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u128(d.as_millis())
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

const KEPT_FAILURES: usize = 20;

struct Failures {
    count: u64,
    kept: Vec<Counterexample>,
}

impl Failures {
    fn push(&mut self, check: &'static str, detail: String) {
        self.count += 1;
        if self.kept.len() < KEPT_FAILURES {
            self.kept.push(Counterexample { check, detail });
        }
    }
}

/// Renders one example, as (Han, bracket tokens).
pub fn render_example(example: &Example) -> Result<(String, String), String> {
    let contemporary = Contemporary.profile();
    let (han, tokens) = match example.input {
        ExampleInput::Integer { value, era, options } => {
            let e = render_integer(value, &era.profile(), &options).map_err(|e| e.to_string())?;
            (e.surface(Script::Traditional), e.surface(Script::TokenList))
        }
        ExampleInput::Elliptic { value } => {
            let e = crate::generator::render_elliptic(value, &contemporary, &PLAIN).map_err(|e| e.to_string())?;
            (e.surface(Script::Traditional), e.surface(Script::TokenList))
        }
        ExampleInput::Currency { yuan, jiao, fen } => {
            let p = render_currency(yuan, jiao, fen, false).map_err(|e| e.to_string())?;
            (p.surface(Script::Traditional), String::new())
        }
        ExampleInput::Duration { years, months } => {
            let p = render_duration(years, months).map_err(|e| e.to_string())?;
            (p.surface(Script::Traditional), String::new())
        }
    };
    Ok((han, tokens))
}

/// líng count implied by the decimal digits of `n`, read in 4-digit slices.
pub fn gap_count(n: u64) -> usize {
    let digits = n.to_string();
    let pad = (4 - digits.len() % 4) % 4;
    let padded = format!("{}{}", "0".repeat(pad), digits);
    let slices: Vec<&str> = padded.as_bytes().chunks(4).map(|c| std::str::from_utf8(c).unwrap()).collect();
    let mut count = 0;
    let mut seen = false;
    let mut skipped = false;
    for slice in slices {
        let trimmed = slice.trim_matches('0');
        if trimmed.is_empty() {
            skipped |= seen;
            continue;
        }
        if seen && (slice.starts_with('0') || skipped) {
            count += 1;
        }
        // zero runs between nonzero digits inside the slice
        count += trimmed.split(|c: char| c != '0').filter(|run| !run.is_empty()).count();
        seen = true;
        skipped = false;
    }
    count
}

/// Checks the example table, then parse(render(n)) = n for every era and
/// every n up to `max`, plus the Contemporary líng count.
pub fn run_selftest(max: u64, examples: &[Example]) -> SelftestReport {
    let start = Instant::now();
    let mut failures = Failures { count: 0, kept: Vec::new() };

    for example in examples {
        match render_example(example) {
            Ok((han, tokens)) => {
                if han != example.han || (!example.tokens.is_empty() && tokens != example.tokens) {
                    failures.push(
                        "example",
                        format!("{}: expected {} {}, got {han} {tokens}", example.label, example.han, example.tokens),
                    );
                }
            }
            Err(e) => failures.push("example", format!("{}: {e}", example.label)),
        }
    }

    let mut values_checked = 0;
    for era in EraId::ALL {
        let profile = era.profile();
        for n in profile.min_value()..=max.min(profile.max_value) {
            values_checked += 1;
            let expr = match render_integer(n, &profile, &RenderOptions::default()) {
                Ok(e) => e,
                Err(e) => {
                    failures.push("render", format!("{} {n}: {e}", era.key()));
                    continue;
                }
            };
            match parse(&expr.tokens, EraMode::Strict(era)) {
                Ok(o) if o.value == n => {}
                Ok(o) => failures.push("round trip", format!("{} {n} -> {} -> {}", era.key(), expr.surface(Script::TokenList), o.value)),
                Err(e) => failures.push("round trip", format!("{} {n} -> {}: {e}", era.key(), expr.surface(Script::TokenList))),
            }
            if era == Contemporary && n > 0 && expr.ling_count() != gap_count(n) {
                failures.push("líng count", format!("{n}: {} líng, {} gaps", expr.ling_count(), gap_count(n)));
            }
        }
    }

    SelftestReport {
        max,
        examples_checked: examples.len(),
        values_checked,
        failure_count: failures.count,
        failures: failures.kept,
        elapsed: start.elapsed(),
    }
}
