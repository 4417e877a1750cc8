//! Finding and reading numerals in running Han text.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::chronolect::{classify, feature_profile};
use crate::era::EraId;
use crate::morpheme::Morpheme;
use crate::parser::{parse, EraMode, Features, ParseError, ParseOutcome};
use crate::tokenize::han_morpheme;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    /// Byte offset of the span in the input.
    pub offset: usize,
    /// 1-based line.
    pub line: usize,
    /// 1-based column, in characters.
    pub column: usize,
    pub text: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outcome: Option<ParseOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ParseError>,
    pub consistent_eras: Vec<EraId>,
    pub features: Features,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ScanSummary {
    pub total: usize,
    pub parsed: usize,
    pub errors: usize,
    pub with_you: usize,
    pub without_you: usize,
    pub with_ling: usize,
    pub with_liang: usize,
    pub elliptic: usize,
    /// Keyed by comma-joined era keys, `none` for the empty set.
    pub by_era_set: BTreeMap<String, usize>,
}

impl ScanSummary {
    pub fn add(&mut self, record: &ScanRecord) {
        self.total += 1;
        if record.error.is_some() {
            self.errors += 1;
        } else {
            self.parsed += 1;
        }
        let f = &record.features;
        if f.uses_you {
            self.with_you += 1;
        } else {
            self.without_you += 1;
        }
        self.with_ling += usize::from(f.uses_ling);
        self.with_liang += usize::from(f.liang_present);
        self.elliptic += usize::from(f.elliptic);
        *self.by_era_set.entry(era_set_key(&record.consistent_eras)).or_default() += 1;
    }
}

pub fn era_set_key(eras: &[EraId]) -> String {
    if eras.is_empty() {
        "none".to_owned()
    } else {
        eras.iter().map(|e| e.key()).collect::<Vec<_>>().join(",")
    }
}

fn is_link_graph(c: char) -> bool {
    matches!(han_morpheme(c), Some(Morpheme::You | Morpheme::Dan | Morpheme::LingAlt))
}

fn is_core_graph(c: char) -> bool {
    han_morpheme(c).is_some() && !is_link_graph(c)
}

/// Byte ranges of maximal numeral runs.
///
/// 有, 又, 單, 单 and 另 only count when numeral characters sit on both sides.
pub fn find_spans(text: &str) -> Vec<std::ops::Range<usize>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let in_run = |i: usize| {
        let c = chars[i].1;
        if is_core_graph(c) {
            return true;
        }
        is_link_graph(c)
            && i > 0
            && i + 1 < chars.len()
            && is_core_graph(chars[i - 1].1)
            && is_core_graph(chars[i + 1].1)
    };
    let mut spans = Vec::new();
    let mut start: Option<usize> = None;
    for (i, &(at, _)) in chars.iter().enumerate() {
        match (in_run(i), start) {
            (true, None) => start = Some(at),
            (false, Some(s)) => {
                spans.push(s..at);
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        spans.push(s..text.len());
    }
    spans
}

/// Extracts every numeral span of `text` and parses it under `mode`.
pub fn scan(text: &str, mode: EraMode) -> Vec<ScanRecord> {
    let mut records = Vec::new();
    let (mut line, mut line_start, mut cursor) = (1, 0, 0);
    for span in find_spans(text) {
        for (i, c) in text[cursor..span.start].char_indices() {
            if c == '\n' {
                line += 1;
                line_start = cursor + i + 1;
            }
        }
        cursor = span.start;
        let column = text[line_start..span.start].chars().count() + 1;
        let fragment = &text[span.clone()];
        let tokens: Vec<Morpheme> = fragment.chars().filter_map(han_morpheme).collect();
        let (outcome, error) = match parse(&tokens, mode) {
            Ok(o) => (Some(o), None),
            Err(e) => {
                let offset = fragment.char_indices().nth(e.position).map_or(span.end, |(o, _)| span.start + o);
                (None, Some(e.at_offset(offset)))
            }
        };
        records.push(ScanRecord {
            offset: span.start,
            line,
            column,
            text: fragment.to_owned(),
            consistent_eras: classify(&tokens).consistent,
            features: outcome.as_ref().map_or_else(|| feature_profile(&tokens), |o| o.features),
            outcome,
            error,
        });
    }
    records
}

pub fn summarize(records: &[ScanRecord]) -> ScanSummary {
    let mut summary = ScanSummary::default();
    for r in records {
        summary.add(r);
    }
    summary
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans_and_link_heuristic() {
        let text = "我有三本書，十有五人，又來了。";
        let recs = scan(text, EraMode::Lenient);
        let found: Vec<&str> = recs.iter().map(|r| r.text.as_str()).collect();
        assert_eq!(found, vec!["三", "十有五"]);
        assert_eq!(recs[1].outcome.as_ref().unwrap().value, 15);
    }

    #[test]
    fn positions() {
        let text = "甲\n乙 一百零五 丙\n二千";
        let recs = scan(text, EraMode::default());
        assert_eq!(recs.len(), 2);
        assert_eq!((recs[0].line, recs[0].column), (2, 3));
        assert_eq!(&text[recs[0].offset..recs[0].offset + recs[0].text.len()], "一百零五");
        assert_eq!((recs[1].line, recs[1].column), (3, 1));
        assert_eq!(recs[1].outcome.as_ref().unwrap().value, 2000);
    }

    #[test]
    fn tallies() {
        let recs = scan("十有五，十五。兩千，百五", EraMode::Lenient);
        let s = summarize(&recs);
        assert_eq!((s.total, s.with_you, s.without_you, s.with_liang), (4, 1, 3, 1));
        assert_eq!(s.by_era_set.get("shang,zhou,warring"), Some(&1));
    }

    #[test]
    fn strict_errors_carry_offsets() {
        let recs = scan("是十有五", EraMode::default());
        let e = recs[0].error.as_ref().unwrap();
        assert_eq!(e.offset, Some(6));
        assert_eq!(summarize(&recs).errors, 1);
        assert_eq!(summarize(&recs).with_you, 1);
    }
}
