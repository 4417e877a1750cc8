//! Text to morpheme tokens.

use std::ops::Range;

use serde::Serialize;

use crate::morpheme::{Morpheme, Rank, GENERABLE_FORMS, PARSE_ONLY_FORMS};
use crate::parser::{ParseError, ParseErrorKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScriptHint {
    #[default]
    Auto,
    Han,
    Pinyin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TokenizeOptions {
    pub hint: ScriptHint,
    /// Accept pinyin without tone marks.
    pub toneless: bool,
}

/// Tokens with the byte span each came from.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Tokenized {
    pub tokens: Vec<Morpheme>,
    pub spans: Vec<Range<usize>>,
    pub warnings: Vec<String>,
}

/// Morpheme for a single Han character, traditional or simplified.
pub fn han_morpheme(c: char) -> Option<Morpheme> {
    let mut buf = [0u8; 4];
    let s: &str = c.encode_utf8(&mut buf);
    GENERABLE_FORMS
        .iter()
        .chain(PARSE_ONLY_FORMS.iter())
        .find(|f| f.traditional == s || f.simplified == s)
        .map(|f| f.morpheme)
        .or(match c {
            '又' | '有' => Some(Morpheme::You),
            _ => None,
        })
}

fn pinyin_morpheme(syllable: &str) -> Option<Morpheme> {
    GENERABLE_FORMS
        .iter()
        .chain(PARSE_ONLY_FORMS.iter())
        .find(|f| f.pinyin == syllable)
        .map(|f| f.morpheme)
}

fn strip_tones(s: &str) -> String {
    s.chars()
        .map(|c| match c {
            'ā' | 'á' | 'ǎ' | 'à' => 'a',
            'ē' | 'é' | 'ě' | 'è' => 'e',
            'ī' | 'í' | 'ǐ' | 'ì' => 'i',
            'ō' | 'ó' | 'ǒ' | 'ò' => 'o',
            'ū' | 'ú' | 'ǔ' | 'ù' => 'u',
            'ǖ' | 'ǘ' | 'ǚ' | 'ǜ' | 'ü' => 'v',
            other => other.to_ascii_lowercase(),
        })
        .collect()
}

/// Toneless lookup. `yi` is returned as `None` because it is either yī or yì.
fn toneless_morpheme(syllable: &str) -> Option<Option<Morpheme>> {
    let bare = strip_tones(syllable);
    if bare == "yi" {
        return Some(None);
    }
    GENERABLE_FORMS
        .iter()
        .chain(PARSE_ONLY_FORMS.iter())
        .find(|f| strip_tones(f.pinyin) == bare && f.morpheme != Morpheme::LingAlt)
        .map(|f| Some(f.morpheme))
}

fn unknown(position: usize, offset: usize, what: &str) -> ParseError {
    ParseError::new(ParseErrorKind::UnknownCharacter, position, format!("`{what}` is not a numeral morpheme"))
        .at_offset(offset)
}

pub fn tokenize(text: &str, hint: ScriptHint) -> Result<Tokenized, ParseError> {
    tokenize_with(text, TokenizeOptions { hint, toneless: false })
}

/// Maps each numeral character or pinyin syllable to a morpheme.
pub fn tokenize_with(text: &str, options: TokenizeOptions) -> Result<Tokenized, ParseError> {
    let first = text.char_indices().find(|(_, c)| !c.is_whitespace());
    let Some((_, first_char)) = first else {
        return Err(ParseError::new(ParseErrorKind::EmptyInput, 0, "no numeral in input").at_offset(text.len()));
    };
    let script = match options.hint {
        ScriptHint::Auto if first_char.is_ascii_alphabetic() || strip_tones(&first_char.to_string()) != first_char.to_string() => {
            ScriptHint::Pinyin
        }
        ScriptHint::Auto => ScriptHint::Han,
        other => other,
    };
    match script {
        ScriptHint::Pinyin => tokenize_pinyin(text, options.toneless),
        _ => tokenize_han(text),
    }
}

fn tokenize_han(text: &str) -> Result<Tokenized, ParseError> {
    let mut out = Tokenized::default();
    for (offset, c) in text.char_indices() {
        if c.is_whitespace() {
            continue;
        }
        match han_morpheme(c) {
            Some(m) => {
                out.tokens.push(m);
                out.spans.push(offset..offset + c.len_utf8());
            }
            None => return Err(unknown(out.tokens.len(), offset, &c.to_string())),
        }
    }
    Ok(out)
}

fn tokenize_pinyin(text: &str, toneless: bool) -> Result<Tokenized, ParseError> {
    let mut out = Tokenized::default();
    let mut ambiguous = Vec::new();
    let mut rest = text;
    let mut base = 0;
    while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
        let end = rest[start..].find(char::is_whitespace).map_or(rest.len(), |e| start + e);
        let syllable = &rest[start..end];
        let offset = base + start;
        let m = match pinyin_morpheme(syllable) {
            Some(m) => Some(m),
            None if toneless => match toneless_morpheme(syllable) {
                Some(found) => {
                    if found.is_none() {
                        ambiguous.push(out.tokens.len());
                    }
                    found
                }
                None => return Err(unknown(out.tokens.len(), offset, syllable)),
            },
            None => return Err(unknown(out.tokens.len(), offset, syllable)),
        };
        // placeholder for toneless yi, resolved below
        out.tokens.push(m.unwrap_or(Morpheme::digit(1)));
        out.spans.push(offset..offset + syllable.len());
        base += end;
        rest = &text[base..];
    }
    for &i in &ambiguous {
        let prev_is_digit = i > 0 && out.tokens[i - 1].digit_value().is_some();
        let next_is_pivot = matches!(out.tokens.get(i + 1), Some(Morpheme::Pivot(_)));
        let resolved = if prev_is_digit && !next_is_pivot {
            Morpheme::Pivot(Rank::HundredMillion)
        } else {
            Morpheme::digit(1)
        };
        out.tokens[i] = resolved;
        out.warnings.push(format!("toneless `yi` at token {i} read as {resolved}"));
    }
    Ok(out)
}
