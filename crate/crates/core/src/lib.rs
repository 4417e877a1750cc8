//! Conversion between integers and Chinese numeral expressions, under the
//! grammar of a chosen historical era.
//!
//! ```
//! use chinum::{render_integer, parse_text, EraId, EraMode, RenderOptions, Script};
//!
//! let era = EraId::Contemporary.profile();
//! let expr = render_integer(1_305_000_080, &era, &RenderOptions::default()).unwrap();
//! assert_eq!(expr.surface(Script::Traditional), "十三億零五百萬零八十");
//!
//! let parsed = parse_text("萬一千五百二十", EraMode::Strict(EraId::SuanShuShu)).unwrap();
//! assert_eq!(parsed.value, 11_520);
//! ```

mod chronolect;
mod era;
mod generator;
mod morpheme;
mod options;
mod parser;
mod phrase;
mod scan;
mod selftest;
mod tokenize;

pub use chronolect::{classify, classify_text, feature_profile, feature_profile_text, EraConsistencyReport, EraVerdict, Verdict};
pub use era::{era_profile, EraId, EraProfile, InnerMultiplicandOne, LeadingOnePolicy, LingPolicy, OneRule, UnknownEra, YouPolicy};
pub use generator::{render_elliptic, render_integer, ExpressionFlags, NumeralExpression, RenderError};
pub use morpheme::{
    render_tokens, surface, Digit, Morpheme, Rank, RankClass, Script, SurfaceError, SurfaceForm, UnsupportedRank,
    GENERABLE_FORMS, PARSE_ONLY_FORMS,
};
pub use options::{RenderOptions, TwoStyle};
pub use parser::{
    parse, parse_text, parse_text_with, Diagnostic, DiagnosticKind, EraMode, Features, ParseError, ParseErrorKind,
    ParseOutcome,
};
pub use phrase::{render_currency, render_duration, render_ordinal, render_quantity, Phrase, PhrasePart, Word};
pub use tokenize::{han_morpheme, tokenize, tokenize_with, ScriptHint, TokenizeOptions, Tokenized};
pub use scan::{era_set_key, find_spans, scan, summarize, ScanRecord, ScanSummary};
pub use selftest::{gap_count, render_example, run_selftest, Counterexample, Example, ExampleInput, SelftestReport, EXAMPLES};
