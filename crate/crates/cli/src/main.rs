mod args;

use std::io::{self, Read, Write};
use std::process::ExitCode;

use chinum::{
    classify_text, parse_text_with, render_currency, render_duration, render_integer, render_ordinal, render_quantity,
    run_selftest, scan, summarize, EraConsistencyReport, EraId, EraMode, ExpressionFlags, Morpheme, ParseError,
    ParseOutcome, Phrase, RenderError, RenderOptions, ScanRecord, ScanSummary, Script, TokenizeOptions, Verdict,
    EXAMPLES,
};
use clap::Parser;
use serde::Serialize;
use thiserror::Error;

use args::{ClassifyArgs, Cli, Command, CurrencyArgs, DurationArgs, GenArgs, ParseArgs, ScanArgs, SelftestArgs};

#[derive(Debug, Error)]
enum CliError {
    /// Input that no grammar in force accepts.
    #[error("{0}")]
    Rejected(String),
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Io(String),
    #[error("output closed")]
    ClosedOutput,
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Rejected(_) => 1,
            CliError::Invalid(_) => 2,
            CliError::Io(_) => 3,
            CliError::ClosedOutput => 0,
        }
    }
}

impl From<RenderError> for CliError {
    fn from(e: RenderError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            CliError::ClosedOutput
        } else {
            CliError::Io(e.to_string())
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        match e.io_error_kind() {
            Some(kind) => io::Error::from(kind).into(),
            None => CliError::Io(e.to_string()),
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli.command, &mut out) {
        Ok(()) | Err(CliError::ClosedOutput) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("chinum: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<()> {
    match command {
        Command::Gen(a) => gen(&a, out),
        Command::Parse(a) => parse(&a, out),
        Command::Classify(a) => classify(&a, out),
        Command::Scan(a) => scan_cmd(&a, out),
        Command::Selftest(a) => selftest(&a, out),
        Command::Currency(a) => currency(&a, out),
        Command::Duration(a) => duration(&a, out),
    }
}

fn json_line(out: &mut impl Write, value: &impl Serialize) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct GenReport<'a> {
    value: u64,
    era: EraId,
    options: RenderOptions,
    #[serde(skip_serializing_if = "Option::is_none")]
    classifier: Option<&'a str>,
    ordinal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    tokens: Option<&'a [Morpheme]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    flags: Option<ExpressionFlags>,
    #[serde(skip_serializing_if = "Option::is_none")]
    phrase: Option<&'a Phrase>,
    surface: String,
}

fn gen(a: &GenArgs, out: &mut impl Write) -> Result<()> {
    let era = a.era.profile();
    let opts = a.options();
    let script = opts.script;
    let mut report = GenReport {
        value: a.value,
        era: a.era,
        options: opts,
        classifier: a.classifier.as_deref(),
        ordinal: a.ordinal,
        tokens: None,
        flags: None,
        phrase: None,
        surface: String::new(),
    };
    let phrase;
    let expr;
    if let Some(classifier) = &a.classifier {
        opts.validate(&era)?;
        phrase = render_quantity(a.value, classifier, &era)?;
        report.surface = phrase.surface(script);
        report.phrase = Some(&phrase);
    } else if a.ordinal {
        opts.validate(&era)?;
        phrase = render_ordinal(a.value, &era, true)?;
        report.surface = phrase.surface(script);
        report.phrase = Some(&phrase);
    } else {
        expr = render_integer(a.value, &era, &opts)?;
        report.surface = expr.surface(script);
        report.tokens = Some(&expr.tokens);
        report.flags = Some(expr.flags);
    }
    if a.json {
        json_line(out, &report)
    } else {
        writeln!(out, "{}", report.surface)?;
        Ok(())
    }
}

#[derive(Serialize)]
struct ParseReport<'a> {
    input: &'a str,
    mode: EraMode,
    toneless: bool,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    outcome: Option<&'a ParseOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<&'a ParseError>,
}

fn feature_names(o: &ParseOutcome) -> Vec<&'static str> {
    let f = &o.features;
    [
        (f.uses_you, "uses_you"),
        (f.uses_ling, "uses_ling"),
        (f.uses_dan_or_lingalt, "uses_dan_or_lingalt"),
        (f.liang_present, "liang_present"),
        (f.elliptic, "elliptic"),
        (f.leading_one_before_highest, "leading_one_before_highest"),
        (f.one_before_inner_multiplicand, "one_before_inner_multiplicand"),
    ]
    .into_iter()
    .filter_map(|(on, name)| on.then_some(name))
    .collect()
}

fn describe_error(text: &str, e: &ParseError) -> String {
    let at = e
        .offset
        .and_then(|o| text.get(o..))
        .and_then(|rest| rest.chars().next())
        .map(|c| format!(" (at `{c}`)"))
        .unwrap_or_default();
    format!("{e}{at}")
}

fn parse(a: &ParseArgs, out: &mut impl Write) -> Result<()> {
    let mode = a.mode.mode();
    let opts = TokenizeOptions {
        hint: a.hint.into(),
        toneless: a.toneless,
    };
    let result = parse_text_with(&a.text, mode, opts);
    if a.json {
        json_line(
            out,
            &ParseReport {
                input: &a.text,
                mode,
                toneless: a.toneless,
                outcome: result.as_ref().ok(),
                error: result.as_ref().err(),
            },
        )?;
    }
    match result {
        Ok(o) => {
            if !a.json {
                writeln!(out, "{}", o.value)?;
                let names = feature_names(&o);
                if !names.is_empty() {
                    writeln!(out, "features: {}", names.join(", "))?;
                }
                for d in &o.diagnostics {
                    eprintln!("warning: {}", d.message);
                }
            }
            Ok(())
        }
        Err(e) => Err(CliError::Rejected(describe_error(&a.text, &e))),
    }
}

fn classify(a: &ClassifyArgs, out: &mut impl Write) -> Result<()> {
    let report: EraConsistencyReport = match classify_text(&a.text) {
        Ok(r) => r,
        Err(e) => {
            if a.json {
                json_line(out, &serde_json::json!({ "input": a.text, "error": e }))?;
            }
            return Err(CliError::Rejected(describe_error(&a.text, &e)));
        }
    };
    if a.json {
        json_line(out, &report)?;
    } else {
        let keys: Vec<&str> = report.consistent.iter().map(|e| e.key()).collect();
        writeln!(out, "consistent: {}", if keys.is_empty() { "none".to_owned() } else { keys.join(", ") })?;
        for v in &report.verdicts {
            match &v.verdict {
                Verdict::Accepts { value } => writeln!(out, "  {:<13} accepts {value}", v.era.key())?,
                Verdict::Rejects { error } => writeln!(out, "  {:<13} rejects: {error}", v.era.key())?,
            }
        }
        for note in &report.notes {
            writeln!(out, "note: {note}")?;
        }
    }
    if report.consistent.is_empty() {
        return Err(CliError::Rejected("no era grammar accepts this expression".to_owned()));
    }
    Ok(())
}

fn read_input(path: Option<&std::path::Path>) -> Result<String> {
    let mut bytes = Vec::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            bytes = std::fs::read(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
        }
        _ => {
            io::stdin().read_to_end(&mut bytes)?;
        }
    }
    String::from_utf8(bytes)
        .map_err(|e| CliError::Io(format!("invalid UTF-8 at byte offset {}", e.utf8_error().valid_up_to())))
}

#[derive(Serialize)]
struct ScanLine<'a> {
    mode: EraMode,
    #[serde(flatten)]
    record: &'a ScanRecord,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    mode: EraMode,
    summary: &'a ScanSummary,
}

fn scan_cmd(a: &ScanArgs, out: &mut impl Write) -> Result<()> {
    let text = read_input(a.path.as_deref())?;
    let mode = a.mode.mode();
    let records = scan(&text, mode);
    let summary = summarize(&records);
    if a.csv {
        let mut w = csv::Writer::from_writer(&mut *out);
        w.write_record(["metric", "count"])?;
        let counts = [
            ("total", summary.total),
            ("parsed", summary.parsed),
            ("errors", summary.errors),
            ("with_you", summary.with_you),
            ("without_you", summary.without_you),
            ("with_ling", summary.with_ling),
            ("with_liang", summary.with_liang),
            ("elliptic", summary.elliptic),
        ];
        for (metric, count) in counts {
            w.write_record([metric.to_owned(), count.to_string()])?;
        }
        for (set, count) in &summary.by_era_set {
            w.write_record([format!("eras:{set}"), count.to_string()])?;
        }
        w.flush()?;
    } else if a.json {
        for record in &records {
            json_line(out, &ScanLine { mode, record })?;
        }
        json_line(out, &SummaryLine { mode, summary: &summary })?;
    } else {
        for r in &records {
            let reading = match (&r.outcome, &r.error) {
                (Some(o), _) => o.value.to_string(),
                (_, Some(e)) => format!("error: {e}"),
                _ => String::new(),
            };
            writeln!(out, "{}:{}\t{}\t{reading}", r.line, r.column, r.text)?;
        }
        writeln!(
            out,
            "total {} parsed {} errors {} with_you {} without_you {} with_ling {} with_liang {} elliptic {}",
            summary.total,
            summary.parsed,
            summary.errors,
            summary.with_you,
            summary.without_you,
            summary.with_ling,
            summary.with_liang,
            summary.elliptic
        )?;
        for (set, count) in &summary.by_era_set {
            writeln!(out, "eras {set}: {count}")?;
        }
    }
    Ok(())
}

fn selftest(a: &SelftestArgs, out: &mut impl Write) -> Result<()> {
    let report = run_selftest(a.max, EXAMPLES);
    if a.json {
        json_line(out, &report)?;
    } else {
        writeln!(
            out,
            "selftest {}: {} examples, {} values up to {}, {} failures, {} ms",
            if report.passed() { "pass" } else { "FAIL" },
            report.examples_checked,
            report.values_checked,
            report.max,
            report.failure_count,
            report.elapsed.as_millis()
        )?;
        for f in &report.failures {
            writeln!(out, "  {}: {}", f.check, f.detail)?;
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Rejected(format!("{} self-test failures", report.failure_count)))
    }
}

#[derive(Serialize)]
struct PhraseReport<'a, T: Serialize> {
    input: T,
    script: Script,
    phrase: &'a Phrase,
    surface: String,
}

fn currency(a: &CurrencyArgs, out: &mut impl Write) -> Result<()> {
    let phrase = render_currency(a.yuan, a.jiao, a.fen, a.terse)?;
    let script = a.script.into();
    let surface = phrase.surface(script);
    if a.json {
        let input = serde_json::json!({ "yuan": a.yuan, "jiao": a.jiao, "fen": a.fen, "terse": a.terse });
        json_line(out, &PhraseReport { input, script, phrase: &phrase, surface })
    } else {
        writeln!(out, "{surface}")?;
        Ok(())
    }
}

fn duration(a: &DurationArgs, out: &mut impl Write) -> Result<()> {
    let phrase = render_duration(a.years, a.months)?;
    let script = a.script.into();
    let surface = phrase.surface(script);
    if a.json {
        let input = serde_json::json!({ "years": a.years, "months": a.months });
        json_line(out, &PhraseReport { input, script, phrase: &phrase, surface })
    } else {
        writeln!(out, "{surface}")?;
        Ok(())
    }
}
