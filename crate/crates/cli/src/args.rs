use std::path::PathBuf;

use chinum::{EraId, EraMode, RenderOptions, Script, ScriptHint, TwoStyle};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "chinum", version, about = "Chinese numerals across eight historical grammars")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Render an integer.
    Gen(GenArgs),
    /// Read a numeral and print its value.
    Parse(ParseArgs),
    /// List the eras whose grammar accepts a numeral.
    Classify(ClassifyArgs),
    /// Extract and read every numeral in a text.
    Scan(ScanArgs),
    /// Check the worked examples and the round trip up to --max.
    Selftest(SelftestArgs),
    /// Render a price in yuán, jiǎo and fēn.
    Currency(CurrencyArgs),
    /// Render a duration in years and months.
    Duration(DurationArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ScriptArg {
    Traditional,
    Simplified,
    Pinyin,
    Tokens,
}

impl From<ScriptArg> for Script {
    fn from(s: ScriptArg) -> Self {
        match s {
            ScriptArg::Traditional => Script::Traditional,
            ScriptArg::Simplified => Script::Simplified,
            ScriptArg::Pinyin => Script::Pinyin,
            ScriptArg::Tokens => Script::TokenList,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum TwoStyleArg {
    Er,
    Liang,
    Reading,
}

impl From<TwoStyleArg> for TwoStyle {
    fn from(s: TwoStyleArg) -> Self {
        match s {
            TwoStyleArg::Er => TwoStyle::AlwaysEr,
            TwoStyleArg::Liang => TwoStyle::PreferLiang,
            TwoStyleArg::Reading => TwoStyle::ReadingStyle,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum HintArg {
    Auto,
    Han,
    Pinyin,
}

impl From<HintArg> for ScriptHint {
    fn from(h: HintArg) -> Self {
        match h {
            HintArg::Auto => ScriptHint::Auto,
            HintArg::Han => ScriptHint::Han,
            HintArg::Pinyin => ScriptHint::Pinyin,
        }
    }
}

#[derive(Debug, Args)]
pub struct GenArgs {
    pub value: u64,
    #[arg(long, default_value = "contemporary")]
    pub era: EraId,
    #[arg(long, value_enum, default_value_t = ScriptArg::Traditional)]
    pub script: ScriptArg,
    #[arg(long, value_enum, default_value_t = TwoStyleArg::Er)]
    pub two_style: TwoStyleArg,
    /// Link compounds with yòu (eras before the 3rd century BCE).
    #[arg(long, overrides_with = "no_you")]
    pub you: bool,
    #[arg(long, overrides_with = "you")]
    pub no_you: bool,
    /// Drop the final pivot.
    #[arg(long)]
    pub elliptic: bool,
    /// Say [1] before a leading [10] where the era leaves it optional.
    #[arg(long)]
    pub leading_ten_one: bool,
    /// Render as a quantity before this classifier.
    #[arg(long, conflicts_with_all = ["ordinal", "elliptic"])]
    pub classifier: Option<String>,
    /// Render as an ordinal, prefixed with dì.
    #[arg(long)]
    pub ordinal: bool,
    #[arg(long)]
    pub json: bool,
}

impl GenArgs {
    pub fn options(&self) -> RenderOptions {
        let mut opts = RenderOptions::new()
            .script(self.script.into())
            .two_style(self.two_style.into())
            .elliptic(self.elliptic)
            .leading_ten_one(self.leading_ten_one);
        if self.you {
            opts = opts.use_you(true);
        } else if self.no_you {
            opts = opts.use_you(false);
        }
        opts
    }
}

#[derive(Debug, Args)]
pub struct ModeArgs {
    #[arg(long, conflicts_with = "lenient")]
    pub era: Option<EraId>,
    /// Accept constructs of any era.
    #[arg(long)]
    pub lenient: bool,
}

impl ModeArgs {
    pub fn mode(&self) -> EraMode {
        match (self.lenient, self.era) {
            (true, _) => EraMode::Lenient,
            (false, Some(era)) => EraMode::Strict(era),
            (false, None) => EraMode::default(),
        }
    }
}

#[derive(Debug, Args)]
pub struct ParseArgs {
    pub text: String,
    #[command(flatten)]
    pub mode: ModeArgs,
    #[arg(long, value_enum, default_value_t = HintArg::Auto)]
    pub hint: HintArg,
    /// Accept pinyin without tone marks.
    #[arg(long)]
    pub toneless: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    pub text: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Input file; standard input when absent or `-`.
    pub path: Option<PathBuf>,
    #[command(flatten)]
    pub mode: ModeArgs,
    /// One JSON object per record, then a summary object.
    #[arg(long, conflicts_with = "csv")]
    pub json: bool,
    /// Summary tallies only, as CSV.
    #[arg(long)]
    pub csv: bool,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    #[arg(long, default_value_t = 100_000)]
    pub max: u64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct CurrencyArgs {
    pub yuan: u64,
    #[arg(default_value_t = 0)]
    pub jiao: u8,
    #[arg(default_value_t = 0)]
    pub fen: u8,
    /// Drop a final fēn where it is understood.
    #[arg(long)]
    pub terse: bool,
    #[arg(long, value_enum, default_value_t = ScriptArg::Traditional)]
    pub script: ScriptArg,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct DurationArgs {
    pub years: u64,
    pub months: u32,
    #[arg(long, value_enum, default_value_t = ScriptArg::Traditional)]
    pub script: ScriptArg,
    #[arg(long)]
    pub json: bool,
}
