use serde::Serialize;

use crate::era::EraProfile;
use crate::generator::RenderError;
use crate::morpheme::Script;

/// How the digit 2 surfaces in front of pivots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TwoStyle {
    /// èr everywhere.
    #[default]
    AlwaysEr,
    /// liǎng before every pivot of rank 10² or above where it is allowed.
    PreferLiang,
    /// Reading a number aloud: èr everywhere.
    ReadingStyle,
}

/// Per-call stylistic choices within an era.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct RenderOptions {
    pub script: Script,
    pub two_style: TwoStyle,
    /// `None` follows the era's default. Only meaningful where yòu is optional.
    pub use_you: Option<bool>,
    pub elliptic: bool,
    /// Say [1] before a leading [10] where the era leaves it optional.
    pub leading_ten_one: bool,
}

impl RenderOptions {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn script(mut self, script: Script) -> Self {
        self.script = script;
        self
    }

    pub fn two_style(mut self, two_style: TwoStyle) -> Self {
        self.two_style = two_style;
        self
    }

    pub fn use_you(mut self, on: bool) -> Self {
        self.use_you = Some(on);
        self
    }

    pub fn elliptic(mut self, on: bool) -> Self {
        self.elliptic = on;
        self
    }

    pub fn leading_ten_one(mut self, on: bool) -> Self {
        self.leading_ten_one = on;
        self
    }

    /// Rejects choices the era's grammar does not have.
    pub fn validate(&self, era: &EraProfile) -> Result<(), RenderError> {
        let refuse = |what: &'static str| {
            Err(RenderError::StyleNotAllowed {
                era: era.era_id,
                what,
            })
        };
        if self.two_style != TwoStyle::AlwaysEr && !era.liang_allowed {
            return refuse("liǎng / reading style");
        }
        if self.elliptic && !era.elliptic_allowed {
            return refuse("elliptic form");
        }
        if self.use_you == Some(true) && !era.you_allowed() {
            return refuse("yòu");
        }
        Ok(())
    }

    /// Whether yòu is emitted, after applying the era default.
    pub(crate) fn you_on(&self, era: &EraProfile) -> bool {
        era.you_allowed() && self.use_you.unwrap_or_else(|| era.you_default())
    }
}
