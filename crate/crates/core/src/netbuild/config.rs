use crate::corpus::Corpus;
use crate::error::{Result, SvaError};

/// Inclusive range of publication years.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct YearWindow {
    pub start: i32,
    pub end: i32,
}

impl YearWindow {
    pub fn new(start: i32, end: i32) -> Self {
        YearWindow { start, end }
    }

    pub fn contains(&self, year: i32) -> bool {
        year >= self.start && year <= self.end
    }

    pub fn is_empty(&self) -> bool {
        self.start > self.end
    }

    pub fn label(&self) -> String {
        format!("{}-{}", self.start, self.end)
    }
}

/// Network-construction parameters for one target year.
#[derive(Debug, Clone, PartialEq)]
pub struct WindowConfig {
    pub target_year: i32,
    /// Years before the target that form the baseline network.
    pub window_years: u32,
    /// Years before the target considered by the analysis at all.
    pub frame_years: u32,
    /// g-index scaling factor.
    pub k: u32,
    /// Link-retaining factor: at most `lrf * |nodes|` edges survive.
    pub lrf: u32,
    /// Strongest links kept per node.
    pub max_links: u32,
    /// Look-back years; `-1` disables the filter.
    pub lby: i32,
    /// Minimum in-window citation count for a node.
    pub e: f64,
}

impl WindowConfig {
    pub const DEFAULT_WINDOW_YEARS: u32 = 5;
    pub const DEFAULT_FRAME_YEARS: u32 = 5;
    pub const DEFAULT_K: u32 = 5;
    pub const DEFAULT_LRF: u32 = 3;
    pub const DEFAULT_MAX_LINKS: u32 = 10;
    pub const DEFAULT_LBY: i32 = -1;
    pub const DEFAULT_E: f64 = 0.0;

    pub fn new(target_year: i32) -> Self {
        WindowConfig {
            target_year,
            window_years: Self::DEFAULT_WINDOW_YEARS,
            frame_years: Self::DEFAULT_FRAME_YEARS,
            k: Self::DEFAULT_K,
            lrf: Self::DEFAULT_LRF,
            max_links: Self::DEFAULT_MAX_LINKS,
            lby: Self::DEFAULT_LBY,
            e: Self::DEFAULT_E,
        }
    }

    pub fn with_k(mut self, k: u32) -> Self {
        self.k = k;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.window_years < 1 {
            return Err(SvaError::config("window_years", "must be at least 1"));
        }
        if self.frame_years < 1 {
            return Err(SvaError::config("frame_years", "must be at least 1"));
        }
        if self.k < 1 {
            return Err(SvaError::config("k", "must be at least 1"));
        }
        if self.lrf < 1 {
            return Err(SvaError::config("lrf", "must be at least 1"));
        }
        if self.max_links < 1 {
            return Err(SvaError::config("max_links", "must be at least 1"));
        }
        if self.lby < -1 {
            return Err(SvaError::config(
                "lby",
                "must be -1 (unlimited) or non-negative",
            ));
        }
        if !self.e.is_finite() || self.e < 0.0 {
            return Err(SvaError::config("e", "must be a non-negative number"));
        }
        Ok(())
    }

    /// Validates the parameters and checks the target year against the corpus.
    pub fn validate_for(&self, corpus: &Corpus) -> Result<()> {
        self.validate()?;
        let (min, max) = corpus.year_range();
        if self.target_year < min || self.target_year > max {
            return Err(SvaError::config(
                "target_year",
                format!(
                    "{} lies outside the corpus year range {min}..={max}",
                    self.target_year
                ),
            ));
        }
        Ok(())
    }

    /// Years the analysis may draw on: `[target - frame_years, target]`.
    pub fn frame(&self) -> YearWindow {
        YearWindow::new(self.target_year - self.frame_years as i32, self.target_year)
    }

    /// Baseline years `[target - window_years, target - 1]`, clipped to the frame.
    pub fn baseline_window(&self) -> YearWindow {
        let start = (self.target_year - self.window_years as i32).max(self.frame().start);
        YearWindow::new(start, self.target_year - 1)
    }
}
