//! Command-line front end.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use crate::error::Result;
use crate::evaluate::Evaluator;
use crate::io::{pair_test_set, PairOptions};
use crate::report::{alignment_dump, Format, Report};
use crate::types::{Level, MeasureConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LevelArg {
    Cer,
    Wer,
    Bow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Table,
}

fn positive(s: &str) -> std::result::Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("expected a positive number, got '{s}'")),
    }
}

/// End-to-end character/word error rates and bag-of-words scores between
/// ground-truth and hypothesis pages (PageXML or plain text).
#[derive(Debug, Parser)]
#[command(name = "e2e-cer", version)]
pub struct Args {
    /// Ground-truth file or directory.
    #[arg(long)]
    pub gt: PathBuf,
    /// Hypothesis file or directory.
    #[arg(long)]
    pub hyp: PathBuf,
    #[arg(long, value_enum, default_value = "cer")]
    pub level: LevelArg,
    /// Penalize reading-order errors (default).
    #[arg(long, overrides_with = "no_reading_order")]
    pub reading_order: bool,
    /// Ignore the reading order; uses the greedy assignment.
    #[arg(long)]
    pub no_reading_order: bool,
    /// Only match lines whose baselines are neighbors.
    #[arg(long)]
    pub geometry: bool,
    /// Do not penalize split or merged hypothesis lines.
    #[arg(long)]
    pub segmentation: bool,
    #[arg(long, default_value = crate::tokenize::DEFAULT_TOKENIZER)]
    pub tokenizer: String,
    /// Upper bound of the baseline tolerance in pixels.
    #[arg(long, default_value = "30", value_parser = positive)]
    pub tolerance_cap: f64,
    /// Tolerance relative to the distance to the nearest other GT baseline.
    #[arg(long, default_value = "0.25", value_parser = positive)]
    pub tolerance_fraction: f64,
    #[arg(long, value_enum, default_value = "table")]
    pub format: FormatArg,
    /// Write the line alignments of every page as JSON to this file.
    #[arg(long)]
    pub dump_alignment: Option<PathBuf>,
    /// Number of pages evaluated in parallel.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Skip ground-truth files without hypothesis instead of failing.
    #[arg(long)]
    pub skip_unpaired_gt: bool,
    /// Score hypothesis files without ground truth as all-deletion pages.
    #[arg(long)]
    pub strict_hyp: bool,
}

impl Args {
    pub fn config(&self) -> MeasureConfig {
        let level = match self.level {
            LevelArg::Cer => Level::Character,
            LevelArg::Wer => Level::Word,
            LevelArg::Bow => Level::BagOfWords,
        };
        let reading_order = match level {
            Level::BagOfWords => self.reading_order,
            _ => !self.no_reading_order,
        };
        MeasureConfig {
            reading_order,
            geometry: self.geometry,
            segmentation: self.segmentation,
            level,
            tokenizer: self.tokenizer.clone(),
            tolerance_cap: self.tolerance_cap,
            tolerance_fraction: self.tolerance_fraction,
        }
    }
}

fn execute(args: &Args, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    let config = args.config();
    let options = PairOptions {
        skip_unpaired_gt: args.skip_unpaired_gt,
        strict_hyp: args.strict_hyp,
    };
    let paired = pair_test_set(&args.gt, &args.hyp, options)?;
    let mut evaluator = Evaluator::new();
    if let Some(jobs) = args.jobs {
        evaluator = evaluator.with_jobs(jobs);
    }
    let mut eval = evaluator.evaluate_set(&paired.set, &config)?;
    let mut warnings = paired.warnings;
    warnings.append(&mut eval.warnings);
    for w in &warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    eval.warnings = warnings;

    if let Some(path) = &args.dump_alignment {
        std::fs::write(path, alignment_dump(&eval)).map_err(|e| crate::Error::io(path, e))?;
    }
    let report = Report::new(&eval);
    let text = match format_of(args.format) {
        Format::Json => report.to_json(),
        Format::Table => report.to_table(),
    };
    out.write_all(text.as_bytes())
        .map_err(|e| crate::Error::io("<stdout>", e))?;
    Ok(())
}

fn format_of(f: FormatArg) -> Format {
    match f {
        FormatArg::Json => Format::Json,
        FormatArg::Table => Format::Table,
    }
}

/// Runs the tool; returns the exit status (0 success, 1 evaluation error,
/// 2 usage error).
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let _ = err.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(&args, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
