//! Machine (JSON) and human (table) renderings of an evaluation.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::evaluate::{Evaluation, PageResult, Scores};
use crate::tokenize::BowCounts;
use crate::types::{Alignment, ErrorCounts, Level, MeasureConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Serialize)]
pub struct ToolInfo {
    pub name: &'static str,
    pub version: &'static str,
}

impl Default for ToolInfo {
    fn default() -> Self {
        ToolInfo {
            name: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConfigEcho {
    pub measure: String,
    #[serde(flatten)]
    pub config: MeasureConfig,
}

/// Tallies and rates; rates are `null` when their denominator is zero.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Summary {
    #[serde(rename_all = "camelCase")]
    Edit {
        ins: u64,
        del: u64,
        sub: u64,
        cor: u64,
        gt_len: u64,
        hyp_len: u64,
        error_rate: Option<f64>,
        precision: Option<f64>,
        recall: Option<f64>,
    },
    BagOfWords {
        tp: u64,
        fp: u64,
        #[serde(rename = "fn")]
        fn_: u64,
        precision: Option<f64>,
        recall: Option<f64>,
    },
}

impl Summary {
    pub fn of_counts(c: &ErrorCounts) -> Self {
        Summary::Edit {
            ins: c.ins,
            del: c.del,
            sub: c.sub,
            cor: c.cor,
            gt_len: c.gt_len,
            hyp_len: c.hyp_len,
            error_rate: c.cer().ok(),
            precision: c.precision().ok(),
            recall: c.recall().ok(),
        }
    }

    pub fn of_bow(b: &BowCounts) -> Self {
        Summary::BagOfWords {
            tp: b.tp,
            fp: b.fp,
            fn_: b.fn_,
            precision: b.precision().ok(),
            recall: b.recall().ok(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AlignmentSummary {
    pub matched: usize,
    pub unmatched_hyp: usize,
    pub unmatched_gt: usize,
}

impl From<&Alignment> for AlignmentSummary {
    fn from(a: &Alignment) -> Self {
        AlignmentSummary {
            matched: a.matched.len(),
            unmatched_hyp: a.unmatched_hyp.len(),
            unmatched_gt: a.unmatched_gt.len(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PageSummary {
    #[serde(flatten)]
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alignment: Option<AlignmentSummary>,
}

/// Everything printed for one run. Field order is the JSON key order.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub tool: ToolInfo,
    pub config: ConfigEcho,
    pub aggregate: Summary,
    pub per_page: BTreeMap<String, PageSummary>,
    pub warnings: Vec<String>,
}

fn page_summary(p: &PageResult) -> PageSummary {
    match &p.scores {
        Scores::Edit {
            counts, alignment, ..
        } => PageSummary {
            summary: Summary::of_counts(counts),
            alignment: Some(alignment.into()),
        },
        Scores::BagOfWords(b) => PageSummary {
            summary: Summary::of_bow(b),
            alignment: None,
        },
    }
}

impl Report {
    pub fn new(eval: &Evaluation) -> Self {
        let aggregate = match (eval.total_counts(), eval.total_bow()) {
            (_, Some(b)) => Summary::of_bow(&b),
            (Some(c), None) => Summary::of_counts(&c),
            (None, None) => Summary::of_counts(&ErrorCounts::default()),
        };
        Report {
            tool: ToolInfo::default(),
            config: ConfigEcho {
                measure: eval.config.label(),
                config: eval.config.clone(),
            },
            aggregate,
            per_page: eval
                .pages
                .iter()
                .map(|p| (p.id.clone(), page_summary(p)))
                .collect(),
            warnings: eval.warnings.clone(),
        }
    }

    /// Pretty JSON, newline-terminated.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Columns as in the usual comparison table: tallies, rate, precision,
    /// recall. One row per page when there are several, then the total.
    pub fn to_table(&self) -> String {
        let bow = matches!(self.aggregate, Summary::BagOfWords { .. });
        let rate_name = match self.config.config.level {
            Level::Word => "WER",
            _ => "CER",
        };
        let header: [&str; 8] = if bow {
            ["", "FN", "FP", "", "TP", "", "Prec", "Rec"]
        } else {
            ["", "INS", "DEL", "SUB", "COR", rate_name, "Prec", "Rec"]
        };
        let mut rows: Vec<[String; 8]> = vec![header.map(str::to_string)];
        if self.per_page.len() > 1 {
            for (id, p) in &self.per_page {
                rows.push(row(id, &p.summary));
            }
        }
        rows.push(row(&self.config.measure, &self.aggregate));

        let widths: Vec<usize> = (0..8)
            .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for (k, r) in rows.iter().enumerate() {
            let mut line = format!("{:<w$} |", r[0], w = widths[0]);
            for c in 1..8 {
                let _ = write!(line, " {:>w$}", r[c], w = widths[c]);
                if c == 4 {
                    line.push_str(" |");
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
            if k == 0 {
                out.push_str(&"-".repeat(line.trim_end().chars().count()));
                out.push('\n');
            }
        }
        out
    }
}

/// Percentage with one decimal, `n/a` when undefined.
pub fn percent(rate: Option<f64>) -> String {
    rate.map_or_else(|| "n/a".to_string(), |r| format!("{:.1}%", r * 100.0))
}

fn row(label: &str, s: &Summary) -> [String; 8] {
    match s {
        Summary::Edit {
            ins,
            del,
            sub,
            cor,
            error_rate,
            precision,
            recall,
            ..
        } => [
            label.to_string(),
            ins.to_string(),
            del.to_string(),
            sub.to_string(),
            cor.to_string(),
            percent(*error_rate),
            percent(*precision),
            percent(*recall),
        ],
        Summary::BagOfWords {
            tp,
            fp,
            fn_,
            precision,
            recall,
        } => [
            label.to_string(),
            fn_.to_string(),
            fp.to_string(),
            String::new(),
            tp.to_string(),
            String::new(),
            percent(*precision),
            percent(*recall),
        ],
    }
}

/// Full alignments of every page, including re-segmented hypotheses.
pub fn alignment_dump(eval: &Evaluation) -> String {
    let pages: BTreeMap<&str, Option<&Alignment>> = eval
        .pages
        .iter()
        .map(|p| (p.id.as_str(), p.alignment()))
        .collect();
    let mut s = serde_json::to_string_pretty(&pages).expect("alignments serialize");
    s.push('\n');
    s
}
